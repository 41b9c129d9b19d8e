#include "freedecomp/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

void enumerate_monotone(int m, int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == m + 1) {
    out.push_back(prefix);
    return;
  }
  const int lo = prefix.empty() ? 0 : prefix.back();
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    enumerate_monotone(m, n, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> monotone_values(int m, int n) {
  std::vector<std::vector<int>> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(m) + 1);
  enumerate_monotone(m, n, prefix, out);
  return out;
}

}  // namespace

OrdinalMap::OrdinalMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source_ < 0 || target_ < 0) throw PreconditionError("ordinals must be nonnegative");
  if (static_cast<int>(values_.size()) != source_ + 1) {
    throw DimensionMismatch("ordinal map [" + std::to_string(source_) + "]->[" + std::to_string(target_) +
                            "] needs " + std::to_string(source_ + 1) + " values, got " +
                            std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_) throw PreconditionError("ordinal map value out of range");
    if (i > 0 && values_[i] < values_[i - 1]) throw PreconditionError("ordinal map is not monotone");
  }
}

OrdinalMap OrdinalMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return OrdinalMap(n, n, std::move(v));
}

OrdinalMap OrdinalMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw IndexOutOfRange("coface d^" + std::to_string(i) + " into [" + std::to_string(n) + "]");
  std::vector<int> v;
  for (int j = 0; j <= n - 1; ++j) v.push_back(j < i ? j : j + 1);
  return OrdinalMap(n - 1, n, std::move(v));
}

OrdinalMap OrdinalMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw IndexOutOfRange("codegeneracy s^" + std::to_string(i) + " onto [" + std::to_string(n) + "]");
  std::vector<int> v;
  for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
  return OrdinalMap(n + 1, n, std::move(v));
}

bool OrdinalMap::is_active() const noexcept { return values_.front() == 0 && values_.back() == target_; }

bool OrdinalMap::is_inert() const noexcept {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] != values_[i - 1] + 1) return false;
  return true;
}

bool OrdinalMap::is_injective() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool OrdinalMap::is_surjective() const noexcept {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1] + 1) return false;
  return true;
}

std::string OrdinalMap::to_string() const {
  std::ostringstream os;
  os << '[' << source_ << "]->[" << target_ << "](";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

ActiveMap::ActiveMap(OrdinalMap map) : map_(std::move(map)) {
  if (!map_.is_active()) throw PreconditionError("not an active map: " + map_.to_string());
}

ActiveMap ActiveMap::long_edge(int n) { return ActiveMap(OrdinalMap(1, n, {0, n})); }

InertMap::InertMap(OrdinalMap map) : map_(std::move(map)) {
  if (!map_.is_inert()) throw PreconditionError("not an inert map: " + map_.to_string());
}

InertMap InertMap::with_offset(int source, int target, int offset) {
  if (source < 0 || offset < 0 || offset + source > target)
    throw IndexOutOfRange("no inert map [" + std::to_string(source) + "]->[" + std::to_string(target) +
                          "] with offset " + std::to_string(offset));
  std::vector<int> v(static_cast<std::size_t>(source) + 1);
  std::iota(v.begin(), v.end(), offset);
  return InertMap(OrdinalMap(source, target, std::move(v)));
}

OrdinalMap compose(const OrdinalMap& first, const OrdinalMap& second) {
  if (first.target() != second.source())
    throw DimensionMismatch("cannot compose " + first.to_string() + " with " + second.to_string());
  std::vector<int> v;
  v.reserve(first.values().size());
  for (int x : first.values()) v.push_back(second(x));
  return OrdinalMap(first.source(), second.target(), std::move(v));
}

Factorization factorize(const OrdinalMap& f) {
  const int lo = f.values().front();
  const int hi = f.values().back();
  std::vector<int> active_values;
  active_values.reserve(f.values().size());
  for (int x : f.values()) active_values.push_back(x - lo);
  return Factorization{ActiveMap(OrdinalMap(f.source(), hi - lo, std::move(active_values))),
                       InertMap::with_offset(hi - lo, f.target(), lo)};
}

int Composition::weight() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Composition::has_zero_part() const noexcept {
  return std::find(parts.begin(), parts.end(), 0) != parts.end();
}

std::string Composition::encode() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

Composition Composition::parse(std::string_view text) {
  Composition c;
  if (text.empty()) return c;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0 || tok.empty())
      throw ParseError("bad composition '" + std::string(text) + "'");
    c.parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return c;
}

Composition active_to_composition(const ActiveMap& alpha) {
  Composition c;
  for (int i = 1; i <= alpha.source(); ++i) c.parts.push_back(alpha(i) - alpha(i - 1));
  return c;
}

ActiveMap composition_to_active(const Composition& c) {
  std::vector<int> v{0};
  for (int p : c.parts) {
    if (p < 0) throw PreconditionError("composition parts must be nonnegative");
    v.push_back(v.back() + p);
  }
  const int n = v.back();
  return ActiveMap(OrdinalMap(c.length(), n, std::move(v)));
}

InertMap inert_rho(int i, int k) {
  if (i < 1 || i > k) throw IndexOutOfRange("rho_" + std::to_string(i) + " into [" + std::to_string(k) + "]");
  return InertMap::with_offset(1, k, i - 1);
}

InertMap gamma(const ActiveMap& alpha, int i) {
  if (i < 1 || i > alpha.source())
    throw IndexOutOfRange("gamma index " + std::to_string(i) + " for active map out of [" +
                          std::to_string(alpha.source()) + "]");
  return factorize(compose(inert_rho(i, alpha.source()).map(), alpha.map())).inert;
}

std::vector<OrdinalMap> monotone_maps(int m, int n) {
  std::vector<OrdinalMap> out;
  for (auto& v : monotone_values(m, n)) out.emplace_back(m, n, std::move(v));
  return out;
}

std::vector<ActiveMap> active_maps(int k, int n) {
  std::vector<ActiveMap> out;
  for (auto& f : monotone_maps(k, n))
    if (f.is_active()) out.emplace_back(std::move(f));
  return out;
}

std::vector<InertMap> inert_homset(int m, int n) {
  std::vector<InertMap> out;
  for (int a = 0; a + m <= n; ++a) out.push_back(InertMap::with_offset(m, n, a));
  return out;
}

std::vector<Composition> compositions(int length, int max_weight) {
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto& self, int remaining) -> void {
    if (cur.length() == length) {
      out.push_back(cur);
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      cur.parts.push_back(p);
      self(self, remaining - p);
      cur.parts.pop_back();
    }
  };
  if (length >= 0 && max_weight >= 0) rec(rec, max_weight);
  return out;
}

int GeneratingSquare::max_dimension() const noexcept { return std::max({m(), n(), m_prime(), n_prime()}); }

std::string GeneratingSquare::describe() const {
  std::ostringstream os;
  os << (active_kind == ActiveKind::inner_coface ? "d^" : "s^") << active_index << ":[" << m() << "]->[" << n()
     << "] against " << (inert_kind == InertKind::bottom ? "d_bot" : "d_top") << ":[" << m() << "]->[" << m_prime()
     << "], pushout [" << n_prime() << "]";
  return os.str();
}

GeneratingSquare complete_square(const ActiveMap& active_leg, const InertMap& inert_leg) {
  if (active_leg.source() != inert_leg.source())
    throw DimensionMismatch("span legs must share a source");
  const int m = active_leg.source();
  const int n = active_leg.target();
  const int p = inert_leg.bottom_count();
  const int q = inert_leg.top_count();
  const int m_prime = inert_leg.target();
  const int n_prime = p + n + q;
  std::vector<int> v;
  for (int j = 0; j <= m_prime; ++j) {
    if (j < p)
      v.push_back(j);
    else if (j <= p + m)
      v.push_back(p + active_leg(j - p));
    else
      v.push_back(j - m + n);
  }
  GeneratingSquare sq{GeneratingSquare::ActiveKind::inner_coface,
                      0,
                      GeneratingSquare::InertKind::bottom,
                      active_leg,
                      inert_leg,
                      ActiveMap(OrdinalMap(m_prime, n_prime, std::move(v))),
                      InertMap::with_offset(n, n_prime, p)};
  if (n == m + 1) {
    for (int i = 0; i <= n; ++i)
      if (active_leg.map() == OrdinalMap::coface(n, i)) sq.active_index = i;
  } else {
    sq.active_kind = GeneratingSquare::ActiveKind::codegeneracy;
    for (int i = 0; i <= n; ++i)
      if (n + 1 == m && active_leg.map() == OrdinalMap::codegeneracy(n, i)) sq.active_index = i;
  }
  sq.inert_kind = p > 0 ? GeneratingSquare::InertKind::bottom : GeneratingSquare::InertKind::top;
  return sq;
}

bool verify_pushout(const GeneratingSquare& sq, int max_cocone_dim) {
  if (compose(sq.inert_leg.map(), sq.pushout_active.map()) != compose(sq.active_leg.map(), sq.pushout_inert.map()))
    return false;

  // The two pushout legs must be jointly surjective; this gives uniqueness of
  // mediating maps, and existence is then a pointwise consistency check.
  const int np = sq.n_prime();
  std::vector<bool> hit(static_cast<std::size_t>(np) + 1, false);
  for (int x : sq.pushout_active.map().values()) hit[static_cast<std::size_t>(x)] = true;
  for (int x : sq.pushout_inert.map().values()) hit[static_cast<std::size_t>(x)] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;

  const auto& alpha = sq.active_leg.map().values();
  const auto& iota = sq.inert_leg.map().values();
  const auto& pa = sq.pushout_active.map().values();
  const auto& pi = sq.pushout_inert.map().values();
  for (int t = 0; t <= max_cocone_dim; ++t) {
    const auto us = monotone_values(sq.m_prime(), t);
    const auto vs = monotone_values(sq.n(), t);
    std::vector<int> h(static_cast<std::size_t>(np) + 1);
    std::vector<bool> set(static_cast<std::size_t>(np) + 1);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        bool cocone = true;
        for (std::size_t j = 0; j < alpha.size() && cocone; ++j)
          cocone = u[static_cast<std::size_t>(iota[j])] == v[static_cast<std::size_t>(alpha[j])];
        if (!cocone) continue;
        std::fill(set.begin(), set.end(), false);
        bool ok = true;
        auto assign = [&](int x, int value) {
          auto ux = static_cast<std::size_t>(x);
          if (set[ux] && h[ux] != value) ok = false;
          h[ux] = value;
          set[ux] = true;
        };
        for (std::size_t j = 0; j < pa.size(); ++j) assign(pa[j], u[j]);
        for (std::size_t j = 0; j < pi.size(); ++j) assign(pi[j], v[j]);
        if (!ok) return false;
        for (std::size_t x = 1; x < h.size(); ++x)
          if (h[x] < h[x - 1]) return false;
      }
    }
  }
  return true;
}

std::vector<GeneratingSquare> generating_squares(int max_dim) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, bool> verified;

  std::vector<GeneratingSquare> out;
  auto consider = [&](const OrdinalMap& active, int inert_offset) {
    const int m = active.source();
    const auto sq = complete_square(ActiveMap(active), InertMap::with_offset(m, m + 1, inert_offset));
    if (sq.n_prime() > max_dim) return;
    const auto key = std::make_tuple(m, active.target(), sq.active_index * 2 + inert_offset, max_dim + 2);
    bool ok = false;
    {
      std::lock_guard lock(mutex);
      auto it = verified.find(key);
      if (it != verified.end()) ok = it->second;
      else ok = verified[key] = verify_pushout(sq, max_dim + 2);
    }
    if (!ok) throw IntegrityError("generating square is not a pushout: " + sq.describe());
    out.push_back(sq);
  };
  for (int m = 0; m <= max_dim; ++m) {
    for (int offset : {1, 0}) {
      for (int i = 1; i <= m; ++i) consider(OrdinalMap::coface(m + 1, i), offset);
      if (m >= 1)
        for (int i = 0; i <= m - 1; ++i) consider(OrdinalMap::codegeneracy(m - 1, i), offset);
    }
  }
  return out;
}

std::size_t ActiveArrowCategory::index_of(const ActiveMap& alpha) const {
  auto it = std::find(objects.begin(), objects.end(), alpha);
  if (it == objects.end()) throw IndexOutOfRange("active map not an object: " + alpha.map().to_string());
  return static_cast<std::size_t>(it - objects.begin());
}

ActiveArrowCategory active_arrow_category(int k_max, int n_max) {
  ActiveArrowCategory cat;
  for (int k = 0; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n)
      for (auto& a : active_maps(k, n)) cat.objects.push_back(std::move(a));

  for (std::size_t s = 0; s < cat.objects.size(); ++s) {
    const auto& src = cat.objects[s];
    for (std::size_t t = 0; t < cat.objects.size(); ++t) {
      const auto& tgt = cat.objects[t];
      if (src.target() > tgt.target()) continue;
      for (auto& top : monotone_maps(src.source(), tgt.source())) {
        // The bottom leg is forced by its value at 0.
        const int offset = tgt(top(0));
        if (offset + src.target() > tgt.target()) continue;
        auto bottom = InertMap::with_offset(src.target(), tgt.target(), offset);
        if (compose(top, tgt.map()) != compose(src.map(), bottom.map())) continue;
        cat.morphisms.push_back({s, t, std::move(top), std::move(bottom)});
      }
    }
  }
  return cat;
}

}  // namespace freedecomp
