#include "freedecomp/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (std::size_t x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

void check_table(const std::vector<std::size_t>& table, std::size_t domain, std::size_t codomain, const char* what) {
  if (table.size() != domain) throw IntegrityError(std::string(what) + " table has wrong length");
  for (std::size_t y : table)
    if (y >= codomain) throw IntegrityError(std::string(what) + " table points outside its codomain");
}

}  // namespace

void CheckReport::fail(std::string witness) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void CheckReport::absorb(const CheckReport& other) {
  if (other.passed) return;
  passed = false;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(other.check.empty() ? w : other.check + ": " + w);
  }
}

// ---------------------------------------------------------------------------
// TruncatedSimplicialSet

TruncatedSimplicialSet::TruncatedSimplicialSet(int truncation, std::vector<std::vector<std::string>> levels,
                                               OperatorTables faces, OperatorTables degeneracies,
                                               std::optional<Grading> grading)
    : truncation_(truncation),
      levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      grading_(std::move(grading)) {
  if (truncation_ < 0) throw PreconditionError("truncation must be nonnegative");
  const auto levels_count = static_cast<std::size_t>(truncation_) + 1;
  if (levels_.size() != levels_count) throw IntegrityError("expected one level per dimension 0..N");
  faces_.resize(levels_count);
  degeneracies_.resize(levels_count);
  index_.resize(levels_count);
  for (std::size_t k = 0; k < levels_count; ++k) {
    for (std::size_t x = 0; x < levels_[k].size(); ++x) {
      if (!index_[k].emplace(levels_[k][x], x).second)
        throw IntegrityError("duplicate element " + quote(levels_[k][x]) + " in level " + std::to_string(k));
    }
  }
  for (std::size_t k = 1; k < levels_count; ++k) {
    if (faces_[k].size() != k + 1) throw IntegrityError("level " + std::to_string(k) + " needs k+1 face tables");
    for (const auto& t : faces_[k]) check_table(t, levels_[k].size(), levels_[k - 1].size(), "face");
  }
  for (std::size_t k = 0; k + 1 < levels_count; ++k) {
    if (degeneracies_[k].size() != k + 1)
      throw IntegrityError("level " + std::to_string(k) + " needs k+1 degeneracy tables");
    for (const auto& t : degeneracies_[k]) check_table(t, levels_[k].size(), levels_[k + 1].size(), "degeneracy");
  }
  if (grading_) {
    if (grading_->weights.size() != levels_count) throw IntegrityError("grading needs one weight table per level");
    for (std::size_t k = 0; k < levels_count; ++k)
      if (grading_->weights[k].size() != levels_[k].size()) throw IntegrityError("grading table has wrong length");
  }
  degenerate_.assign(levels_count, {});
  for (std::size_t k = 0; k < levels_count; ++k) degenerate_[k].assign(levels_[k].size(), false);
  for (std::size_t k = 0; k + 1 < levels_count; ++k)
    for (const auto& t : degeneracies_[k])
      for (std::size_t y : t) degenerate_[k + 1][y] = true;
}

TruncatedSimplicialSet TruncatedSimplicialSet::build(int truncation, std::vector<std::vector<std::string>> levels,
                                                     const OperatorFn& face, const OperatorFn& degeneracy,
                                                     std::optional<std::pair<int, WeightFn>> grading) {
  if (truncation < 0) throw PreconditionError("truncation must be nonnegative");
  if (levels.size() != static_cast<std::size_t>(truncation) + 1)
    throw IntegrityError("expected one level per dimension 0..N");
  std::vector<std::unordered_map<std::string, std::size_t>> index(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (std::size_t x = 0; x < levels[k].size(); ++x) index[k].emplace(levels[k][x], x);

  auto lookup = [&](int k, const std::string& enc, const std::string& context) {
    auto it = index[static_cast<std::size_t>(k)].find(enc);
    if (it == index[static_cast<std::size_t>(k)].end())
      throw IntegrityError(context + " produced " + quote(enc) + ", which is not in level " + std::to_string(k));
    return it->second;
  };

  OperatorTables faces(levels.size()), degens(levels.size());
  for (int k = 1; k <= truncation; ++k) {
    auto& lk = levels[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k; ++i) {
      std::vector<std::size_t> t;
      t.reserve(lk.size());
      for (const auto& e : lk)
        t.push_back(lookup(k - 1, face(k, i, e), "d_" + std::to_string(i) + "(" + quote(e) + ")"));
      faces[static_cast<std::size_t>(k)].push_back(std::move(t));
    }
  }
  for (int k = 0; k < truncation; ++k) {
    auto& lk = levels[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k; ++i) {
      std::vector<std::size_t> t;
      t.reserve(lk.size());
      for (const auto& e : lk)
        t.push_back(lookup(k + 1, degeneracy(k, i, e), "s_" + std::to_string(i) + "(" + quote(e) + ")"));
      degens[static_cast<std::size_t>(k)].push_back(std::move(t));
    }
  }
  std::optional<Grading> g;
  if (grading) {
    g.emplace();
    g->bound = grading->first;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      std::vector<int> w;
      for (const auto& e : levels[k]) w.push_back(grading->second(static_cast<int>(k), e));
      g->weights.push_back(std::move(w));
    }
  }
  return TruncatedSimplicialSet(truncation, std::move(levels), std::move(faces), std::move(degens), std::move(g));
}

std::optional<std::size_t> TruncatedSimplicialSet::find(int k, std::string_view encoding) const {
  if (k < 0 || k > truncation_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(k)];
  auto it = idx.find(std::string(encoding));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t TruncatedSimplicialSet::index(int k, std::string_view encoding) const {
  auto x = find(k, encoding);
  if (!x) throw IndexOutOfRange("no simplex " + quote(std::string(encoding)) + " in level " + std::to_string(k));
  return *x;
}

const std::vector<std::size_t>& TruncatedSimplicialSet::face_table(int k, int i) const {
  if (k < 1 || k > truncation_ || i < 0 || i > k)
    throw IndexOutOfRange("no face d_" + std::to_string(i) + " on level " + std::to_string(k));
  return faces_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
}

const std::vector<std::size_t>& TruncatedSimplicialSet::degeneracy_table(int k, int i) const {
  if (k < 0 || k >= truncation_ || i < 0 || i > k)
    throw IndexOutOfRange("no degeneracy s_" + std::to_string(i) + " on level " + std::to_string(k));
  return degeneracies_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
}

void TruncatedSimplicialSet::set_face(int k, int i, std::size_t x, std::size_t y) {
  face_table(k, i);
  if (x >= size(k) || y >= size(k - 1)) throw IndexOutOfRange("face entry out of range");
  faces_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][x] = y;
}

void TruncatedSimplicialSet::set_degeneracy(int k, int i, std::size_t x, std::size_t y) {
  degeneracy_table(k, i);
  if (x >= size(k) || y >= size(k + 1)) throw IndexOutOfRange("degeneracy entry out of range");
  degeneracies_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][x] = y;
  auto& flags = degenerate_[static_cast<std::size_t>(k) + 1];
  std::fill(flags.begin(), flags.end(), false);
  for (const auto& t : degeneracies_[static_cast<std::size_t>(k)])
    for (std::size_t z : t) flags[z] = true;
}

std::vector<std::size_t> TruncatedSimplicialSet::operator_table(const OrdinalMap& g) const {
  if (g.source() > truncation_ || g.target() > truncation_)
    throw TruncationTooSmall("operator " + g.to_string() + " leaves the truncation",
                             std::max(g.source(), g.target()));

  // Peel g = (cofaces) . (codegeneracies). Faces are applied in peeling
  // order, degeneracies in reverse peeling order.
  struct Step {
    bool is_face;
    int level;
    int index;
  };
  std::vector<Step> faces_first;
  std::vector<Step> degens;
  std::vector<int> v = g.values();
  int target = g.target();
  while (true) {
    std::vector<bool> hit(static_cast<std::size_t>(target) + 1, false);
    for (int y : v) hit[static_cast<std::size_t>(y)] = true;
    int missing = -1;
    for (int j = target; j >= 0; --j)
      if (!hit[static_cast<std::size_t>(j)]) {
        missing = j;
        break;
      }
    if (missing < 0) break;
    faces_first.push_back({true, target, missing});
    for (int& y : v)
      if (y > missing) --y;
    --target;
  }
  while (true) {
    int repeat = -1;
    for (std::size_t j = 0; j + 1 < v.size(); ++j)
      if (v[j] == v[j + 1]) repeat = static_cast<int>(j);
    if (repeat < 0) break;
    const int source_after = static_cast<int>(v.size()) - 2;
    degens.push_back({false, source_after, repeat});
    v.erase(v.begin() + repeat + 1);
  }
  std::reverse(degens.begin(), degens.end());
  faces_first.insert(faces_first.end(), degens.begin(), degens.end());

  std::vector<std::size_t> table(size(g.target()));
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t y = x;
    for (const auto& s : faces_first)
      y = s.is_face ? face(s.level, s.index, y) : degeneracy(s.level, s.index, y);
    table[x] = y;
  }
  return table;
}

std::size_t TruncatedSimplicialSet::apply(const OrdinalMap& g, std::size_t x) const { return operator_table(g).at(x); }

bool TruncatedSimplicialSet::is_degenerate(int k, std::size_t x) const {
  return degenerate_.at(static_cast<std::size_t>(k)).at(x);
}

// ---------------------------------------------------------------------------
// SimplicialMap

SimplicialMap::SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target,
                             std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_ || !target_) throw PreconditionError("simplicial map needs source and target");
  if (source_->truncation() != target_->truncation())
    throw DimensionMismatch("simplicial map between different truncations");
  if (components_.size() != static_cast<std::size_t>(source_->truncation()) + 1)
    throw IntegrityError("simplicial map needs one component per level");
  for (int k = 0; k <= source_->truncation(); ++k)
    check_table(components_[static_cast<std::size_t>(k)], source_->size(k), target_->size(k), "component");
}

SimplicialMap SimplicialMap::from_function(SimplicialSetPtr source, SimplicialSetPtr target,
                                           const std::function<std::string(int, const std::string&)>& fn) {
  std::vector<std::vector<std::size_t>> comps;
  for (int k = 0; k <= source->truncation(); ++k) {
    std::vector<std::size_t> c;
    for (const auto& e : source->level(k)) {
      const std::string image = fn(k, e);
      auto y = target->find(k, image);
      if (!y) throw IntegrityError("image " + quote(image) + " of " + quote(e) + " is not in target level " + std::to_string(k));
      c.push_back(*y);
    }
    comps.push_back(std::move(c));
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(comps));
}

SimplicialMap SimplicialMap::identity(SimplicialSetPtr x) {
  std::vector<std::vector<std::size_t>> comps;
  for (int k = 0; k <= x->truncation(); ++k) {
    std::vector<std::size_t> c(x->size(k));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    comps.push_back(std::move(c));
  }
  return SimplicialMap(x, x, std::move(comps));
}

CheckReport SimplicialMap::check_naturality() const {
  CheckReport report("naturality");
  const auto& x = *source_;
  const auto& y = *target_;
  for (int k = 1; k <= x.truncation(); ++k)
    for (int i = 0; i <= k; ++i)
      for (std::size_t s = 0; s < x.size(k); ++s)
        if (component(k - 1)[x.face(k, i, s)] != y.face(k, i, component(k)[s]))
          report.fail("F d_" + std::to_string(i) + " != d_" + std::to_string(i) + " F on " + quote(x.element(k, s)));
  for (int k = 0; k < x.truncation(); ++k)
    for (int i = 0; i <= k; ++i)
      for (std::size_t s = 0; s < x.size(k); ++s)
        if (component(k + 1)[x.degeneracy(k, i, s)] != y.degeneracy(k, i, component(k)[s]))
          report.fail("F s_" + std::to_string(i) + " != s_" + std::to_string(i) + " F on " + quote(x.element(k, s)));
  return report;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& next) const {
  if (target_ != next.source_ && target_->truncation() == next.source_->truncation()) {
    for (int k = 0; k <= target_->truncation(); ++k)
      if (target_->level(k) != next.source_->level(k)) throw DimensionMismatch("maps are not composable");
  } else if (target_ != next.source_) {
    throw DimensionMismatch("maps are not composable");
  }
  std::vector<std::vector<std::size_t>> comps(components_.size());
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (std::size_t s : components_[k]) comps[k].push_back(next.components_[k][s]);
  return SimplicialMap(source_, next.target_, std::move(comps));
}

// ---------------------------------------------------------------------------
// Pullbacks

SquareOfSets SquareOfSets::transposed() const {
  return SquareOfSets{label + " (transposed)", apex, right, left, base, to_right, to_left, right_to_base, left_to_base};
}

CheckReport is_pullback(const SquareOfSets& sq) {
  CheckReport report(sq.label.empty() ? "pullback" : sq.label);
  if (sq.to_left.size() != sq.apex.size() || sq.to_right.size() != sq.apex.size() ||
      sq.left_to_base.size() != sq.left.size() || sq.right_to_base.size() != sq.right.size())
    throw PreconditionError("square tables do not match its sets");
  for (std::size_t a = 0; a < sq.apex.size(); ++a)
    if (sq.left_to_base[sq.to_left[a]] != sq.right_to_base[sq.to_right[a]])
      throw PreconditionError("square does not commute at " + quote(sq.apex[a]));

  std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> hits;
  hits.reserve(sq.apex.size());
  for (std::size_t a = 0; a < sq.apex.size(); ++a) {
    auto [it, fresh] = hits.emplace(std::vector<std::size_t>{sq.to_left[a], sq.to_right[a]}, a);
    if (!fresh)
      report.fail("apex elements " + quote(sq.apex[it->second]) + " and " + quote(sq.apex[a]) + " both map to (" +
                  quote(sq.left[sq.to_left[a]]) + ", " + quote(sq.right[sq.to_right[a]]) + ")");
  }
  std::vector<std::vector<std::size_t>> right_fibre(sq.base.size());
  for (std::size_t r = 0; r < sq.right.size(); ++r) right_fibre[sq.right_to_base[r]].push_back(r);
  for (std::size_t l = 0; l < sq.left.size(); ++l) {
    for (std::size_t r : right_fibre[sq.left_to_base[l]]) {
      if (!hits.count({l, r})) {
        report.fail("(" + quote(sq.left[l]) + ", " + quote(sq.right[r]) + ") in the fibre product is not hit");
        if (report.witnesses.size() >= CheckReport::kMaxWitnesses) return report;
      }
    }
  }
  return report;
}

SquareOfSets apply_square(const TruncatedSimplicialSet& x, const GeneratingSquare& sq) {
  SquareOfSets out;
  out.label = sq.describe();
  out.apex = x.level(sq.n_prime());
  out.left = x.level(sq.m_prime());
  out.right = x.level(sq.n());
  out.base = x.level(sq.m());
  out.to_left = x.operator_table(sq.pushout_active.map());
  out.to_right = x.operator_table(sq.pushout_inert.map());
  out.left_to_base = x.operator_table(sq.inert_leg.map());
  out.right_to_base = x.operator_table(sq.active_leg.map());
  return out;
}

// ---------------------------------------------------------------------------
// Checkers

CheckReport check_simplicial_identities(const TruncatedSimplicialSet& x) {
  CheckReport report("simplicial identities");
  const int n = x.truncation();
  auto at = [&](int k, std::size_t s) { return quote(x.element(k, s)); };

  for (int k = 2; k <= n; ++k)
    for (std::size_t s = 0; s < x.size(k); ++s)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i) {
          const auto lhs = x.face(k - 1, i, x.face(k, j, s));
          const auto rhs = x.face(k - 1, j - 1, x.face(k, i, s));
          if (lhs != rhs)
            report.fail("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) +
                        " d_" + std::to_string(i) + " on " + at(k, s) + ": " + at(k - 2, lhs) + " vs " + at(k - 2, rhs));
        }

  for (int k = 0; k + 2 <= n; ++k)
    for (std::size_t s = 0; s < x.size(k); ++s)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) {
          const auto lhs = x.degeneracy(k + 1, i, x.degeneracy(k, j, s));
          const auto rhs = x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s));
          if (lhs != rhs)
            report.fail("s_" + std::to_string(i) + " s_" + std::to_string(j) + " != s_" + std::to_string(j + 1) +
                        " s_" + std::to_string(i) + " on " + at(k, s) + ": " + at(k + 2, lhs) + " vs " + at(k + 2, rhs));
        }

  for (int k = 0; k + 1 <= n; ++k)
    for (std::size_t s = 0; s < x.size(k); ++s)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= k + 1; ++i) {
          const auto lhs = x.face(k + 1, i, x.degeneracy(k, j, s));
          std::size_t rhs = s;
          std::string rule = "id";
          if (i < j) {
            rhs = x.degeneracy(k - 1, j - 1, x.face(k, i, s));
            rule = "s_" + std::to_string(j - 1) + " d_" + std::to_string(i);
          } else if (i > j + 1) {
            rhs = x.degeneracy(k - 1, j, x.face(k, i - 1, s));
            rule = "s_" + std::to_string(j) + " d_" + std::to_string(i - 1);
          }
          if (lhs != rhs)
            report.fail("d_" + std::to_string(i) + " s_" + std::to_string(j) + " != " + rule + " on " + at(k, s) +
                        ": " + at(k, lhs) + " vs " + at(k, rhs));
        }
  return report;
}

CheckReport check_decomposition(const TruncatedSimplicialSet& x) {
  CheckReport report("decomposition");
  for (const auto& sq : generating_squares(x.truncation())) {
    if (sq.max_dimension() > x.truncation()) continue;
    // On input that breaks the simplicial identities a square may fail to
    // commute; that is reported rather than raised.
    try {
      report.absorb(is_pullback(apply_square(x, sq)));
    } catch (const PreconditionError& e) {
      report.fail(sq.describe() + ": " + e.what());
    }
    if (report.witnesses.size() >= CheckReport::kMaxWitnesses) break;
  }
  return report;
}

CheckReport check_segal(const TruncatedSimplicialSet& x) {
  CheckReport report("segal");
  if (x.truncation() < 1) return report;
  const auto& source = x.face_table(1, 1);
  const auto& target = x.face_table(1, 0);
  const auto& grading = x.grading();
  auto edge_weight = [&](std::size_t e) { return grading ? grading->weights[1][e] : 0; };
  const int bound = grading ? grading->bound : 0;

  std::vector<std::vector<std::size_t>> out_edges(x.size(0));
  for (std::size_t e = 0; e < x.size(1); ++e) out_edges[source[e]].push_back(e);

  for (int k = 2; k <= x.truncation(); ++k) {
    std::vector<std::vector<std::size_t>> spine_maps;
    for (int i = 1; i <= k; ++i) spine_maps.push_back(x.operator_table(inert_rho(i, k).map()));

    std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> hits;
    for (std::size_t s = 0; s < x.size(k); ++s) {
      std::vector<std::size_t> spine;
      for (const auto& m : spine_maps) spine.push_back(m[s]);
      auto [it, fresh] = hits.emplace(spine, s);
      if (!fresh)
        report.fail("level " + std::to_string(k) + ": " + quote(x.element(k, it->second)) + " and " +
                    quote(x.element(k, s)) + " have the same spine");
    }

    // Depth-first walk over composable spines within the budget; stops at
    // the first spine that no simplex hits.
    std::vector<std::size_t> chain;
    bool found_gap = false;
    auto walk = [&](auto& self, std::size_t vertex, int weight) -> void {
      if (found_gap) return;
      if (static_cast<int>(chain.size()) == k) {
        if (!hits.count(chain)) {
          std::string w = "level " + std::to_string(k) + ": composable spine (";
          for (std::size_t i = 0; i < chain.size(); ++i) w += (i ? ", " : "") + quote(x.element(1, chain[i]));
          report.fail(w + ") is not hit");
          found_gap = true;
        }
        return;
      }
      for (std::size_t e : out_edges[vertex]) {
        const int w = weight + edge_weight(e);
        if (grading && w > bound) continue;
        chain.push_back(e);
        self(self, target[e], w);
        chain.pop_back();
        if (found_gap) return;
      }
    };
    for (std::size_t e = 0; e < x.size(1) && !found_gap; ++e) {
      if (grading && edge_weight(e) > bound) continue;
      chain.assign(1, e);
      walk(walk, target[e], edge_weight(e));
    }
  }
  return report;
}

CheckReport check_culf(const SimplicialMap& f, bool all_active) {
  CheckReport report(all_active ? "culf (all active maps)" : "culf");
  const auto& x = f.source();
  const auto& y = f.target();
  auto square_for = [&](const ActiveMap& g) {
    const int j = g.source();
    const int k = g.target();
    SquareOfSets sq;
    sq.label = "naturality square on " + g.map().to_string();
    sq.apex = x.level(k);
    sq.left = x.level(j);
    sq.right = y.level(k);
    sq.base = y.level(j);
    sq.to_left = x.operator_table(g.map());
    sq.to_right = f.component(k);
    sq.left_to_base = f.component(j);
    sq.right_to_base = y.operator_table(g.map());
    return sq;
  };
  auto run = [&](const ActiveMap& g) {
    try {
      report.absorb(is_pullback(square_for(g)));
    } catch (const PreconditionError& e) {
      report.fail(e.what());
    }
  };
  for (int k = 1; k <= x.truncation(); ++k) {
    if (all_active) {
      for (int j = 0; j <= x.truncation(); ++j)
        for (const auto& g : active_maps(j, k)) run(g);
    } else {
      run(ActiveMap::long_edge(k));
    }
  }
  if (all_active) {
    // Active maps into [0] are the constant maps [j] -> [0].
    for (int j = 1; j <= x.truncation(); ++j)
      for (const auto& g : active_maps(j, 0)) run(g);
  }
  return report;
}

CheckReport check_isomorphism(const SimplicialMap& f) {
  CheckReport report("isomorphism");
  for (int k = 0; k <= f.source().truncation(); ++k) {
    const auto& c = f.component(k);
    if (f.source().size(k) != f.target().size(k)) {
      report.fail("level " + std::to_string(k) + " sizes differ: " + std::to_string(f.source().size(k)) + " vs " +
                  std::to_string(f.target().size(k)));
      continue;
    }
    std::vector<std::size_t> pre(f.target().size(k), static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < c.size(); ++s) {
      if (pre[c[s]] != static_cast<std::size_t>(-1))
        report.fail("level " + std::to_string(k) + ": " + quote(f.source().element(k, pre[c[s]])) + " and " +
                    quote(f.source().element(k, s)) + " have the same image");
      pre[c[s]] = s;
    }
  }
  report.absorb(f.check_naturality());
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

TruncatedSimplicialSet b_nat(int truncation, int max_weight) {
  if (truncation < 0 || max_weight < 0) throw PreconditionError("b_nat needs nonnegative bounds");
  std::vector<std::vector<std::string>> levels;
  for (int k = 0; k <= truncation; ++k) {
    std::vector<std::string> level;
    for (const auto& c : compositions(k, max_weight)) level.push_back(c.encode());
    levels.push_back(std::move(level));
  }
  auto face = [](int k, int i, const std::string& e) {
    auto c = Composition::parse(e);
    auto& p = c.parts;
    if (i == 0) {
      p.erase(p.begin());
    } else if (i == k) {
      p.pop_back();
    } else {
      p[static_cast<std::size_t>(i) - 1] += p[static_cast<std::size_t>(i)];
      p.erase(p.begin() + i);
    }
    return c.encode();
  };
  auto degeneracy = [](int, int i, const std::string& e) {
    auto c = Composition::parse(e);
    c.parts.insert(c.parts.begin() + i, 0);
    return c.encode();
  };
  auto weight = [](int, const std::string& e) { return Composition::parse(e).weight(); };
  return TruncatedSimplicialSet::build(truncation, std::move(levels), face, degeneracy,
                                       std::make_pair(max_weight, TruncatedSimplicialSet::WeightFn(weight)));
}

TruncatedSimplicialSet point(int truncation) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(truncation) + 1, {"*"});
  auto star = [](int, int, const std::string&) { return std::string("*"); };
  return TruncatedSimplicialSet::build(truncation, std::move(levels), star, star);
}

OrdinalMap edgewise_double(const OrdinalMap& g) {
  const int m = g.source();
  const int n = g.target();
  std::vector<int> v;
  for (int j = 0; j <= 2 * m + 1; ++j) v.push_back(j <= m ? n - g(m - j) : n + 1 + g(j - m - 1));
  return OrdinalMap(2 * m + 1, 2 * n + 1, std::move(v));
}

TruncatedSimplicialSet edgewise(const TruncatedSimplicialSet& x) {
  if (x.truncation() < 1) throw TruncationTooSmall("edgewise subdivision needs X_1", 1);
  const int n = (x.truncation() - 1) / 2;
  std::vector<std::vector<std::string>> levels;
  for (int k = 0; k <= n; ++k) levels.push_back(x.level(2 * k + 1));
  TruncatedSimplicialSet::OperatorTables faces(static_cast<std::size_t>(n) + 1);
  TruncatedSimplicialSet::OperatorTables degens(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      faces[static_cast<std::size_t>(k)].push_back(x.operator_table(edgewise_double(OrdinalMap::coface(k, i))));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= k; ++i)
      degens[static_cast<std::size_t>(k)].push_back(x.operator_table(edgewise_double(OrdinalMap::codegeneracy(k, i))));
  return TruncatedSimplicialSet(n, std::move(levels), std::move(faces), std::move(degens));
}

CheckReport compare_tw_bn_with_delta_inert(int truncation, int max_weight) {
  if (truncation < 5) throw TruncationTooSmall("composition in tw(BN) needs 2-simplices of the subdivision", 5);
  CheckReport report("tw(BN) vs inert maps");
  const auto bn = b_nat(truncation, max_weight);
  const auto sd = edgewise(bn);

  // Objects: sd_0 = (BN)_1 = {(m)}.
  std::vector<int> object_value;
  for (const auto& e : sd.level(0)) {
    const auto c = Composition::parse(e);
    if (c.length() != 1) report.fail("object " + quote(e) + " is not a single arrow of BN");
    object_value.push_back(c.weight());
  }
  for (int m = 0; m <= max_weight; ++m)
    if (std::count(object_value.begin(), object_value.end(), m) != 1)
      report.fail("object " + std::to_string(m) + " does not occur exactly once");

  // Arrows (a, m, b) : m -> a+m+b correspond to (d_top)^b (d_bot)^a.
  auto to_inert = [&](std::size_t arrow) {
    const auto c = Composition::parse(sd.element(1, arrow));
    const int src = object_value[sd.face(1, 1, arrow)];
    const int tgt = object_value[sd.face(1, 0, arrow)];
    return InertMap::with_offset(src, tgt, c.parts.front());
  };
  std::map<std::pair<int, int>, std::vector<InertMap>> homs;
  for (std::size_t a = 0; a < sd.size(1); ++a) {
    const auto c = Composition::parse(sd.element(1, a));
    const int src = object_value[sd.face(1, 1, a)];
    const int tgt = object_value[sd.face(1, 0, a)];
    if (c.parts.size() != 3 || c.parts[1] != src || c.weight() != tgt) {
      report.fail("arrow " + quote(sd.element(1, a)) + " has unexpected endpoints");
      continue;
    }
    homs[{src, tgt}].push_back(to_inert(a));
  }
  for (int m = 0; m <= max_weight; ++m)
    for (int n = 0; n <= max_weight; ++n) {
      auto got = homs[{m, n}];
      std::sort(got.begin(), got.end());
      if (got != inert_homset(m, n))
        report.fail("hom(" + std::to_string(m) + ", " + std::to_string(n) + ") has " + std::to_string(got.size()) +
                    " arrows, inert maps: " + std::to_string(inert_homset(m, n).size()));
    }

  for (std::size_t o = 0; o < sd.size(0); ++o) {
    const auto id = sd.degeneracy(0, 0, o);
    if (to_inert(id).map() != OrdinalMap::identity(object_value[o]))
      report.fail("identity at " + std::to_string(object_value[o]) + " maps to " + to_inert(id).map().to_string());
  }

  for (std::size_t s = 0; s < sd.size(2); ++s) {
    const auto first = to_inert(sd.face(2, 2, s));
    const auto second = to_inert(sd.face(2, 0, s));
    const auto composite = to_inert(sd.face(2, 1, s));
    if (compose(first.map(), second.map()) != composite.map())
      report.fail("composition not preserved on " + quote(sd.element(2, s)));
  }
  report.absorb(check_segal(sd));
  return report;
}

ElementsCategory elements_category(const TruncatedSimplicialSet& x) {
  ElementsCategory cat;
  for (int k = 0; k <= x.truncation(); ++k) {
    cat.level_offset.push_back(cat.objects.size());
    for (std::size_t s = 0; s < x.size(k); ++s) cat.objects.push_back({k, s});
  }
  for (int j = 0; j <= x.truncation(); ++j)
    for (int k = 0; k <= x.truncation(); ++k)
      for (auto& g : monotone_maps(j, k)) {
        const auto table = x.operator_table(g);
        for (std::size_t s = 0; s < x.size(k); ++s)
          cat.morphisms.push_back({cat.object_index(j, table[s]), cat.object_index(k, s), g});
      }
  return cat;
}

CheckReport compare_active_arrows_with_el_bn(int k_max, int n_max) {
  CheckReport report("Arr^act(Delta)^cart vs el(BN)");
  const auto arr = active_arrow_category(k_max, n_max);
  const auto bn = b_nat(k_max, n_max);
  const auto el = elements_category(bn);

  // Objects over [k]: active maps [k] -> [n] versus k-tuples.
  std::vector<std::size_t> object_image;
  std::vector<bool> covered(el.objects.size(), false);
  for (const auto& alpha : arr.objects) {
    const auto c = active_to_composition(alpha);
    auto s = bn.find(alpha.source(), c.encode());
    if (!s) {
      report.fail("active map " + alpha.map().to_string() + " has no tuple " + quote(c.encode()));
      object_image.push_back(0);
      continue;
    }
    const auto o = el.object_index(alpha.source(), *s);
    if (covered[o]) report.fail("tuple " + quote(c.encode()) + " hit twice");
    covered[o] = true;
    object_image.push_back(o);
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    report.fail("some element of el(BN) is not an active map");

  // Morphisms are keyed by (top map, target object) on both sides.
  std::map<std::pair<OrdinalMap, std::size_t>, std::size_t> el_source;
  for (const auto& m : el.morphisms) el_source.emplace(std::make_pair(m.map, m.target), m.source);
  if (el_source.size() != el.morphisms.size()) report.fail("el(BN) has parallel morphisms with equal labels");

  for (const auto& m : arr.morphisms) {
    auto it = el_source.find({m.top, object_image[m.target]});
    const std::string kind = m.top.is_inert() ? "inert" : m.top.is_active() ? "active" : "general";
    if (it == el_source.end()) {
      report.fail(kind + " lift along " + m.top.to_string() + " missing in el(BN)");
    } else if (it->second != object_image[m.source]) {
      report.fail(kind + " lift along " + m.top.to_string() + " into " +
                  arr.objects[m.target].map().to_string() + " disagrees");
    }
  }
  if (arr.morphisms.size() != el.morphisms.size())
    report.fail("morphism counts differ: " + std::to_string(arr.morphisms.size()) + " vs " +
                std::to_string(el.morphisms.size()));
  return report;
}

}  // namespace freedecomp
