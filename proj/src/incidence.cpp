#include "freedecomp/incidence.hpp"

#include <algorithm>

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

// 2-simplices grouped by long edge.
std::vector<std::vector<std::size_t>> by_long_edge(const TruncatedSimplicialSet& x) {
  if (x.truncation() < 2) throw TruncationTooSmall("comultiplication needs 2-simplices", 2);
  std::vector<std::vector<std::size_t>> out(x.size(1));
  for (std::size_t s = 0; s < x.size(2); ++s) out[x.face(2, 1, s)].push_back(s);
  return out;
}

TensorComb comult_indexed(const TruncatedSimplicialSet& x, const std::vector<std::vector<std::size_t>>& index,
                          std::size_t f) {
  TensorComb out(2);
  for (std::size_t s : index.at(f)) out.add({x.element(1, x.face(2, 2, s)), x.element(1, x.face(2, 0, s))}, 1);
  return out;
}

std::vector<std::size_t> long_edge_table(const TruncatedSimplicialSet& x, int k) {
  return x.operator_table(OrdinalMap(1, k, {0, k}));
}

std::string show(const TensorComb::Key& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? " | " : "") + std::string("'") + key[i] + "'";
  return out + ")";
}

}  // namespace

std::string format_rational(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (sgn(r) == 0) return "0/1";
  const mpz_class num = abs(r.get_num());
  return std::string(sgn(r) < 0 ? "-" : "+") + num.get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::string body = s;
  if (body.front() == '+') body.erase(0, 1);
  const auto digits_ok = [](const std::string& d, bool allow_sign) {
    std::size_t i = allow_sign && !d.empty() && d.front() == '-' ? 1 : 0;
    if (i >= d.size()) return false;
    return std::all_of(d.begin() + static_cast<std::ptrdiff_t>(i), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw ParseError("bad rational '" + s + "'");
  const mpz_class n{num}, d{den};
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q{n, d};
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// TensorComb

void TensorComb::add(Key key, const Rational& coeff) {
  if (static_cast<int>(key.size()) != arity_) throw DimensionMismatch("tensor key has the wrong arity");
  if (sgn(coeff) == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void TensorComb::add(const TensorComb& other, const Rational& scale) {
  if (other.arity_ != arity_) throw DimensionMismatch("adding tensors of different arity");
  for (const auto& [k, c] : other.terms_) add(k, c * scale);
}

Rational TensorComb::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// Comultiplication and counit

TensorComb comult(const TruncatedSimplicialSet& x, std::size_t f) {
  if (f >= x.size(1)) throw IndexOutOfRange("no 1-simplex with index " + std::to_string(f));
  return comult_indexed(x, by_long_edge(x), f);
}

TensorComb comult(const TruncatedSimplicialSet& x, std::string_view f) { return comult(x, x.index(1, f)); }

TensorComb iterated_comult(const TruncatedSimplicialSet& x, std::string_view f, int times) {
  if (times < 0) throw PreconditionError("iteration count must be nonnegative");
  TensorComb current(1);
  current.add({std::string(f)}, 1);
  x.index(1, f);
  if (times == 0) return current;
  const auto index = by_long_edge(x);
  for (int t = 0; t < times; ++t) {
    TensorComb next(current.arity() + 1);
    for (const auto& [key, c] : current.terms()) {
      const auto split = comult_indexed(x, index, x.index(1, key.back()));
      for (const auto& [pair, d] : split.terms()) {
        auto k = key;
        k.back() = pair[0];
        k.push_back(pair[1]);
        next.add(std::move(k), c * d);
      }
    }
    current = std::move(next);
  }
  return current;
}

namespace {

// Spine sums for every 1-simplex at once.
std::vector<TensorComb> all_spine_sums(const TruncatedSimplicialSet& x, int k) {
  if (k < 1) throw PreconditionError("spine sums need k >= 1");
  if (k > x.truncation()) throw TruncationTooSmall("spine sum over k-simplices", k);
  const auto longs = long_edge_table(x, k);
  std::vector<std::vector<std::size_t>> edges;
  for (int i = 1; i <= k; ++i) edges.push_back(x.operator_table(inert_rho(i, k).map()));
  std::vector<TensorComb> out(x.size(1), TensorComb(k));
  for (std::size_t s = 0; s < x.size(k); ++s) {
    TensorComb::Key key;
    for (const auto& e : edges) key.push_back(x.element(1, e[s]));
    out[longs[s]].add(std::move(key), 1);
  }
  return out;
}

}  // namespace

TensorComb spine_sum(const TruncatedSimplicialSet& x, std::size_t f, int k) {
  if (f >= x.size(1)) throw IndexOutOfRange("no 1-simplex with index " + std::to_string(f));
  return all_spine_sums(x, k)[f];
}

Rational counit(const TruncatedSimplicialSet& x, std::size_t f) {
  if (x.truncation() < 1) throw TruncationTooSmall("the counit needs 1-simplices", 1);
  const auto& s0 = x.degeneracy_table(0, 0);
  return std::find(s0.begin(), s0.end(), f) != s0.end() ? Rational(1) : Rational(0);
}

CheckReport check_coassoc(const TruncatedSimplicialSet& x, const std::vector<std::size_t>& sample) {
  if (x.truncation() < 3) throw TruncationTooSmall("coassociativity is compared with 3-simplices", 3);
  CheckReport report("coassociativity");
  const auto index = by_long_edge(x);
  const auto spine3 = all_spine_sums(x, 3);
  std::vector<bool> is_unit(x.size(1), false);
  for (std::size_t e : x.degeneracy_table(0, 0)) is_unit[e] = true;

  for (std::size_t f : sample) {
    const std::string name = "'" + x.element(1, f) + "'";
    const auto d = comult_indexed(x, index, f);
    TensorComb left(3), right(3), eps_left(1), eps_right(1);
    for (const auto& [key, c] : d.terms()) {
      const auto a = x.index(1, key[0]);
      const auto b = x.index(1, key[1]);
      const auto da = comult_indexed(x, index, a), db = comult_indexed(x, index, b);
      for (const auto& [k2, c2] : da.terms()) left.add({k2[0], k2[1], key[1]}, c * c2);
      for (const auto& [k2, c2] : db.terms()) right.add({key[0], k2[0], k2[1]}, c * c2);
      if (is_unit[a]) eps_left.add({key[1]}, c);
      if (is_unit[b]) eps_right.add({key[0]}, c);
    }
    TensorComb identity(1);
    identity.add({x.element(1, f)}, 1);
    auto first_difference = [](const TensorComb& p, const TensorComb& q) {
      for (const auto& [k, c] : p.terms())
        if (q.coefficient(k) != c) return show(k);
      for (const auto& [k, c] : q.terms())
        if (p.coefficient(k) != c) return show(k);
      return std::string();
    };
    if (!(left == right)) report.fail(name + ": (D x id)D and (id x D)D differ at " + first_difference(left, right));
    const auto& spines = spine3.at(f);
    if (!(left == spines)) report.fail(name + ": (D x id)D differs from the 3-simplex sum at " + first_difference(left, spines));
    if (!(eps_left == identity)) report.fail(name + ": (e x id)D is not the identity");
    if (!(eps_right == identity)) report.fail(name + ": (id x e)D is not the identity");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Convolution

ConvolutionFunction zeta(const TruncatedSimplicialSet& x) {
  return ConvolutionFunction{x.level(1), std::vector<Rational>(x.size(1), Rational(1))};
}

ConvolutionFunction epsilon(const TruncatedSimplicialSet& x) {
  ConvolutionFunction e{x.level(1), std::vector<Rational>(x.size(1), Rational(0))};
  for (std::size_t f : x.degeneracy_table(0, 0)) e.values[f] = 1;
  return e;
}

ConvolutionFunction convolve(const TruncatedSimplicialSet& x, const ConvolutionFunction& phi,
                             const ConvolutionFunction& psi) {
  if (x.truncation() < 2) throw TruncationTooSmall("convolution needs 2-simplices", 2);
  if (phi.values.size() != x.size(1) || psi.values.size() != x.size(1))
    throw DimensionMismatch("convolution functions must be defined on all of X_1");
  ConvolutionFunction out{x.level(1), std::vector<Rational>(x.size(1), Rational(0))};
  for (std::size_t s = 0; s < x.size(2); ++s)
    out.values[x.face(2, 1, s)] += phi.values[x.face(2, 2, s)] * psi.values[x.face(2, 0, s)];
  return out;
}

// ---------------------------------------------------------------------------
// Length and Moebius

std::vector<Length> lengths(const TruncatedSimplicialSet& x) {
  std::vector<int> best(x.size(1), -1);
  for (int k = 0; k <= x.truncation(); ++k) {
    const auto longs = long_edge_table(x, k);
    for (std::size_t s = 0; s < x.size(k); ++s)
      if (!x.is_degenerate(k, s)) best[longs[s]] = std::max(best[longs[s]], k);
  }
  std::vector<Length> out;
  for (int b : best) {
    if (b < 0) throw IntegrityError("a 1-simplex is the long edge of no nondegenerate simplex");
    out.push_back(Length{b, b >= x.truncation()});
  }
  return out;
}

Length length(const TruncatedSimplicialSet& x, std::size_t f) { return lengths(x).at(f); }

MobiusResult mobius(const TruncatedSimplicialSet& x, int up_to_length) {
  if (up_to_length < 0) throw PreconditionError("length bound must be nonnegative");
  if (up_to_length + 1 > x.truncation())
    throw TruncationTooSmall("Moebius values up to length " + std::to_string(up_to_length), up_to_length + 1);
  MobiusResult r;
  r.lengths = lengths(x);
  r.certified.assign(x.size(1), false);
  for (std::size_t f = 0; f < x.size(1); ++f)
    r.certified[f] = !r.lengths[f].saturated && r.lengths[f].value <= up_to_length;

  const auto eps = epsilon(x);
  const auto index = by_long_edge(x);
  r.mu = ConvolutionFunction{x.level(1), std::vector<Rational>(x.size(1), Rational(0))};
  std::vector<std::size_t> order;
  for (std::size_t f = 0; f < x.size(1); ++f)
    if (r.certified[f]) order.push_back(f);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return r.lengths[a].value < r.lengths[b].value; });
  std::vector<bool> done(x.size(1), false);
  for (std::size_t f : order) {
    const auto trivial = x.degeneracy(1, 1, f);
    Rational sum = 0;
    for (std::size_t s : index[f]) {
      if (s == trivial) continue;
      const auto g = x.face(2, 2, s);
      if (!done[g])
        throw IntegrityError("Moebius recursion at '" + x.element(1, f) + "' needs '" + x.element(1, g) +
                             "', which is not shorter");
      sum += r.mu.values[g];
    }
    r.mu.values[f] = eps.values[f] - sum;
    done[f] = true;
  }

  r.alternating = ConvolutionFunction{x.level(1), std::vector<Rational>(x.size(1), Rational(0))};
  for (int k = 0; k <= x.truncation(); ++k) {
    const auto longs = long_edge_table(x, k);
    for (std::size_t s = 0; s < x.size(k); ++s)
      if (!x.is_degenerate(k, s)) r.alternating.values[longs[s]] += k % 2 == 0 ? 1 : -1;
  }
  for (std::size_t f = 0; f < x.size(1); ++f)
    if (!r.certified[f]) r.alternating.values[f] = 0;
  return r;
}

}  // namespace freedecomp
