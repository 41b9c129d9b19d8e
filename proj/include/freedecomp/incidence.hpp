#pragma once

// The incidence coalgebra of a truncated decomposition space: exact
// comultiplication and counit, convolution, zeta, Moebius and length.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freedecomp/simplicial.hpp"

namespace freedecomp {

using Rational = mpq_class;

// Reduced "p/q" with an explicit sign; zero is "0/1".
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

// Finite linear combination of k-fold tensors of 1-simplex encodings.
class TensorComb {
 public:
  using Key = std::vector<std::string>;

  explicit TensorComb(int arity = 2) : arity_(arity) {}

  int arity() const noexcept { return arity_; }
  // Accumulates; zero coefficients are never stored.
  void add(Key key, const Rational& coeff);
  void add(const TensorComb& other, const Rational& scale = 1);
  Rational coefficient(const Key& key) const;
  const std::map<Key, Rational>& terms() const& noexcept { return terms_; }
  // By value on temporaries, so `for (... : comult(x, f).terms())` is safe.
  std::map<Key, Rational> terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const TensorComb& a, const TensorComb& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  int arity_;
  std::map<Key, Rational> terms_;
};

// A rational on every 1-simplex, in level order.
struct ConvolutionFunction {
  std::vector<std::string> domain;
  std::vector<Rational> values;

  const Rational& operator()(std::size_t f) const { return values.at(f); }
  friend bool operator==(const ConvolutionFunction&, const ConvolutionFunction&) = default;
};

// Sum over 2-simplices with long edge f of d_2 s (x) d_0 s.
TensorComb comult(const TruncatedSimplicialSet& x, std::size_t f);
TensorComb comult(const TruncatedSimplicialSet& x, std::string_view f);
// Applies the comultiplication `times` times, always to the last factor.
TensorComb iterated_comult(const TruncatedSimplicialSet& x, std::string_view f, int times);
// Sum over k-simplices with long edge f of their spine.
TensorComb spine_sum(const TruncatedSimplicialSet& x, std::size_t f, int k);

// 1 on the image of s_0 : X_0 -> X_1, else 0.
Rational counit(const TruncatedSimplicialSet& x, std::size_t f);

// Coassociativity and both counit laws on each sampled 1-simplex; the double
// comultiplication is also compared with the sum over 3-simplices.
CheckReport check_coassoc(const TruncatedSimplicialSet& x, const std::vector<std::size_t>& sample);

ConvolutionFunction zeta(const TruncatedSimplicialSet& x);
ConvolutionFunction epsilon(const TruncatedSimplicialSet& x);
ConvolutionFunction convolve(const TruncatedSimplicialSet& x, const ConvolutionFunction& phi,
                             const ConvolutionFunction& psi);

// The largest k with a nondegenerate k-simplex having long edge f. When it
// reaches the truncation the true value may be larger.
struct Length {
  int value = 0;
  bool saturated = false;
};
Length length(const TruncatedSimplicialSet& x, std::size_t f);
std::vector<Length> lengths(const TruncatedSimplicialSet& x);

struct MobiusResult {
  ConvolutionFunction mu;           // recursion; zero where not certified
  ConvolutionFunction alternating;  // sum of (-1)^k Phi_k; zero where not certified
  std::vector<bool> certified;      // length known and <= up_to_length
  std::vector<Length> lengths;
};

// mu(f) = eps(f) - sum over 2-simplices s != s_1 f with long edge f of
// mu(d_2 s), in order of increasing length. Throws TruncationTooSmall unless
// up_to_length < truncation.
MobiusResult mobius(const TruncatedSimplicialSet& x, int up_to_length);

}  // namespace freedecomp
