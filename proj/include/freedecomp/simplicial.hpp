#pragma once

// Truncated, levelwise-finite simplicial sets and the checkers for the
// simplicial identities, the Segal condition, the decomposition-space
// (active-inert pullback) condition and CULF maps.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "freedecomp/simplex.hpp"

namespace freedecomp {

// Outcome of a checker. A failing report always carries a witness.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string check;
  bool passed = true;
  std::vector<std::string> witnesses;

  explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

  void fail(std::string witness);
  // Folds `other` into this report, keeping witnesses in order.
  void absorb(const CheckReport& other);
  explicit operator bool() const noexcept { return passed; }
};

// Additive degree on every simplex, with the budget that keeps each level
// finite. The degree of a simplex equals the sum of the degrees of its spine
// edges, so the Segal checker can discard spine tuples above the budget.
struct Grading {
  int bound = 0;
  std::vector<std::vector<int>> weights;  // weights[k][x]
};

class TruncatedSimplicialSet {
 public:
  // tables[k][i][x]: faces d_i : X_k -> X_{k-1} (k >= 1) or degeneracies
  // s_i : X_k -> X_{k+1} (k < truncation), indexed by position in level.
  using OperatorTables = std::vector<std::vector<std::vector<std::size_t>>>;
  using OperatorFn = std::function<std::string(int level, int index, const std::string& element)>;
  using WeightFn = std::function<int(int level, const std::string& element)>;

  TruncatedSimplicialSet(int truncation, std::vector<std::vector<std::string>> levels, OperatorTables faces,
                         OperatorTables degeneracies, std::optional<Grading> grading = std::nullopt);

  // Builds operator tables by evaluating `face` and `degeneracy` on encoded
  // elements. Throws IntegrityError if an output is not in the next level.
  static TruncatedSimplicialSet build(int truncation, std::vector<std::vector<std::string>> levels,
                                      const OperatorFn& face, const OperatorFn& degeneracy,
                                      std::optional<std::pair<int, WeightFn>> grading = std::nullopt);

  int truncation() const noexcept { return truncation_; }
  std::size_t size(int k) const { return levels_.at(static_cast<std::size_t>(k)).size(); }
  const std::vector<std::string>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::string& element(int k, std::size_t x) const { return level(k).at(x); }
  std::optional<std::size_t> find(int k, std::string_view encoding) const;
  // Throws IndexOutOfRange when absent.
  std::size_t index(int k, std::string_view encoding) const;

  std::size_t face(int k, int i, std::size_t x) const { return face_table(k, i)[x]; }
  std::size_t degeneracy(int k, int i, std::size_t x) const { return degeneracy_table(k, i)[x]; }
  const std::vector<std::size_t>& face_table(int k, int i) const;
  const std::vector<std::size_t>& degeneracy_table(int k, int i) const;

  // Overwrites one operator entry; used to build mutants for negative tests.
  void set_face(int k, int i, std::size_t x, std::size_t y);
  void set_degeneracy(int k, int i, std::size_t x, std::size_t y);

  // X(g) : X_{g.target} -> X_{g.source}, decomposed into faces and
  // degeneracies.
  std::vector<std::size_t> operator_table(const OrdinalMap& g) const;
  std::size_t apply(const OrdinalMap& g, std::size_t x) const;

  bool is_degenerate(int k, std::size_t x) const;

  const std::optional<Grading>& grading() const noexcept { return grading_; }

 private:
  int truncation_;
  std::vector<std::vector<std::string>> levels_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  OperatorTables faces_;
  OperatorTables degeneracies_;
  std::optional<Grading> grading_;
  std::vector<std::vector<bool>> degenerate_;
};

using SimplicialSetPtr = std::shared_ptr<const TruncatedSimplicialSet>;

class SimplicialMap {
 public:
  // components[k][x] is the image in Y_k of x in X_k.
  SimplicialMap(SimplicialSetPtr source, SimplicialSetPtr target, std::vector<std::vector<std::size_t>> components);

  // Builds components from a function on encodings; throws IntegrityError if
  // an image is missing from the target.
  static SimplicialMap from_function(SimplicialSetPtr source, SimplicialSetPtr target,
                                     const std::function<std::string(int, const std::string&)>& fn);
  static SimplicialMap identity(SimplicialSetPtr x);

  const TruncatedSimplicialSet& source() const noexcept { return *source_; }
  const TruncatedSimplicialSet& target() const noexcept { return *target_; }
  const SimplicialSetPtr& source_ptr() const noexcept { return source_; }
  const SimplicialSetPtr& target_ptr() const noexcept { return target_; }
  std::size_t operator()(int k, std::size_t x) const { return components_.at(static_cast<std::size_t>(k)).at(x); }
  const std::vector<std::size_t>& component(int k) const { return components_.at(static_cast<std::size_t>(k)); }

  // Commutation with every face and degeneracy.
  CheckReport check_naturality() const;

  // this, then next.
  SimplicialMap then(const SimplicialMap& next) const;

  // Equal components (sources and targets compared by identity of levels).
  bool same_components(const SimplicialMap& other) const noexcept { return components_ == other.components_; }

 private:
  SimplicialSetPtr source_;
  SimplicialSetPtr target_;
  std::vector<std::vector<std::size_t>> components_;
};

// A commutative square of finite sets
//
//   apex  --to_right-->  right
//    |                     |
//  to_left             right_to_base
//    v                     v
//   left --left_to_base--> base
struct SquareOfSets {
  std::string label;
  std::vector<std::string> apex, left, right, base;
  std::vector<std::size_t> to_left, to_right, left_to_base, right_to_base;

  SquareOfSets transposed() const;
};

// Pass iff apex -> left x_base right is a bijection. Throws PreconditionError
// if the square does not commute.
CheckReport is_pullback(const SquareOfSets& square);

// The square X(square) for a generating active-inert pushout.
SquareOfSets apply_square(const TruncatedSimplicialSet& x, const GeneratingSquare& square);

CheckReport check_simplicial_identities(const TruncatedSimplicialSet& x);
CheckReport check_decomposition(const TruncatedSimplicialSet& x);
CheckReport check_segal(const TruncatedSimplicialSet& x);

// Pullback test on the naturality squares of the long-edge maps [1] -> [k];
// with `all_active` every active map between levels <= truncation is used.
CheckReport check_culf(const SimplicialMap& f, bool all_active = false);

// Levelwise bijection commuting with all operators.
CheckReport check_isomorphism(const SimplicialMap& f);

// Nerve of (N, +) with compositions of weight <= max_weight in each level.
TruncatedSimplicialSet b_nat(int truncation, int max_weight);
// One simplex "*" in every level.
TruncatedSimplicialSet point(int truncation);

// Precomposition with [n] -> [2n+1]; truncation floor((N-1)/2).
TruncatedSimplicialSet edgewise(const TruncatedSimplicialSet& x);
// The image of g under [n] -> [2n+1] = [n]^op * [n].
OrdinalMap edgewise_double(const OrdinalMap& g);

// tw(BN) versus the inert subcategory, objects and arrows up to max_weight.
CheckReport compare_tw_bn_with_delta_inert(int truncation, int max_weight);

struct ElementsCategory {
  struct Object {
    int level;
    std::size_t simplex;
  };
  // g : [j] -> [k] acting on sigma in X_k, from X(g)(sigma) to sigma.
  struct Morphism {
    std::size_t source;
    std::size_t target;
    OrdinalMap map;
  };
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> level_offset;  // first object index of each level

  std::size_t object_index(int level, std::size_t simplex) const {
    return level_offset.at(static_cast<std::size_t>(level)) + simplex;
  }
};

ElementsCategory elements_category(const TruncatedSimplicialSet& x);

// Arr^act(Delta)^cart versus el(BN), active maps [k] -> [n], k <= k_max,
// n <= n_max.
CheckReport compare_active_arrows_with_el_bn(int k_max, int n_max);

}  // namespace freedecomp
