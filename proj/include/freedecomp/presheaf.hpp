#pragma once

// Presheaves on the inert part of the simplex category, the free
// decomposition space on such a presheaf, its projection to BN, and the
// recovery of the presheaf from a decomposition space over BN.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "freedecomp/simplex.hpp"
#include "freedecomp/simplicial.hpp"

namespace freedecomp {

// Finite sets A_0..A_budget with d_bot, d_top : A_n -> A_{n-1}.
class InertPresheaf {
 public:
  using Table = std::vector<std::vector<std::size_t>>;  // table[n][x], n >= 1
  using FaceFn = std::function<std::string(int level, const std::string& element)>;

  InertPresheaf(int budget, std::vector<std::vector<std::string>> levels, Table d_bot, Table d_top);

  // Throws IntegrityError when a face lands outside the level below.
  static InertPresheaf build(int budget, std::vector<std::vector<std::string>> levels, const FaceFn& d_bot,
                             const FaceFn& d_top);

  int budget() const noexcept { return budget_; }
  std::size_t size(int n) const { return levels_.at(static_cast<std::size_t>(n)).size(); }
  std::size_t total_size() const;
  const std::vector<std::string>& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const std::vector<std::vector<std::string>>& levels() const noexcept { return levels_; }
  const std::string& element(int n, std::size_t x) const { return level(n).at(x); }
  std::optional<std::size_t> find(int n, std::string_view encoding) const;
  std::size_t index(int n, std::string_view encoding) const;

  std::size_t bot(int n, std::size_t x) const { return bot_table(n)[x]; }
  std::size_t top(int n, std::size_t x) const { return top_table(n)[x]; }
  const std::vector<std::size_t>& bot_table(int n) const;
  const std::vector<std::size_t>& top_table(int n) const;

  // (d_bot)^bottoms (d_top)^tops applied to x in A_n.
  std::size_t restrict(int n, std::size_t x, int bottoms, int tops) const;
  // A(g) for g : [m] -> [n] inert, applied to x in A_n.
  std::size_t apply(const InertMap& g, std::size_t x) const;

  void set_bot(int n, std::size_t x, std::size_t y);
  void set_top(int n, std::size_t x, std::size_t y);

 private:
  int budget_;
  std::vector<std::vector<std::string>> levels_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  Table bot_;
  Table top_;
};

using PresheafPtr = std::shared_ptr<const InertPresheaf>;

class PresheafMap {
 public:
  PresheafMap(PresheafPtr source, PresheafPtr target, std::vector<std::vector<std::size_t>> components);
  // Throws IntegrityError if an image is missing from the target.
  static PresheafMap from_function(PresheafPtr source, PresheafPtr target,
                                   const std::function<std::string(int, const std::string&)>& fn);
  static PresheafMap identity(PresheafPtr a);

  const InertPresheaf& source() const noexcept { return *source_; }
  const InertPresheaf& target() const noexcept { return *target_; }
  const PresheafPtr& source_ptr() const noexcept { return source_; }
  const PresheafPtr& target_ptr() const noexcept { return target_; }
  const std::vector<std::size_t>& component(int n) const { return components_.at(static_cast<std::size_t>(n)); }
  std::size_t operator()(int n, std::size_t x) const { return component(n).at(x); }

  CheckReport check_naturality() const;
  PresheafMap then(const PresheafMap& next) const;

 private:
  PresheafPtr source_;
  PresheafPtr target_;
  std::vector<std::vector<std::size_t>> components_;
};

// d_top d_bot = d_bot d_top on every level >= 2.
CheckReport validate_presheaf(const InertPresheaf& a);
// Levelwise bijection commuting with both faces.
CheckReport check_presheaf_isomorphism(const PresheafMap& f);

// A k-simplex of the free space: an active map [k] -> [n] (as its
// composition) together with an element of A_n. Encoded "comp|elem".
struct FreeSimplex {
  Composition comp;
  std::string elem;

  std::string encode() const;
  // Splits at the first '|'; throws ParseError.
  static FreeSimplex parse(std::string_view text);
};

// Parses and checks membership: BudgetOverflow when the weight exceeds the
// budget, IndexOutOfRange when the element is not in A_weight.
FreeSimplex parse_free_simplex(const InertPresheaf& a, std::string_view text);

// The free decomposition space truncated at `truncation`; level k holds all
// pairs (composition of length k, element of A_weight), weight <= budget.
TruncatedSimplicialSet free_space(const InertPresheaf& a, int truncation);

// (comp, elem) |-> comp into b_nat(truncation, max_weight). The source must be
// a free space; max_weight must cover its weights.
SimplicialMap culf_projection(SimplicialSetPtr free, int max_weight);
SimplicialMap culf_projection(const InertPresheaf& a, int truncation, int max_weight);

// (comp, elem) |-> (comp, phi(elem)).
SimplicialMap map_free(const PresheafMap& phi, SimplicialSetPtr source_free, SimplicialSetPtr target_free);
SimplicialMap map_free(const PresheafMap& phi, int truncation);

// The fibres of phi_1 over (n), with faces read off the unique 2-simplices
// over (n-1, 1) and (1, n-1). Throws IntegrityError when a lift is missing
// or not unique.
InertPresheaf recover_presheaf(const TruncatedSimplicialSet& x, const SimplicialMap& phi);

// recover(free(A)) ~ A via x |-> "n|x".
CheckReport roundtrip_recover_free(const InertPresheaf& a, int truncation);
// free(recover(X)) ~ X over BN, by locating each simplex from its long edge
// and its image in BN.
CheckReport roundtrip_free_recover(SimplicialSetPtr x, const SimplicialMap& phi);

// Pass iff A_{m+n} -> A_m x_{A_0} A_n is a bijection for m, n >= 1; with
// `all_covers`, every decomposition n = n_1 + ... + n_k into positive parts.
CheckReport check_sheaf(const InertPresheaf& a, bool all_covers = false);

// A'_0 = {"*"}, A'_n = A_{n-1}; both faces out of A'_1 are the unique map.
InertPresheaf shift_up(const InertPresheaf& a);
// A'_n = A_{n+d}.
InertPresheaf shift_down(const InertPresheaf& a, int d);

// Restriction species: one face out of level 1, two faces above.
InertPresheaf from_restriction_species(int budget, std::vector<std::vector<std::string>> levels,
                                       const std::function<std::string(const std::string&)>& level_one_face,
                                       const InertPresheaf::FaceFn& d_bot, const InertPresheaf::FaceFn& d_top);
// True iff the two faces A_1 -> A_0 coincide.
bool faces_agree_on_level_one(const InertPresheaf& a);

}  // namespace freedecomp
