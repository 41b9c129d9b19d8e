#pragma once

// Exact arithmetic in the simplex category: monotone maps between finite
// ordinals [m] = {0 < 1 < ... < m}, the active-inert factorization system,
// the composition codec for active maps, and the generating active-inert
// pushout squares.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace freedecomp {

// A monotone map [source] -> [target], stored as its value vector.
class OrdinalMap {
 public:
  OrdinalMap(int source, int target, std::vector<int> values);

  static OrdinalMap identity(int n);
  // d^i : [n-1] -> [n], skipping i.
  static OrdinalMap coface(int n, int i);
  // s^i : [n+1] -> [n], hitting i twice.
  static OrdinalMap codegeneracy(int n, int i);

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_active() const noexcept;
  bool is_inert() const noexcept;
  bool is_injective() const noexcept;
  bool is_surjective() const noexcept;

  // "[m]->[n](v0,v1,...)"
  std::string to_string() const;

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
  friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> values_;
};

// Endpoint-preserving ordinal map.
class ActiveMap {
 public:
  explicit ActiveMap(OrdinalMap map);
  // The unique active map [1] -> [n].
  static ActiveMap long_edge(int n);

  const OrdinalMap& map() const noexcept { return map_; }
  int source() const noexcept { return map_.source(); }
  int target() const noexcept { return map_.target(); }
  int operator()(int i) const { return map_(i); }

  friend bool operator==(const ActiveMap&, const ActiveMap&) = default;
  friend auto operator<=>(const ActiveMap&, const ActiveMap&) = default;

 private:
  OrdinalMap map_;
};

// Distance-preserving ordinal map; determined by source, target and the
// offset of its image.
class InertMap {
 public:
  explicit InertMap(OrdinalMap map);
  static InertMap with_offset(int source, int target, int offset);
  // d_bot = d^0 : [n-1] -> [n] and d_top = d^n : [n-1] -> [n].
  static InertMap bottom_face(int n) { return with_offset(n - 1, n, 1); }
  static InertMap top_face(int n) { return with_offset(n - 1, n, 0); }

  const OrdinalMap& map() const noexcept { return map_; }
  int source() const noexcept { return map_.source(); }
  int target() const noexcept { return map_.target(); }
  int offset() const noexcept { return map_(0); }
  // Number of bottom faces (offset) and top faces in (d_top)^b (d_bot)^a.
  int bottom_count() const noexcept { return offset(); }
  int top_count() const noexcept { return target() - source() - offset(); }

  friend bool operator==(const InertMap&, const InertMap&) = default;
  friend auto operator<=>(const InertMap&, const InertMap&) = default;

 private:
  OrdinalMap map_;
};

// Diagrammatic composite: first `first`, then `second`.
// Throws DimensionMismatch unless first.target() == second.source().
OrdinalMap compose(const OrdinalMap& first, const OrdinalMap& second);

struct Factorization {
  ActiveMap active;
  InertMap inert;
};

// The unique factorization f = inert . active (active applied first).
Factorization factorize(const OrdinalMap& f);

// A k-tuple of naturals (parts may be zero); the codec image of an active
// map [k] -> [weight].
struct Composition {
  std::vector<int> parts;

  int length() const noexcept { return static_cast<int>(parts.size()); }
  int weight() const noexcept;
  bool has_zero_part() const noexcept;
  // Comma separated, "" for the empty composition.
  std::string encode() const;
  static Composition parse(std::string_view text);

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

Composition active_to_composition(const ActiveMap& alpha);
ActiveMap composition_to_active(const Composition& c);

// rho_i : [1] -> [k] with image {i-1, i}; requires 1 <= i <= k.
InertMap inert_rho(int i, int k);

// The inert factor of alpha . rho_i; its source is [n_i].
InertMap gamma(const ActiveMap& alpha, int i);

// All monotone maps [m] -> [n] in lexicographic order of value vectors.
std::vector<OrdinalMap> monotone_maps(int m, int n);
std::vector<ActiveMap> active_maps(int k, int n);
std::vector<InertMap> inert_homset(int m, int n);

// Weak compositions with exactly `length` parts and weight <= max_weight,
// in lexicographic order.
std::vector<Composition> compositions(int length, int max_weight);

// Pushout of the span [m'] <-inert- [m] -active-> [n] where the active leg
// is a single inner coface or codegeneracy and the inert leg is d_bot or
// d_top. Applying a simplicial set X turns it into the square
//
//     X_{n'} --pushout_inert^*--> X_n
//       |                          |
//  pushout_active^*            active_leg^*
//       v                          v
//     X_{m'} ----inert_leg^*-----> X_m
//
// which must be a pullback for X to be a decomposition space.
struct GeneratingSquare {
  enum class ActiveKind { inner_coface, codegeneracy };
  enum class InertKind { bottom, top };

  ActiveKind active_kind;
  int active_index;  // i of d^i or s^i
  InertKind inert_kind;

  ActiveMap active_leg;      // [m] -> [n]
  InertMap inert_leg;        // [m] -> [m']
  ActiveMap pushout_active;  // [m'] -> [n']
  InertMap pushout_inert;    // [n] -> [n']

  int m() const noexcept { return active_leg.source(); }
  int n() const noexcept { return active_leg.target(); }
  int m_prime() const noexcept { return inert_leg.target(); }
  int n_prime() const noexcept { return pushout_active.target(); }
  int max_dimension() const noexcept;

  std::string describe() const;
};

// Completes an active/inert span with a common source to its pushout.
GeneratingSquare complete_square(const ActiveMap& active_leg, const InertMap& inert_leg);

// True when the square commutes and every cocone into [t], t <= max_cocone_dim,
// factors through it by exactly one map.
bool verify_pushout(const GeneratingSquare& square, int max_cocone_dim);

// All generating squares whose pushout object has dimension <= max_dim,
// each verified against cocones of dimension <= max_dim + 2.
std::vector<GeneratingSquare> generating_squares(int max_dim);

// Objects: active maps [k] -> [n] with k <= k_max, n <= n_max.
// Morphisms alpha' -> alpha: commutative squares with arbitrary top leg
// [k'] -> [k] and inert bottom leg [n'] -> [n].
struct ActiveArrowCategory {
  struct Morphism {
    std::size_t source;
    std::size_t target;
    OrdinalMap top;
    InertMap bottom;
  };
  std::vector<ActiveMap> objects;
  std::vector<Morphism> morphisms;

  std::size_t index_of(const ActiveMap& alpha) const;
};

ActiveArrowCategory active_arrow_category(int k_max, int n_max);

}  // namespace freedecomp
