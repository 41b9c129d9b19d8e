#include <doctest.h>

#include <set>

#include "freedecomp/errors.hpp"
#include "freedecomp/simplex.hpp"

using namespace freedecomp;

namespace {

OrdinalMap om(int m, int n, std::vector<int> v) { return OrdinalMap(m, n, std::move(v)); }

// Brute-force oracle: every monotone [m] -> [n], built by odometer rather than
// by the library's recursion.
std::vector<std::vector<int>> brute_monotone(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    if (std::is_sorted(v.begin(), v.end())) out.push_back(v);
    int j = m;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == n) v[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++v[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

TEST_CASE("ordinal maps validate their values") {
  CHECK_THROWS_AS(om(1, 2, {2, 1}), PreconditionError);
  CHECK_THROWS_AS(om(1, 2, {0, 3}), PreconditionError);
  CHECK_THROWS_AS(om(1, 2, {0}), DimensionMismatch);
  CHECK(om(2, 2, {0, 1, 2}) == OrdinalMap::identity(2));
  CHECK_THROWS_AS(ActiveMap(om(1, 2, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(InertMap(om(1, 2, {0, 2})), PreconditionError);
}

TEST_CASE("compose") {
  CHECK(compose(OrdinalMap::identity(2), OrdinalMap::identity(2)) == OrdinalMap::identity(2));
  CHECK(compose(OrdinalMap::coface(1, 0), OrdinalMap::coface(2, 0)) == om(0, 2, {2}));
  CHECK(compose(OrdinalMap::codegeneracy(0, 0), OrdinalMap::coface(1, 0)) == om(1, 1, {1, 1}));
  CHECK_THROWS_AS(compose(OrdinalMap::identity(1), OrdinalMap::identity(2)), DimensionMismatch);
}

TEST_CASE("factorize examples") {
  auto f = factorize(OrdinalMap::identity(2));
  CHECK(f.active.map() == OrdinalMap::identity(2));
  CHECK(f.inert.map() == OrdinalMap::identity(2));

  f = factorize(OrdinalMap::coface(1, 0));
  CHECK(f.active.map() == OrdinalMap::identity(0));
  CHECK(f.inert.map() == OrdinalMap::coface(1, 0));

  f = factorize(om(1, 3, {1, 3}));
  CHECK(f.active.map() == om(1, 2, {0, 2}));
  CHECK(f.inert.map() == om(2, 3, {1, 2, 3}));
}

TEST_CASE("factorization exists and is unique up to [6]") {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const auto maps = monotone_maps(m, n);
      REQUIRE(maps.size() == brute_monotone(m, n).size());
      for (const auto& f : maps) {
        const auto fac = factorize(f);
        CHECK(compose(fac.active.map(), fac.inert.map()) == f);
        int found = 0;
        for (int mid = 0; mid <= n; ++mid)
          for (const auto& a : active_maps(m, mid))
            for (const auto& i : inert_homset(mid, n))
              if (compose(a.map(), i.map()) == f) ++found;
        CHECK(found == 1);
      }
    }
}

TEST_CASE("composition codec") {
  CHECK(active_to_composition(ActiveMap(OrdinalMap::identity(3))).parts == std::vector<int>{1, 1, 1});
  CHECK(active_to_composition(ActiveMap::long_edge(5)).parts == std::vector<int>{5});
  CHECK(active_to_composition(ActiveMap(om(2, 3, {0, 1, 3}))).parts == std::vector<int>{1, 2});
  CHECK(composition_to_active(Composition{}).map() == OrdinalMap::identity(0));
  CHECK(composition_to_active(Composition{{4}}) == ActiveMap::long_edge(4));
  CHECK(composition_to_active(Composition{{1, 2}}).map() == om(2, 3, {0, 1, 3}));

  for (int k = 0; k <= 6; ++k)
    for (const auto& c : compositions(k, 8)) {
      CHECK(active_to_composition(composition_to_active(c)) == c);
      const auto a = composition_to_active(c);
      CHECK(composition_to_active(active_to_composition(a)) == a);
    }
}

TEST_CASE("composition encoding") {
  CHECK(Composition{}.encode().empty());
  CHECK(Composition{{0, 3, 1}}.encode() == "0,3,1");
  CHECK(Composition::parse("0,3,1") == Composition{{0, 3, 1}});
  CHECK(Composition::parse("") == Composition{});
  CHECK_THROWS_AS(Composition::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(Composition::parse("-1"), ParseError);
  CHECK_THROWS_AS(Composition::parse("x"), ParseError);
}

TEST_CASE("compositions are counted by binomials") {
  // Weak compositions of length k and weight <= W: C(W+k, k).
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int k = 0; k <= 4; ++k)
    for (int w = 0; w <= 6; ++w) CHECK(static_cast<long>(compositions(k, w).size()) == binom(w + k, k));
  auto c = compositions(2, 2);
  CHECK(std::is_sorted(c.begin(), c.end()));
}

TEST_CASE("rho and gamma") {
  CHECK(inert_rho(1, 1).map() == OrdinalMap::identity(1));
  CHECK(inert_rho(1, 2).map() == om(1, 2, {0, 1}));
  CHECK(inert_rho(2, 3).map() == om(1, 3, {1, 2}));
  CHECK_THROWS_AS(inert_rho(0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(inert_rho(4, 3), IndexOutOfRange);

  const ActiveMap id3(OrdinalMap::identity(3));
  for (int i = 1; i <= 3; ++i) CHECK(gamma(id3, i) == inert_rho(i, 3));
  CHECK(gamma(ActiveMap(om(2, 3, {0, 1, 3})), 2).map() == om(2, 3, {1, 2, 3}));
  CHECK(gamma(ActiveMap::long_edge(4), 1).map() == OrdinalMap::identity(4));
  CHECK_THROWS_AS(gamma(id3, 4), IndexOutOfRange);

  for (int k = 1; k <= 6; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& a : active_maps(k, n)) {
        const auto c = active_to_composition(a);
        for (int i = 1; i <= k; ++i) CHECK(gamma(a, i).source() == c.parts[static_cast<std::size_t>(i) - 1]);
      }
}

TEST_CASE("inert hom-sets") {
  CHECK(inert_homset(3, 3).size() == 1);
  CHECK(inert_homset(3, 3).front().map() == OrdinalMap::identity(3));
  CHECK(inert_homset(0, 2).size() == 3);
  CHECK(inert_homset(2, 1).empty());
  for (int m = 0; m <= 8; ++m)
    for (int n = m; n <= 8; ++n) CHECK(static_cast<int>(inert_homset(m, n).size()) == n - m + 1);
  // (d_top)^b (d_bot)^a has offset a.
  CHECK(InertMap::bottom_face(2).map() == OrdinalMap::coface(2, 0));
  CHECK(InertMap::top_face(2).map() == OrdinalMap::coface(2, 2));
}

TEST_CASE("generating squares at N=1 are the two codegeneracy squares") {
  const auto sq = generating_squares(1);
  REQUIRE(sq.size() == 2);
  for (const auto& s : sq) {
    CHECK(s.active_kind == GeneratingSquare::ActiveKind::codegeneracy);
    CHECK(s.active_leg.map() == OrdinalMap::codegeneracy(0, 0));
    CHECK(s.m() == 1);
    CHECK(s.m_prime() == 2);
    CHECK(s.n_prime() == 1);
  }
  std::set<GeneratingSquare::InertKind> kinds{sq[0].inert_kind, sq[1].inert_kind};
  CHECK(kinds.size() == 2);
}

TEST_CASE("pushout of d^1 against d_bot closes with [3]") {
  const auto s = complete_square(ActiveMap(OrdinalMap::coface(2, 1)), InertMap::bottom_face(2));
  CHECK(s.n_prime() == 3);
  CHECK(s.pushout_inert.map() == OrdinalMap::coface(3, 0));
  CHECK(s.pushout_active.map() == OrdinalMap::coface(3, 2));
  CHECK(verify_pushout(s, 5));
}

TEST_CASE("every generating square commutes and is a pushout") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& s : generating_squares(n)) {
      CHECK(compose(s.inert_leg.map(), s.pushout_active.map()) == compose(s.active_leg.map(), s.pushout_inert.map()));
      CHECK(s.n_prime() <= n);
      CHECK(verify_pushout(s, n + 2));
    }
}

TEST_CASE("a non-commuting square is rejected") {
  auto s = complete_square(ActiveMap(OrdinalMap::coface(2, 1)), InertMap::top_face(2));
  auto bad = s;
  bad.pushout_inert = InertMap::with_offset(s.n(), s.n_prime(), s.pushout_inert.offset() == 0 ? 1 : 0);
  CHECK_FALSE(verify_pushout(bad, 5));
}

TEST_CASE("active arrow category") {
  const auto cat = active_arrow_category(1, 3);
  int over_one = 0;
  for (const auto& o : cat.objects) over_one += o.source() == 1;
  CHECK(over_one == 4);

  for (std::size_t i = 0; i < cat.objects.size(); ++i) {
    bool has_identity = false;
    for (const auto& m : cat.morphisms)
      has_identity |= m.source == i && m.target == i && m.top == OrdinalMap::identity(cat.objects[i].source()) &&
                      m.bottom.map() == OrdinalMap::identity(cat.objects[i].target());
    CHECK(has_identity);
  }

  // Out of id_[0]: a square from id_[0] to alpha : [k] -> [n] is a vertex of
  // [k] with a compatible inert [0] -> [n], i.e. one per vertex of [k].
  const auto big = active_arrow_category(3, 4);
  const auto zero = big.index_of(ActiveMap(OrdinalMap::identity(0)));
  std::size_t out = 0, expected = 0;
  for (const auto& m : big.morphisms) out += m.source == zero;
  for (const auto& o : big.objects) expected += static_cast<std::size_t>(o.source()) + 1;
  CHECK(out == expected);
}
