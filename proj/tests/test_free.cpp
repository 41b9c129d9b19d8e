#include <doctest.h>

#include <memory>

#include "freedecomp/errors.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/zoo.hpp"

using namespace freedecomp;

namespace {

std::shared_ptr<const TruncatedSimplicialSet> share(TruncatedSimplicialSet x) {
  return std::make_shared<const TruncatedSimplicialSet>(std::move(x));
}

// Oracle for the free space: X(g)(comp, a) is computed from the active-inert
// factorization of (active map of comp) . g, acting on `a` by the inert part.
std::string generic_action(const InertPresheaf& a, const OrdinalMap& g, const std::string& encoded) {
  const auto s = FreeSimplex::parse(encoded);
  const auto alpha = composition_to_active(s.comp);
  const auto fac = factorize(compose(g, alpha.map()));
  const int w = s.comp.weight();
  const auto x = a.apply(fac.inert, a.index(w, s.elem));
  return FreeSimplex{active_to_composition(fac.active), a.element(fac.inert.source(), x)}.encode();
}

void check_against_generic_action(const InertPresheaf& a, int truncation) {
  const auto x = free_space(a, truncation);
  for (int m = 0; m <= truncation; ++m)
    for (int n = 0; n <= truncation; ++n)
      for (const auto& g : monotone_maps(m, n)) {
        const auto t = x.operator_table(g);
        for (std::size_t s = 0; s < x.size(n); ++s)
          REQUIRE(x.element(m, t[s]) == generic_action(a, g, x.element(n, s)));
      }
}

std::vector<std::string> ab{"a", "b"};

}  // namespace

TEST_CASE("validate_presheaf") {
  CHECK(validate_presheaf(terminal_presheaf(4)).passed);
  CHECK(validate_presheaf(words(ab, 5)).passed);

  // d_top wired to drop the first letter as well still satisfies the relation.
  auto w = words(ab, 4);
  auto miswired = InertPresheaf::build(
      4, w.levels(), [](int n, const std::string& e) { return n == 1 ? std::string() : e.substr(e.find(',') + 1); },
      [](int n, const std::string& e) { return n == 1 ? std::string() : e.substr(e.find(',') + 1); });
  CHECK(validate_presheaf(miswired).passed);
  // but it is not the word presheaf
  CHECK(miswired.element(2, miswired.top(3, miswired.index(3, "a,b,b"))) == "b,b");

  auto broken = words(ab, 3);
  broken.set_top(2, broken.index(2, "a,b"), broken.index(1, "b"));
  const auto r = validate_presheaf(broken);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("free space on words") {
  const auto a = words(ab, 2);
  const auto x = free_space(a, 3);
  CHECK(x.size(1) == 7);
  const auto s = x.index(2, "1,1|a,b");
  CHECK(x.element(1, x.face(2, 0, s)) == "1|b");
  CHECK(x.element(1, x.face(2, 2, s)) == "1|a");
  CHECK(x.element(1, x.face(2, 1, s)) == "2|a,b");
  CHECK(x.element(2, x.degeneracy(1, 0, x.index(1, "2|a,b"))) == "0,2|a,b");
  CHECK(check_simplicial_identities(x).passed);
  CHECK(check_decomposition(x).passed);
}

TEST_CASE("free space operators agree with the factorization action") {
  check_against_generic_action(words(ab, 3), 3);
  check_against_generic_action(noncrossing_partitions(4), 3);
  check_against_generic_action(dyck_by_height(2, 8), 3);
  check_against_generic_action(quiver_paths(sample_quiver(), 3), 3);
}

TEST_CASE("free space on the terminal presheaf is BN") {
  auto f = share(free_space(terminal_presheaf(6), 4));
  auto bn = share(b_nat(4, 6));
  const auto iso = SimplicialMap::from_function(f, bn, [](int, const std::string& e) {
    return FreeSimplex::parse(e).comp.encode();
  });
  CHECK(check_isomorphism(iso).passed);
}

TEST_CASE("free simplex parsing") {
  const auto a = words(ab, 2);
  CHECK(parse_free_simplex(a, "1,1|a,b").elem == "a,b");
  CHECK_THROWS_AS(parse_free_simplex(a, "2,1|a,b,a"), BudgetOverflow);
  CHECK_THROWS_AS(parse_free_simplex(a, "1|c"), IndexOutOfRange);
  CHECK_THROWS_AS(FreeSimplex::parse("1,1"), ParseError);
  try {
    parse_free_simplex(a, "3|a,b,a");
  } catch (const BudgetOverflow& e) {
    CHECK(e.needed_level() == 3);
  }
}

TEST_CASE("culf projection") {
  const auto a = words(ab, 3);
  const auto p = culf_projection(a, 3, 3);
  CHECK(p.check_naturality().passed);
  CHECK(check_culf(p).passed);
  CHECK(check_culf(p, true).passed);
  const auto& x = p.source();
  CHECK(p.target().element(1, p(1, x.index(1, "3|a,b,a"))) == "3");
  CHECK_THROWS_AS(culf_projection(a, 3, 2), PreconditionError);

  auto t = share(free_space(terminal_presheaf(4), 3));
  const auto pt = culf_projection(t, 4);
  CHECK(check_isomorphism(pt).passed);
}

TEST_CASE("alphabet maps induce CULF maps, functorially") {
  auto abc = std::make_shared<const InertPresheaf>(words({"a", "b", "c"}, 3));
  auto ab_ = std::make_shared<const InertPresheaf>(words(ab, 3));
  auto a_ = std::make_shared<const InertPresheaf>(words({"a"}, 3));
  auto rename = [](std::string from, std::string to) {
    return [from, to](int, const std::string& e) {
      std::string out;
      for (char c : e) out += std::string(1, c) == from ? to : std::string(1, c);
      return out;
    };
  };
  const auto f = PresheafMap::from_function(abc, ab_, rename("c", "b"));
  const auto g = PresheafMap::from_function(ab_, a_, rename("b", "a"));
  const auto h = PresheafMap::from_function(a_, a_, rename("a", "a"));
  CHECK(f.check_naturality().passed);

  auto xabc = share(free_space(*abc, 3));
  auto xab = share(free_space(*ab_, 3));
  auto xa = share(free_space(*a_, 3));
  const auto ff = map_free(f, xabc, xab);
  const auto fg = map_free(g, xab, xa);
  const auto fh = map_free(h, xa, xa);
  CHECK(check_culf(ff).passed);
  CHECK(check_culf(fg).passed);
  CHECK(check_culf(ff.then(fg)).passed);
  CHECK(ff.then(fg).then(fh).same_components(map_free(f.then(g).then(h), xabc, xa)));
  CHECK(map_free(PresheafMap::identity(ab_), xab, xab).same_components(SimplicialMap::identity(xab)));

  // into the terminal presheaf: the projection itself
  auto term = std::make_shared<const InertPresheaf>(terminal_presheaf(3));
  const auto bang = PresheafMap::from_function(ab_, term, [](int, const std::string&) { return std::string("*"); });
  const auto to_free_point = map_free(bang, xab, share(free_space(*term, 3)));
  const auto proj = culf_projection(xab, 3);
  for (int k = 0; k <= 3; ++k)
    for (std::size_t s = 0; s < xab->size(k); ++s)
      CHECK(FreeSimplex::parse(to_free_point.target().element(k, to_free_point(k, s))).comp.encode() ==
            proj.target().element(k, proj(k, s)));
}

TEST_CASE("recover_presheaf") {
  auto bn = share(b_nat(3, 4));
  const auto t = recover_presheaf(*bn, SimplicialMap::identity(bn));
  for (int n = 0; n <= 4; ++n) CHECK(t.size(n) == 1);
  CHECK(validate_presheaf(t).passed);

  const auto a = words(ab, 4);
  auto x = share(free_space(a, 3));
  const auto r = recover_presheaf(*x, culf_projection(x, 4));
  CHECK(r.element(2, r.bot(3, r.index(3, "3|a,b,b"))) == "2|b,b");
  CHECK(r.element(2, r.top(3, r.index(3, "3|a,b,b"))) == "2|a,b");
  CHECK(roundtrip_recover_free(a, 3).passed);
  CHECK(roundtrip_free_recover(x, culf_projection(x, 4)).passed);
  CHECK_THROWS_AS(recover_presheaf(b_nat(1, 2), SimplicialMap::identity(share(b_nat(1, 2)))), TruncationTooSmall);

  // Doubling every part is simplicial but not CULF: nothing lies over (1, 1).
  auto bn8 = share(b_nat(3, 8));
  const auto doubled = SimplicialMap::from_function(x, bn8, [](int, const std::string& e) {
    auto c = FreeSimplex::parse(e).comp;
    for (int& p : c.parts) p *= 2;
    return c.encode();
  });
  CHECK(doubled.check_naturality().passed);
  CHECK_FALSE(check_culf(doubled).passed);
  CHECK_THROWS_AS(recover_presheaf(*x, doubled), IntegrityError);
}

TEST_CASE("sheaf condition") {
  CHECK(check_sheaf(terminal_presheaf(4)).passed);
  const auto q = quiver_paths(sample_quiver(), 4);
  CHECK(check_sheaf(q).passed);
  CHECK(check_sheaf(q, true).passed);
  const auto t = truncate_paths(q, 1);
  CHECK_FALSE(check_sheaf(t).passed);
  CHECK_FALSE(check_sheaf(t, true).passed);
  CHECK(check_segal(free_space(q, 4)).passed);
  CHECK_FALSE(check_segal(free_space(t, 3)).passed);
}

TEST_CASE("shifts") {
  const auto q = quiver_paths(sample_quiver(), 3);
  const auto down = shift_down(q, 1);
  CHECK(down.level(0) == q.level(1));
  CHECK(down.budget() == 2);
  CHECK(shift_down(q, 0).levels() == q.levels());
  CHECK_THROWS_AS(shift_down(q, 4), PreconditionError);

  const auto a = words(ab, 2);
  const auto up = shift_up(a);
  CHECK(validate_presheaf(up).passed);
  CHECK(up.level(0) == std::vector<std::string>{"*"});
  const auto x = free_space(up, 2);
  // X_1 = * + sum of A_n
  CHECK(x.size(1) == 1 + a.total_size());
  CHECK(check_decomposition(x).passed);
}

TEST_CASE("restriction species adapter") {
  const auto w = words(ab, 3);
  auto drop_first = [](int, const std::string& e) { return e.substr(e.find(',') + 1); };
  auto drop_last = [](int, const std::string& e) { return e.substr(0, e.rfind(',')); };
  const auto a = from_restriction_species(
      3, w.levels(), [](const std::string&) { return std::string(); }, drop_first, drop_last);
  CHECK(faces_agree_on_level_one(a));
  CHECK(faces_agree_on_level_one(noncrossing_partitions(4)));
  CHECK_FALSE(faces_agree_on_level_one(quiver_paths(sample_quiver(), 2)));
  // inconsistent faces are rejected
  CHECK_THROWS_AS(from_restriction_species(
                      3, w.levels(), [](const std::string&) { return std::string(); }, drop_first,
                      [](int n, const std::string& e) { return n == 3 ? e.substr(e.find(',') + 1) : e.substr(0, e.rfind(',')); }),
                  IntegrityError);
}
