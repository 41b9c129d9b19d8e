#include <doctest.h>

#include "freedecomp/errors.hpp"
#include "freedecomp/incidence.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/zoo.hpp"

using namespace freedecomp;

namespace {

std::vector<std::size_t> all_edges(const TruncatedSimplicialSet& x) {
  std::vector<std::size_t> v(x.size(1));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Deconcatenation of a word, written out directly.
TensorComb deconcatenate(const std::vector<std::string>& letters) {
  TensorComb out(2);
  for (std::size_t i = 0; i <= letters.size(); ++i) {
    std::string l = std::to_string(i) + "|", r = std::to_string(letters.size() - i) + "|";
    for (std::size_t j = 0; j < letters.size(); ++j) {
      auto& side = j < i ? l : r;
      if (side.back() != '|') side += ",";
      side += letters[j];
    }
    out.add({l, r}, 1);
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(format_rational(Rational(2, 4)) == "+1/2");
  CHECK(format_rational(Rational(-3)) == "-3/1");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("7/1") == 7);
  for (const char* bad : {"", "1/0", "a", "1/-2", "--1", "1/"}) CHECK_THROWS_AS(parse_rational(bad), ParseError);
  for (int p = -6; p <= 6; ++p)
    for (int q = 1; q <= 5; ++q) {
      Rational r(p, q);
      r.canonicalize();
      CHECK(parse_rational(format_rational(r)) == r);
    }
}

TEST_CASE("tensor combinations cancel") {
  TensorComb t(2);
  t.add({"a", "b"}, 1);
  t.add({"a", "b"}, -1);
  CHECK(t.size() == 0);
  CHECK_THROWS_AS(t.add({"a"}, 1), DimensionMismatch);
}

TEST_CASE("BN: zeta squared and Moebius") {
  const auto x = b_nat(7, 6);
  const auto zz = convolve(x, zeta(x), zeta(x));
  for (int n = 0; n <= 6; ++n) CHECK(zz(x.index(1, std::to_string(n))) == n + 1);

  const auto r = mobius(x, 6);
  const std::vector<int> expected{1, -1, 0, 0, 0, 0, 0};
  for (int n = 0; n <= 6; ++n) {
    const auto f = x.index(1, std::to_string(n));
    CHECK(r.certified[f]);
    CHECK(r.lengths[f].value == n);
    CHECK(r.mu(f) == expected[static_cast<std::size_t>(n)]);
    CHECK(r.alternating(f) == expected[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(mobius(x, 7), TruncationTooSmall);
  CHECK_THROWS_AS(mobius(b_nat(3, 6), 5), TruncationTooSmall);

  const auto small = b_nat(3, 6);
  const auto ls = lengths(small);
  CHECK(ls[small.index(1, "2")].value == 2);
  CHECK_FALSE(ls[small.index(1, "2")].saturated);
  CHECK(ls[small.index(1, "5")].saturated);
}

TEST_CASE("word comultiplication is deconcatenation") {
  const auto x = free_space(words({"a", "b", "c"}, 3), 3);
  const auto d = comult(x, "3|a,b,c");
  CHECK(d.size() == 4);
  CHECK(d == deconcatenate({"a", "b", "c"}));
  for (std::size_t f = 0; f < x.size(1); ++f) {
    const auto s = FreeSimplex::parse(x.element(1, f));
    std::vector<std::string> letters;
    if (!s.elem.empty()) {
      std::string cur;
      for (char c : s.elem + ",") {
        if (c == ',') letters.push_back(cur), cur.clear();
        else cur += c;
      }
    }
    CHECK(comult(x, f) == deconcatenate(letters));
  }
  CHECK(comult(x, "0|").size() == 1);
  CHECK_THROWS_AS(comult(x, "3|a,b,d"), IndexOutOfRange);
}

TEST_CASE("noncrossing partitions split by restriction") {
  const auto x = free_space(noncrossing_partitions(4), 3);
  const auto d = comult(x, "4|1|24|3");
  CHECK(d.size() == 5);
  CHECK(d.coefficient({"1|1", "3|13|2"}) == 1);
  CHECK(d.coefficient({"2|1|2", "2|1|2"}) == 1);
}

TEST_CASE("iterated comultiplication matches spine sums") {
  const auto x = free_space(words({"a", "b"}, 4), 4);
  for (std::size_t f = 0; f < x.size(1); ++f) {
    const auto w = FreeSimplex::parse(x.element(1, f)).comp.weight();
    for (int t = 0; t <= 3; ++t) {
      const auto it = iterated_comult(x, x.element(1, f), t);
      CHECK(it == spine_sum(x, f, t + 1));
      // weak compositions of w into t + 1 parts
      CHECK(it.size() == binomial(static_cast<std::size_t>(w + t), static_cast<std::size_t>(t)));
    }
  }
  CHECK_THROWS_AS(spine_sum(x, 0, 5), TruncationTooSmall);
}

TEST_CASE("coassociativity and counit on the examples") {
  CHECK(check_coassoc(b_nat(3, 6), all_edges(b_nat(3, 6))).passed);
  for (std::string name : {"words", "quiver", "nc", "dyck-height", "qsym", "parking-g", "layered"}) {
    CAPTURE(name);
    const auto& ex = find_example(name);
    const auto x = free_space(ex.build(3), 3);
    CHECK(check_coassoc(x, all_edges(x)).passed);
  }
  CHECK_THROWS_AS(check_coassoc(b_nat(2, 4), {0}), TruncationTooSmall);
}

TEST_CASE("counit") {
  const auto x = free_space(words({"a"}, 2), 2);
  CHECK(counit(x, x.index(1, "0|")) == 1);
  CHECK(counit(x, x.index(1, "1|a")) == 0);
}

TEST_CASE("zeta * mu = eps = mu * zeta where certified") {
  for (std::string name : {"words", "quiver", "nc", "dyck-height", "qsym", "fqsym", "terminal"}) {
    CAPTURE(name);
    const auto x = free_space(find_example(name).build(4), 5);
    const auto r = mobius(x, 4);
    const auto eps = epsilon(x);
    const auto zm = convolve(x, zeta(x), r.mu);
    const auto mz = convolve(x, r.mu, zeta(x));
    for (std::size_t f = 0; f < x.size(1); ++f) {
      if (!r.certified[f]) continue;
      CHECK(zm(f) == eps(f));
      CHECK(mz(f) == eps(f));
      CHECK(r.mu(f) == r.alternating(f));
    }
  }
}

TEST_CASE("Moebius on free monoids and path categories") {
  const auto x = free_space(words({"a", "b"}, 3), 4);
  const auto r = mobius(x, 3);
  for (std::size_t f = 0; f < x.size(1); ++f) {
    CHECK(r.certified[f]);
    const int w = FreeSimplex::parse(x.element(1, f)).comp.weight();
    CHECK(r.mu(f) == (w == 0 ? 1 : w == 1 ? -1 : 0));
  }
  const auto q = free_space(quiver_paths(sample_quiver(), 3), 4);
  const auto rq = mobius(q, 3);
  for (std::size_t f = 0; f < q.size(1); ++f) {
    const int w = FreeSimplex::parse(q.element(1, f)).comp.weight();
    CHECK(rq.mu(f) == (w == 0 ? 1 : w == 1 ? -1 : 0));
  }
}

TEST_CASE("eps agrees with length zero on free spaces") {
  for (std::string name : {"words", "nc", "quiver", "parking-f"}) {
    CAPTURE(name);
    const auto x = free_space(find_example(name).build(3), 3);
    const auto eps = epsilon(x);
    const auto ls = lengths(x);
    for (std::size_t f = 0; f < x.size(1); ++f) CHECK((eps(f) == 1) == (ls[f].value == 0));
  }
}
