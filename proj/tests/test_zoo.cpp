#include <doctest.h>

#include <algorithm>
#include <map>
#include <memory>

#include "freedecomp/errors.hpp"
#include "freedecomp/incidence.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/zoo.hpp"

using namespace freedecomp;

namespace {

// All words of length <= len over 1..letters.
std::vector<Word> all_words(int len, int letters) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == len) continue;
    for (int c = 1; c <= letters; ++c) {
      auto w = out[i];
      w.push_back(c);
      out.push_back(w);
    }
  }
  return out;
}

// Catalan by the convolution recurrence.
std::size_t catalan(int n) {
  std::vector<std::size_t> c{1};
  for (int k = 1; k <= n; ++k) {
    std::size_t s = 0;
    for (int i = 0; i < k; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    c.push_back(s);
  }
  return c.back();
}

// Brute-force noncrossing test via all quadruples.
bool crossing_free(const NCPartition& p) {
  std::map<int, int> block;
  for (std::size_t b = 0; b < p.size(); ++b)
    for (int e : p[b]) block[e] = static_cast<int>(b);
  for (auto [a, ba] : block)
    for (auto [b, bb] : block)
      for (auto [c, bc] : block)
        for (auto [d, bd] : block)
          if (a < b && b < c && c < d && ba == bc && bb == bd && ba != bb) return false;
  return true;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') out.push_back(cur), cur.clear();
    else cur += c;
  }
  return out;
}

}  // namespace

TEST_CASE("pack, standardize, parkify") {
  CHECK(pack({2, 5, 2}) == Word{1, 2, 1});
  CHECK(pack({}).empty());
  CHECK(standardize({2, 1, 2}) == Word{2, 1, 3});
  CHECK(parkify({1, 1}) == Word{1, 1});
  CHECK(parkify({3}) == Word{1});
  CHECK(parkify({1, 3, 3}) == Word{1, 2, 2});
  CHECK(is_parking({1, 1}));
  CHECK_FALSE(is_parking({2, 2}));
  for (const auto& w : all_words(5, 5)) {
    CHECK(pack(pack(w)) == pack(w));
    CHECK(standardize(standardize(w)) == standardize(w));
    CHECK(parkify(parkify(w)) == parkify(w));
    CHECK(is_parking(parkify(w)));
    if (is_parking(w)) CHECK(parkify(w) == w);
    // a permutation of 1..n
    auto s = standardize(w);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == static_cast<int>(i) + 1);
  }
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints(parse_word("1,6,2,4,3,6,1,6,6")) == std::vector<int>{0, 5, 9});
  CHECK(breakpoints({}) == std::vector<int>{0});
  // three breakpoints: level 2 of the G-basis
  CHECK(breakpoints(parse_word("1,6,2,4,3,6,1,6,6")).size() - 1 == 2);
  const auto g = parking_g_basis(4);
  for (int n = 0; n <= g.budget(); ++n)
    for (const auto& e : g.level(n)) CHECK(static_cast<int>(breakpoints(parse_word(e)).size()) == n + 1);
}

TEST_CASE("monomial quasi-symmetric functions") {
  CHECK(monomial_expand({}, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(monomial_expand({2}, 2) == std::vector<std::vector<int>>{{2, 0}, {0, 2}});
  CHECK(monomial_expand({1, 1}, 2) == std::vector<std::vector<int>>{{1, 1}});
  CHECK(monomial_expand({2, 3, 1, 1, 4}, 6).size() == 6);
}

TEST_CASE("words and qsym") {
  const auto w = words({"a", "b", "c"}, 3);
  const auto abc = w.index(3, "a,b,c");
  CHECK(w.element(2, w.bot(3, abc)) == "b,c");
  CHECK(w.element(2, w.top(3, abc)) == "a,b");
  CHECK(words({"a", "b"}, 3).size(3) == 8);

  const auto q = qsym(11);
  CHECK(q.find(5, "2,3,1,1,4").has_value());
  const auto x = free_space(q, 2);
  CHECK(comult(x, "5|2,3,1,1,4").size() == 6);
  const auto d = comult(free_space(qsym(5), 2), "2|2,3");
  CHECK(d.size() == 3);
  CHECK(d.coefficient({"1|2", "1|3"}) == 1);
  CHECK(free_space(qsym(3), 1).size(1) == 8);
}

TEST_CASE("packed words and permutations") {
  const auto p = packed_words(4);
  CHECK(p.element(2, p.bot(3, p.index(3, "1,2,1"))) == "2,1");
  const auto s = packed_words_by_symbols(3, 4);
  CHECK(s.element(1, s.top(2, s.index(2, "1,2,1"))) == "1,1");
  CHECK(validate_presheaf(p).passed);
  const auto f = permutations_fqsym(4);
  CHECK(f.size(3) == 6);
  CHECK(f.element(2, f.top(3, f.index(3, "2,3,1"))) == "1,2");
  CHECK(f.element(2, f.bot(3, f.index(3, "2,3,1"))) == "2,1");
  CHECK(validate_presheaf(parking_f_basis(4)).passed);
}

TEST_CASE("noncrossing partitions") {
  const auto p = parse_partition("{{1},{2,4},{3}}");
  CHECK(is_noncrossing(p));
  CHECK_FALSE(is_noncrossing(parse_partition("{{1,3},{2,4}}")));
  CHECK(encode_partition(p) == "1|24|3");
  const auto nc = noncrossing_partitions(6);
  const auto x = nc.index(4, "1|24|3");
  CHECK(nc.element(3, nc.top(4, x)) == "1|2|3");
  CHECK(nc.element(3, nc.bot(4, x)) == "13|2");
  for (int n = 0; n <= 6; ++n) {
    CHECK(nc.size(n) == catalan(n));
    for (const auto& e : nc.level(n)) CHECK(crossing_free(parse_partition(e)));
  }
}

TEST_CASE("Dyck paths") {
  const std::string fig = "UDUUUUDUDDDUDD";
  CHECK(dyck_height(fig) == 4);
  CHECK(dyck_clip_bottom(fig) == "UUUDUDDDUD");
  CHECK(dyck_clip_top(fig) == "UDUUUDDUDD");
  const auto a = dyck_by_height(5, 10);
  for (int n = 1; n <= a.budget(); ++n)
    for (std::size_t i = 0; i < a.size(n); ++i) {
      const auto& p = a.element(n, i);
      CHECK(is_dyck(dyck_clip_top(p)));
      CHECK(dyck_height(dyck_clip_top(p)) == n - 1);
      CHECK(dyck_height(dyck_clip_bottom(p)) == n - 1);
      CHECK(dyck_clip_top(dyck_clip_bottom(p)) == dyck_clip_bottom(dyck_clip_top(p)));
    }
  CHECK(dyck_factors("UDUUDD") == std::vector<std::string>{"UD", "UUDD"});
}

TEST_CASE("quivers") {
  Quiver loop{{"v"}, {{"e", "v", "v"}}};
  const auto q = quiver_paths(loop, 4);
  for (int n = 0; n <= 4; ++n) CHECK(q.size(n) == 1);
  Quiver arrow{{"a", "b"}, {{"e", "a", "b"}}};
  CHECK(quiver_paths(arrow, 3).size(2) == 0);
  CHECK(truncate_paths(q, 4).levels() == q.levels());
}

TEST_CASE("every registered example is a valid presheaf with a decomposition space") {
  CHECK(example_registry().size() >= 10);
  for (const auto& ex : example_registry()) {
    CAPTURE(ex.name);
    const auto a = ex.build(ex.default_budget);
    CHECK(validate_presheaf(a).passed);
    CHECK(check_decomposition(free_space(a, 3)).passed);
  }
  CHECK_THROWS_AS(find_example("nope"), PreconditionError);
}

TEST_CASE("sheaf and Segal verdicts agree") {
  for (const auto& ex : example_registry()) {
    CAPTURE(ex.name);
    const auto a = ex.build(ex.default_budget);
    CHECK(check_sheaf(a).passed == check_segal(free_space(a, 3)).passed);
  }
}

TEST_CASE("normalizers are idempotent and canonical") {
  const std::map<std::string, std::string> samples{
      {"words", "ab"}, {"qsym", "(2,3,1)"}, {"nc", "{{1},{2,4},{3}}"}, {"dyck-height", "UUDD"}, {"fqsym", "231"}};
  for (const auto& [name, text] : samples) {
    CAPTURE(name);
    const auto& ex = find_example(name);
    const auto once = ex.normalize(text);
    CHECK(ex.normalize(once) == once);
  }
  CHECK(find_example("nc").normalize("{{1},{2,4},{3}}") == "1|24|3");
  CHECK(find_example("words").normalize("abc") == "a,b,c");
}

TEST_CASE("deconcatenation oracle on word-like examples") {
  for (const char* name : {"words", "qsym", "dyck-baseline"}) {
    CAPTURE(std::string(name));
    const auto a = find_example(name).build(3);
    const auto x = free_space(a, 2);
    for (std::size_t f = 0; f < x.size(1); ++f) {
      const auto s = FreeSimplex::parse(x.element(1, f));
      const auto letters = split_commas(s.elem);
      // dyck-baseline concatenates irreducible factors without separators
      std::vector<std::string> parts = std::string(name) == "dyck-baseline" ? dyck_factors(s.elem) : letters;
      const std::string sep = std::string(name) == "dyck-baseline" ? "" : ",";
      TensorComb expect(2);
      for (std::size_t i = 0; i <= parts.size(); ++i) {
        std::string l, r;
        for (std::size_t j = 0; j < parts.size(); ++j) {
          auto& side = j < i ? l : r;
          side += (side.empty() ? "" : sep) + parts[j];
        }
        expect.add({std::to_string(i) + "|" + l, std::to_string(parts.size() - i) + "|" + r}, 1);
      }
      CHECK(comult(x, f) == expect);
    }
  }
}

TEST_CASE("J(BN) and layered posets are qsym") {
  auto q = std::make_shared<const InertPresheaf>(qsym(5));
  auto j = std::make_shared<const InertPresheaf>(nondeg_J(b_nat(5, 5)));
  CHECK(check_presheaf_isomorphism(PresheafMap::from_function(j, q, [](int, const std::string& e) { return e; })).passed);

  auto l = std::make_shared<const InertPresheaf>(layered_linear(5));
  const auto fibres = [](int, const std::string& e) {
    Word out;
    int last = 0;
    for (int v : parse_word(e)) {
      if (v != last) out.push_back(0), last = v;
      ++out.back();
    }
    return encode_word(out);
  };
  CHECK(check_presheaf_isomorphism(PresheafMap::from_function(l, q, fibres)).passed);
  CHECK(l->size(0) == 1);
}

TEST_CASE("nondegenerate simplices of a chain") {
  const auto j = nondeg_J(chain_nerve(3, 3));
  CHECK(j.size(1) == 6);
  CHECK(j.size(3) == 1);
  CHECK(validate_presheaf(j).passed);
}

TEST_CASE("windows") {
  const auto a = window(words({"a", "b"}, 3), 1, 3);
  CHECK(a.size(0) == 2);
  CHECK(a.element(0, a.bot(1, a.index(1, "a,b"))) == "b");
  CHECK(check_decomposition(free_space(a, 3)).passed);
}
