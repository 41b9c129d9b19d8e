#pragma once

// Presheaves for the deconcatenation-type examples: words, quiver paths,
// quasi-symmetric functions and their packed/parking/permutation relatives,
// noncrossing partitions, Dyck paths, layered posets, and the presheaf of
// nondegenerate simplices.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freedecomp/presheaf.hpp"
#include "freedecomp/simplicial.hpp"

namespace freedecomp {

using Word = std::vector<int>;

// "2,3,1" <-> {2,3,1}; "" is the empty word.
std::string encode_word(const Word& w);
Word parse_word(std::string_view text);

Word pack(const Word& w);
// Ranks with ties broken left to right.
Word standardize(const Word& w);
bool is_parking(const Word& w);
// Repeatedly finds the least v with fewer than v letters <= v and lowers
// every letter above v by one.
Word parkify(const Word& w);
// The i in 0..|w| such that exactly i letters are <= i.
std::vector<int> breakpoints(const Word& w);

// M_w in num_vars variables: exponent vectors, each with coefficient 1,
// in decreasing lexicographic order.
std::vector<std::vector<int>> monomial_expand(const Word& w, int num_vars);

struct Quiver {
  struct Edge {
    std::string name;
    std::string source;
    std::string target;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

InertPresheaf terminal_presheaf(int budget);
InertPresheaf quiver_paths(const Quiver& q, int budget);
// Levels above r emptied.
InertPresheaf truncate_paths(const InertPresheaf& a, int r);
// A'_n = A_{lo+n} for n <= hi - lo.
InertPresheaf window(const InertPresheaf& a, int lo, int hi);

InertPresheaf words(const std::vector<std::string>& alphabet, int max_len);
InertPresheaf qsym(int weight_bound);
InertPresheaf packed_words(int max_len);
InertPresheaf packed_words_by_symbols(int max_symbols, int max_len);
InertPresheaf permutations_fqsym(int max_len);
InertPresheaf parking_f_basis(int max_len);
// Level n: parking functions of length <= max_len with n+1 breakpoints.
InertPresheaf parking_g_basis(int max_len);

// Blocks sorted by minimum, elements ascending.
using NCPartition = std::vector<std::vector<int>>;
std::string encode_partition(const NCPartition& p);
// Accepts "1|24|3" and "{{1},{2,4},{3}}".
NCPartition parse_partition(std::string_view text);
bool is_noncrossing(const NCPartition& p);
InertPresheaf noncrossing_partitions(int max_n);

bool is_dyck(std::string_view path);
int dyck_height(std::string_view path);
// Deletes the steps between heights h-1 and h.
std::string dyck_clip_top(std::string_view path);
// Deletes the steps between heights 0 and 1.
std::string dyck_clip_bottom(std::string_view path);
// Splits into irreducible factors.
std::vector<std::string> dyck_factors(std::string_view path);
InertPresheaf dyck_by_height(int max_height, int max_len);
// Words of irreducible paths of semilength <= max_factor_semilength, level =
// number of factors.
InertPresheaf dyck_by_baseline(int max_factor_semilength, int max_factors);

// Monotone surjections {1..m} -> {1..n}, m <= weight_bound, as value lists.
InertPresheaf layered_linear(int weight_bound);

// Nondegenerate simplices with outer faces. Throws IntegrityError when an
// outer face of a nondegenerate simplex is degenerate.
InertPresheaf nondeg_J(const TruncatedSimplicialSet& x);
// Nerve of the chain 0 < 1 < ... < length.
TruncatedSimplicialSet chain_nerve(int length, int truncation);

struct Example {
  std::string name;
  std::string description;
  int default_budget;
  std::function<InertPresheaf(int budget)> build;
  // Command-line element syntax to the canonical encoding.
  std::function<std::string(std::string_view)> normalize;
};

const std::vector<Example>& example_registry();
// Throws PreconditionError for unknown names.
const Example& find_example(std::string_view name);

// The quiver 0 -f-> 1 -g-> 0 with a loop h at 0.
Quiver sample_quiver();

}  // namespace freedecomp
