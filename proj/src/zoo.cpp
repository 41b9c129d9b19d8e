#include "freedecomp/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

// All words of length n over {1..k}, lexicographic.
std::vector<Word> all_words(int n, int k) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n), 1);
  if (n > 0 && k < 1) return out;
  while (true) {
    out.push_back(w);
    int j = n - 1;
    while (j >= 0 && w[static_cast<std::size_t>(j)] == k) w[static_cast<std::size_t>(j--)] = 1;
    if (j < 0) break;
    ++w[static_cast<std::size_t>(j)];
  }
  return out;
}

// Words of length n over positive integers with letter sum <= bound.
void bounded_words(int n, int bound, Word& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  const int remaining = n - static_cast<int>(prefix.size()) - 1;
  for (int a = 1; a + remaining <= bound; ++a) {
    prefix.push_back(a);
    bounded_words(n, bound - a, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::string> encode_all(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(encode_word(w));
  return out;
}

Word drop_first(const Word& w) { return Word(w.begin() + 1, w.end()); }
Word drop_last(const Word& w) { return Word(w.begin(), w.end() - 1); }

std::string strip(std::string_view text, std::string_view junk) {
  std::string out;
  for (char c : text)
    if (junk.find(c) == std::string_view::npos) out.push_back(c);
  return out;
}

// "abc" -> "a,b,c" when there are no separators; parentheses and blanks are
// ignored.
std::string normalize_letters(std::string_view text) {
  auto s = strip(text, " ()");
  if (s.find(',') != std::string::npos || s.size() <= 1) return s;
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(s[i]);
  }
  return out;
}

void collect_dyck(int semilength, std::string& prefix, int height, int ups, std::vector<std::string>& out) {
  if (static_cast<int>(prefix.size()) == 2 * semilength) {
    out.push_back(prefix);
    return;
  }
  if (ups < semilength) {
    prefix.push_back('U');
    collect_dyck(semilength, prefix, height + 1, ups + 1, out);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back('D');
    collect_dyck(semilength, prefix, height - 1, ups, out);
    prefix.pop_back();
  }
}

std::vector<std::string> dyck_paths(int semilength) {
  std::vector<std::string> out;
  std::string prefix;
  collect_dyck(semilength, prefix, 0, 0, out);
  return out;
}

// Restricted growth strings give every set partition of {1..n} once.
void collect_partitions(int n, std::vector<int>& rgs, int blocks, std::vector<NCPartition>& out) {
  if (static_cast<int>(rgs.size()) == n) {
    NCPartition p(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    if (is_noncrossing(p)) out.push_back(std::move(p));
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    rgs.push_back(b);
    collect_partitions(n, rgs, std::max(blocks, b + 1), out);
    rgs.pop_back();
  }
}

NCPartition canonical(NCPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  p.erase(std::remove_if(p.begin(), p.end(), [](const auto& b) { return b.empty(); }), p.end());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Words and normalizations

std::string encode_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty() || value < 1)
      throw ParseError("bad letter '" + std::string(piece) + "' in word '" + std::string(text) + "'");
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

Word pack(const Word& w) {
  std::set<int> symbols(w.begin(), w.end());
  std::map<int, int> rank;
  int r = 0;
  for (int s : symbols) rank[s] = ++r;
  Word out;
  for (int x : w) out.push_back(rank[x]);
  return out;
}

Word standardize(const Word& w) {
  std::vector<std::size_t> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r) + 1;
  return out;
}

bool is_parking(const Word& w) {
  Word m = w;
  std::sort(m.begin(), m.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > static_cast<int>(i) + 1) return false;
  return true;
}

Word parkify(const Word& w) {
  Word out = w;
  const int n = static_cast<int>(out.size());
  while (!is_parking(out)) {
    int v = 0;
    for (int i = 1; i <= n; ++i) {
      const auto below = std::count_if(out.begin(), out.end(), [i](int x) { return x <= i; });
      if (below < i) {
        v = i;
        break;
      }
    }
    for (int& x : out)
      if (x > v) --x;
  }
  return out;
}

std::vector<int> breakpoints(const Word& w) {
  std::vector<int> out;
  for (int i = 0; i <= static_cast<int>(w.size()); ++i)
    if (std::count_if(w.begin(), w.end(), [i](int x) { return x <= i; }) == i) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> monomial_expand(const Word& w, int num_vars) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(w.size());
  if (k > num_vars) return out;
  // choose positions i_1 < ... < i_k
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
    out.push_back(std::move(e));
    int j = k - 1;
    while (j >= 0 && pos[static_cast<std::size_t>(j)] == num_vars - k + j) --j;
    if (j < 0) break;
    ++pos[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < k; ++i) pos[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i) - 1] + 1;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Presheaves

InertPresheaf terminal_presheaf(int budget) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(budget) + 1, {"*"});
  auto star = [](int, const std::string&) { return std::string("*"); };
  return InertPresheaf::build(budget, std::move(levels), star, star);
}

InertPresheaf quiver_paths(const Quiver& q, int budget) {
  std::map<std::string, const Quiver::Edge*> by_name;
  for (const auto& e : q.edges) by_name[e.name] = &e;
  std::vector<std::vector<std::vector<const Quiver::Edge*>>> paths(static_cast<std::size_t>(budget) + 1);
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(budget) + 1);
  levels[0] = q.vertices;
  if (budget >= 1)
    for (const auto& e : q.edges) paths[1].push_back({&e});
  for (int n = 2; n <= budget; ++n)
    for (const auto& p : paths[static_cast<std::size_t>(n) - 1])
      for (const auto& e : q.edges)
        if (p.back()->target == e.source) {
          auto longer = p;
          longer.push_back(&e);
          paths[static_cast<std::size_t>(n)].push_back(std::move(longer));
        }
  for (int n = 1; n <= budget; ++n)
    for (const auto& p : paths[static_cast<std::size_t>(n)]) {
      std::string enc;
      for (std::size_t i = 0; i < p.size(); ++i) enc += (i ? "," : "") + p[i]->name;
      levels[static_cast<std::size_t>(n)].push_back(enc);
    }
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto c = s.find(',', start);
      out.push_back(s.substr(start, c == std::string::npos ? std::string::npos : c - start));
      if (c == std::string::npos) break;
      start = c + 1;
    }
    return out;
  };
  auto join = [](const std::vector<std::string>& parts, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) out += (i > from ? "," : "") + parts[i];
    return out;
  };
  auto bot = [&](int n, const std::string& e) {
    auto parts = split(e);
    return n == 1 ? by_name.at(e)->target : join(parts, 1, parts.size());
  };
  auto top = [&](int n, const std::string& e) {
    auto parts = split(e);
    return n == 1 ? by_name.at(e)->source : join(parts, 0, parts.size() - 1);
  };
  return InertPresheaf::build(budget, std::move(levels), bot, top);
}

InertPresheaf truncate_paths(const InertPresheaf& a, int r) {
  if (r < 0) throw PreconditionError("truncation level must be nonnegative");
  auto levels = a.levels();
  InertPresheaf::Table bot(levels.size()), top(levels.size());
  for (int n = 1; n <= a.budget(); ++n) {
    if (n > r) {
      levels[static_cast<std::size_t>(n)].clear();
      continue;
    }
    bot[static_cast<std::size_t>(n)] = a.bot_table(n);
    top[static_cast<std::size_t>(n)] = a.top_table(n);
  }
  return InertPresheaf(a.budget(), std::move(levels), std::move(bot), std::move(top));
}

InertPresheaf window(const InertPresheaf& a, int lo, int hi) {
  if (lo < 0 || hi < lo || hi > a.budget()) throw PreconditionError("window needs 0 <= lo <= hi <= budget");
  auto shifted = shift_down(a, lo);
  std::vector<std::vector<std::string>> levels;
  InertPresheaf::Table bot(1), top(1);
  for (int n = 0; n <= hi - lo; ++n) levels.push_back(shifted.level(n));
  for (int n = 1; n <= hi - lo; ++n) {
    bot.push_back(shifted.bot_table(n));
    top.push_back(shifted.top_table(n));
  }
  return InertPresheaf(hi - lo, std::move(levels), std::move(bot), std::move(top));
}

InertPresheaf words(const std::vector<std::string>& alphabet, int max_len) {
  for (const auto& s : alphabet)
    if (s.empty() || s.find_first_of(",|") != std::string::npos) throw PreconditionError("bad letter '" + s + "'");
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_len; ++n) {
    std::vector<std::string> level;
    for (const auto& w : all_words(n, static_cast<int>(alphabet.size()))) {
      std::string enc;
      for (std::size_t i = 0; i < w.size(); ++i)
        enc += (i ? "," : "") + alphabet[static_cast<std::size_t>(w[i]) - 1];
      level.push_back(enc);
    }
    levels.push_back(std::move(level));
  }
  auto bot = [](int n, const std::string& e) { return n == 1 ? std::string() : e.substr(e.find(',') + 1); };
  auto top = [](int n, const std::string& e) { return n == 1 ? std::string() : e.substr(0, e.rfind(',')); };
  return InertPresheaf::build(max_len, std::move(levels), bot, top);
}

InertPresheaf qsym(int weight_bound) {
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= weight_bound; ++n) {
    std::vector<Word> ws;
    Word prefix;
    bounded_words(n, weight_bound, prefix, ws);
    levels.push_back(encode_all(ws));
  }
  auto bot = [](int, const std::string& e) { return encode_word(drop_first(parse_word(e))); };
  auto top = [](int, const std::string& e) { return encode_word(drop_last(parse_word(e))); };
  return InertPresheaf::build(weight_bound, std::move(levels), bot, top);
}

InertPresheaf packed_words(int max_len) {
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_len; ++n) {
    std::vector<Word> ws;
    for (auto& w : all_words(n, n))
      if (pack(w) == w) ws.push_back(w);
    levels.push_back(encode_all(ws));
  }
  auto bot = [](int, const std::string& e) { return encode_word(pack(drop_first(parse_word(e)))); };
  auto top = [](int, const std::string& e) { return encode_word(pack(drop_last(parse_word(e)))); };
  return InertPresheaf::build(max_len, std::move(levels), bot, top);
}

InertPresheaf packed_words_by_symbols(int max_symbols, int max_len) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(max_symbols) + 1);
  for (int len = 0; len <= max_len; ++len)
    for (auto& w : all_words(len, std::min(len, max_symbols)))
      if (pack(w) == w) {
        const int symbols = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
        levels[static_cast<std::size_t>(symbols)].push_back(encode_word(w));
      }
  auto top = [](int n, const std::string& e) {
    Word out;
    for (int x : parse_word(e))
      if (x != n) out.push_back(x);
    return encode_word(out);
  };
  auto bot = [](int, const std::string& e) {
    Word out;
    for (int x : parse_word(e))
      if (x != 1) out.push_back(x - 1);
    return encode_word(out);
  };
  return InertPresheaf::build(max_symbols, std::move(levels), bot, top);
}

InertPresheaf permutations_fqsym(int max_len) {
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_len; ++n) {
    Word p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Word> ws;
    do ws.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    levels.push_back(encode_all(ws));
  }
  auto bot = [](int, const std::string& e) { return encode_word(standardize(drop_first(parse_word(e)))); };
  auto top = [](int, const std::string& e) { return encode_word(standardize(drop_last(parse_word(e)))); };
  return InertPresheaf::build(max_len, std::move(levels), bot, top);
}

InertPresheaf parking_f_basis(int max_len) {
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_len; ++n) {
    std::vector<Word> ws;
    for (auto& w : all_words(n, n))
      if (is_parking(w)) ws.push_back(w);
    levels.push_back(encode_all(ws));
  }
  auto bot = [](int, const std::string& e) { return encode_word(parkify(drop_first(parse_word(e)))); };
  auto top = [](int, const std::string& e) { return encode_word(parkify(drop_last(parse_word(e)))); };
  return InertPresheaf::build(max_len, std::move(levels), bot, top);
}

InertPresheaf parking_g_basis(int max_len) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(max_len) + 1);
  for (int len = 0; len <= max_len; ++len)
    for (auto& w : all_words(len, len))
      if (is_parking(w)) {
        const auto level = breakpoints(w).size() - 1;
        levels[level].push_back(encode_word(w));
      }
  auto top = [](int, const std::string& e) {
    const auto w = parse_word(e);
    const auto b = breakpoints(w);
    const int cut = b[b.size() - 2];
    Word out;
    for (int x : w)
      if (x <= cut) out.push_back(x);
    return encode_word(parkify(out));
  };
  auto bot = [](int, const std::string& e) {
    const auto w = parse_word(e);
    const int cut = breakpoints(w)[1];
    Word out;
    for (int x : w)
      if (x > cut) out.push_back(x);
    return encode_word(parkify(out));
  };
  return InertPresheaf::build(max_len, std::move(levels), bot, top);
}

// ---------------------------------------------------------------------------
// Noncrossing partitions

std::string encode_partition(const NCPartition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b) out.push_back('|');
    for (int x : p[b]) out += std::to_string(x);
  }
  return out;
}

NCPartition parse_partition(std::string_view text) {
  NCPartition p;
  auto s = strip(text, " ");
  if (s.empty()) return p;
  if (s.front() == '{') {
    if (s.size() < 2 || s.back() != '}') throw ParseError("unbalanced braces in '" + s + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int>* block = nullptr;
    std::string number;
    auto flush = [&] {
      if (number.empty()) return;
      if (!block) throw ParseError("element outside a block");
      block->push_back(std::stoi(number));
      number.clear();
    };
    for (char c : s) {
      if (c == '{') {
        if (block) throw ParseError("nested block");
        p.emplace_back();
        block = &p.back();
      } else if (c == '}') {
        flush();
        if (!block) throw ParseError("unbalanced braces");
        block = nullptr;
      } else if (c == ',') {
        flush();
      } else if (c >= '0' && c <= '9') {
        number.push_back(c);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'");
      }
    }
    if (block) throw ParseError("unterminated block");
  } else {
    p.emplace_back();
    for (char c : s) {
      if (c == '|') {
        p.emplace_back();
      } else if (c >= '1' && c <= '9') {
        p.back().push_back(c - '0');
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in partition");
      }
    }
  }
  for (const auto& b : p)
    if (b.empty()) throw ParseError("empty block in '" + std::string(text) + "'");
  p = canonical(std::move(p));
  std::vector<int> all;
  for (const auto& b : p) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw ParseError("blocks must partition {1..n}");
  return p;
}

bool is_noncrossing(const NCPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      for (int a : p[i])
        for (int b : p[i])
          for (int c : p[j])
            for (int d : p[j])
              if (a < c && c < b && b < d) return false;
    }
  return true;
}

InertPresheaf noncrossing_partitions(int max_n) {
  if (max_n > 9) throw PreconditionError("noncrossing partitions are encoded with one digit per element (n <= 9)");
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<NCPartition> ps;
    std::vector<int> rgs;
    collect_partitions(n, rgs, 0, ps);
    std::vector<std::string> level;
    for (auto& p : ps) level.push_back(encode_partition(canonical(p)));
    std::sort(level.begin(), level.end());
    levels.push_back(std::move(level));
  }
  auto top = [](int n, const std::string& e) {
    auto p = parse_partition(e);
    for (auto& b : p) b.erase(std::remove(b.begin(), b.end(), n), b.end());
    return encode_partition(canonical(p));
  };
  auto bot = [](int, const std::string& e) {
    auto p = parse_partition(e);
    for (auto& b : p) {
      b.erase(std::remove(b.begin(), b.end(), 1), b.end());
      for (int& x : b) --x;
    }
    return encode_partition(canonical(p));
  };
  return InertPresheaf::build(max_n, std::move(levels), bot, top);
}

// ---------------------------------------------------------------------------
// Dyck paths

bool is_dyck(std::string_view path) {
  int h = 0;
  for (char c : path) {
    if (c == 'U') {
      ++h;
    } else if (c == 'D') {
      if (--h < 0) return false;
    } else {
      return false;
    }
  }
  return h == 0;
}

int dyck_height(std::string_view path) {
  int h = 0, best = 0;
  for (char c : path) {
    h += c == 'U' ? 1 : -1;
    best = std::max(best, h);
  }
  return best;
}

std::string dyck_clip_top(std::string_view path) {
  const int top = dyck_height(path);
  std::string out;
  int h = 0;
  for (char c : path) {
    const int next = h + (c == 'U' ? 1 : -1);
    if (std::max(h, next) < top) out.push_back(c);
    h = next;
  }
  return out;
}

std::string dyck_clip_bottom(std::string_view path) {
  std::string out;
  int h = 0;
  for (char c : path) {
    const int next = h + (c == 'U' ? 1 : -1);
    if (std::min(h, next) >= 1) out.push_back(c);
    h = next;
  }
  return out;
}

std::vector<std::string> dyck_factors(std::string_view path) {
  std::vector<std::string> out;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    h += path[i] == 'U' ? 1 : -1;
    if (h == 0) {
      out.emplace_back(path.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

InertPresheaf dyck_by_height(int max_height, int max_len) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(max_height) + 1);
  for (int s = 0; 2 * s <= max_len; ++s)
    for (auto& p : dyck_paths(s)) {
      const int h = dyck_height(p);
      if (h <= max_height) levels[static_cast<std::size_t>(h)].push_back(p);
    }
  auto top = [](int, const std::string& e) { return dyck_clip_top(e); };
  auto bot = [](int, const std::string& e) { return dyck_clip_bottom(e); };
  return InertPresheaf::build(max_height, std::move(levels), bot, top);
}

InertPresheaf dyck_by_baseline(int max_factor_semilength, int max_factors) {
  std::vector<std::string> irreducible;
  for (int s = 1; s <= max_factor_semilength; ++s)
    for (auto& p : dyck_paths(s))
      if (dyck_factors(p).size() == 1) irreducible.push_back(p);
  std::vector<std::vector<std::string>> levels;
  for (int n = 0; n <= max_factors; ++n) {
    std::vector<std::string> level;
    for (const auto& w : all_words(n, static_cast<int>(irreducible.size()))) {
      std::string path;
      for (int x : w) path += irreducible[static_cast<std::size_t>(x) - 1];
      level.push_back(path);
    }
    levels.push_back(std::move(level));
  }
  auto bot = [](int, const std::string& e) { return e.substr(dyck_factors(e).front().size()); };
  auto top = [](int, const std::string& e) { return e.substr(0, e.size() - dyck_factors(e).back().size()); };
  return InertPresheaf::build(max_factors, std::move(levels), bot, top);
}

// ---------------------------------------------------------------------------
// Layered posets (linear case)

InertPresheaf layered_linear(int weight_bound) {
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(weight_bound) + 1);
  for (int n = 0; n <= weight_bound; ++n) {
    std::vector<Word> layers;
    Word prefix;
    bounded_words(n, weight_bound, prefix, layers);
    for (const auto& sizes : layers) {
      Word values;
      for (std::size_t layer = 0; layer < sizes.size(); ++layer)
        values.insert(values.end(), static_cast<std::size_t>(sizes[layer]), static_cast<int>(layer) + 1);
      levels[static_cast<std::size_t>(n)].push_back(encode_word(values));
    }
  }
  auto top = [](int n, const std::string& e) {
    Word out;
    for (int x : parse_word(e))
      if (x != n) out.push_back(x);
    return encode_word(out);
  };
  auto bot = [](int, const std::string& e) {
    Word out;
    for (int x : parse_word(e))
      if (x != 1) out.push_back(x - 1);
    return encode_word(out);
  };
  return InertPresheaf::build(weight_bound, std::move(levels), bot, top);
}

// ---------------------------------------------------------------------------
// Nondegenerate simplices

InertPresheaf nondeg_J(const TruncatedSimplicialSet& x) {
  const int n_max = x.truncation();
  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::vector<std::size_t>> position(levels.size());
  for (int n = 0; n <= n_max; ++n) {
    position[static_cast<std::size_t>(n)].assign(x.size(n), static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < x.size(n); ++s)
      if (!x.is_degenerate(n, s)) {
        position[static_cast<std::size_t>(n)][s] = levels[static_cast<std::size_t>(n)].size();
        levels[static_cast<std::size_t>(n)].push_back(x.element(n, s));
      }
  }
  InertPresheaf::Table bot(levels.size()), top(levels.size());
  for (int n = 1; n <= n_max; ++n)
    for (std::size_t s = 0; s < x.size(n); ++s) {
      if (x.is_degenerate(n, s)) continue;
      const auto b = position[static_cast<std::size_t>(n) - 1][x.face(n, 0, s)];
      const auto t = position[static_cast<std::size_t>(n) - 1][x.face(n, n, s)];
      if (b == static_cast<std::size_t>(-1) || t == static_cast<std::size_t>(-1))
        throw IntegrityError("an outer face of the nondegenerate simplex '" + x.element(n, s) + "' is degenerate");
      bot[static_cast<std::size_t>(n)].push_back(b);
      top[static_cast<std::size_t>(n)].push_back(t);
    }
  return InertPresheaf(n_max, std::move(levels), std::move(bot), std::move(top));
}

TruncatedSimplicialSet chain_nerve(int length, int truncation) {
  std::vector<std::vector<std::string>> levels;
  for (int k = 0; k <= truncation; ++k) {
    std::vector<std::string> level;
    for (const auto& m : monotone_maps(k, length)) {
      std::string enc;
      for (std::size_t i = 0; i < m.values().size(); ++i) enc += (i ? "," : "") + std::to_string(m.values()[i]);
      level.push_back(enc);
    }
    levels.push_back(std::move(level));
  }
  auto split = [](const std::string& e) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto c = e.find(',', start);
      out.push_back(e.substr(start, c == std::string::npos ? std::string::npos : c - start));
      if (c == std::string::npos) break;
      start = c + 1;
    }
    return out;
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
  };
  auto face = [&](int, int i, const std::string& e) {
    auto v = split(e);
    v.erase(v.begin() + i);
    return join(v);
  };
  auto degeneracy = [&](int, int i, const std::string& e) {
    auto v = split(e);
    v.insert(v.begin() + i, v[static_cast<std::size_t>(i)]);
    return join(v);
  };
  return TruncatedSimplicialSet::build(truncation, std::move(levels), face, degeneracy);
}

// ---------------------------------------------------------------------------
// Registry

Quiver sample_quiver() {
  return Quiver{{"0", "1"}, {{"f", "0", "1"}, {"g", "1", "0"}, {"h", "0", "0"}}};
}

const std::vector<Example>& example_registry() {
  static const std::vector<Example> registry = [] {
    auto letters = [](std::string_view t) { return normalize_letters(t); };
    auto as_is = [](std::string_view t) { return strip(t, " "); };
    auto partition = [](std::string_view t) { return encode_partition(parse_partition(t)); };
    std::vector<Example> r;
    r.push_back({"terminal", "one element in every level; the free space is BN", 4,
                 [](int b) { return terminal_presheaf(b); }, as_is});
    r.push_back({"bn", "alias of terminal", 4, [](int b) { return terminal_presheaf(b); }, as_is});
    r.push_back({"words", "words over {a,b}, faces drop the first or last letter", 4,
                 [](int b) { return words({"a", "b"}, b); }, letters});
    r.push_back({"truncated-words", "words over {a,b} of length at most 1", 3,
                 [](int b) { return truncate_paths(words({"a", "b"}, b), 1); }, letters});
    r.push_back({"nonempty-words", "words over {a,b} of length n+1 in level n", 3,
                 [](int b) { return window(words({"a", "b"}, b + 1), 1, b + 1); }, letters});
    r.push_back({"quiver", "paths in the quiver 0 -f-> 1 -g-> 0, h: 0 -> 0", 3,
                 [](int b) { return quiver_paths(sample_quiver(), b); }, letters});
    r.push_back({"truncated-paths", "paths of length at most 1 in the same quiver", 3,
                 [](int b) { return truncate_paths(quiver_paths(sample_quiver(), b), 1); }, letters});
    r.push_back({"qsym", "words over positive integers of weight at most the bound", 4,
                 [](int b) { return qsym(b); }, letters});
    r.push_back({"packed", "packed words graded by length", 4, [](int b) { return packed_words(b); }, letters});
    r.push_back({"packed-symbols", "packed words graded by number of symbols, length <= bound + 1", 3,
                 [](int b) { return packed_words_by_symbols(b, b + 1); }, letters});
    r.push_back({"fqsym", "permutations, faces drop a letter and standardize", 4,
                 [](int b) { return permutations_fqsym(b); }, letters});
    r.push_back({"parking-f", "parking functions graded by length", 4, [](int b) { return parking_f_basis(b); },
                 letters});
    r.push_back({"parking-g", "parking functions graded by breakpoints", 4,
                 [](int b) { return parking_g_basis(b); }, letters});
    r.push_back({"nc", "noncrossing partitions of {1..n}", 5, [](int b) { return noncrossing_partitions(b); },
                 partition});
    r.push_back({"dyck-height", "Dyck paths graded by height, length <= 2 bound + 4", 3,
                 [](int b) { return dyck_by_height(b, 2 * b + 4); }, as_is});
    r.push_back({"dyck-baseline", "Dyck paths graded by number of irreducible factors (semilength <= 2)", 3,
                 [](int b) { return dyck_by_baseline(2, b); }, as_is});
    r.push_back({"layered", "monotone surjections {1..m} -> {1..n}, m <= bound", 4,
                 [](int b) { return layered_linear(b); }, letters});
    r.push_back({"nondeg-bn", "nondegenerate simplices of BN", 4, [](int b) { return nondeg_J(b_nat(b, b)); },
                 letters});
    r.push_back({"shifted-words", "words over {a,b} shifted up one level", 4,
                 [](int b) { return shift_up(words({"a", "b"}, b - 1)); }, letters});
    return r;
  }();
  return registry;
}

const Example& find_example(std::string_view name) {
  for (const auto& e : example_registry())
    if (e.name == name) return e;
  throw PreconditionError("unknown example '" + std::string(name) + "'");
}

}  // namespace freedecomp
