// fdspace: enumerate and check free decomposition spaces from the example
// registry. Exit codes: 0 pass, 1 a check failed, 2 usage or config error.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "freedecomp/errors.hpp"
#include "freedecomp/incidence.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/serialize.hpp"
#include "freedecomp/zoo.hpp"

using namespace freedecomp;

namespace {

struct Config {
  std::string example;
  std::optional<int> level;
  std::optional<int> truncation;
  std::optional<int> bound;
  std::string element;
  std::string format = "json";
  std::string alphabet;
  std::string space = "presheaf";
  std::string which;
  int iterate = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int budget_of(const Config& c) {
  const int b = c.bound.value_or(find_example(c.example).default_budget);
  if (b < 1) throw UsageError("--bound must be positive");
  return b;
}

int truncation_of(const Config& c, int fallback) {
  const int n = c.truncation.value_or(fallback);
  if (n < 1) throw UsageError("--truncation must be positive");
  return n;
}

InertPresheaf build(const Config& c) {
  const auto& ex = find_example(c.example);
  if (!c.alphabet.empty()) {
    if (c.example != "words") throw UsageError("--alphabet only applies to --example words");
    std::vector<std::string> letters;
    for (char ch : c.alphabet) letters.emplace_back(1, ch);
    return words(letters, budget_of(c));
  }
  return ex.build(budget_of(c));
}

void print(const Config& c, const Json& j, const std::function<void(std::ostream&)>& table) {
  if (c.format == "table")
    table(std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

int report_exit(const Config& c, const std::vector<CheckReport>& reports) {
  Json j = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    j.push_back(to_json(r));
    ok = ok && r.passed;
  }
  print(c, reports.size() == 1 ? j[0] : Json{{"reports", j}}, [&](std::ostream& os) {
    for (const auto& r : reports) {
      os << r.check << ": " << (r.passed ? "pass" : "fail") << "\n";
      for (const auto& w : r.witnesses) os << "  " << w << "\n";
    }
  });
  return ok ? 0 : 1;
}

int cmd_enumerate(const Config& c) {
  if (!c.level) throw UsageError("enumerate needs --level");
  const int k = *c.level;
  const auto a = build(c);
  std::vector<std::string> elems;
  if (c.space == "presheaf") {
    if (k < 0 || k > a.budget()) throw BudgetOverflow(k, a.budget());
    elems = a.level(k);
  } else {
    const auto x = free_space(a, truncation_of(c, std::max(k, 1)));
    if (k < 0 || k > x.truncation()) throw UsageError("--level must lie within the truncation");
    elems = x.level(k);
  }
  const Json j{{"example", c.example}, {"space", c.space}, {"level", k}, {"count", elems.size()}, {"elements", elems}};
  print(c, j, [&](std::ostream& os) {
    os << c.example << " (" << c.space << ") level " << k << ": " << elems.size() << " elements\n";
    for (const auto& e : elems) os << "  " << (e.empty() ? "()" : e) << "\n";
  });
  return 0;
}

int cmd_check(const Config& c) {
  const auto a = build(c);
  const int n = truncation_of(c, 3);
  if (c.which == "sheaf") return report_exit(c, {check_sheaf(a)});
  auto x = std::make_shared<const TruncatedSimplicialSet>(free_space(a, n));
  if (c.which == "simplicial") return report_exit(c, {check_simplicial_identities(*x)});
  if (c.which == "decomposition") return report_exit(c, {check_decomposition(*x)});
  if (c.which == "segal") return report_exit(c, {check_segal(*x)});
  if (c.which == "culf") return report_exit(c, {check_culf(culf_projection(x, a.budget()))});
  throw UsageError("--which must be simplicial, decomposition, segal, sheaf or culf");
}

// The 1-simplex "n|elem" for a presheaf element given on the command line.
std::string locate(const Config& c, const InertPresheaf& a) {
  const auto elem = find_example(c.example).normalize(c.element);
  if (c.level) {
    if (*c.level < 0 || *c.level > a.budget()) throw BudgetOverflow(*c.level, a.budget());
    if (!a.find(*c.level, elem)) throw ParseError("'" + c.element + "' is not in level " + std::to_string(*c.level));
    return std::to_string(*c.level) + "|" + elem;
  }
  std::optional<int> found;
  for (int k = 0; k <= a.budget(); ++k)
    if (a.find(k, elem)) {
      if (found) throw UsageError("'" + c.element + "' occurs in several levels; pass --level");
      found = k;
    }
  if (!found) throw ParseError("'" + c.element + "' is not an element within --bound " + std::to_string(a.budget()));
  return std::to_string(*found) + "|" + elem;
}

int cmd_comult(const Config& c) {
  if (c.iterate < 1) throw UsageError("--iterate must be at least 1");
  const auto a = build(c);
  const auto x = free_space(a, truncation_of(c, 2));
  const auto f = locate(c, a);
  const auto t = iterated_comult(x, f, c.iterate);
  print(c, to_json(t), [&](std::ostream& os) {
    os << "comult^" << c.iterate << " " << f << ": " << t.size() << " terms\n";
    for (const auto& [key, coeff] : t.terms()) {
      os << "  " << format_rational(coeff);
      for (std::size_t i = 0; i < key.size(); ++i) os << (i ? " (x) " : "  ") << key[i];
      os << "\n";
    }
  });
  return 0;
}

int cmd_mobius(const Config& c) {
  const auto a = build(c);
  const int n = truncation_of(c, 3);
  if (n < 2) throw TruncationTooSmall("Moebius values", 2);
  const auto x = free_space(a, n);
  const auto r = mobius(x, n - 1);
  bool agree = true;
  for (std::size_t f = 0; f < x.size(1); ++f)
    if (r.certified[f] && r.mu(f) != r.alternating(f)) agree = false;
  Json j = to_json(r.mu, r.certified);
  j["up_to_length"] = n - 1;
  j["recursion_matches_alternating_sum"] = agree;
  print(c, j, [&](std::ostream& os) {
    os << "mu up to length " << n - 1 << "\n";
    for (std::size_t f = 0; f < x.size(1); ++f)
      if (r.certified[f]) os << "  " << x.element(1, f) << "  " << format_rational(r.mu(f)) << "\n";
    os << "alternating sum " << (agree ? "agrees" : "DISAGREES") << "\n";
  });
  return agree ? 0 : 1;
}

int cmd_roundtrip(const Config& c) {
  const auto a = build(c);
  const int n = truncation_of(c, 3);
  auto x = std::make_shared<const TruncatedSimplicialSet>(free_space(a, n));
  return report_exit(c, {roundtrip_recover_free(a, n), roundtrip_free_recover(x, culf_projection(x, a.budget()))});
}

int cmd_compare(const Config& c) {
  const int w = c.bound.value_or(6);
  if (c.which == "tw") {
    const int n = truncation_of(c, 5);
    const auto r = compare_tw_bn_with_delta_inert(n, w);
    Json counts = Json::array();
    for (int m = 0; m <= w; ++m)
      for (int k = m; k <= w; ++k) counts.push_back(Json{{"m", m}, {"n", k}, {"homs", inert_homset(m, k).size()}});
    Json j = to_json(r);
    j["hom_counts"] = counts;
    print(c, j, [&](std::ostream& os) {
      os << r.check << ": " << (r.passed ? "pass" : "fail") << "\n";
      for (const auto& wit : r.witnesses) os << "  " << wit << "\n";
      os << "hom counts (m rows, n columns)\n";
      for (int m = 0; m <= w; ++m) {
        os << "  " << m << ":";
        for (int k = 0; k <= w; ++k) os << " " << (k < m ? 0 : static_cast<int>(inert_homset(m, k).size()));
        os << "\n";
      }
    });
    return r.passed ? 0 : 1;
  }
  if (c.which == "arrows") return report_exit(c, {compare_active_arrows_with_el_bn(truncation_of(c, 3), w)});
  throw UsageError("--which must be tw or arrows");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free decomposition spaces: enumeration, checks, incidence coalgebras"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool needs_example) {
    auto* ex = sub->add_option("--example", c.example, "registered example name");
    if (needs_example) ex->required();
    sub->add_option("--truncation", c.truncation, "truncation N");
    sub->add_option("--bound", c.bound, "weight/length budget W");
    sub->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--alphabet", c.alphabet, "letters for --example words");
  };

  auto* list = app.add_subcommand("examples", "list the registered examples");
  auto* en = app.add_subcommand("enumerate", "print one level of a presheaf or its free space");
  common(en, true);
  en->add_option("--level", c.level, "level to list")->required();
  en->add_option("--space", c.space, "presheaf or free")->check(CLI::IsMember({"presheaf", "free"}));
  auto* ch = app.add_subcommand("check", "run a checker on the free space");
  common(ch, true);
  ch->add_option("--which", c.which, "simplicial|decomposition|segal|sheaf|culf")->required();
  auto* co = app.add_subcommand("comult", "comultiply an element");
  common(co, true);
  co->add_option("--element", c.element, "element of the presheaf")->required();
  co->add_option("--level", c.level, "level of the element, when ambiguous");
  co->add_option("--iterate", c.iterate, "number of comultiplications");
  auto* mo = app.add_subcommand("mobius", "Moebius function up to the certified length");
  common(mo, true);
  auto* rt = app.add_subcommand("roundtrip", "recover/free round trips");
  common(rt, true);
  auto* cmp = app.add_subcommand("compare", "tw(BN) against inert maps, or active arrows against el(BN)");
  common(cmp, false);
  cmp->add_option("--which", c.which, "tw or arrows")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!c.example.empty()) find_example(c.example);
    if (*list) {
      for (const auto& e : example_registry())
        std::cout << e.name << "  (default bound " << e.default_budget << ")  " << e.description << "\n";
      return 0;
    }
    if (*en) return cmd_enumerate(c);
    if (*ch) return cmd_check(c);
    if (*co) return cmd_comult(c);
    if (*mo) return cmd_mobius(c);
    if (*rt) return cmd_roundtrip(c);
    if (*cmp) return cmd_compare(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
