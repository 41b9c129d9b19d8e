#include "freedecomp/presheaf.hpp"

#include <algorithm>
#include <map>

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

void check_face_table(const std::vector<std::size_t>& t, std::size_t domain, std::size_t codomain) {
  if (t.size() != domain) throw IntegrityError("face table has wrong length");
  for (std::size_t y : t)
    if (y >= codomain) throw IntegrityError("face table points outside the level below");
}

}  // namespace

// ---------------------------------------------------------------------------
// InertPresheaf

InertPresheaf::InertPresheaf(int budget, std::vector<std::vector<std::string>> levels, Table d_bot, Table d_top)
    : budget_(budget), levels_(std::move(levels)), bot_(std::move(d_bot)), top_(std::move(d_top)) {
  if (budget_ < 0) throw PreconditionError("budget must be nonnegative");
  const auto count = static_cast<std::size_t>(budget_) + 1;
  if (levels_.size() != count) throw IntegrityError("expected one level per n = 0..budget");
  bot_.resize(count);
  top_.resize(count);
  index_.resize(count);
  for (std::size_t n = 0; n < count; ++n)
    for (std::size_t x = 0; x < levels_[n].size(); ++x)
      if (!index_[n].emplace(levels_[n][x], x).second)
        throw IntegrityError("duplicate element " + quote(levels_[n][x]) + " in A_" + std::to_string(n));
  for (std::size_t n = 1; n < count; ++n) {
    check_face_table(bot_[n], levels_[n].size(), levels_[n - 1].size());
    check_face_table(top_[n], levels_[n].size(), levels_[n - 1].size());
  }
}

InertPresheaf InertPresheaf::build(int budget, std::vector<std::vector<std::string>> levels, const FaceFn& d_bot,
                                   const FaceFn& d_top) {
  if (budget < 0) throw PreconditionError("budget must be nonnegative");
  if (levels.size() != static_cast<std::size_t>(budget) + 1)
    throw IntegrityError("expected one level per n = 0..budget");
  Table bot(levels.size()), top(levels.size());
  for (std::size_t n = 1; n < levels.size(); ++n) {
    std::unordered_map<std::string, std::size_t> below;
    for (std::size_t y = 0; y < levels[n - 1].size(); ++y) below.emplace(levels[n - 1][y], y);
    auto lookup = [&](const std::string& out, const std::string& in, const char* face) {
      auto it = below.find(out);
      if (it == below.end())
        throw IntegrityError(std::string(face) + "(" + quote(in) + ") = " + quote(out) + " is not in A_" +
                             std::to_string(n - 1));
      return it->second;
    };
    for (const auto& e : levels[n]) {
      bot[n].push_back(lookup(d_bot(static_cast<int>(n), e), e, "d_bot"));
      top[n].push_back(lookup(d_top(static_cast<int>(n), e), e, "d_top"));
    }
  }
  return InertPresheaf(budget, std::move(levels), std::move(bot), std::move(top));
}

std::size_t InertPresheaf::total_size() const {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

std::optional<std::size_t> InertPresheaf::find(int n, std::string_view encoding) const {
  if (n < 0 || n > budget_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(n)];
  auto it = idx.find(std::string(encoding));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t InertPresheaf::index(int n, std::string_view encoding) const {
  if (n > budget_) throw BudgetOverflow(n, budget_);
  auto x = find(n, encoding);
  if (!x) throw IndexOutOfRange("no element " + quote(std::string(encoding)) + " in A_" + std::to_string(n));
  return *x;
}

const std::vector<std::size_t>& InertPresheaf::bot_table(int n) const {
  if (n < 1 || n > budget_) throw IndexOutOfRange("no d_bot out of A_" + std::to_string(n));
  return bot_[static_cast<std::size_t>(n)];
}

const std::vector<std::size_t>& InertPresheaf::top_table(int n) const {
  if (n < 1 || n > budget_) throw IndexOutOfRange("no d_top out of A_" + std::to_string(n));
  return top_[static_cast<std::size_t>(n)];
}

std::size_t InertPresheaf::restrict(int n, std::size_t x, int bottoms, int tops) const {
  if (bottoms < 0 || tops < 0 || bottoms + tops > n) throw PreconditionError("cannot restrict below A_0");
  for (int i = 0; i < tops; ++i) x = top(n--, x);
  for (int i = 0; i < bottoms; ++i) x = bot(n--, x);
  return x;
}

std::size_t InertPresheaf::apply(const InertMap& g, std::size_t x) const {
  return restrict(g.target(), x, g.bottom_count(), g.top_count());
}

void InertPresheaf::set_bot(int n, std::size_t x, std::size_t y) {
  bot_table(n);
  if (x >= size(n) || y >= size(n - 1)) throw IndexOutOfRange("face entry out of range");
  bot_[static_cast<std::size_t>(n)][x] = y;
}

void InertPresheaf::set_top(int n, std::size_t x, std::size_t y) {
  top_table(n);
  if (x >= size(n) || y >= size(n - 1)) throw IndexOutOfRange("face entry out of range");
  top_[static_cast<std::size_t>(n)][x] = y;
}

// ---------------------------------------------------------------------------
// PresheafMap

PresheafMap::PresheafMap(PresheafPtr source, PresheafPtr target, std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_ || !target_) throw PreconditionError("presheaf map needs source and target");
  if (source_->budget() != target_->budget()) throw DimensionMismatch("presheaf map between different budgets");
  if (components_.size() != static_cast<std::size_t>(source_->budget()) + 1)
    throw IntegrityError("presheaf map needs one component per level");
  for (int n = 0; n <= source_->budget(); ++n) {
    const auto& c = components_[static_cast<std::size_t>(n)];
    if (c.size() != source_->size(n)) throw IntegrityError("component has wrong length");
    for (std::size_t y : c)
      if (y >= target_->size(n)) throw IntegrityError("component points outside the target level");
  }
}

PresheafMap PresheafMap::from_function(PresheafPtr source, PresheafPtr target,
                                       const std::function<std::string(int, const std::string&)>& fn) {
  std::vector<std::vector<std::size_t>> comps;
  for (int n = 0; n <= source->budget(); ++n) {
    std::vector<std::size_t> c;
    for (const auto& e : source->level(n)) {
      const auto image = fn(n, e);
      auto y = target->find(n, image);
      if (!y) throw IntegrityError("image " + quote(image) + " of " + quote(e) + " is not in A_" + std::to_string(n));
      c.push_back(*y);
    }
    comps.push_back(std::move(c));
  }
  return PresheafMap(std::move(source), std::move(target), std::move(comps));
}

PresheafMap PresheafMap::identity(PresheafPtr a) {
  std::vector<std::vector<std::size_t>> comps;
  for (int n = 0; n <= a->budget(); ++n) {
    std::vector<std::size_t> c(a->size(n));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
    comps.push_back(std::move(c));
  }
  return PresheafMap(a, a, std::move(comps));
}

CheckReport PresheafMap::check_naturality() const {
  CheckReport report("presheaf naturality");
  for (int n = 1; n <= source_->budget(); ++n)
    for (std::size_t x = 0; x < source_->size(n); ++x) {
      if (component(n - 1)[source_->bot(n, x)] != target_->bot(n, component(n)[x]))
        report.fail("phi d_bot != d_bot phi on " + quote(source_->element(n, x)));
      if (component(n - 1)[source_->top(n, x)] != target_->top(n, component(n)[x]))
        report.fail("phi d_top != d_top phi on " + quote(source_->element(n, x)));
    }
  return report;
}

PresheafMap PresheafMap::then(const PresheafMap& next) const {
  if (target_ != next.source_ && target_->levels() != next.source_->levels())
    throw DimensionMismatch("presheaf maps are not composable");
  std::vector<std::vector<std::size_t>> comps(components_.size());
  for (std::size_t n = 0; n < comps.size(); ++n)
    for (std::size_t x : components_[n]) comps[n].push_back(next.components_[n][x]);
  return PresheafMap(source_, next.target_, std::move(comps));
}

CheckReport validate_presheaf(const InertPresheaf& a) {
  CheckReport report("presheaf relation");
  for (int n = 2; n <= a.budget(); ++n)
    for (std::size_t x = 0; x < a.size(n); ++x) {
      const auto tb = a.top(n - 1, a.bot(n, x));
      const auto bt = a.bot(n - 1, a.top(n, x));
      if (tb != bt)
        report.fail("d_top d_bot != d_bot d_top on " + quote(a.element(n, x)) + ": " + quote(a.element(n - 2, tb)) +
                    " vs " + quote(a.element(n - 2, bt)));
    }
  return report;
}

CheckReport check_presheaf_isomorphism(const PresheafMap& f) {
  CheckReport report("presheaf isomorphism");
  for (int n = 0; n <= f.source().budget(); ++n) {
    if (f.source().size(n) != f.target().size(n)) {
      report.fail("A_" + std::to_string(n) + " sizes differ: " + std::to_string(f.source().size(n)) + " vs " +
                  std::to_string(f.target().size(n)));
      continue;
    }
    std::vector<bool> seen(f.target().size(n), false);
    for (std::size_t x = 0; x < f.source().size(n); ++x) {
      const auto y = f(n, x);
      if (seen[y]) report.fail("A_" + std::to_string(n) + ": two elements map to " + quote(f.target().element(n, y)));
      seen[y] = true;
    }
  }
  report.absorb(f.check_naturality());
  return report;
}

// ---------------------------------------------------------------------------
// Free decomposition space

std::string FreeSimplex::encode() const { return comp.encode() + "|" + elem; }

FreeSimplex FreeSimplex::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("free simplex needs the form comp|elem: " + std::string(text));
  return FreeSimplex{Composition::parse(text.substr(0, bar)), std::string(text.substr(bar + 1))};
}

FreeSimplex parse_free_simplex(const InertPresheaf& a, std::string_view text) {
  auto s = FreeSimplex::parse(text);
  a.index(s.comp.weight(), s.elem);
  return s;
}

TruncatedSimplicialSet free_space(const InertPresheaf& a, int truncation) {
  if (truncation < 0) throw PreconditionError("truncation must be nonnegative");
  const int budget = a.budget();
  struct Entry {
    std::vector<int> parts;
    int weight;
    std::size_t elem;
  };
  std::vector<std::vector<Entry>> entries(static_cast<std::size_t>(truncation) + 1);
  std::vector<std::map<std::vector<int>, std::size_t>> offset(entries.size());
  std::vector<std::vector<std::string>> levels(entries.size());
  Grading grading{budget, {}};
  for (int k = 0; k <= truncation; ++k) {
    auto& lv = levels[static_cast<std::size_t>(k)];
    std::vector<int> weights;
    for (const auto& c : compositions(k, budget)) {
      const int w = c.weight();
      offset[static_cast<std::size_t>(k)][c.parts] = lv.size();
      const std::string prefix = c.encode() + "|";
      for (std::size_t x = 0; x < a.size(w); ++x) {
        entries[static_cast<std::size_t>(k)].push_back({c.parts, w, x});
        lv.push_back(prefix + a.element(w, x));
        weights.push_back(w);
      }
    }
    grading.weights.push_back(std::move(weights));
  }
  auto position = [&](int k, const std::vector<int>& parts, std::size_t elem) {
    return offset[static_cast<std::size_t>(k)].at(parts) + elem;
  };

  TruncatedSimplicialSet::OperatorTables faces(entries.size()), degens(entries.size());
  for (int k = 1; k <= truncation; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<std::size_t> t;
      for (const auto& e : entries[static_cast<std::size_t>(k)]) {
        auto parts = e.parts;
        std::size_t elem = e.elem;
        if (i == 0) {
          elem = a.restrict(e.weight, elem, parts.front(), 0);
          parts.erase(parts.begin());
        } else if (i == k) {
          elem = a.restrict(e.weight, elem, 0, parts.back());
          parts.pop_back();
        } else {
          parts[static_cast<std::size_t>(i) - 1] += parts[static_cast<std::size_t>(i)];
          parts.erase(parts.begin() + i);
        }
        t.push_back(position(k - 1, parts, elem));
      }
      faces[static_cast<std::size_t>(k)].push_back(std::move(t));
    }
  }
  for (int k = 0; k < truncation; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::vector<std::size_t> t;
      for (const auto& e : entries[static_cast<std::size_t>(k)]) {
        auto parts = e.parts;
        parts.insert(parts.begin() + i, 0);
        t.push_back(position(k + 1, parts, e.elem));
      }
      degens[static_cast<std::size_t>(k)].push_back(std::move(t));
    }
  }
  return TruncatedSimplicialSet(truncation, std::move(levels), std::move(faces), std::move(degens),
                                std::move(grading));
}

SimplicialMap culf_projection(SimplicialSetPtr free, int max_weight) {
  auto bn = std::make_shared<const TruncatedSimplicialSet>(b_nat(free->truncation(), max_weight));
  return SimplicialMap::from_function(free, bn, [max_weight](int, const std::string& e) {
    auto s = FreeSimplex::parse(e);
    if (s.comp.weight() > max_weight) throw BudgetOverflow(s.comp.weight(), max_weight);
    return s.comp.encode();
  });
}

SimplicialMap culf_projection(const InertPresheaf& a, int truncation, int max_weight) {
  if (max_weight < a.budget())
    throw PreconditionError("projection needs a weight bound of at least the budget " + std::to_string(a.budget()));
  return culf_projection(std::make_shared<const TruncatedSimplicialSet>(free_space(a, truncation)), max_weight);
}

SimplicialMap map_free(const PresheafMap& phi, SimplicialSetPtr source_free, SimplicialSetPtr target_free) {
  return SimplicialMap::from_function(source_free, target_free, [&phi](int, const std::string& e) {
    auto s = FreeSimplex::parse(e);
    const int w = s.comp.weight();
    s.elem = phi.target().element(w, phi(w, phi.source().index(w, s.elem)));
    return s.encode();
  });
}

SimplicialMap map_free(const PresheafMap& phi, int truncation) {
  return map_free(phi, std::make_shared<const TruncatedSimplicialSet>(free_space(phi.source(), truncation)),
                  std::make_shared<const TruncatedSimplicialSet>(free_space(phi.target(), truncation)));
}

InertPresheaf recover_presheaf(const TruncatedSimplicialSet& x, const SimplicialMap& phi) {
  if (x.truncation() < 2) throw TruncationTooSmall("recovering faces needs 2-simplices", 2);
  const auto& bn = phi.target();
  int budget = 0;
  std::vector<int> degree(x.size(1));
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const auto c = Composition::parse(bn.element(1, phi(1, e)));
    degree[e] = c.weight();
    budget = std::max(budget, degree[e]);
  }
  if (x.grading()) budget = std::max(budget, x.grading()->bound);

  std::vector<std::vector<std::string>> levels(static_cast<std::size_t>(budget) + 1);
  std::vector<std::size_t> position(x.size(1));
  for (std::size_t e = 0; e < x.size(1); ++e) {
    auto& lv = levels[static_cast<std::size_t>(degree[e])];
    position[e] = lv.size();
    lv.push_back(x.element(1, e));
  }

  // (long edge, image in BN) -> 2-simplices
  std::map<std::pair<std::size_t, std::string>, std::vector<std::size_t>> lifts;
  for (std::size_t s = 0; s < x.size(2); ++s) lifts[{x.face(2, 1, s), bn.element(2, phi(2, s))}].push_back(s);
  auto unique_lift = [&](std::size_t e, const std::string& over) {
    auto it = lifts.find({e, over});
    if (it == lifts.end())
      throw IntegrityError("no 2-simplex over (" + over + ") with long edge " + quote(x.element(1, e)));
    if (it->second.size() != 1)
      throw IntegrityError(std::to_string(it->second.size()) + " 2-simplices over (" + over + ") with long edge " +
                           quote(x.element(1, e)));
    return it->second.front();
  };

  InertPresheaf::Table bot(levels.size()), top(levels.size());
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const int n = degree[e];
    if (n == 0) continue;
    const auto upper = unique_lift(e, std::to_string(n - 1) + ",1");
    const auto lower = unique_lift(e, "1," + std::to_string(n - 1));
    auto& tt = top[static_cast<std::size_t>(n)];
    auto& bt = bot[static_cast<std::size_t>(n)];
    tt.resize(levels[static_cast<std::size_t>(n)].size());
    bt.resize(levels[static_cast<std::size_t>(n)].size());
    tt[position[e]] = position[x.face(2, 2, upper)];
    bt[position[e]] = position[x.face(2, 0, lower)];
  }
  return InertPresheaf(budget, std::move(levels), std::move(bot), std::move(top));
}

CheckReport roundtrip_recover_free(const InertPresheaf& a, int truncation) {
  CheckReport report("recover(free(A)) ~ A");
  auto x = std::make_shared<const TruncatedSimplicialSet>(free_space(a, truncation));
  const auto phi = culf_projection(x, a.budget());
  auto recovered = std::make_shared<const InertPresheaf>(recover_presheaf(*x, phi));
  if (recovered->budget() != a.budget()) {
    report.fail("recovered budget " + std::to_string(recovered->budget()) + " differs from " +
                std::to_string(a.budget()));
    return report;
  }
  auto original = std::make_shared<const InertPresheaf>(a);
  try {
    const auto f = PresheafMap::from_function(original, recovered, [](int n, const std::string& e) {
      return FreeSimplex{Composition{{n}}, e}.encode();
    });
    report.absorb(check_presheaf_isomorphism(f));
  } catch (const IntegrityError& e) {
    report.fail(e.what());
  }
  return report;
}

CheckReport roundtrip_free_recover(SimplicialSetPtr x, const SimplicialMap& phi) {
  CheckReport report("free(recover(X)) ~ X over BN");
  const auto recovered = recover_presheaf(*x, phi);
  auto rebuilt = std::make_shared<const TruncatedSimplicialSet>(free_space(recovered, x->truncation()));
  const auto& bn = phi.target();

  std::vector<std::vector<std::size_t>> comps;
  for (int k = 0; k <= x->truncation(); ++k) {
    const auto long_edge = x->operator_table(OrdinalMap(1, k, {0, k}));
    std::map<std::pair<std::size_t, std::string>, std::size_t> locate;
    for (std::size_t s = 0; s < x->size(k); ++s) {
      if (!locate.emplace(std::make_pair(long_edge[s], bn.element(k, phi(k, s))), s).second)
        report.fail("two " + std::to_string(k) + "-simplices share long edge and image: " + x->element(k, s));
    }
    std::vector<std::size_t> c;
    for (const auto& e : rebuilt->level(k)) {
      const auto fs = FreeSimplex::parse(e);
      const auto edge = x->index(1, fs.elem);
      auto it = locate.find({edge, fs.comp.encode()});
      if (it == locate.end()) {
        report.fail("no " + std::to_string(k) + "-simplex over (" + fs.comp.encode() + ") with long edge " +
                    quote(fs.elem));
        return report;
      }
      c.push_back(it->second);
    }
    comps.push_back(std::move(c));
  }
  const SimplicialMap g(rebuilt, x, std::move(comps));
  report.absorb(check_isomorphism(g));
  for (int k = 0; k <= x->truncation(); ++k)
    for (std::size_t s = 0; s < rebuilt->size(k); ++s)
      if (bn.element(k, phi(k, g(k, s))) != FreeSimplex::parse(rebuilt->element(k, s)).comp.encode())
        report.fail("map does not commute with the projections at " + quote(rebuilt->element(k, s)));
  return report;
}

// ---------------------------------------------------------------------------
// Sheaf condition

CheckReport check_sheaf(const InertPresheaf& a, bool all_covers) {
  CheckReport report(all_covers ? "sheaf (all covers)" : "sheaf");
  const int budget = a.budget();
  if (!all_covers) {
    for (int total = 2; total <= budget; ++total)
      for (int m = 1; m < total; ++m) {
        const int n = total - m;
        SquareOfSets sq;
        sq.label = "A_" + std::to_string(total) + " -> A_" + std::to_string(m) + " x_A_0 A_" + std::to_string(n);
        sq.apex = a.level(total);
        sq.left = a.level(m);
        sq.right = a.level(n);
        sq.base = a.level(0);
        for (std::size_t x = 0; x < a.size(total); ++x) {
          sq.to_left.push_back(a.restrict(total, x, 0, n));
          sq.to_right.push_back(a.restrict(total, x, m, 0));
        }
        for (std::size_t y = 0; y < a.size(m); ++y) sq.left_to_base.push_back(a.restrict(m, y, m, 0));
        for (std::size_t y = 0; y < a.size(n); ++y) sq.right_to_base.push_back(a.restrict(n, y, 0, n));
        try {
          report.absorb(is_pullback(sq));
        } catch (const PreconditionError& e) {
          report.fail(sq.label + ": " + e.what());
        }
      }
    return report;
  }

  for (int total = 2; total <= budget; ++total)
    for (int k = 2; k <= total; ++k)
      for (const auto& c : compositions(k, total)) {
        if (c.weight() != total || c.has_zero_part()) continue;
        const std::string label = "cover (" + c.encode() + ") of A_" + std::to_string(total);
        std::map<std::vector<std::size_t>, std::size_t> hits;
        for (std::size_t x = 0; x < a.size(total); ++x) {
          std::vector<std::size_t> pieces;
          int before = 0;
          for (int p : c.parts) {
            pieces.push_back(a.restrict(total, x, before, total - before - p));
            before += p;
          }
          auto [it, fresh] = hits.emplace(pieces, x);
          if (!fresh)
            report.fail(label + ": " + quote(a.element(total, it->second)) + " and " + quote(a.element(total, x)) +
                        " have the same pieces");
        }
        // Walk matching tuples: the end of each piece is the start of the next.
        std::vector<std::size_t> chain;
        bool gap = false;
        auto walk = [&](auto& self, std::size_t i) -> void {
          if (gap) return;
          if (i == c.parts.size()) {
            if (!hits.count(chain)) {
              std::string w = label + ": matching pieces (";
              for (std::size_t j = 0; j < chain.size(); ++j)
                w += (j ? ", " : "") + quote(a.element(c.parts[j], chain[j]));
              report.fail(w + ") are not hit");
              gap = true;
            }
            return;
          }
          const int p = c.parts[i];
          for (std::size_t y = 0; y < a.size(p) && !gap; ++y) {
            if (i > 0) {
              const int q = c.parts[i - 1];
              if (a.restrict(q, chain.back(), q, 0) != a.restrict(p, y, 0, p)) continue;
            }
            chain.push_back(y);
            self(self, i + 1);
            chain.pop_back();
          }
        };
        walk(walk, 0);
      }
  return report;
}

// ---------------------------------------------------------------------------
// Shifts and restriction species

InertPresheaf shift_up(const InertPresheaf& a) {
  std::vector<std::vector<std::string>> levels{{"*"}};
  for (const auto& l : a.levels()) levels.push_back(l);
  InertPresheaf::Table bot(levels.size()), top(levels.size());
  bot[1].assign(a.size(0), 0);
  top[1].assign(a.size(0), 0);
  for (int n = 1; n <= a.budget(); ++n) {
    bot[static_cast<std::size_t>(n) + 1] = a.bot_table(n);
    top[static_cast<std::size_t>(n) + 1] = a.top_table(n);
  }
  return InertPresheaf(a.budget() + 1, std::move(levels), std::move(bot), std::move(top));
}

InertPresheaf shift_down(const InertPresheaf& a, int d) {
  if (d < 0 || d > a.budget()) throw PreconditionError("shift_down needs 0 <= d <= budget");
  std::vector<std::vector<std::string>> levels;
  InertPresheaf::Table bot(1), top(1);
  for (int n = d; n <= a.budget(); ++n) levels.push_back(a.level(n));
  for (int n = d + 1; n <= a.budget(); ++n) {
    bot.push_back(a.bot_table(n));
    top.push_back(a.top_table(n));
  }
  return InertPresheaf(a.budget() - d, std::move(levels), std::move(bot), std::move(top));
}

InertPresheaf from_restriction_species(int budget, std::vector<std::vector<std::string>> levels,
                                       const std::function<std::string(const std::string&)>& level_one_face,
                                       const InertPresheaf::FaceFn& d_bot, const InertPresheaf::FaceFn& d_top) {
  auto bot = [&](int n, const std::string& e) { return n == 1 ? level_one_face(e) : d_bot(n, e); };
  auto top = [&](int n, const std::string& e) { return n == 1 ? level_one_face(e) : d_top(n, e); };
  auto a = InertPresheaf::build(budget, std::move(levels), bot, top);
  const auto report = validate_presheaf(a);
  if (!report.passed) throw IntegrityError("restriction species violates the face relation: " + report.witnesses.front());
  return a;
}

bool faces_agree_on_level_one(const InertPresheaf& a) {
  return a.budget() < 1 || a.bot_table(1) == a.top_table(1);
}

}  // namespace freedecomp
