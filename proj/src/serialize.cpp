#include "freedecomp/serialize.hpp"

#include "freedecomp/errors.hpp"

namespace freedecomp {

namespace {

// nlohmann errors become ParseError; library errors pass through.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " document: " + e.what());
  }
}

Json tables_to_json(const TruncatedSimplicialSet& x, bool faces) {
  Json out = Json::object();
  const int n = x.truncation();
  for (int k = faces ? 1 : 0; k <= (faces ? n : n - 1); ++k) {
    Json per = Json::array();
    for (int i = 0; i <= k; ++i) per.push_back(faces ? x.face_table(k, i) : x.degeneracy_table(k, i));
    out[std::to_string(k)] = per;
  }
  return out;
}

TruncatedSimplicialSet::OperatorTables tables_from_json(const Json& j, int n, bool faces) {
  TruncatedSimplicialSet::OperatorTables t(static_cast<std::size_t>(n + 1));
  for (int k = faces ? 1 : 0; k <= (faces ? n : n - 1); ++k)
    t[static_cast<std::size_t>(k)] = j.at(std::to_string(k)).get<std::vector<std::vector<std::size_t>>>();
  return t;
}

}  // namespace

Json to_json(const OrdinalMap& g) {
  return Json{{"source", g.source()}, {"target", g.target()}, {"values", g.values()}};
}

Json to_json(const Composition& c) { return Json(c.parts); }

Json to_json(const TruncatedSimplicialSet& x) {
  Json levels = Json::array();
  for (int k = 0; k <= x.truncation(); ++k) levels.push_back(x.level(k));
  Json out{{"truncation", x.truncation()},
           {"levels", levels},
           {"faces", tables_to_json(x, true)},
           {"degeneracies", tables_to_json(x, false)}};
  if (x.grading()) out["grading"] = Json{{"bound", x.grading()->bound}, {"weights", x.grading()->weights}};
  return out;
}

Json to_json(const CheckReport& r) {
  return Json{{"check", r.check}, {"verdict", r.passed ? "pass" : "fail"}, {"witnesses", r.witnesses}};
}

Json to_json(const InertPresheaf& a) {
  Json bot = Json::object(), top = Json::object();
  for (int n = 1; n <= a.budget(); ++n) {
    bot[std::to_string(n)] = a.bot_table(n);
    top[std::to_string(n)] = a.top_table(n);
  }
  return Json{{"budget", a.budget()}, {"levels", a.levels()}, {"d_bot", bot}, {"d_top", top}};
}

Json to_json(const TensorComb& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    if (t.arity() == 2)
      terms.push_back(Json{{"left", key[0]}, {"right", key[1]}, {"coeff", format_rational(c)}});
    else
      terms.push_back(Json{{"factors", key}, {"coeff", format_rational(c)}});
  }
  return Json{{"terms", terms}};
}

Json to_json(const ConvolutionFunction& f, const std::vector<bool>& keep) {
  Json values = Json::object();
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (keep.empty() || keep.at(i)) values[f.domain.at(i)] = format_rational(f.values[i]);
  return Json{{"values", values}};
}

OrdinalMap ordinal_map_from_json(const Json& j) {
  return guarded("ordinal map", [&] {
    return OrdinalMap(j.at("source").get<int>(), j.at("target").get<int>(), j.at("values").get<std::vector<int>>());
  });
}

Composition composition_from_json(const Json& j) {
  return guarded("composition", [&] {
    Composition c{j.get<std::vector<int>>()};
    for (int p : c.parts)
      if (p < 0) throw ParseError("negative part in composition");
    return c;
  });
}

TruncatedSimplicialSet simplicial_set_from_json(const Json& j) {
  return guarded("simplicial set", [&] {
    const int n = j.at("truncation").get<int>();
    if (n < 0) throw ParseError("negative truncation");
    std::optional<Grading> grading;
    if (j.contains("grading"))
      grading = Grading{j["grading"].at("bound").get<int>(),
                        j["grading"].at("weights").get<std::vector<std::vector<int>>>()};
    return TruncatedSimplicialSet(n, j.at("levels").get<std::vector<std::vector<std::string>>>(),
                                  tables_from_json(j.at("faces"), n, true),
                                  tables_from_json(j.at("degeneracies"), n, false), grading);
  });
}

CheckReport check_report_from_json(const Json& j) {
  return guarded("check report", [&] {
    CheckReport r(j.at("check").get<std::string>());
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw ParseError("verdict must be pass or fail");
    r.passed = verdict == "pass";
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    return r;
  });
}

InertPresheaf presheaf_from_json(const Json& j) {
  return guarded("presheaf", [&] {
    const int budget = j.at("budget").get<int>();
    if (budget < 0) throw ParseError("negative budget");
    InertPresheaf::Table bot(static_cast<std::size_t>(budget + 1)), top(static_cast<std::size_t>(budget + 1));
    for (int n = 1; n <= budget; ++n) {
      bot[static_cast<std::size_t>(n)] = j.at("d_bot").at(std::to_string(n)).get<std::vector<std::size_t>>();
      top[static_cast<std::size_t>(n)] = j.at("d_top").at(std::to_string(n)).get<std::vector<std::size_t>>();
    }
    return InertPresheaf(budget, j.at("levels").get<std::vector<std::vector<std::string>>>(), std::move(bot),
                         std::move(top));
  });
}

TensorComb tensor_from_json(const Json& j) {
  return guarded("tensor", [&] {
    const auto& terms = j.at("terms");
    int arity = 2;
    if (!terms.empty() && terms.front().contains("factors"))
      arity = static_cast<int>(terms.front()["factors"].size());
    TensorComb t(arity);
    for (const auto& term : terms) {
      TensorComb::Key key = term.contains("factors")
                                ? term["factors"].get<TensorComb::Key>()
                                : TensorComb::Key{term.at("left").get<std::string>(), term.at("right").get<std::string>()};
      t.add(std::move(key), parse_rational(term.at("coeff").get<std::string>()));
    }
    return t;
  });
}

ConvolutionFunction convolution_from_json(const Json& j) {
  return guarded("convolution function", [&] {
    ConvolutionFunction f;
    for (const auto& [k, v] : j.at("values").items()) {
      f.domain.push_back(k);
      f.values.push_back(parse_rational(v.get<std::string>()));
    }
    return f;
  });
}

}  // namespace freedecomp
