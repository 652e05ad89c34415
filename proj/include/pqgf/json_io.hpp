#pragma once

// JSON forms:
//   MPoly           [{"coeff": "-3", "exps": {"p": 2, "q": 1}}, ...]
//   RationalGF      {"numer": [MPoly...], "denom": [MPoly...]}
//   CatalogEntry    {"id", "label", "category", "gf", "text", "oracle"}
//   report          {"id", "order", "status", "first_mismatch"?: {"n", "lhs", "rhs"},
//                    "suggested_numer"?: [MPoly...]}

#include <string>
#include <vector>

#include "json.hpp"

#include "pqgf/genfun.hpp"
#include "pqgf/mpoly.hpp"
#include "pqgf/report.hpp"
#include "pqgf/series.hpp"

namespace pqgf {

using nlohmann::json;

inline void to_json(json& j, const MPoly& f) {
  j = json::array();
  for (const auto& t : f.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (auto e = t.monomial.exponent(i)) exps[std::string(kVarNames[i])] = e;
    }
    j.push_back({{"coeff", t.coeff.str()}, {"exps", exps}});
  }
}

inline void from_json(const json& j, MPoly& f) {
  std::vector<MPoly::Term> terms;
  for (const auto& jt : j) {
    Monomial m;
    for (const auto& [var, e] : jt.at("exps").items()) {
      m *= Monomial::of(parse_var(var), e.get<unsigned>());
    }
    terms.push_back({m, BigInt(jt.at("coeff").get<std::string>())});
  }
  f = MPoly::from_terms(std::move(terms));
}

inline void to_json(json& j, const TruncSeries& s) {
  j = json::array();
  for (const auto& c : s.coeffs()) j.push_back(c);
}

inline void from_json(const json& j, TruncSeries& s) {
  s = TruncSeries(j.get<std::vector<MPoly>>());
}

inline void to_json(json& j, const RationalGF& gf) {
  j = {{"numer", gf.numer()}, {"denom", gf.denom()}};
}

inline void from_json(const json& j, RationalGF& gf) {
  gf = RationalGF(j.at("numer").get<std::vector<MPoly>>(), j.at("denom").get<std::vector<MPoly>>());
}

inline void to_json(json& j, const Oracle& o) {
  j = {{"kind", oracle_kind_name(o.kind)},
       {"family", family_name(o.family)},
       {"parity", parity_name(o.parity)},
       {"shift", {{"a", o.shift.a}, {"e", o.shift.e}}},
       {"p", o.p},
       {"q", o.q}};
}

inline void from_json(const json& j, Oracle& o) {
  const auto kind = j.at("kind").get<std::string>();
  bool found = false;
  for (auto k : {Oracle::Kind::pair_series, Oracle::Kind::pair_product, Oracle::Kind::family,
                 Oracle::Kind::family_product}) {
    if (oracle_kind_name(k) == kind) {
      o.kind = k;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown oracle kind '" + kind + "'");
  o.family = parse_family(j.at("family").get<std::string>());
  o.parity = parse_parity(j.at("parity").get<std::string>());
  o.shift = {j.at("shift").at("a").get<int>(), j.at("shift").at("e").get<int>()};
  o.p = j.at("p").get<MPoly>();
  o.q = j.at("q").get<MPoly>();
}

inline void to_json(json& j, const CatalogEntry& e) {
  j = {{"id", e.id},         {"label", e.label}, {"category", category_name(e.category)},
       {"gf", e.gf},         {"text", to_string(e.gf)}, {"oracle", e.oracle}};
}

inline void from_json(const json& j, CatalogEntry& e) {
  e.id = j.at("id").get<std::string>();
  e.label = j.at("label").get<std::string>();
  const auto cat = j.at("category").get<std::string>();
  bool found = false;
  for (auto c : {EntryCategory::lemma, EntryCategory::family, EntryCategory::shape,
                 EntryCategory::product, EntryCategory::table}) {
    if (category_name(c) == cat) {
      e.category = c;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown category '" + cat + "'");
  e.gf = j.at("gf").get<RationalGF>();
  e.oracle = j.at("oracle").get<Oracle>();
}

inline void to_json(json& j, const VerificationReport& r) {
  j = {{"id", r.id}, {"order", r.order}, {"status", r.passed() ? "pass" : "fail"}};
  if (r.first_mismatch) {
    j["first_mismatch"] = {
        {"n", r.first_mismatch->index}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
  }
  if (r.suggested_numer) j["suggested_numer"] = *r.suggested_numer;
}

inline void from_json(const json& j, VerificationReport& r) {
  r.id = j.at("id").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.first_mismatch.reset();
  r.suggested_numer.reset();
  if (j.contains("first_mismatch")) {
    const auto& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{m.at("n").get<std::size_t>(), m.at("lhs").get<MPoly>(),
                                m.at("rhs").get<MPoly>()};
  }
  if (j.contains("suggested_numer")) {
    r.suggested_numer = j.at("suggested_numer").get<std::vector<MPoly>>();
  }
}

}  // namespace pqgf
