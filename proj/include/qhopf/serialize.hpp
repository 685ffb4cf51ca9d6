#pragma once

#include <json.hpp>

#include <string>

#include "qhopf/cocycle.hpp"
#include "qhopf/io.hpp"
#include "qhopf/presentation.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

using json = nlohmann::json;

inline GenSym symbol_from_token(const std::string& tok) {
  if (tok.empty()) throw ParameterError("empty symbol token");
  Family fam;
  switch (tok[0]) {
    case 'a': fam = Family::alpha; break;
    case 'g': fam = Family::gamma; break;
    case 'z': fam = Family::z; break;
    case 'v': fam = Family::v; break;
    case 'u': fam = Family::u; break;
    default: throw ParameterError("bad symbol token: " + tok);
  }
  std::size_t pos = 1;
  bool star = false;
  if (pos < tok.size() && tok[pos] == '*') {
    star = true;
    ++pos;
  }
  int i = 0, j = 0;
  if (pos < tok.size() && tok[pos] == '[') {
    std::size_t comma = tok.find(',', pos);
    std::size_t close = tok.find(']', pos);
    if (comma == std::string::npos || close == std::string::npos)
      throw ParameterError("bad symbol token: " + tok);
    i = std::stoi(tok.substr(pos + 1, comma - pos - 1));
    j = std::stoi(tok.substr(comma + 1, close - comma - 1));
    pos = close + 1;
  }
  if (pos != tok.size()) throw ParameterError("bad symbol token: " + tok);
  return GenSym::make(fam, i, j, star);
}

inline json word_to_json(const Word& w) {
  json arr = json::array();
  for (GenSym g : w.symbols()) arr.push_back(g.token());
  return arr;
}

inline Word word_from_json(const json& j) {
  Word w;
  for (const auto& tok : j) w.push_back(symbol_from_token(tok.get<std::string>()));
  return w;
}

/// Canonical JSON encoding: a list of {word, re, im}, largest word first.
inline json poly_to_json(const NCPoly& p) {
  json arr = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json term;
    term["word"] = word_to_json(it->first);
    term["re"] = it->second.re().get_str();
    term["im"] = it->second.im().get_str();
    arr.push_back(std::move(term));
  }
  return arr;
}

inline NCPoly poly_from_json(const json& j, Alphabet a) {
  NCPoly p(a);
  for (const auto& term : j) {
    Word w = word_from_json(term.at("word"));
    p.check_word(w);
    mpq_class re(term.at("re").get<std::string>());
    mpq_class im(term.at("im").get<std::string>());
    p.add_term(w, Scalar(re, im));
  }
  return p;
}

inline json alphabet_to_json(Alphabet a) {
  json fams = json::array();
  for (Family f : {Family::alpha, Family::gamma, Family::z, Family::v, Family::u})
    if (a.has(f)) fams.push_back(family_letter(f));
  return json{{"families", fams}, {"n", a.n()}};
}

inline Alphabet alphabet_from_json(const json& j) {
  std::string fams;
  for (const auto& f : j.at("families")) fams += f.get<std::string>();
  int n = j.at("n").get<int>();
  if (fams == "ag") return Alphabet::su2();
  if (fams == "z") return Alphabet::s1();
  if (fams == "v") return Alphabet::o_plus(n);
  if (fams == "u") return Alphabet::u_plus(n);
  if (fams == "zv") return Alphabet::h(n);
  throw ParameterError("unsupported alphabet in JSON: " + fams);
}

inline json presentation_to_json(const Presentation& p) {
  json rules = json::array();
  for (const RewriteRule& r : p.rules())
    rules.push_back(json{{"lhs", word_to_json(r.lhs)}, {"rhs", poly_to_json(r.rhs)}});
  json relations = json::array();
  for (const NCPoly& r : p.relations()) relations.push_back(poly_to_json(r));
  return json{{"name", p.name()},
              {"n", p.n()},
              {"alphabet", alphabet_to_json(p.alphabet())},
              {"order", Presentation::monomial_order()},
              {"certified_degree", p.certified_degree()},
              {"relations", relations},
              {"rules", rules}};
}

inline Presentation presentation_from_json(const json& j) {
  Alphabet a = alphabet_from_json(j.at("alphabet"));
  Presentation p(j.at("name").get<std::string>(), a, j.at("n").get<int>());
  std::vector<NCPoly> rels;
  for (const auto& r : j.at("relations")) rels.push_back(poly_from_json(r, a));
  p.set_relations(std::move(rels));
  std::vector<RewriteRule> rules;
  for (const auto& r : j.at("rules"))
    rules.push_back(RewriteRule{word_from_json(r.at("lhs")),
                                poly_from_json(r.at("rhs"), a)});
  p.set_rules(std::move(rules));
  p.set_certified_degree(j.at("certified_degree").get<int>());
  p.validate_orientation();
  return p;
}

inline json cocycle_to_json(const Cocycle& c) {
  json values = json::object();
  for (const auto& [code, v] : c.values()) {
    GenSym g;
    for (GenSym cand : c.domain().alphabet().generators(true))
      if (cand.code() == code) g = cand;
    values[g.token()] = poly_to_json(v);
  }
  return json{{"module", c.ambient().name()},
              {"domain", c.domain().name()},
              {"values", values}};
}

/// Values are read over the domain generators; the module is fixed by the
/// caller (the CLI resolves it from the presentation name).
inline Cocycle cocycle_from_json(const json& j, PresPtr domain, PresPtr ambient) {
  std::map<std::uint32_t, NCPoly> values;
  for (const auto& [tok, poly] : j.at("values").items()) {
    GenSym g = symbol_from_token(tok);
    values.emplace(g.code(), poly_from_json(poly, ambient->alphabet()));
  }
  return cocycle_from_values(std::move(domain), std::move(ambient), std::move(values));
}

inline json report_to_json(const LemmaReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json e{{"description", c.description}, {"pass", c.pass}};
    if (!c.pass) e["counterexample"] = c.counterexample;
    checks.push_back(std::move(e));
  }
  json params = json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  return json{{"lemma_id", rep.lemma_id}, {"parameters", params},
              {"checks", checks},         {"caveats", rep.caveats},
              {"inconclusive", rep.inconclusive}, {"pass", rep.pass()}};
}

}  // namespace qhopf
