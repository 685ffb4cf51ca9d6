#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "qhopf/serialize.hpp"
#include "qhopf/verify.hpp"

using namespace qhopf;

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schema document uses: type, required, properties, items, $ref into
// #/definitions.
class SchemaChecker {
 public:
  explicit SchemaChecker(json schema) : root_(std::move(schema)) {}

  bool validate(const json& value, const std::string& def) const {
    return check(value, root_.at("definitions").at(def));
  }

 private:
  bool check(const json& value, const json& schema) const {
    if (schema.contains("$ref")) {
      std::string ref = schema["$ref"].get<std::string>();
      const std::string prefix = "#/definitions/";
      REQUIRE(ref.rfind(prefix, 0) == 0);
      return check(value, root_.at("definitions").at(ref.substr(prefix.size())));
    }
    if (schema.contains("type")) {
      std::string t = schema["type"].get<std::string>();
      if (t == "object" && !value.is_object()) return false;
      if (t == "array" && !value.is_array()) return false;
      if (t == "string" && !value.is_string()) return false;
      if (t == "integer" && !value.is_number_integer()) return false;
      if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key) && !check(value.at(key), sub)) return false;
    if (schema.contains("items") && value.is_array())
      for (const auto& item : value)
        if (!check(item, schema["items"])) return false;
    return true;
  }

  json root_;
};

json load_schema() {
  std::ifstream in(std::string(QHOPF_SOURCE_DIR) + "/docs/schema.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  Alphabet h2 = Alphabet::h(2);
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    NCPoly p = rng.poly(h2, 4);
    CHECK(poly_from_json(poly_to_json(p), h2) == p);
  }
  CHECK(poly_from_json(poly_to_json(NCPoly::zero(h2)), h2).is_zero());
}

TEST_CASE("symbol tokens round trip") {
  for (Alphabet a : {Alphabet::h(3), Alphabet::su2(), Alphabet::u_plus(2)})
    for (GenSym g : a.generators(true))
      CHECK(symbol_from_token(g.token()) == g);
  CHECK_THROWS_AS(symbol_from_token("q[1,2]"), ParameterError);
  CHECK_THROWS_AS(symbol_from_token("u[1"), ParameterError);
}

TEST_CASE("certified rewrite systems dump and reload") {
  Presentation o2 = complete(make_presentation(Preset::o_plus, 2), 4);
  json j = presentation_to_json(o2);
  Presentation back = presentation_from_json(j);
  CHECK(back.name() == o2.name());
  CHECK(back.certified_degree() == 4);
  CHECK(back.rules().size() == o2.rules().size());
  CHECK(back.relations().size() == o2.relations().size());
  Rng rng(3);
  for (int k = 0; k < 25; ++k) {
    NCPoly p = rng.poly(o2.alphabet(), 4);
    CHECK(normal_form(p, back) == normal_form(p, o2));
  }
}

TEST_CASE("loading a mis-oriented rule is refused") {
  Presentation s1 = complete(make_presentation(Preset::s1), 4);
  json j = presentation_to_json(s1);
  // swap lhs and rhs of the first rule: z z* -> 1 becomes 1 -> z z*
  json rule = j["rules"][0];
  json rhs_word = rule["rhs"][0]["word"];
  j["rules"][0]["lhs"] = rhs_word;
  j["rules"][0]["rhs"] =
      json::array({json{{"word", rule["lhs"]}, {"re", "1"}, {"im", "0"}}});
  CHECK_THROWS_AS(presentation_from_json(j), OrientationError);
}

TEST_CASE("cocycle JSON round trip") {
  PresPtr s1 = std::make_shared<const Presentation>(
      complete(make_presentation(Preset::s1), 4));
  Alphabet a = s1->alphabet();
  Cocycle c = cocycle_from_values(
      s1, s1, {{GenSym::z(false).code(), parse_expr("z^2 - z", a)}});
  json j = cocycle_to_json(c);
  CHECK(j["module"] == "s1");
  Cocycle back = cocycle_from_json(j, s1, s1);
  CHECK(back.value_of(GenSym::z(false)) == c.value_of(GenSym::z(false)));
}

TEST_CASE("emitted JSON validates against the shipped schema") {
  SchemaChecker schema(load_schema());

  Rng rng(9);
  NCPoly p = rng.poly(Alphabet::h(2), 3);
  CHECK(schema.validate(poly_to_json(p), "poly"));

  Presentation o2 = complete(make_presentation(Preset::o_plus, 2), 4);
  CHECK(schema.validate(presentation_to_json(o2), "presentation"));

  PresPtr o2p = std::make_shared<const Presentation>(o2);
  std::map<std::uint32_t, NCPoly> zeros;
  for (GenSym g : o2.alphabet().generators(false))
    zeros.emplace(g.code(), NCPoly::zero(o2.alphabet()));
  CHECK(schema.validate(cocycle_to_json(cocycle_from_values(o2p, o2p, zeros)),
                        "cocycle"));

  Context ctx;
  LemmaReport rep = verify_alpha_automorphism(2, ctx);
  CHECK(schema.validate(report_to_json(rep), "report"));
  LemmaReport bad = verify_alpha_automorphism(2, ctx, Scalar(2));
  CHECK(schema.validate(report_to_json(bad), "report"));
}
