#include <catch2/catch_amalgamated.hpp>

#include "qhopf/serialize.hpp"
#include "qhopf/verify.hpp"

using namespace qhopf;

TEST_CASE("order-2 automorphism suite") {
  Context ctx;
  for (int n : {2, 3}) {
    LemmaReport rep = verify_alpha_automorphism(n, ctx);
    INFO(rep.summary());
    CHECK(rep.pass());
  }
  // negative control: v_ij -> 2 v_ij is not relation preserving
  LemmaReport bad = verify_alpha_automorphism(2, ctx, Scalar(2));
  CHECK(!bad.pass());
}

TEST_CASE("tensor-quotient class reduction suite") {
  Context ctx;
  LemmaReport rep = verify_c_plus_c(2, 4, ctx);
  INFO(rep.summary());
  CHECK(rep.pass());
  CHECK(rep.inconclusive == 0);
  CHECK(!rep.caveats.empty());

  LemmaReport bad = verify_c_plus_c(2, 4, ctx, {1, 2});
  CHECK(!bad.pass());
}

TEST_CASE("relate-cocycles suite") {
  Context ctx;
  Alphabet h2 = Alphabet::h(2);
  for (const char* xi : {"0", "1", "z", "z^2 - z"}) {
    LemmaReport rep = verify_relate_cocycles(2, parse_expr(xi, h2), ctx);
    INFO(std::string("xi = ") + xi + ": " + rep.summary());
    CHECK(rep.pass());
  }
  LemmaReport bad =
      verify_relate_cocycles(2, parse_expr("z", h2), ctx, true);
  CHECK(!bad.pass());
}

TEST_CASE("extension suite") {
  Context ctx;
  Alphabet h2 = Alphabet::h(2);
  for (const char* xi : {"0", "1", "z", "v[1,1]*z"}) {
    LemmaReport rep = verify_extension(2, parse_expr(xi, h2), ctx);
    INFO(std::string("xi = ") + xi + ": " + rep.summary());
    CHECK(rep.pass());
  }
  LemmaReport n3 = verify_extension(3, parse_expr("v[1,1]*z", Alphabet::h(3)), ctx);
  CHECK(n3.pass());
  LemmaReport bad = verify_extension(2, parse_expr("z", h2), ctx, true);
  CHECK(!bad.pass());
}

TEST_CASE("determination suite") {
  Context ctx;
  LemmaReport rep = verify_determination(2, 7, ctx, 3);
  INFO(rep.summary());
  CHECK(rep.pass());
  LemmaReport bad = verify_determination(2, 7, ctx, 1, true);
  CHECK(!bad.pass());
}

TEST_CASE("reports are deterministic given parameters and seed") {
  Context ctx1, ctx2;
  LemmaReport a = verify_determination(2, 5, ctx1, 2);
  LemmaReport b = verify_determination(2, 5, ctx2, 2);
  CHECK(report_to_json(a) == report_to_json(b));

  Alphabet h2 = Alphabet::h(2);
  LemmaReport c = verify_relate_cocycles(2, parse_expr("z", h2), ctx1);
  LemmaReport d = verify_relate_cocycles(2, parse_expr("z", h2), ctx2);
  CHECK(report_to_json(c) == report_to_json(d));
}

TEST_CASE("truncation caveats are carried in the reports") {
  Context ctx;
  Alphabet h2 = Alphabet::h(2);
  CHECK(!verify_relate_cocycles(2, parse_expr("z", h2), ctx).caveats.empty());
  CHECK(!verify_extension(2, parse_expr("z", h2), ctx).caveats.empty());
  CHECK(!verify_c_plus_c(2, 4, ctx).caveats.empty());
}
