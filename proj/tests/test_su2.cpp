#include <catch2/catch_amalgamated.hpp>

#include "qhopf/presentation.hpp"
#include "qhopf/su2.hpp"

using namespace qhopf;

namespace {

Presentation completed_su2(int degree = 6) {
  return complete(make_presentation(Preset::su2), degree);
}

Word alpha_power_word(long i) {
  Word w;
  for (long t = 0; t < std::labs(i); ++t) w.push_back(GenSym::alpha(i < 0));
  return w;
}

std::vector<Word> all_words_up_to(int len) {
  std::vector<GenSym> letters{GenSym::alpha(false), GenSym::alpha(true),
                              GenSym::gamma(false), GenSym::gamma(true)};
  std::vector<Word> words{Word()};
  std::size_t start = 0;
  for (int l = 1; l <= len; ++l) {
    std::size_t end = words.size();
    for (std::size_t k = start; k < end; ++k)
      for (GenSym g : letters) {
        Word w = words[k];
        w.push_back(g);
        words.push_back(w);
      }
    start = end;
  }
  return words;
}

}  // namespace

TEST_CASE("basis expansion of the appendix examples") {
  Alphabet a = Alphabet::su2();
  SU2Normal aas = su2_normal_form(parse_expr("a*a'", a));
  SU2Normal expect_aas;
  expect_aas.add_term(SU2Key{0, 0, 0}, Scalar(1));
  expect_aas.add_term(SU2Key{0, 1, 1}, Scalar(-1));
  CHECK(aas == expect_aas);  // alpha alpha* = 1 - gamma gamma*

  SU2Normal ga = su2_normal_form(parse_expr("g*a", a));
  SU2Normal expect_ga;
  expect_ga.add_term(SU2Key{1, 1, 0}, Scalar(-1));
  CHECK(ga == expect_ga);  // gamma alpha = -alpha gamma

  SU2Normal gsg = su2_normal_form(parse_expr("g'*g", a));
  SU2Normal expect_gsg;
  expect_gsg.add_term(SU2Key{0, 1, 1}, Scalar(1));
  CHECK(gsg == expect_gsg);  // gamma* gamma = gamma gamma*
}

TEST_CASE("degrees read off the basis expansion") {
  Alphabet a = Alphabet::su2();
  SU2Normal x = su2_normal_form(parse_expr("a^2*g + a'*g'", a));
  CHECK(x.deg_alpha() == 2);
  CHECK(x.deg_gamma() == 1);
  SU2Normal one = SU2Normal::one();
  CHECK(one.deg_alpha() == 0);
  CHECK(one.deg_gamma() == 0);
  CHECK_THROWS_AS(SU2Normal::zero().deg_alpha(), DegreeError);
  CHECK_THROWS_AS(SU2Normal::zero().deg_gamma(), DegreeError);

  // multiplying a monomial by the central gamma gamma* raises deg_gamma by 2
  Rng rng(17);
  SU2Normal t = SU2Normal::monomial(SU2Key{0, 1, 1}, Scalar(1));
  for (int k = 0; k < 20; ++k) {
    SU2Normal m = SU2Normal::monomial(
        SU2Key{rng.pick(-2, 2), static_cast<unsigned>(rng.pick(0, 2)),
               static_cast<unsigned>(rng.pick(0, 2))},
        rng.scalar());
    CHECK((t * m).deg_gamma() == m.deg_gamma() + 2);
  }
}

TEST_CASE("merging alpha powers") {
  CentralPoly p = claim1_poly(1, -1);  // 1 - t
  REQUIRE(p.size() == 2);
  CHECK(p[0] == Scalar(1));
  CHECK(p[1] == Scalar(-1));
  CHECK(claim1_poly(2, 3) == CentralPoly{Scalar(1)});
  CHECK(claim1_poly(1, -3) == claim1_poly(1, -1));  // (1-t)^1 in the i <= -j case
  CHECK(claim1_poly(0, -4) == CentralPoly{Scalar(1)});
  CHECK(claim1_poly(-2, 2).size() == 3);  // (1-t)^2

  // identity: alpha^i alpha^j = alpha^{i+j} p_{i,j}(gamma gamma*)
  Presentation su2 = completed_su2();
  for (long i = -4; i <= 4; ++i)
    for (long j = -4; j <= 4; ++j) {
      NCPoly lhs = NCPoly::monomial(su2.alphabet(), alpha_power_word(i)) *
                   NCPoly::monomial(su2.alphabet(), alpha_power_word(j));
      SU2Normal got = su2_normal_form(lhs);
      SU2Normal expect;
      CentralPoly pij = claim1_poly(i, j);
      for (std::size_t l = 0; l < pij.size(); ++l)
        expect.add_term(SU2Key{i + j, static_cast<unsigned>(l),
                               static_cast<unsigned>(l)},
                        pij[l]);
      CHECK(got == expect);
    }
}

TEST_CASE("the oracle agrees with the rewriting engine") {
  Presentation su2 = completed_su2();
  Reducer reduce(su2);
  // exhaustive on all words of length <= 3, random polynomials of degree <= 6
  for (const Word& w : all_words_up_to(3)) {
    NCPoly p = NCPoly::monomial(su2.alphabet(), w);
    CHECK(su2_normal_form(p).to_poly() == reduce.nf(p));
  }
  Rng rng(2025);
  for (int k = 0; k < 100; ++k) {
    NCPoly p = rng.poly(su2.alphabet(), 6);
    CHECK(su2_normal_form(p).to_poly() == reduce.nf(p));
  }
}

TEST_CASE("oracle is linear and fixes basis monomials") {
  Rng rng(31);
  for (int k = 0; k < 30; ++k) {
    SU2Normal x = random_su2(rng, 3, 3);
    CHECK(su2_normal_form(x.to_poly()) == x);
    SU2Normal y = random_su2(rng, 3, 3);
    NCPoly sum = x.to_poly() + y.to_poly();
    CHECK(su2_normal_form(sum) == x + y);
  }
}

TEST_CASE("involution is involutive and anti-multiplicative") {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    SU2Normal x = random_su2(rng, 3, 3), y = random_su2(rng, 3, 3);
    CHECK(x.adjoint().adjoint() == x);
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    CHECK(su2_normal_form(x.to_poly().adjoint()) == x.adjoint());
  }
}

TEST_CASE("no zero divisors show up in products") {
  Alphabet a = Alphabet::su2();
  SU2Normal prod = su2_normal_form(parse_expr("(a + g)*(a - g)", a));
  CHECK(!prod.is_zero());
  CHECK(prod.terms().count(SU2Key{2, 0, 0}) == 1);
  CHECK(prod.terms().at(SU2Key{2, 0, 0}) == Scalar(1));

  Rng rng(8);
  for (int k = 0; k < 30; ++k) {
    SU2Normal x = random_su2(rng, 3, 3);
    CHECK(SU2Normal::one() * x == x);
  }

  LemmaReport rep = domain_test(200, 3, 3, 42);
  CHECK(rep.pass());
}

TEST_CASE("alpha alpha* is not a left zero-divisor") {
  Alphabet a = Alphabet::su2();
  NCPoly aas = parse_expr("a*a'", a);
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    SU2Normal x = random_su2(rng, 3, 3);
    CHECK(!su2_normal_form(aas * x.to_poly()).is_zero());
  }
}

TEST_CASE("alpha degree is additive on products of nonzero elements") {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    SU2Normal x = random_su2(rng, 3, 3), y = random_su2(rng, 3, 3);
    SU2Normal p = x * y;
    REQUIRE(!p.is_zero());
    CHECK(p.deg_alpha() == x.deg_alpha() + y.deg_alpha());
  }
}

TEST_CASE("negative controls: corrupted signs are caught") {
  // dropping the anticommutation sign in the presentation breaks agreement
  Alphabet a = Alphabet::su2();
  Presentation base = make_presentation(Preset::su2);
  std::vector<NCPoly> rels = base.relations();
  // replace alpha gamma + gamma alpha by alpha gamma - gamma alpha
  NCPoly good = parse_expr("a*g + g*a", a);
  NCPoly bad = parse_expr("a*g - g*a", a);
  for (NCPoly& r : rels)
    if (r == good) r = bad;
  Presentation corrupted =
      complete(make_presentation_from_relations("su2-nosign", a, 0, rels), 4);
  bool disagrees = false;
  Reducer reduce(corrupted);
  for (const Word& w : all_words_up_to(3)) {
    NCPoly p = NCPoly::monomial(a, w);
    if (su2_normal_form(p).to_poly() != reduce.nf(p)) {
      disagrees = true;
      break;
    }
  }
  CHECK(disagrees);

  // dropping the sign inside the oracle itself disagrees with the true oracle
  NCPoly ga = parse_expr("g*a", a);
  CHECK(su2_normal_form(ga, true) != su2_normal_form(ga));

  // corrupting the closed-form sign exponent fails the domain suite
  LemmaReport rep = domain_test(200, 3, 3, 42, true);
  CHECK(!rep.pass());
}
