#include <catch2/catch_amalgamated.hpp>

#include "qhopf/io.hpp"
#include "qhopf/presentation.hpp"
#include "qhopf/random.hpp"

using namespace qhopf;

namespace {

NCPoly col_sum(Alphabet a, int n, int i, int j) {
  NCPoly s(a);
  for (int k = 1; k <= n; ++k)
    s += NCPoly::generator(a, GenSym::v(k, i)) * NCPoly::generator(a, GenSym::v(k, j));
  return s;
}

}  // namespace

TEST_CASE("O_n+ presentation carries the orthogonality relations") {
  Presentation o2 = make_presentation(Preset::o_plus, 2);
  CHECK(o2.relations().size() == 6);  // one shown + 5 more representatives
  Alphabet a = o2.alphabet();
  NCPoly shown = col_sum(a, 2, 1, 1) - NCPoly::one(a);
  bool found = false;
  for (const NCPoly& r : o2.relations()) found = found || r == shown;
  CHECK(found);
  CHECK_THROWS_AS(make_presentation(Preset::o_plus, 1), ParameterError);
  CHECK_THROWS_AS(make_presentation(Preset::u_plus, 0), ParameterError);
}

TEST_CASE("S^1 presentation is the unitary circle") {
  Presentation s1 = make_presentation(Preset::s1);
  REQUIRE(s1.relations().size() == 2);
  Alphabet a = s1.alphabet();
  NCPoly z = NCPoly::generator(a, GenSym::z(false));
  NCPoly zs = NCPoly::generator(a, GenSym::z(true));
  CHECK(s1.relations()[0] == z * zs - NCPoly::one(a));
  CHECK(s1.relations()[1] == zs * z - NCPoly::one(a));
  // already confluent: completion keeps exactly the two rules
  Presentation c = complete(s1, 4);
  REQUIRE(c.rules().size() == 2);
  CHECK(c.rules()[0].lhs == Word{GenSym::z(false), GenSym::z(true)});
  CHECK(c.rules()[1].lhs == Word{GenSym::z(true), GenSym::z(false)});
  CHECK(c.certified_degree() == 4);
}

TEST_CASE("SU_{-1}(2) presentation contains the anticommutation relation") {
  Presentation su2 = make_presentation(Preset::su2);
  Alphabet a = su2.alphabet();
  NCPoly ag = parse_expr("a*g + g*a", a);  // alpha gamma + gamma alpha
  bool found = false;
  for (const NCPoly& r : su2.relations()) found = found || r == ag;
  CHECK(found);
}

TEST_CASE("normal forms match the defining relations") {
  Presentation o2 = complete(make_presentation(Preset::o_plus, 2), 4);
  Alphabet a = o2.alphabet();
  CHECK(normal_form(col_sum(a, 2, 1, 1), o2) == NCPoly::one(a));
  CHECK(normal_form(col_sum(a, 2, 1, 2), o2).is_zero());

  Presentation su2 = complete(make_presentation(Preset::su2), 6);
  Alphabet s = su2.alphabet();
  CHECK(normal_form(parse_expr("g*a", s), su2) == parse_expr("-1*a*g", s));
  CHECK(normal_form(parse_expr("a*a'", s), su2) == parse_expr("1 - g*g'", s));
}

TEST_CASE("completion certifies local confluence and is idempotent") {
  Presentation su2 = complete(make_presentation(Preset::su2), 6);
  ConfluenceReport rep = check_local_confluence(su2, 6);
  CHECK(rep.unresolved.empty());
  CHECK(rep.overlaps_checked > 0);
  Presentation again = complete(su2, 6);
  CHECK(again.rules().size() == su2.rules().size());
  CHECK(again.certified_degree() == 6);

  Presentation o2 = complete(make_presentation(Preset::o_plus, 2), 4);
  CHECK(check_local_confluence(o2, 4).unresolved.empty());
}

TEST_CASE("all degree-4 consequences of the O_2+ relations reduce to zero") {
  // independent oracle for complete(): x * r * y must normal-form to 0 for
  // every relation r and all context words with |x| + deg r + |y| <= 4
  Presentation o2 = complete(make_presentation(Preset::o_plus, 2), 4);
  Alphabet a = o2.alphabet();
  std::vector<Word> contexts{Word()};
  for (GenSym g : a.generators(true)) contexts.push_back(Word{g});
  for (GenSym g : a.generators(true))
    for (GenSym h : a.generators(true)) contexts.push_back(Word{g, h});
  Reducer reduce(o2);
  for (const NCPoly& r : o2.starred_relations())
    for (const Word& x : contexts)
      for (const Word& y : contexts) {
        if (x.size() + 2 + y.size() > 4) continue;
        NCPoly prod = NCPoly::monomial(a, x) * r * NCPoly::monomial(a, y);
        CHECK(reduce.nf(prod).is_zero());
      }
}

TEST_CASE("relation soundness for every shipped presentation") {
  std::vector<Presentation> shipped;
  shipped.push_back(complete(make_presentation(Preset::o_plus, 2), 4));
  shipped.push_back(complete(make_presentation(Preset::u_plus, 2), 4));
  shipped.push_back(complete(make_presentation(Preset::s1), 4));
  shipped.push_back(complete(make_presentation(Preset::su2), 4));
  shipped.push_back(make_hn(2, 4).combined);
  for (const Presentation& p : shipped)
    for (const NCPoly& r : p.starred_relations())
      CHECK(normal_form(r, p).is_zero());
}

TEST_CASE("normal form is idempotent, linear and star-compatible") {
  Presentation u2 = complete(make_presentation(Preset::u_plus, 2), 6);
  Rng rng(99);
  Reducer reduce(u2);
  for (int k = 0; k < 30; ++k) {
    NCPoly p = rng.poly(u2.alphabet(), 3), q = rng.poly(u2.alphabet(), 3);
    NCPoly np = reduce.nf(p), nq = reduce.nf(q);
    CHECK(reduce.nf(np) == np);
    CHECK(reduce.nf(p * q) == reduce.nf(np * nq));
    CHECK(reduce.nf(p + q) == reduce.nf(np + nq));
    CHECK(reduce.nf(p.adjoint()) == reduce.nf(np.adjoint()));
  }
}

TEST_CASE("completed rule systems are inter-reduced") {
  for (Presentation p :
       {complete(make_presentation(Preset::o_plus, 2), 4),
        complete(make_presentation(Preset::u_plus, 2), 4),
        complete(make_presentation(Preset::su2), 6)}) {
    Reducer reduce(p);
    for (std::size_t i = 0; i < p.rules().size(); ++i) {
      const RewriteRule& r = p.rules()[i];
      CHECK(reduce.nf(r.rhs) == r.rhs);  // right-hand sides fully reduced
      for (std::size_t j = 0; j < p.rules().size(); ++j) {
        if (i == j) continue;
        const Word& other = p.rules()[j].lhs;
        for (std::size_t pos = 0; pos + other.size() <= r.lhs.size(); ++pos)
          CHECK(!r.lhs.matches_at(other, pos));
      }
    }
    p.validate_orientation();  // every rhs monomial strictly below the lhs
  }
}

TEST_CASE("normal form flags degrees beyond the certified bound") {
  Presentation s1 = complete(make_presentation(Preset::s1), 3);
  NCPoly big = parse_expr("z^5", s1.alphabet());
  NFResult r = normal_form_checked(big, s1);
  CHECK(!r.certified);
  CHECK(r.value == big);  // reduction still performed (here already normal)
  CHECK(normal_form_checked(parse_expr("z*z'", s1.alphabet()), s1).certified);
}

TEST_CASE("free product rewrites blocks in factor normal form") {
  FreeProductPresentation fp = make_hn(2, 4);
  Alphabet a = fp.combined.alphabet();

  NCPoly w = parse_expr("z*v[1,1]*z", a);
  CHECK(free_product_normal_form(w, fp) == w);  // already alternating reduced

  NCPoly mid = parse_expr("z*(v[1,1]*v[1,1] + v[2,1]*v[2,1])*z", a);
  CHECK(free_product_normal_form(mid, fp) == parse_expr("z*z", a));

  // u_12 u_12* under u_ij = z v_ij lands in the class of z v12 v12 z*
  NCPoly u12u12s = parse_expr("z*v[1,2]*(z*v[1,2])'", a);
  CHECK(free_product_normal_form(u12u12s, fp) ==
        free_product_normal_form(parse_expr("z*v[1,2]*v[1,2]*z'", a), fp));
  // and the combined engine computes the same thing
  CHECK(free_product_normal_form(u12u12s, fp) ==
        normal_form(u12u12s, fp.combined));
}

TEST_CASE("normal words of the free product alternate reduced blocks") {
  FreeProductPresentation fp = make_hn(2, 4);
  for (const Word& w : basis_words(fp.combined, 4)) {
    // split into maximal blocks per factor and check each is irreducible
    std::size_t k = 0;
    while (k < w.size()) {
      std::size_t start = k;
      bool is_z = w[k].family() == Family::z;
      while (k < w.size() && (w[k].family() == Family::z) == is_z) ++k;
      Word block = w.subword(start, k - start);
      CHECK(fp.combined.is_irreducible(block));
      if (is_z)
        CHECK(fp.first.is_irreducible(block));
      else
        CHECK(fp.second.is_irreducible(block));
    }
  }
}

TEST_CASE("free products demand disjoint alphabets") {
  Presentation s1 = make_presentation(Preset::s1);
  CHECK_THROWS_AS(make_free_product(s1, make_presentation(Preset::s1)),
                  AlphabetError);
}

TEST_CASE("degenerate relations are rejected at orientation time") {
  Alphabet a = Alphabet::s1();
  CHECK_THROWS_AS(
      make_presentation_from_relations("bad", a, 0, {NCPoly::one(a)}),
      OrientationError);
}

TEST_CASE("basis words enumerate the irreducible monomials") {
  Presentation s1 = complete(make_presentation(Preset::s1), 4);
  std::vector<Word> basis = basis_words(s1, 3);
  // 1, z, z*, zz, z*z*, zzz, z*z*z*
  CHECK(basis.size() == 7);
  for (const Word& w : basis) CHECK(s1.is_irreducible(w));
}
