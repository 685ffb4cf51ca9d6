#include <catch2/catch_amalgamated.hpp>

#include "qhopf/hopf.hpp"

using namespace qhopf;

namespace {

PresPtr completed(Preset which, int n, int degree) {
  return std::make_shared<const Presentation>(
      complete(make_presentation(which, n), degree));
}

PresPtr completed_h(int n, int degree) {
  return std::make_shared<const Presentation>(make_hn(n, degree).combined);
}

}  // namespace

TEST_CASE("counit evaluates at the identity") {
  PresPtr u2 = completed(Preset::u_plus, 2, 2);
  HopfStructure H = make_hopf(u2);
  Alphabet a = u2->alphabet();
  CHECK(counit(parse_expr("u[1,2]", a), H) == Scalar(0));
  CHECK(counit(NCPoly::one(a), H) == Scalar(1));

  PresPtr o2 = completed(Preset::o_plus, 2, 2);
  HopfStructure Ho = make_hopf(o2);
  NCPoly p = parse_expr("v[1,1]*v[2,2] + 3*v[1,2]*v[2,1]", o2->alphabet());
  CHECK(counit(p, Ho) == Scalar(1));
}

TEST_CASE("counit is multiplicative on normal forms") {
  PresPtr u2 = completed(Preset::u_plus, 2, 6);
  HopfStructure H = make_hopf(u2);
  Rng rng(19);
  Reducer reduce(*u2);
  for (int k = 0; k < 40; ++k) {
    NCPoly p = rng.poly(u2->alphabet(), 3), q = rng.poly(u2->alphabet(), 3);
    CHECK(counit(reduce.nf(p * q), H) == counit(p, H) * counit(q, H));
  }
}

TEST_CASE("comultiplication of generators") {
  PresPtr u2 = completed(Preset::u_plus, 2, 2);
  HopfStructure H = make_hopf(u2);
  Alphabet a = u2->alphabet();

  TensorPoly d = comultiply(parse_expr("u[1,1]", a), H);
  TensorPoly expect(a);
  expect.add_term(Word{GenSym::u(1, 1)}, Word{GenSym::u(1, 1)}, Scalar(1));
  expect.add_term(Word{GenSym::u(1, 2)}, Word{GenSym::u(2, 1)}, Scalar(1));
  CHECK(d == expect);

  CHECK(comultiply(NCPoly::one(a), H) == TensorPoly::one(a));
}

TEST_CASE("comultiplication on the free product H_2") {
  PresPtr h2 = completed_h(2, 4);
  HopfStructure H = make_hopf(h2);
  Alphabet a = h2->alphabet();
  // D(z v_11) = sum_k z v_1k (x) z v_k1
  TensorPoly d = comultiply(parse_expr("z*v[1,1]", a), H);
  TensorPoly expect(a);
  expect.add_term(Word{GenSym::z(false), GenSym::v(1, 1)},
                  Word{GenSym::z(false), GenSym::v(1, 1)}, Scalar(1));
  expect.add_term(Word{GenSym::z(false), GenSym::v(1, 2)},
                  Word{GenSym::z(false), GenSym::v(2, 1)}, Scalar(1));
  CHECK(d == expect);

  // counit law on z v_11 directly
  CHECK(apply_counit_left(d, H) == parse_expr("z*v[1,1]", a));
  CHECK(apply_counit_right(d, H) == parse_expr("z*v[1,1]", a));
}

TEST_CASE("comultiplication is multiplicative") {
  PresPtr h2 = completed_h(2, 6);
  HopfStructure H = make_hopf(h2);
  Rng rng(23);
  for (int k = 0; k < 15; ++k) {
    NCPoly p = rng.poly(h2->alphabet(), 2), q = rng.poly(h2->alphabet(), 2);
    TensorPoly lhs = comultiply(normal_form(p * q, *h2), H);
    TensorPoly rhs = tensor_normal_form(
        tensor_mul(comultiply(p, H), comultiply(q, H)), *h2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("hopf axioms hold on every shipped presentation") {
  for (PresPtr pres :
       {completed(Preset::u_plus, 2, 4), completed(Preset::o_plus, 2, 4),
        completed(Preset::s1, 0, 4), completed(Preset::su2, 0, 4),
        completed_h(2, 4)}) {
    HopfStructure H = make_hopf(pres);
    LemmaReport wd = hopf_well_defined(H);
    INFO(pres->name());
    CHECK(wd.pass());
    LemmaReport ax = check_hopf_axioms(H, 2, 25, 1);
    CHECK(ax.pass());
  }
}

TEST_CASE("hopf tables respect the involution") {
  for (PresPtr pres : {completed(Preset::u_plus, 2, 2),
                       completed(Preset::su2, 0, 2), completed_h(2, 2)}) {
    HopfStructure H = make_hopf(pres);
    for (GenSym g : pres->alphabet().generators(true)) {
      CHECK(H.counit_of(g.adjoint()) == H.counit_of(g).conj());
      CHECK(H.comult_of(g.adjoint()) == H.comult_of(g).adjoint());
    }
  }
}

TEST_CASE("unit element trivially satisfies both axioms") {
  PresPtr u2 = completed(Preset::u_plus, 2, 2);
  HopfStructure H = make_hopf(u2);
  TensorPoly d = comultiply(NCPoly::one(u2->alphabet()), H);
  CHECK(apply_counit_left(d, H) == NCPoly::one(u2->alphabet()));
  CHECK(apply_counit_right(d, H) == NCPoly::one(u2->alphabet()));
}

TEST_CASE("axiom check refuses uncertified presentations") {
  PresPtr u2 = completed(Preset::u_plus, 2, 2);
  HopfStructure H = make_hopf(u2);
  CHECK_THROWS_AS(check_hopf_axioms(H, 3, 5, 0), DegreeError);
}

TEST_CASE("negative control: a corrupted counit table fails the laws") {
  PresPtr u2 = completed(Preset::u_plus, 2, 6);
  HopfStructure H = make_hopf(u2);
  H.counit_table[GenSym::u(1, 2, false).code()] = Scalar(1);  // eps(u12) := 1
  LemmaReport rep = check_hopf_axioms(H, 1, 0, 0);
  CHECK(!rep.pass());
}
