#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "qhopf/io.hpp"
#include "qhopf/presentation.hpp"
#include "qhopf/random.hpp"
#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

using PresPtr = std::shared_ptr<const Presentation>;

/// The counit on generators: u_ij, v_ij -> delta_ij, z -> 1, alpha -> 1,
/// gamma -> 0, with eps(g*) = conj eps(g).
inline Scalar counit_symbol(GenSym g) {
  switch (g.family()) {
    case Family::u:
    case Family::v:
      return Scalar(g.i() == g.j() ? 1 : 0);
    case Family::z:
    case Family::alpha:
      return Scalar(1);
    case Family::gamma:
      return Scalar(0);
  }
  return Scalar(0);
}

inline Scalar counit_word(const Word& w) {
  Scalar out(1);
  for (GenSym g : w.symbols()) {
    out *= counit_symbol(g);
    if (out.is_zero()) break;
  }
  return out;
}

/// The unique unital algebra homomorphism Pol -> C extending the generator
/// table; eps(pq) = eps(p) eps(q).
inline Scalar counit(const NCPoly& p) {
  Scalar out(0);
  for (const auto& [w, c] : p.terms()) out += c * counit_word(w);
  return out;
}

/// Counit and comultiplication tables on a presented algebra.  The tables
/// respect the involution and annihilate the defining relations; both are
/// checked by hopf_well_defined below.
struct HopfStructure {
  PresPtr presentation;
  std::map<std::uint32_t, Scalar> counit_table;
  std::map<std::uint32_t, TensorPoly> comult_table;

  const TensorPoly& comult_of(GenSym g) const {
    auto it = comult_table.find(g.code());
    if (it == comult_table.end())
      throw ParameterError("no comultiplication entry for " + g.token());
    return it->second;
  }
  Scalar counit_of(GenSym g) const {
    auto it = counit_table.find(g.code());
    if (it == counit_table.end())
      throw ParameterError("no counit entry for " + g.token());
    return it->second;
  }
};

/// Standard Hopf tables: matrix comultiplication for u and v, group-like z,
/// and the SU_q(2) fundamental corepresentation at q = -1 for {alpha, gamma}.
inline HopfStructure make_hopf(PresPtr pres) {
  HopfStructure H;
  H.presentation = pres;
  Alphabet a = pres->alphabet();
  int n = a.n();
  auto mono = [&](GenSym g) { return Word::single(g); };

  for (GenSym g : a.generators(true)) {
    H.counit_table[g.code()] = counit_symbol(g);
    TensorPoly d(a);
    switch (g.family()) {
      case Family::u:
      case Family::v:
        for (int k = 1; k <= n; ++k)
          d.add_term(mono(GenSym::make(g.family(), g.i(), k, g.star())),
                     mono(GenSym::make(g.family(), k, g.j(), g.star())),
                     Scalar(1));
        break;
      case Family::z:
        d.add_term(mono(g), mono(g), Scalar(1));
        break;
      case Family::alpha:
        if (!g.star()) {  // D(alpha) = alpha(x)alpha + gamma*(x)gamma
          d.add_term(mono(GenSym::alpha(false)), mono(GenSym::alpha(false)), Scalar(1));
          d.add_term(mono(GenSym::gamma(true)), mono(GenSym::gamma(false)), Scalar(1));
        } else {
          d.add_term(mono(GenSym::alpha(true)), mono(GenSym::alpha(true)), Scalar(1));
          d.add_term(mono(GenSym::gamma(false)), mono(GenSym::gamma(true)), Scalar(1));
        }
        break;
      case Family::gamma:
        if (!g.star()) {  // D(gamma) = gamma(x)alpha + alpha*(x)gamma
          d.add_term(mono(GenSym::gamma(false)), mono(GenSym::alpha(false)), Scalar(1));
          d.add_term(mono(GenSym::alpha(true)), mono(GenSym::gamma(false)), Scalar(1));
        } else {
          d.add_term(mono(GenSym::gamma(true)), mono(GenSym::alpha(true)), Scalar(1));
          d.add_term(mono(GenSym::alpha(false)), mono(GenSym::gamma(true)), Scalar(1));
        }
        break;
    }
    H.comult_table.emplace(g.code(), std::move(d));
  }
  return H;
}

/// Normal-form both legs of every term.
inline TensorPoly tensor_normal_form(const TensorPoly& t, const Presentation& p) {
  Reducer reduce(p);
  TensorPoly out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    NCPoly l = reduce.word_nf(key.first);
    NCPoly r = reduce.word_nf(key.second);
    TensorPoly lr = TensorPoly::tensor(l, r);
    lr *= c;
    out += lr;
  }
  return out;
}

inline Scalar counit(const NCPoly& p, const HopfStructure& H) {
  Scalar out(0);
  for (const auto& [w, c] : p.terms()) {
    Scalar prod(1);
    for (GenSym g : w.symbols()) {
      prod *= H.counit_of(g);
      if (prod.is_zero()) break;
    }
    out += c * prod;
  }
  return out;
}

/// The unique unital homomorphism into the tensor square extending the
/// generator table; both legs are kept normal-formed.
inline TensorPoly comultiply(const NCPoly& p, const HopfStructure& H) {
  const Presentation& pres = *H.presentation;
  if (p.alphabet() != pres.alphabet())
    throw AlphabetError("comultiply: alphabet mismatch");
  TensorPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    TensorPoly acc = TensorPoly::one(p.alphabet());
    for (GenSym g : w.symbols())
      acc = tensor_normal_form(tensor_mul(acc, H.comult_of(g)), pres);
    acc *= c;
    out += acc;
  }
  return out;
}

/// (eps (x) id) applied to a tensor.
inline NCPoly apply_counit_left(const TensorPoly& t, const HopfStructure& H) {
  NCPoly out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    Scalar e(1);
    for (GenSym g : key.first.symbols()) {
      e *= H.counit_of(g);
      if (e.is_zero()) break;
    }
    out.add_term(key.second, c * e);
  }
  return out;
}

/// (id (x) eps) applied to a tensor.
inline NCPoly apply_counit_right(const TensorPoly& t, const HopfStructure& H) {
  NCPoly out(t.alphabet());
  for (const auto& [key, c] : t.terms()) {
    Scalar e(1);
    for (GenSym g : key.second.symbols()) {
      e *= H.counit_of(g);
      if (e.is_zero()) break;
    }
    out.add_term(key.first, c * e);
  }
  return out;
}

namespace detail {

using Tensor3 = std::map<std::tuple<Word, Word, Word>, Scalar>;

inline void t3_add(Tensor3& t, const Word& a, const Word& b, const Word& c,
                   const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_tuple(a, b, c);
  auto [it, fresh] = t.emplace(std::move(key), s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline Tensor3 comult_left_leg(const TensorPoly& t, const HopfStructure& H) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    TensorPoly d = comultiply(NCPoly::monomial(t.alphabet(), key.first), H);
    for (const auto& [dk, dc] : d.terms())
      t3_add(out, dk.first, dk.second, key.second, c * dc);
  }
  return out;
}

inline Tensor3 comult_right_leg(const TensorPoly& t, const HopfStructure& H) {
  Tensor3 out;
  for (const auto& [key, c] : t.terms()) {
    TensorPoly d = comultiply(NCPoly::monomial(t.alphabet(), key.second), H);
    for (const auto& [dk, dc] : d.terms())
      t3_add(out, key.first, dk.first, dk.second, c * dc);
  }
  return out;
}

}  // namespace detail

/// Counit law and coassociativity on all generators plus seeded random
/// elements of degree <= degree_bound.  Needs certification to twice the
/// bound because coassociativity triples words.
inline LemmaReport check_hopf_axioms(const HopfStructure& H, int degree_bound,
                                     int samples, std::uint64_t seed) {
  const Presentation& pres = *H.presentation;
  if (pres.certified_degree() < 2 * degree_bound)
    throw DegreeError("hopf axiom check needs certification to twice the bound");

  LemmaReport rep;
  rep.lemma_id = "hopf-axioms:" + pres.name();
  rep.parameters["degree_bound"] = std::to_string(degree_bound);
  rep.parameters["samples"] = std::to_string(samples);
  rep.parameters["seed"] = std::to_string(seed);

  std::vector<NCPoly> elements;
  for (GenSym g : pres.alphabet().generators(true))
    elements.push_back(NCPoly::generator(pres.alphabet(), g));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    elements.push_back(rng.poly(pres.alphabet(), degree_bound));

  int counit_bad = 0, coassoc_bad = 0;
  std::string counit_ex, coassoc_ex;
  for (const NCPoly& p : elements) {
    NCPoly expect = normal_form(p, pres);
    TensorPoly d = comultiply(p, H);
    if (apply_counit_left(d, H) != expect || apply_counit_right(d, H) != expect) {
      ++counit_bad;
      if (counit_ex.empty()) counit_ex = to_string(p);
    }
    if (detail::comult_left_leg(d, H) != detail::comult_right_leg(d, H)) {
      ++coassoc_bad;
      if (coassoc_ex.empty()) coassoc_ex = to_string(p);
    }
  }
  rep.check("(eps(x)id)D = id = (id(x)eps)D on generators and samples",
            counit_bad == 0, counit_ex);
  rep.check("(D(x)id)D = (id(x)D)D on generators and samples", coassoc_bad == 0,
            coassoc_ex);
  return rep;
}

/// Well-definedness on the quotient: the counit kills every defining
/// relation and the comultiplication maps it into the relation ideal.
inline LemmaReport hopf_well_defined(const HopfStructure& H) {
  const Presentation& pres = *H.presentation;
  LemmaReport rep;
  rep.lemma_id = "hopf-well-defined:" + pres.name();
  for (const NCPoly& r : pres.starred_relations()) {
    bool eps_ok = counit(r, H).is_zero();
    TensorPoly d = comultiply(r, H);
    bool com_ok = tensor_normal_form(d, pres).is_zero();
    rep.check("eps and Delta annihilate relation " + to_string(r),
              eps_ok && com_ok, to_string(r));
  }
  return rep;
}

}  // namespace qhopf
