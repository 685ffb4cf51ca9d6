#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qhopf/hopf.hpp"
#include "qhopf/linsolve.hpp"
#include "qhopf/presentation.hpp"

namespace qhopf {

/// Coefficient module of the cocycle calculus: the ambient polynomial
/// algebra itself, acting on the left by multiplication (normal-formed) and
/// on the right through the counit.  This is the desk-scale stand-in for the
/// affiliated ring M(H_n), which admits no finite representation.
struct ModuleSpec {
  PresPtr ambient;
};

/// A 1-cocycle c with c(ab) = a.c(b) + c(a) eps(b), tabulated on the
/// generators of its domain algebra.  The domain may embed into a larger
/// ambient algebra (the module): `images` maps domain generators to ambient
/// elements, empty entries meaning the identity inclusion.  Values on starred
/// generators are derived from the unitarity relations when absent.
class Cocycle {
 public:
  Cocycle(PresPtr domain, PresPtr ambient, std::map<std::uint32_t, NCPoly> images,
          std::map<std::uint32_t, NCPoly> values)
      : domain_(std::move(domain)),
        ambient_(std::move(ambient)),
        images_(std::move(images)),
        values_(std::move(values)),
        reduce_(std::make_shared<Reducer>(*ambient_)) {}

  const Presentation& domain() const { return *domain_; }
  const Presentation& ambient() const { return *ambient_; }
  PresPtr domain_ptr() const { return domain_; }
  PresPtr ambient_ptr() const { return ambient_; }
  const std::map<std::uint32_t, NCPoly>& values() const { return values_; }
  const std::map<std::uint32_t, NCPoly>& images() const { return images_; }

  /// Image of a domain generator in the ambient algebra.  Starred
  /// generators default to the adjoint of the unstarred image.
  NCPoly image_of(GenSym g) const {
    auto it = images_.find(g.code());
    if (it != images_.end()) return it->second;
    if (g.star()) {
      auto us = images_.find(g.adjoint().code());
      if (us != images_.end()) return us->second.adjoint();
    }
    if (!ambient_->alphabet().contains(g))
      throw AlphabetError("no image for generator " + g.token());
    return NCPoly::generator(ambient_->alphabet(), g);
  }

  /// Counit of the domain, computed through the embedding.
  Scalar eps_of(GenSym g) const { return counit(image_of(g)); }

  bool has_direct_value(GenSym g) const { return values_.count(g.code()) > 0; }

  /// c(g), deriving starred values where the tables allow:
  ///   c(u_ji*) = -sum_k u_ki* c(u_kj)   (from u*u = 1)
  ///   c(z*)    = -z* c(z)               (from z*z = 1)
  NCPoly value_of(GenSym g) const {
    auto it = values_.find(g.code());
    if (it != values_.end()) return it->second;
    if (!g.star())
      throw UnderdeterminedError("cocycle has no value on " + g.token());
    switch (g.family()) {
      case Family::z: {
        NCPoly cz = value_of(GenSym::z(false));
        return reduce_->nf(image_of(GenSym::z(true)) * cz) * Scalar(-1);
      }
      case Family::u: {
        // g = u_ji*; indices of g are (j, i) in the formula's naming.
        int jj = g.i(), ii = g.j();
        int n = domain_->alphabet().n();
        NCPoly acc(ambient_->alphabet());
        for (int k = 1; k <= n; ++k) {
          NCPoly term = image_of(GenSym::u(k, ii, true)) *
                        value_of(GenSym::u(k, jj, false));
          acc += term;
        }
        return reduce_->nf(acc) * Scalar(-1);
      }
      default:
        throw UnderdeterminedError("no derivable value on " + g.token());
    }
  }

  /// Leibniz evaluation on a word:
  ///   c(g_1...g_k) = sum_t phi(g_1..g_{t-1}) . c(g_t) . eps(g_{t+1}..g_k).
  NCPoly eval_word(const Word& w) const {
    NCPoly out(ambient_->alphabet());
    if (w.empty()) return out;  // c(1) = 0
    std::vector<Scalar> suffix_eps(w.size() + 1, Scalar(1));
    for (std::size_t t = w.size(); t > 0; --t)
      suffix_eps[t - 1] = eps_of(w[t - 1]) * suffix_eps[t];
    NCPoly prefix = NCPoly::one(ambient_->alphabet());
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (!suffix_eps[t + 1].is_zero()) {
        NCPoly term = prefix * value_of(w[t]);
        term *= suffix_eps[t + 1];
        out += term;
      }
      if (t + 1 < w.size()) prefix = reduce_->nf(prefix * image_of(w[t]));
    }
    return reduce_->nf(out);
  }

  /// Linear extension to polynomials over the domain alphabet.
  NCPoly eval(const NCPoly& p) const {
    if (p.alphabet() != domain_->alphabet())
      throw AlphabetError("cocycle evaluated outside its domain alphabet");
    NCPoly out(ambient_->alphabet());
    for (const auto& [w, c] : p.terms()) {
      NCPoly e = eval_word(w);
      e *= c;
      out += e;
    }
    return reduce_->nf(out);
  }

  NCPoly nf(const NCPoly& p) const { return reduce_->nf(p); }

  Cocycle with_values(std::map<std::uint32_t, NCPoly> values) const {
    return Cocycle(domain_, ambient_, images_, std::move(values));
  }

 private:
  PresPtr domain_;
  PresPtr ambient_;
  std::map<std::uint32_t, NCPoly> images_;
  std::map<std::uint32_t, NCPoly> values_;
  std::shared_ptr<Reducer> reduce_;
};

inline Cocycle make_cocycle(PresPtr domain, PresPtr ambient,
                            std::map<std::uint32_t, NCPoly> images,
                            std::map<std::uint32_t, NCPoly> values) {
  return Cocycle(std::move(domain), std::move(ambient), std::move(images),
                 std::move(values));
}

/// Cocycle on `domain` (default: the ambient algebra itself) with values
/// given on a generator table.  Table keys are generator symbols.
inline Cocycle cocycle_from_values(PresPtr domain, PresPtr ambient,
                                   std::map<std::uint32_t, NCPoly> values) {
  return Cocycle(std::move(domain), std::move(ambient), {}, std::move(values));
}

/// Fills the table with the derived values on all starred generators.
/// Idempotent.
inline Cocycle derive_adjoint_values(const Cocycle& c) {
  std::map<std::uint32_t, NCPoly> values = c.values();
  for (GenSym g : c.domain().alphabet().generators(true))
    if (g.star() && !values.count(g.code())) values.emplace(g.code(), c.value_of(g));
  return c.with_values(std::move(values));
}

/// Recovers the unstarred values from a starred table through the second
/// unitarity equation: c(u_ij) = -sum_k u_ik c(u_jk*).
inline Cocycle derive_unstarred_values(const Cocycle& c) {
  if (!c.domain().alphabet().has(Family::u))
    throw ParameterError("unstarred derivation needs a fundamental unitary u");
  std::map<std::uint32_t, NCPoly> values = c.values();
  int n = c.domain().alphabet().n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GenSym g = GenSym::u(i, j, false);
      NCPoly acc(c.ambient().alphabet());
      for (int k = 1; k <= n; ++k)
        acc += c.image_of(GenSym::u(i, k, false)) * c.value_of(GenSym::u(j, k, true));
      values.insert_or_assign(g.code(), c.nf(acc) * Scalar(-1));
    }
  return c.with_values(std::move(values));
}

/// Well-definedness on the quotient algebra: Leibniz evaluation must kill
/// every defining relation and its adjoint.  Violations are report data.
inline LemmaReport check_relations(const Cocycle& c) {
  LemmaReport rep;
  rep.lemma_id = "cocycle-relations:" + c.domain().name();
  for (const NCPoly& r : c.domain().starred_relations()) {
    NCPoly v = c.eval(r);
    rep.check("c vanishes on relation " + to_string(r), v.is_zero(),
              "c(r) = " + to_string(v));
  }
  return rep;
}

/// The inner cocycle a -> a.xi - eps(a) xi, tabulated on the generators of
/// `domain` (default: the whole ambient algebra).
inline Cocycle inner_cocycle(const NCPoly& xi, const ModuleSpec& m,
                             PresPtr domain = nullptr) {
  PresPtr dom = domain ? domain : m.ambient;
  if (xi.alphabet() != m.ambient->alphabet())
    throw AlphabetError("inner witness must live in the ambient algebra");
  Reducer reduce(*m.ambient);
  std::map<std::uint32_t, NCPoly> values;
  Cocycle shell(dom, m.ambient, {}, {});
  for (GenSym g : dom->alphabet().generators(true)) {
    NCPoly act = reduce.nf(shell.image_of(g) * xi);
    NCPoly off = reduce.nf(xi);
    off *= counit(shell.image_of(g));
    values.emplace(g.code(), act - off);
  }
  return Cocycle(dom, m.ambient, {}, std::move(values));
}

/// The unique cocycle on the free product restricting to c1 and c2: tables
/// merge on the union generating set and extend by Leibniz.
inline Cocycle free_product_cocycle(const Cocycle& c1, const Cocycle& c2,
                                    const FreeProductPresentation& fp,
                                    PresPtr combined = nullptr) {
  if (c1.ambient().alphabet() != c2.ambient().alphabet())
    throw AlphabetError("free product cocycles need a common module");
  PresPtr dom = combined ? combined
                         : std::make_shared<Presentation>(fp.combined);
  std::map<std::uint32_t, NCPoly> values;
  for (const auto& [k, v] : c1.values()) values.emplace(k, v);
  for (const auto& [k, v] : c2.values()) values.emplace(k, v);
  std::map<std::uint32_t, NCPoly> images;
  for (const auto& [k, v] : c1.images()) images.emplace(k, v);
  for (const auto& [k, v] : c2.images()) images.emplace(k, v);
  return Cocycle(dom, c1.ambient_ptr(), std::move(images), std::move(values));
}

/// Restriction of a cocycle to the subalgebra generated by `gens` (elements
/// of the ambient algebra).  Abstract words in the generators and their
/// adjoints evaluate through the embedding.  When a generator's adjoint
/// reduces to another listed generator the two share a letter; otherwise the
/// starred letter gets its own image.  With `require_star_closed_set` the
/// generating set itself must be closed under the involution modulo
/// relations, as for the A_n generators {v_ij v_kl}.
class RestrictedCocycle {
 public:
  RestrictedCocycle(const Cocycle& c, std::vector<NCPoly> gens,
                    bool require_star_closed_set = false)
      : ambient_(c.ambient_ptr()) {
    Reducer reduce(*ambient_);
    for (NCPoly& g : gens) images_.push_back(reduce.nf(g));
    for (const NCPoly& g : images_) {
      values_.push_back(c.eval(g));
      star_values_.push_back(c.eval(g.adjoint()));
      NCPoly adj = reduce.nf(g.adjoint());
      int partner = -1;
      for (std::size_t h = 0; h < images_.size(); ++h)
        if (images_[h] == adj) {
          partner = static_cast<int>(h);
          break;
        }
      star_partner_.push_back(partner);
    }
    if (require_star_closed_set)
      for (std::size_t k = 0; k < images_.size(); ++k)
        if (star_partner_[k] < 0)
          throw ClosureError("generator " + to_string(images_[k]) +
                             " has no adjoint partner in the generating set");
  }

  std::size_t size() const { return images_.size(); }
  const NCPoly& image(std::size_t k) const { return images_[k]; }
  const NCPoly& value(std::size_t k) const { return values_[k]; }
  int star_partner(std::size_t k) const { return star_partner_[k]; }

  /// Leibniz evaluation on an abstract word: letters are (generator index,
  /// star flag).
  NCPoly eval(const std::vector<std::pair<int, bool>>& word) const {
    Reducer reduce(*ambient_);
    NCPoly out(ambient_->alphabet());
    std::vector<Scalar> suffix(word.size() + 1, Scalar(1));
    for (std::size_t t = word.size(); t > 0; --t)
      suffix[t - 1] = letter_eps(word[t - 1]) * suffix[t];
    NCPoly prefix = NCPoly::one(ambient_->alphabet());
    for (std::size_t t = 0; t < word.size(); ++t) {
      if (!suffix[t + 1].is_zero()) {
        NCPoly term = prefix * letter_value(word[t]);
        term *= suffix[t + 1];
        out += term;
      }
      if (t + 1 < word.size())
        prefix = reduce.nf(prefix * letter_image(word[t]));
    }
    return reduce.nf(out);
  }

 private:
  NCPoly letter_image(std::pair<int, bool> l) const {
    const NCPoly& base = images_[static_cast<std::size_t>(l.first)];
    return l.second ? base.adjoint() : base;
  }
  NCPoly letter_value(std::pair<int, bool> l) const {
    return l.second ? star_values_[static_cast<std::size_t>(l.first)]
                    : values_[static_cast<std::size_t>(l.first)];
  }
  Scalar letter_eps(std::pair<int, bool> l) const {
    Scalar e = counit(images_[static_cast<std::size_t>(l.first)]);
    return l.second ? e.conj() : e;
  }

  PresPtr ambient_;
  std::vector<NCPoly> images_;
  std::vector<NCPoly> values_;
  std::vector<NCPoly> star_values_;
  std::vector<int> star_partner_;
};

inline RestrictedCocycle restrict_cocycle(const Cocycle& c,
                                          std::vector<NCPoly> gens,
                                          bool require_star_closed_set = false) {
  return RestrictedCocycle(c, std::move(gens), require_star_closed_set);
}

/// Restriction onto a named presentation: `images` sends each target
/// generator to its realization in the ambient algebra.  The embedding must
/// respect the involution; in particular self-adjoint target generators need
/// self-adjoint images.
inline Cocycle restrict_to_presentation(const Cocycle& c, PresPtr target,
                                        const std::map<std::uint32_t, NCPoly>& images) {
  Reducer reduce(c.ambient());
  std::map<std::uint32_t, NCPoly> values;
  for (GenSym g : target->alphabet().generators(false)) {
    auto it = images.find(g.code());
    if (it == images.end())
      throw ClosureError("missing image for target generator " + g.token());
    if (family_self_adjoint(g.family())) {
      if (reduce.nf(it->second.adjoint()) != reduce.nf(it->second))
        throw ClosureError("self-adjoint generator " + g.token() +
                           " needs a self-adjoint image");
    }
    values.emplace(g.code(), c.eval(it->second));
  }
  return Cocycle(std::move(target), c.ambient_ptr(), images, std::move(values));
}

/// Embedding u_ij -> z v_ij of Pol(U_n^+) into Pol(H_n).
inline std::map<std::uint32_t, NCPoly> u_in_h_images(const Presentation& u_pres,
                                                     const Presentation& h_pres) {
  std::map<std::uint32_t, NCPoly> images;
  int n = u_pres.alphabet().n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Word w;
      w.push_back(GenSym::z(false));
      w.push_back(GenSym::v(i, j));
      images.emplace(GenSym::u(i, j, false).code(),
                     NCPoly::monomial(h_pres.alphabet(), w));
    }
  return images;
}

/// Searches for an inner witness xi of degree <= degree_bound: sets up the
/// exact linear system phi(g) xi - eps(g) xi = c(g) over the irreducible
/// monomials of the ambient algebra and verifies any solution found by
/// re-evaluation.  A nullopt answer only means "no witness in this
/// truncation"; it is NOT a proof of non-innerness.
inline std::optional<NCPoly> solve_inner(const Cocycle& c, int degree_bound,
                                         std::vector<GenSym> gens = {}) {
  const Presentation& amb = c.ambient();
  if (gens.empty()) gens = c.domain().alphabet().generators(false);

  int max_image_deg = 1;
  for (GenSym g : gens)
    max_image_deg = std::max(max_image_deg, c.image_of(g).degree());
  if (degree_bound + max_image_deg > amb.certified_degree())
    throw DegreeError(
        "solve_inner: truncation degree exceeds the certified bound");

  std::vector<Word> basis = basis_words(amb, degree_bound);
  std::map<Word, int> col_of;
  for (std::size_t k = 0; k < basis.size(); ++k)
    col_of.emplace(basis[k], static_cast<int>(k));

  SparseLinearSystem sys(static_cast<int>(basis.size()));
  Reducer reduce(amb);
  std::map<std::pair<std::size_t, Word>, int> row_of;
  auto row_for = [&](std::size_t gi, const Word& w) {
    auto it = row_of.find({gi, w});
    if (it != row_of.end()) return it->second;
    int r = sys.add_row();
    row_of.emplace(std::make_pair(gi, w), r);
    return r;
  };

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    NCPoly img = c.image_of(gens[gi]);
    Scalar eps = c.eps_of(gens[gi]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      NCPoly lhs = reduce.nf(img * NCPoly::monomial(amb.alphabet(), basis[k]));
      lhs.add_term(basis[k], -eps);
      for (const auto& [w, coeff] : lhs.terms())
        sys.add_coeff(row_for(gi, w), static_cast<int>(k), coeff);
    }
    NCPoly rhs = reduce.nf(c.value_of(gens[gi]));
    for (const auto& [w, coeff] : rhs.terms()) sys.add_rhs(row_for(gi, w), coeff);
  }

  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  NCPoly xi(amb.alphabet());
  for (std::size_t k = 0; k < basis.size(); ++k) xi.add_term(basis[k], (*sol)[k]);

  // Re-evaluation guard: the witness must reproduce the cocycle on the
  // generators.
  for (GenSym g : gens) {
    NCPoly expect = reduce.nf(c.value_of(g));
    NCPoly got = reduce.nf(c.image_of(g) * xi) - xi * c.eps_of(g);
    if (reduce.nf(got) != expect) return std::nullopt;
  }
  return xi;
}

}  // namespace qhopf
