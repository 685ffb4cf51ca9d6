#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qhopf/io.hpp"
#include "qhopf/poly.hpp"
#include "qhopf/random.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Basis index of alpha^i gamma^j gamma*^k, with alpha^i meaning (alpha*)^(-i)
/// for negative i.
struct SU2Key {
  long i;
  unsigned j;
  unsigned k;
  friend bool operator<(const SU2Key& a, const SU2Key& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  }
  friend bool operator==(const SU2Key& a, const SU2Key& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

/// Coefficients of the commutative polynomial p(t) with p = sum coeffs[l] t^l,
/// where t stands for the central element gamma gamma*.
using CentralPoly = std::vector<Scalar>;

/// The polynomial p_{i,j} with alpha^i alpha^j = alpha^{i+j} p_{i,j}(gamma gamma*):
/// the constant 1 when i and j have the same sign (or either is zero), and a
/// power of (1 - t) otherwise, following the two displayed cases of the
/// merging argument.
inline CentralPoly claim1_poly(long i, long j) {
  long m = 0;
  if (i >= 0 && j < 0) {
    m = (i > -j) ? -j : i;
  } else if (i < 0 && j >= 0) {
    m = (-i > j) ? j : -i;
  }
  // expand (1 - t)^m
  CentralPoly out(static_cast<std::size_t>(m) + 1, Scalar(0));
  Scalar binom(1);
  for (long l = 0; l <= m; ++l) {
    out[static_cast<std::size_t>(l)] = (l % 2 == 0) ? binom : -binom;
    binom = binom * Scalar(m - l) / Scalar(l + 1);
  }
  return out;
}

/// Element of Pol(SU_{-1}(2)) expanded over the linear basis
/// {alpha^i gamma^j gamma*^k}.  Unlike the rewriting engine, this class
/// normalizes words directly: alpha-letters move left past gamma-letters with
/// a sign flip, alpha-powers merge via p_{i,j}, and gamma, gamma* commute.
class SU2Normal {
 public:
  using TermMap = std::map<SU2Key, Scalar>;

  SU2Normal() = default;

  static SU2Normal zero() { return {}; }
  static SU2Normal one() { return monomial({0, 0, 0}, Scalar(1)); }
  static SU2Normal monomial(SU2Key key, const Scalar& c) {
    SU2Normal x;
    x.add_term(key, c);
    return x;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SU2Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SU2Normal& operator+=(const SU2Normal& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SU2Normal& operator-=(const SU2Normal& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SU2Normal& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend SU2Normal operator+(SU2Normal a, const SU2Normal& b) { return a += b; }
  friend SU2Normal operator-(SU2Normal a, const SU2Normal& b) { return a -= b; }

  friend bool operator==(const SU2Normal& a, const SU2Normal& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SU2Normal& a, const SU2Normal& b) {
    return !(a == b);
  }

  /// Product via the closed formulas: moving alpha^{i2} past gamma^{j1+k1}
  /// costs the single sign (-1)^{(j1+k1)|i2|}, alpha powers merge via
  /// claim1_poly, and the central (1-t) powers land on the gamma block.
  /// `sign_exponent_shift` deliberately corrupts the sign bookkeeping and is
  /// only meant for negative-control tests.
  static SU2Normal mul(const SU2Normal& x, const SU2Normal& y,
                       long sign_exponent_shift = 0) {
    SU2Normal out;
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) {
        long cross = (static_cast<long>(a.j) + static_cast<long>(a.k)) *
                     (std::labs(b.i) + sign_exponent_shift);
        Scalar sign = (cross % 2 == 0) ? Scalar(1) : Scalar(-1);
        CentralPoly p = claim1_poly(a.i, b.i);
        Scalar coeff = ca * cb * sign;
        for (std::size_t l = 0; l < p.size(); ++l) {
          if (p[l].is_zero()) continue;
          SU2Key key{a.i + b.i, a.j + b.j + static_cast<unsigned>(l),
                     a.k + b.k + static_cast<unsigned>(l)};
          out.add_term(key, coeff * p[l]);
        }
      }
    return out;
  }

  friend SU2Normal operator*(const SU2Normal& a, const SU2Normal& b) {
    return mul(a, b);
  }

  /// (alpha^i gamma^j gamma*^k)* = (-1)^{(j+k)|i|} alpha^{-i} gamma^k gamma*^j.
  SU2Normal adjoint() const {
    SU2Normal out;
    for (const auto& [key, c] : terms_) {
      long cross = (static_cast<long>(key.j) + static_cast<long>(key.k)) *
                   std::labs(key.i);
      Scalar sign = (cross % 2 == 0) ? Scalar(1) : Scalar(-1);
      out.add_term(SU2Key{-key.i, key.k, key.j}, c.conj() * sign);
    }
    return out;
  }

  /// max i with a nonzero coefficient; undefined for zero.
  long deg_alpha() const {
    if (terms_.empty()) throw DegreeError("deg_alpha of zero element");
    long best = terms_.begin()->first.i;
    for (const auto& [k, c] : terms_) best = std::max(best, k.i);
    return best;
  }

  /// max j+k with a nonzero coefficient; undefined for zero.
  long deg_gamma() const {
    if (terms_.empty()) throw DegreeError("deg_gamma of zero element");
    long best = 0;
    for (const auto& [k, c] : terms_)
      best = std::max(best, static_cast<long>(k.j) + static_cast<long>(k.k));
    return best;
  }

  /// Basis monomial as a word: |i| alpha-letters, then j gammas, k gamma*s.
  static Word key_word(const SU2Key& key) {
    Word w;
    for (long t = 0; t < std::labs(key.i); ++t)
      w.push_back(GenSym::alpha(key.i < 0));
    for (unsigned t = 0; t < key.j; ++t) w.push_back(GenSym::gamma(false));
    for (unsigned t = 0; t < key.k; ++t) w.push_back(GenSym::gamma(true));
    return w;
  }

  NCPoly to_poly() const {
    NCPoly out(Alphabet::su2());
    for (const auto& [key, c] : terms_) out.add_term(key_word(key), c);
    return out;
  }

  std::string str() const { return to_string_impl(); }

 private:
  std::string to_string_impl() const;

  TermMap terms_;
};

/// The unique basis expansion of an element of the free *-algebra over
/// {alpha, gamma}.  This normalization is independent of the rewriting
/// engine and serves as its oracle.
/// `drop_signs` disables the anticommutation signs (negative-control knob).
inline SU2Normal su2_normal_form(const NCPoly& p, bool drop_signs = false) {
  if (p.alphabet() != Alphabet::su2())
    throw AlphabetError("su2_normal_form needs the {alpha, gamma} alphabet");
  SU2Normal out;
  for (const auto& [w, c] : p.terms()) {
    // Move every alpha-letter left past the gamma-letters seen before it,
    // flipping the sign once per transposition.
    long flips = 0;
    long alpha_pos = 0, alpha_neg = 0;
    unsigned js = 0, ks = 0;
    long gammas_seen = 0;
    for (GenSym g : w.symbols()) {
      switch (g.family()) {
        case Family::alpha:
          flips += gammas_seen;
          if (g.star())
            ++alpha_neg;
          else
            ++alpha_pos;
          break;
        case Family::gamma:
          ++gammas_seen;
          if (g.star())
            ++ks;
          else
            ++js;
          break;
        default:
          throw AlphabetError("unexpected symbol " + g.token());
      }
    }
    Scalar sign = (!drop_signs && flips % 2 != 0) ? Scalar(-1) : Scalar(1);
    // Any arrangement of p alphas and q alpha*s collapses to
    // alpha^{p-q} (1-t)^{min(p,q)} because each cancelled adjacent pair is
    // the central element 1 - gamma gamma*.
    long i = alpha_pos - alpha_neg;
    long m = std::min(alpha_pos, alpha_neg);
    Scalar coeff = c * sign;
    CentralPoly expansion = claim1_poly(m, -m);  // (1-t)^m
    for (std::size_t l = 0; l < expansion.size(); ++l) {
      if (expansion[l].is_zero()) continue;
      SU2Key key{i, js + static_cast<unsigned>(l), ks + static_cast<unsigned>(l)};
      out.add_term(key, coeff * expansion[l]);
    }
  }
  return out;
}

inline std::string SU2Normal::to_string_impl() const {
  return qhopf::to_string(to_poly());
}

/// Nonzero element inside the degree box |i| <= max_alpha, j+k <= max_gamma,
/// at most five basis monomials, small Gaussian-integer coefficients.
inline SU2Normal random_su2(Rng& rng, int max_alpha, int max_gamma) {
  for (;;) {
    SU2Normal x;
    int terms = static_cast<int>(rng.pick(1, 5));
    for (int t = 0; t < terms; ++t) {
      long i = rng.pick(-max_alpha, max_alpha);
      long j = rng.pick(0, max_gamma);
      long k = rng.pick(0, max_gamma - j);
      x.add_term(SU2Key{i, static_cast<unsigned>(j), static_cast<unsigned>(k)},
                 rng.scalar());
    }
    if (!x.is_zero()) return x;
  }
}

/// Zero-divisor hunt behind the domain property: multiplies seeded random
/// nonzero pairs, requiring every product nonzero with additive alpha-degree.
/// Each product is computed twice, through the closed-form sign formula and
/// through the letter-by-letter word path, and the two must agree.
/// `corrupt_sign` shifts the sign exponent to prove the harness can fail.
inline LemmaReport domain_test(int samples, int max_deg_alpha, int max_deg_gamma,
                               std::uint64_t seed, bool corrupt_sign = false) {
  if (samples < 1) throw ParameterError("domain_test needs samples >= 1");
  LemmaReport rep;
  rep.lemma_id = "su2-domain";
  rep.parameters["samples"] = std::to_string(samples);
  rep.parameters["max_deg_alpha"] = std::to_string(max_deg_alpha);
  rep.parameters["max_deg_gamma"] = std::to_string(max_deg_gamma);
  rep.parameters["seed"] = std::to_string(seed);
  rep.caveats.push_back(
      "sampled zero-divisor search; the ring-theoretic statement itself is a "
      "theorem, not a finite check");

  Rng rng(seed);
  int zero_products = 0, degree_failures = 0, mismatches = 0;
  std::string example;
  for (int s = 0; s < samples; ++s) {
    SU2Normal x = random_su2(rng, max_deg_alpha, max_deg_gamma);
    SU2Normal y = random_su2(rng, max_deg_alpha, max_deg_gamma);
    SU2Normal direct = SU2Normal::mul(x, y, corrupt_sign ? 1 : 0);
    SU2Normal via_words = su2_normal_form(x.to_poly() * y.to_poly());
    if (direct != via_words) {
      ++mismatches;
      if (example.empty())
        example = "x = " + x.str() + ", y = " + y.str();
      continue;
    }
    if (direct.is_zero()) {
      ++zero_products;
      if (example.empty())
        example = "x = " + x.str() + ", y = " + y.str();
      continue;
    }
    if (direct.deg_alpha() != x.deg_alpha() + y.deg_alpha()) {
      ++degree_failures;
      if (example.empty())
        example = "x = " + x.str() + ", y = " + y.str();
    }
  }
  rep.check("sign bookkeeping agrees with the letter-by-letter product",
            mismatches == 0, example);
  rep.check("no zero product of nonzero elements", zero_products == 0, example);
  rep.check("deg_alpha additive on all sampled pairs", degree_failures == 0,
            example);
  return rep;
}

}  // namespace qhopf
