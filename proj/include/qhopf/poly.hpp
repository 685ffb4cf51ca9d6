#pragma once

#include <map>
#include <string>
#include <utility>

#include "qhopf/scalar.hpp"
#include "qhopf/word.hpp"

namespace qhopf {

/// Sparse noncommutative polynomial: a finitely-supported map Word -> Scalar
/// over a fixed generator alphabet.  Zero coefficients are never stored.
class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar>;

  explicit NCPoly(Alphabet alphabet) : alpha_(alphabet) {}

  static NCPoly zero(Alphabet a) { return NCPoly(a); }
  static NCPoly one(Alphabet a) { return constant(a, Scalar(1)); }
  static NCPoly constant(Alphabet a, const Scalar& c) {
    NCPoly p(a);
    p.add_term(Word(), c);
    return p;
  }
  static NCPoly monomial(Alphabet a, const Word& w, const Scalar& c = Scalar(1)) {
    NCPoly p(a);
    p.check_word(w);
    p.add_term(w, c);
    return p;
  }
  static NCPoly generator(Alphabet a, GenSym g) {
    return monomial(a, Word::single(g));
  }

  Alphabet alphabet() const { return alpha_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  /// Largest monomial in the graded order with its coefficient.
  const std::pair<const Word, Scalar>& leading() const {
    if (terms_.empty()) throw DegreeError("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  NCPoly& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& s) { return a *= s; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  NCPoly operator-() const {
    NCPoly out(alpha_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }

  /// Distributed concatenation product; bilinear and associative.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.require_same(b);
    NCPoly out(a.alpha_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
  }

  /// The involution: antilinear anti-homomorphism, (pq)* = q* p*.
  NCPoly adjoint() const {
    NCPoly out(alpha_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.adjoint(), c.conj());
    return out;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  void check_word(const Word& w) const {
    for (GenSym g : w.symbols())
      if (!alpha_.contains(g))
        throw AlphabetError("symbol " + g.token() + " not in alphabet " +
                            alpha_.str());
  }

 private:
  void require_same(const NCPoly& o) const {
    if (alpha_ != o.alpha_)
      throw AlphabetError("mixed alphabets: " + alpha_.str() + " vs " +
                          o.alpha_.str());
  }

  Alphabet alpha_;
  TermMap terms_;
};

}  // namespace qhopf
