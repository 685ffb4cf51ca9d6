#pragma once

#include <map>
#include <utility>

#include "qhopf/poly.hpp"

namespace qhopf {

/// Element of the algebraic tensor square: a finitely-supported map
/// (Word, Word) -> Scalar, bilinear in each leg, with the leg-wise product
/// (p (x) q)(r (x) s) = pr (x) qs.
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using TermMap = std::map<Key, Scalar>;

  explicit TensorPoly(Alphabet alphabet) : alpha_(alphabet) {}

  static TensorPoly zero(Alphabet a) { return TensorPoly(a); }
  static TensorPoly one(Alphabet a) {
    TensorPoly t(a);
    t.add_term(Word(), Word(), Scalar(1));
    return t;
  }

  /// Outer product p (x) q.
  static TensorPoly tensor(const NCPoly& p, const NCPoly& q) {
    if (p.alphabet() != q.alphabet())
      throw AlphabetError("tensor legs over different alphabets");
    TensorPoly t(p.alphabet());
    for (const auto& [wp, cp] : p.terms())
      for (const auto& [wq, cq] : q.terms()) t.add_term(wp, wq, cp * cq);
    return t;
  }

  Alphabet alphabet() const { return alpha_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{l, r};
    auto [it, fresh] = terms_.emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    require_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  TensorPoly& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const Scalar& s) { return a *= s; }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) {
    return !(a == b);
  }

  /// Leg-wise adjoint (the involution of the tensor square algebra).
  TensorPoly adjoint() const {
    TensorPoly out(alpha_);
    for (const auto& [k, c] : terms_)
      out.add_term(k.first.adjoint(), k.second.adjoint(), c.conj());
    return out;
  }

 private:
  void require_same(const TensorPoly& o) const {
    if (alpha_ != o.alpha_)
      throw AlphabetError("mixed alphabets: " + alpha_.str() + " vs " +
                          o.alpha_.str());
  }

  Alphabet alpha_;
  TermMap terms_;
};

/// Leg-wise product, bilinear in both arguments.
inline TensorPoly tensor_mul(const TensorPoly& s, const TensorPoly& t) {
  if (s.alphabet() != t.alphabet())
    throw AlphabetError("tensor product over different alphabets");
  TensorPoly out(s.alphabet());
  for (const auto& [ks, cs] : s.terms())
    for (const auto& [kt, ct] : t.terms())
      out.add_term(ks.first * kt.first, ks.second * kt.second, cs * ct);
  return out;
}

}  // namespace qhopf
