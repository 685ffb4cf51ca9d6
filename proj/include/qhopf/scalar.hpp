#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qhopf/errors.hpp"

namespace qhopf {

/// Exact Gaussian-rational number re + im*i.  Both parts are
/// arbitrary-precision rationals kept in lowest terms, so equality is exact
/// and all field axioms hold exactly.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  static Scalar rational(long num, long den) {
    if (den == 0) throw ParameterError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q), mpq_class(0));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw ParameterError("division by zero scalar");
    mpq_class norm = b.re_ * b.re_ + b.im_ * b.im_;
    Scalar num = a * b.conj();
    return Scalar(num.re_ / norm, num.im_ / norm);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  /// Canonical encoding: "p/q" when real, "(a+bi)" or "(a-bi)" otherwise.
  /// parse() accepts exactly the strings str() produces.
  std::string str() const {
    if (is_real()) return re_.get_str();
    std::string out = "(";
    out += re_.get_str();
    mpq_class a = abs(im_);
    out += (im_ < 0) ? '-' : '+';
    out += a.get_str();
    out += "i)";
    return out;
  }

  static Scalar parse(const std::string& text) {
    if (text.empty()) throw ParameterError("empty scalar literal");
    if (text.front() == '(') {
      if (text.size() < 4 || text.back() != ')' || text[text.size() - 2] != 'i')
        throw ParameterError("bad complex literal: " + text);
      std::string body = text.substr(1, text.size() - 3);
      // Split at the sign separating the two parts (skip a leading sign).
      std::size_t split = std::string::npos;
      for (std::size_t k = 1; k < body.size(); ++k) {
        if (body[k] == '+' || body[k] == '-') split = k;
      }
      if (split == std::string::npos)
        throw ParameterError("bad complex literal: " + text);
      Scalar re = parse(body.substr(0, split));
      Scalar im = parse(body.substr(split + 1));
      if (!re.is_real() || !im.is_real())
        throw ParameterError("bad complex literal: " + text);
      if (body[split] == '-') im = -im;
      return Scalar(re.re(), im.re());
    }
    try {
      mpq_class q(text);
      q.canonicalize();
      return Scalar(std::move(q), mpq_class(0));
    } catch (const std::invalid_argument&) {
      throw ParameterError("bad rational literal: " + text);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
  }

 private:
  mpq_class re_, im_;
};

}  // namespace qhopf
