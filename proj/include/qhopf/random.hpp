#pragma once

#include <cstdint>
#include <random>

#include "qhopf/poly.hpp"

namespace qhopf {

/// Deterministic element sampler.  Coefficients are Gaussian integers from
/// the box {-3..3} + {-3..3}i with the all-zero pair excluded; supports stay
/// small so failures print readably.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  Scalar scalar() {
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
      a = pick(-3, 3);
      b = pick(-3, 3);
    }
    return Scalar(mpq_class(a), mpq_class(b));
  }

  Scalar real_scalar() {
    long a = 0;
    while (a == 0) a = pick(-3, 3);
    return Scalar(a);
  }

  GenSym symbol(const std::vector<GenSym>& pool) {
    return pool[static_cast<std::size_t>(pick(0, static_cast<long>(pool.size()) - 1))];
  }

  Word word(const std::vector<GenSym>& pool, int max_len) {
    Word w;
    int len = static_cast<int>(pick(0, max_len));
    for (int k = 0; k < len; ++k) w.push_back(symbol(pool));
    return w;
  }

  /// Nonzero polynomial of degree <= max_deg with at most max_terms monomials.
  NCPoly poly(Alphabet a, int max_deg, int max_terms = 5) {
    std::vector<GenSym> pool = a.generators(true);
    for (;;) {
      NCPoly p(a);
      int terms = static_cast<int>(pick(1, max_terms));
      for (int t = 0; t < terms; ++t) p.add_term(word(pool, max_deg), scalar());
      if (!p.is_zero()) return p;
    }
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qhopf
