#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/errors.hpp"

namespace qhopf {

/// Generator families across all shipped algebras.  The enum order fixes the
/// generator order used by the monomial order: alpha < gamma < z < v < u,
/// indices (i,j) next, and unstarred < starred last.
enum class Family : std::uint8_t { alpha = 0, gamma = 1, z = 2, v = 3, u = 4 };

inline const char* family_letter(Family f) {
  switch (f) {
    case Family::alpha: return "a";
    case Family::gamma: return "g";
    case Family::z: return "z";
    case Family::v: return "v";
    case Family::u: return "u";
  }
  return "?";
}

inline bool family_indexed(Family f) {
  return f == Family::v || f == Family::u;
}

inline bool family_self_adjoint(Family f) { return f == Family::v; }

/// One generator symbol, packed into 32 bits so that the integer order of the
/// codes is exactly the symbol order described above.  Equality of symbols
/// (and hence words) is a plain integer comparison.
class GenSym {
 public:
  constexpr GenSym() : code_(0) {}

  static GenSym make(Family f, int i, int j, bool star) {
    if (i < 0 || i > 255 || j < 0 || j > 255)
      throw ParameterError("generator index out of range");
    if (family_self_adjoint(f)) star = false;  // v is self-adjoint
    GenSym g;
    g.code_ = (static_cast<std::uint32_t>(f) << 17) |
              (static_cast<std::uint32_t>(i) << 9) |
              (static_cast<std::uint32_t>(j) << 1) |
              (star ? 1u : 0u);
    return g;
  }

  static GenSym alpha(bool star = false) { return make(Family::alpha, 0, 0, star); }
  static GenSym gamma(bool star = false) { return make(Family::gamma, 0, 0, star); }
  static GenSym z(bool star = false) { return make(Family::z, 0, 0, star); }
  static GenSym v(int i, int j) { return make(Family::v, i, j, false); }
  static GenSym u(int i, int j, bool star = false) { return make(Family::u, i, j, star); }

  Family family() const { return static_cast<Family>(code_ >> 17); }
  int i() const { return static_cast<int>((code_ >> 9) & 0xff); }
  int j() const { return static_cast<int>((code_ >> 1) & 0xff); }
  bool star() const { return (code_ & 1u) != 0; }
  std::uint32_t code() const { return code_; }

  GenSym adjoint() const {
    if (family_self_adjoint(family())) return *this;
    GenSym g = *this;
    g.code_ ^= 1u;
    return g;
  }

  /// Token used by the text format and JSON words: "u[1,2]", "u*[2,1]",
  /// "z", "z*", "a", "g*", "v[1,1]".
  std::string token() const {
    std::string out = family_letter(family());
    if (star()) out += '*';
    if (family_indexed(family())) {
      out += '[';
      out += std::to_string(i());
      out += ',';
      out += std::to_string(j());
      out += ']';
    }
    return out;
  }

  friend bool operator==(GenSym a, GenSym b) { return a.code_ == b.code_; }
  friend bool operator!=(GenSym a, GenSym b) { return a.code_ != b.code_; }
  friend bool operator<(GenSym a, GenSym b) { return a.code_ < b.code_; }

 private:
  std::uint32_t code_;
};

/// A generator alphabet: which families exist and, for indexed families, the
/// matrix size n.  Every element carries its alphabet; mixing alphabets is a
/// hard error rather than a silent union.
class Alphabet {
 public:
  Alphabet() : mask_(0), n_(0) {}

  static Alphabet su2() { return Alphabet(bit(Family::alpha) | bit(Family::gamma), 0); }
  static Alphabet s1() { return Alphabet(bit(Family::z), 0); }
  static Alphabet o_plus(int n) { return Alphabet(bit(Family::v), check_n(n)); }
  static Alphabet u_plus(int n) { return Alphabet(bit(Family::u), check_n(n)); }
  /// Free product alphabet of Pol(S^1) and Pol(O_n^+).
  static Alphabet h(int n) { return Alphabet(bit(Family::z) | bit(Family::v), check_n(n)); }

  bool has(Family f) const { return (mask_ & bit(f)) != 0; }
  int n() const { return n_; }

  bool contains(GenSym g) const {
    if (!has(g.family())) return false;
    if (family_indexed(g.family()))
      return g.i() >= 1 && g.i() <= n_ && g.j() >= 1 && g.j() <= n_;
    return g.i() == 0 && g.j() == 0;
  }

  /// All generators in symbol order; starred partners included on request
  /// (self-adjoint families have none).
  std::vector<GenSym> generators(bool include_starred = false) const {
    std::vector<GenSym> out;
    for (Family f : {Family::alpha, Family::gamma, Family::z, Family::v, Family::u}) {
      if (!has(f)) continue;
      if (family_indexed(f)) {
        for (int i = 1; i <= n_; ++i)
          for (int j = 1; j <= n_; ++j) {
            out.push_back(GenSym::make(f, i, j, false));
            if (include_starred && !family_self_adjoint(f))
              out.push_back(GenSym::make(f, i, j, true));
          }
      } else {
        out.push_back(GenSym::make(f, 0, 0, false));
        if (include_starred) out.push_back(GenSym::make(f, 0, 0, true));
      }
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (Family f : {Family::alpha, Family::gamma, Family::z, Family::v, Family::u}) {
      if (!has(f)) continue;
      if (!out.empty()) out += '+';
      out += family_letter(f);
    }
    if (n_ > 0) out += "(" + std::to_string(n_) + ")";
    return out;
  }

  friend bool operator==(Alphabet a, Alphabet b) {
    return a.mask_ == b.mask_ && a.n_ == b.n_;
  }
  friend bool operator!=(Alphabet a, Alphabet b) { return !(a == b); }

  /// True if every generator of `inner` is a generator of `outer`.
  friend bool alphabet_subset(Alphabet inner, Alphabet outer) {
    if ((inner.mask_ & ~outer.mask_) != 0) return false;
    bool indexed = inner.has(Family::v) || inner.has(Family::u);
    return !indexed || inner.n_ == outer.n_;
  }

 private:
  Alphabet(std::uint8_t mask, std::uint8_t n) : mask_(mask), n_(n) {}

  static std::uint8_t bit(Family f) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(f));
  }
  static std::uint8_t check_n(int n) {
    if (n < 1 || n > 255) throw ParameterError("matrix size out of range");
    return static_cast<std::uint8_t>(n);
  }

  std::uint8_t mask_;
  std::uint8_t n_;
};

}  // namespace qhopf
