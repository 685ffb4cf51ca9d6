#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qhopf/symbol.hpp"

namespace qhopf {

/// A monomial of the free *-algebra: a finite sequence of generator symbols.
/// The empty word is the unit.  The involution reverses the sequence and
/// flips star flags.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<GenSym> syms) : s_(std::move(syms)) {}
  Word(std::initializer_list<GenSym> syms) : s_(syms) {}

  static Word single(GenSym g) { return Word({g}); }

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  int degree() const { return static_cast<int>(s_.size()); }

  GenSym operator[](std::size_t k) const { return s_[k]; }
  const std::vector<GenSym>& symbols() const { return s_; }

  void push_back(GenSym g) { s_.push_back(g); }

  friend Word operator*(const Word& a, const Word& b) {
    Word out;
    out.s_.reserve(a.size() + b.size());
    out.s_.insert(out.s_.end(), a.s_.begin(), a.s_.end());
    out.s_.insert(out.s_.end(), b.s_.begin(), b.s_.end());
    return out;
  }

  Word adjoint() const {
    Word out;
    out.s_.reserve(s_.size());
    for (auto it = s_.rbegin(); it != s_.rend(); ++it)
      out.s_.push_back(it->adjoint());
    return out;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    Word out;
    out.s_.assign(s_.begin() + pos, s_.begin() + pos + len);
    return out;
  }

  bool matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.size() > s_.size()) return false;
    return std::equal(pattern.s_.begin(), pattern.s_.end(), s_.begin() + pos);
  }

  /// w with w[pos, pos+len) replaced by `repl`.
  static Word splice(const Word& w, std::size_t pos, std::size_t len,
                     const Word& repl) {
    Word out;
    out.s_.reserve(w.size() - len + repl.size());
    out.s_.insert(out.s_.end(), w.s_.begin(), w.s_.begin() + pos);
    out.s_.insert(out.s_.end(), repl.s_.begin(), repl.s_.end());
    out.s_.insert(out.s_.end(), w.s_.begin() + pos + len, w.s_.end());
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  std::size_t gamma_count() const {
    std::size_t c = 0;
    for (GenSym g : s_) c += (g.family() == Family::gamma) ? 1 : 0;
    return c;
  }

  /// Graded order: total degree first, then gamma-letters count heavier
  /// (fewer gamma letters = larger word), then lexicographic on symbol
  /// codes.  Admissible (compatible with concatenation, well-founded).
  /// The gamma stage only matters in the SU_{-1}(2) alphabet, where it makes
  /// the irreducible words exactly the basis monomials alpha^i gamma^j
  /// gamma*^k; for all other alphabets this is plain graded lex.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::size_t ga = a.gamma_count(), gb = b.gamma_count();
    if (ga != gb) return ga > gb;
    return std::lexicographical_compare(
        a.s_.begin(), a.s_.end(), b.s_.begin(), b.s_.end(),
        [](GenSym x, GenSym y) { return x.code() < y.code(); });
  }

  std::string str() const {
    if (s_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < s_.size(); ++k) {
      if (k) out += '*';
      out += s_[k].token();
    }
    return out;
  }

 private:
  std::vector<GenSym> s_;
};

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return b < a; }
};

}  // namespace qhopf
