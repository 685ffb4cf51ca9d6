#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "qhopf/poly.hpp"

namespace qhopf {

/// Oriented rewrite rule: the left word rewrites to the (strictly smaller)
/// right-hand side polynomial.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (GenSym g : w.symbols()) {
      h ^= g.code();
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// A presented algebra: generators, *-closed relations, oriented rewrite
/// rules and the degree up to which overlap completion has been certified.
class Presentation {
 public:
  Presentation(std::string name, Alphabet alphabet, int n)
      : name_(std::move(name)), alphabet_(alphabet), n_(n) {}

  const std::string& name() const { return name_; }
  Alphabet alphabet() const { return alphabet_; }
  int n() const { return n_; }
  int certified_degree() const { return certified_degree_; }

  /// The fixed monomial order every presentation uses (see Word::operator<).
  static const char* monomial_order() { return "graded-gammaweight-lex"; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Relation representatives together with their adjoints (deduplicated).
  std::vector<NCPoly> starred_relations() const {
    std::vector<NCPoly> out = relations_;
    for (const NCPoly& r : relations_) {
      NCPoly a = r.adjoint();
      if (std::find(out.begin(), out.end(), a) == out.end())
        out.push_back(a);
    }
    return out;
  }

  /// Leftmost redex, first matching rule in the fixed rule list.
  std::optional<std::pair<std::size_t, int>> find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      auto it = index_.find(w[pos].code());
      if (it == index_.end()) continue;
      int best = -1;
      for (int r : it->second)
        if (w.matches_at(rules_[r].lhs, pos) && (best < 0 || r < best)) best = r;
      if (best >= 0) return std::make_pair(pos, best);
    }
    return std::nullopt;
  }

  bool is_irreducible(const Word& w) const { return !find_redex(w); }

  // Mutators used by the construction/completion code below.  Presentations
  // are treated as immutable once handed out.
  void set_relations(std::vector<NCPoly> rels) { relations_ = std::move(rels); }
  void set_rules(std::vector<RewriteRule> rules) {
    for (const RewriteRule& r : rules)
      if (r.lhs.empty())
        throw OrientationError("rewrite rule with an empty left word");
    rules_ = std::move(rules);
    rebuild_index();
  }
  void set_certified_degree(int d) { certified_degree_ = d; }

  /// Every right-hand side monomial must be strictly smaller than the left
  /// word, otherwise rewriting need not terminate.
  void validate_orientation() const {
    for (const RewriteRule& r : rules_)
      for (const auto& [w, c] : r.rhs.terms())
        if (!(w < r.lhs))
          throw OrientationError("rule " + r.lhs.str() +
                                 " has a right-hand side that is not smaller");
  }

 private:
  void rebuild_index() {
    index_.clear();
    for (int k = 0; k < static_cast<int>(rules_.size()); ++k)
      index_[rules_[k].lhs[0].code()].push_back(k);
  }

  std::string name_;
  Alphabet alphabet_;
  int n_ = 0;
  std::vector<NCPoly> relations_;
  std::vector<RewriteRule> rules_;
  int certified_degree_ = 0;
  std::unordered_map<std::uint32_t, std::vector<int>> index_;
};

struct NFResult {
  NCPoly value;
  bool certified;  // false when the input degree exceeds the certified bound
};

/// Rewrites to the fixed point of rule application, memoizing per-word
/// results.  Safe to share across threads.
class Reducer {
 public:
  explicit Reducer(const Presentation& p) : p_(&p) {}

  NCPoly operator()(const NCPoly& p) const { return nf(p); }

  NCPoly nf(const NCPoly& p) const {
    NCPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
      NCPoly r = word_nf(w);
      r *= c;
      out += r;
    }
    return out;
  }

  NCPoly word_nf(const Word& w) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = cache_.find(w);
      if (it != cache_.end()) return it->second;
    }
    NCPoly result(p_->alphabet());
    auto redex = p_->find_redex(w);
    if (!redex) {
      result.add_term(w, Scalar(1));
    } else {
      const RewriteRule& rule = p_->rules()[redex->second];
      for (const auto& [rw, rc] : rule.rhs.terms()) {
        Word next = Word::splice(w, redex->first, rule.lhs.size(), rw);
        NCPoly sub = word_nf(next);  // strictly smaller word: terminates
        sub *= rc;
        result += sub;
      }
    }
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(w, std::move(result)).first->second;
  }

 private:
  const Presentation* p_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

/// Fixed point of rule application.  Linear; within the certified degree,
/// equal elements of the quotient algebra have equal normal forms.
inline NFResult normal_form_checked(const NCPoly& p, const Presentation& pres) {
  if (p.alphabet() != pres.alphabet())
    throw AlphabetError("polynomial alphabet " + p.alphabet().str() +
                        " does not match presentation " + pres.alphabet().str());
  bool certified = p.degree() <= pres.certified_degree();
  return NFResult{Reducer(pres).nf(p), certified};
}

inline NCPoly normal_form(const NCPoly& p, const Presentation& pres) {
  return normal_form_checked(p, pres).value;
}

namespace detail {

/// Orient a (nonzero, fully reduced) relation: largest monomial becomes the
/// left word, the rest is negated and scaled to coefficient one.
inline RewriteRule orient_relation(const NCPoly& q) {
  const auto& [lead, lc] = q.leading();
  if (lead.empty())
    throw OrientationError(
        "relation reduces to a nonzero constant; the presented algebra is "
        "degenerate");
  NCPoly rhs = q * (Scalar(1) / lc);
  rhs.add_term(lead, Scalar(-1));
  rhs = -rhs;
  return RewriteRule{lead, rhs};
}

struct OverlapTask {
  Word w;
  int r1, r2;
  std::size_t pos1, pos2;
  friend bool operator<(const OverlapTask& a, const OverlapTask& b) {
    return std::tie(a.w, a.r1, a.r2, a.pos1, a.pos2) <
           std::tie(b.w, b.r1, b.r2, b.pos1, b.pos2);
  }
};

/// All overlap ambiguities between lhs of rule i and lhs of rule j whose
/// combined word has degree <= bound: proper overlaps (a suffix of one is a
/// prefix of the other) and containments.
inline void overlap_tasks(const std::vector<RewriteRule>& rules, int i, int j,
                          int bound, std::set<OverlapTask>& out) {
  const Word& a = rules[i].lhs;
  const Word& b = rules[j].lhs;
  // suffix of a == prefix of b
  for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
    bool match = true;
    for (std::size_t t = 0; t < k && match; ++t)
      match = a[a.size() - k + t] == b[t];
    if (!match) continue;
    Word w = a * b.subword(k, b.size() - k);
    if (static_cast<int>(w.size()) > bound) continue;
    out.insert(OverlapTask{w, i, j, 0, a.size() - k});
  }
  // b contained in a
  if (b.size() < a.size() && static_cast<int>(a.size()) <= bound) {
    for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos)
      if (a.matches_at(b, pos)) out.insert(OverlapTask{a, i, j, 0, pos});
  }
}

inline NCPoly apply_rule_at(const Word& w, std::size_t pos,
                            const RewriteRule& rule, Alphabet alpha) {
  NCPoly out(alpha);
  for (const auto& [rw, rc] : rule.rhs.terms())
    out.add_term(Word::splice(w, pos, rule.lhs.size(), rw), rc);
  return out;
}

}  // namespace detail

struct ConfluenceReport {
  std::size_t overlaps_checked = 0;
  std::vector<Word> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

/// Exhaustively checks that every overlap ambiguity of combined degree
/// <= bound resolves to a common normal form under the current rules.
inline ConfluenceReport check_local_confluence(const Presentation& p, int bound) {
  std::set<detail::OverlapTask> tasks;
  const auto& rules = p.rules();
  for (int i = 0; i < static_cast<int>(rules.size()); ++i)
    for (int j = 0; j < static_cast<int>(rules.size()); ++j)
      detail::overlap_tasks(rules, i, j, bound, tasks);
  ConfluenceReport rep;
  Reducer reduce(p);
  for (const auto& t : tasks) {
    ++rep.overlaps_checked;
    NCPoly q1 = reduce.nf(detail::apply_rule_at(t.w, t.pos1, rules[t.r1], p.alphabet()));
    NCPoly q2 = reduce.nf(detail::apply_rule_at(t.w, t.pos2, rules[t.r2], p.alphabet()));
    if (q1 != q2) rep.unresolved.push_back(t.w);
  }
  return rep;
}

/// Degree-bounded diamond-lemma completion: adds rules until every overlap
/// of combined degree <= degree_bound resolves, then certifies that degree.
/// Idempotent at a fixed bound.
inline Presentation complete(const Presentation& input, int degree_bound) {
  for (const NCPoly& r : input.relations())
    if (r.degree() > degree_bound)
      throw ParameterError("completion bound below relation degree");

  Presentation work(input.name(), input.alphabet(), input.n());
  work.set_relations(input.relations());

  std::vector<RewriteRule> rules;
  std::set<detail::OverlapTask> queue;

  auto push_relation = [&](const NCPoly& rel) {
    work.set_rules(rules);
    NCPoly q = Reducer(work).nf(rel);
    if (q.is_zero()) return;
    rules.push_back(detail::orient_relation(q));
    work.set_rules(rules);
    int m = static_cast<int>(rules.size()) - 1;
    for (int k = 0; k < static_cast<int>(rules.size()); ++k) {
      detail::overlap_tasks(rules, m, k, degree_bound, queue);
      if (k != m) detail::overlap_tasks(rules, k, m, degree_bound, queue);
    }
  };

  auto process_queue = [&]() {
    while (!queue.empty()) {
      // The reducer cache stays valid until a new rule is added.
      Reducer reduce(work);
      while (!queue.empty()) {
        detail::OverlapTask t = *queue.begin();
        queue.erase(queue.begin());
        NCPoly q1 = reduce.nf(detail::apply_rule_at(t.w, t.pos1, rules[t.r1], work.alphabet()));
        NCPoly q2 = reduce.nf(detail::apply_rule_at(t.w, t.pos2, rules[t.r2], work.alphabet()));
        NCPoly d = q1 - q2;
        if (!d.is_zero()) {
          push_relation(d);
          break;
        }
      }
    }
  };

  for (const NCPoly& rel : input.starred_relations()) push_relation(rel);
  for (const RewriteRule& r : input.rules()) {
    NCPoly rel = NCPoly::monomial(input.alphabet(), r.lhs) - r.rhs;
    push_relation(rel);
  }
  process_queue();

  // Inter-reduce and re-verify until stable: drop rules whose left word
  // contains another rule's left word, reduce right-hand sides, then check
  // all remaining overlaps again.
  for (int round = 0;; ++round) {
    if (round > 50) throw Error("completion did not stabilize");
    std::vector<RewriteRule> kept;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < rules.size() && !contained; ++j) {
        if (i == j || rules[j].lhs.size() > rules[i].lhs.size()) continue;
        if (rules[j].lhs.size() == rules[i].lhs.size() &&
            !(j < i && rules[j].lhs == rules[i].lhs))
          continue;
        for (std::size_t pos = 0; pos + rules[j].lhs.size() <= rules[i].lhs.size(); ++pos)
          if (rules[i].lhs.matches_at(rules[j].lhs, pos)) {
            contained = true;
            break;
          }
      }
      if (!contained) kept.push_back(rules[i]);
    }
    bool changed = kept.size() != rules.size();
    rules = std::move(kept);
    work.set_rules(rules);
    for (RewriteRule& r : rules) {
      NCPoly reduced = Reducer(work).nf(r.rhs);
      if (reduced != r.rhs) {
        r.rhs = std::move(reduced);
        changed = true;
      }
    }
    work.set_rules(rules);
    std::size_t before = rules.size();
    for (int i = 0; i < static_cast<int>(rules.size()); ++i)
      for (int j = 0; j < static_cast<int>(rules.size()); ++j)
        detail::overlap_tasks(rules, i, j, degree_bound, queue);
    process_queue();
    if (rules.size() != before) changed = true;
    if (!changed) break;
  }

  std::sort(rules.begin(), rules.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return a.lhs < b.lhs; });
  work.set_rules(rules);
  work.validate_orientation();
  work.set_certified_degree(degree_bound);
  return work;
}

// ---------------------------------------------------------------------------
// Named presentations
// ---------------------------------------------------------------------------

enum class Preset { o_plus, u_plus, s1, su2 };

namespace detail {

inline NCPoly gen(Alphabet a, GenSym g) { return NCPoly::generator(a, g); }

inline std::vector<NCPoly> o_plus_relations(Alphabet a, int n) {
  std::vector<NCPoly> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      NCPoly col(a), row(a);
      for (int k = 1; k <= n; ++k) {
        col += gen(a, GenSym::v(k, i)) * gen(a, GenSym::v(k, j));
        row += gen(a, GenSym::v(i, k)) * gen(a, GenSym::v(j, k));
      }
      if (i == j) {
        col -= NCPoly::one(a);
        row -= NCPoly::one(a);
      }
      rels.push_back(col);
      rels.push_back(row);
    }
  return rels;
}

inline std::vector<NCPoly> u_plus_relations(Alphabet a, int n) {
  std::vector<NCPoly> rels;
  auto u = [&](int i, int j, bool star) { return gen(a, GenSym::u(i, j, star)); };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      NCPoly e1(a), e2(a), e3(a), e4(a);
      for (int k = 1; k <= n; ++k) {
        e1 += u(k, i, true) * u(k, j, false);   // u* u = 1
        e2 += u(i, k, false) * u(j, k, true);   // u u* = 1
        e3 += u(k, i, false) * u(k, j, true);   // ubar* ubar = 1
        e4 += u(i, k, true) * u(j, k, false);   // ubar ubar* = 1
      }
      if (i == j)
        for (NCPoly* e : {&e1, &e2, &e3, &e4}) *e -= NCPoly::one(a);
      rels.push_back(e1);
      rels.push_back(e2);
      rels.push_back(e3);
      rels.push_back(e4);
    }
  return rels;
}

inline std::vector<NCPoly> s1_relations(Alphabet a) {
  NCPoly z = gen(a, GenSym::z(false)), zs = gen(a, GenSym::z(true));
  return {z * zs - NCPoly::one(a), zs * z - NCPoly::one(a)};
}

inline std::vector<NCPoly> su2_relations(Alphabet a) {
  NCPoly al = gen(a, GenSym::alpha(false)), als = gen(a, GenSym::alpha(true));
  NCPoly ga = gen(a, GenSym::gamma(false)), gas = gen(a, GenSym::gamma(true));
  NCPoly one = NCPoly::one(a);
  // The printed relation table plus the two star-commutations obtained by
  // applying the involution to the anticommutation relations.
  return {
      als * al + gas * ga - one,
      al * als + ga * gas - one,
      ga * gas - gas * ga,
      al * ga + ga * al,
      al * gas + gas * al,
      als * ga + ga * als,
      als * gas + gas * als,
  };
}

}  // namespace detail

/// Construct a presentation from a *-closed relation set: relations are
/// star-closed, reduced against one another and oriented into rules.
inline Presentation make_presentation_from_relations(std::string name,
                                                     Alphabet alphabet, int n,
                                                     std::vector<NCPoly> relations) {
  Presentation p(std::move(name), alphabet, n);
  p.set_relations(std::move(relations));
  std::vector<RewriteRule> rules;
  for (const NCPoly& rel : p.starred_relations()) {
    p.set_rules(rules);
    NCPoly q = Reducer(p).nf(rel);
    if (q.is_zero()) continue;
    rules.push_back(detail::orient_relation(q));
  }
  p.set_rules(std::move(rules));
  p.validate_orientation();
  return p;
}

inline Presentation make_presentation(Preset which, int n = 0) {
  switch (which) {
    case Preset::o_plus: {
      if (n < 2) throw ParameterError("O_n^+ needs n >= 2");
      Alphabet a = Alphabet::o_plus(n);
      return make_presentation_from_relations("o+", a, n,
                                              detail::o_plus_relations(a, n));
    }
    case Preset::u_plus: {
      if (n < 2) throw ParameterError("U_n^+ needs n >= 2");
      Alphabet a = Alphabet::u_plus(n);
      return make_presentation_from_relations("u+", a, n,
                                              detail::u_plus_relations(a, n));
    }
    case Preset::s1: {
      Alphabet a = Alphabet::s1();
      return make_presentation_from_relations("s1", a, 0,
                                              detail::s1_relations(a));
    }
    case Preset::su2: {
      Alphabet a = Alphabet::su2();
      return make_presentation_from_relations("su2", a, 0,
                                              detail::su2_relations(a));
    }
  }
  throw ParameterError("unknown preset");
}

/// Free product of two presented algebras with disjoint alphabets.  Normal
/// words alternate between factor blocks, each block in factor normal form;
/// since rule left-hand sides live inside single factors, the union rewrite
/// system computes exactly that.
struct FreeProductPresentation {
  Presentation first;
  Presentation second;
  Presentation combined;
};

inline FreeProductPresentation make_free_product(Presentation a, Presentation b) {
  for (Family f : {Family::alpha, Family::gamma, Family::z, Family::v, Family::u})
    if (a.alphabet().has(f) && b.alphabet().has(f))
      throw AlphabetError("free product factors must have disjoint alphabets");

  Alphabet ca = a.alphabet(), cb = b.alphabet();
  Alphabet merged;
  if (ca == Alphabet::s1() && cb.has(Family::v)) {
    merged = Alphabet::h(cb.n());
  } else if (cb == Alphabet::s1() && ca.has(Family::v)) {
    merged = Alphabet::h(ca.n());
  } else {
    throw AlphabetError("unsupported free product combination");
  }

  auto retag_poly = [&](const NCPoly& p) {
    NCPoly out(merged);
    for (const auto& [w, c] : p.terms()) out.add_term(w, c);
    return out;
  };

  int n = std::max(a.n(), b.n());
  Presentation comb(a.name() + "*" + b.name(), merged, n);
  std::vector<NCPoly> rels;
  for (const NCPoly& r : a.relations()) rels.push_back(retag_poly(r));
  for (const NCPoly& r : b.relations()) rels.push_back(retag_poly(r));
  comb.set_relations(std::move(rels));
  std::vector<RewriteRule> rules;
  for (const RewriteRule& r : a.rules())
    rules.push_back(RewriteRule{r.lhs, retag_poly(r.rhs)});
  for (const RewriteRule& r : b.rules())
    rules.push_back(RewriteRule{r.lhs, retag_poly(r.rhs)});
  comb.set_rules(std::move(rules));
  comb.set_certified_degree(std::min(a.certified_degree(), b.certified_degree()));

  FreeProductPresentation fp{std::move(a), std::move(b), std::move(comb)};
  return fp;
}

/// Pol(H_n) = Pol(S^1) * Pol(O_n^+), both factors completed to the bound.
inline FreeProductPresentation make_hn(int n, int degree_bound = 0) {
  Presentation s1 = make_presentation(Preset::s1);
  Presentation op = make_presentation(Preset::o_plus, n);
  if (degree_bound > 0) {
    s1 = complete(s1, degree_bound);
    op = complete(op, degree_bound);
  }
  FreeProductPresentation fp = make_free_product(std::move(s1), std::move(op));
  fp.combined.set_certified_degree(
      std::min(fp.first.certified_degree(), fp.second.certified_degree()));
  return fp;
}

inline NCPoly free_product_normal_form(const NCPoly& p,
                                       const FreeProductPresentation& fp) {
  return normal_form(p, fp.combined);
}

/// All irreducible words of degree <= max_degree, in graded order.
inline std::vector<Word> basis_words(const Presentation& p, int max_degree) {
  std::vector<Word> out{Word()};
  std::vector<Word> frontier{Word()};
  std::vector<GenSym> gens = p.alphabet().generators(true);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (GenSym g : gens) {
        Word cand = w;
        cand.push_back(g);
        bool reducible = false;
        for (const RewriteRule& r : p.rules()) {
          if (r.lhs.size() > cand.size()) continue;
          if (cand.matches_at(r.lhs, cand.size() - r.lhs.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(cand);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qhopf
