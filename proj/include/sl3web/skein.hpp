#pragma once

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "sl3web/errors.hpp"
#include "sl3web/laurent.hpp"
#include "sl3web/webgraph.hpp"

namespace sl3web {

/// Value of an oriented loop: q^2 + 1 + q^-2.
inline const LaurentPoly& loop_value() {
  static const LaurentPoly v = q_power(2) + q_power(0) + q_power(-2);
  return v;
}

/// Value of a digon against its arc: q + q^-1.
inline const LaurentPoly& digon_value() {
  static const LaurentPoly v = q_power(1) + q_power(-1);
  return v;
}

/// A finitely supported Z[q,q^-1]-combination of webs with a common boundary:
/// a morphism of the linear web category. Terms are keyed by the canonical
/// code so isotopic webs combine; each key keeps one concrete representative
/// for further rewriting. No term carries the zero polynomial.
class WebCombo {
 public:
  struct Term {
    WebDiagram web;
    LaurentPoly coeff;
  };
  using Terms = std::map<std::string, Term>;

  WebCombo() = default;

  static WebCombo zero(SignString source, SignString target) {
    WebCombo c;
    c.src_ = std::move(source);
    c.tgt_ = std::move(target);
    return c;
  }

  static WebCombo single(const WebDiagram& w, LaurentPoly coeff = LaurentPoly::one()) {
    WebCombo c;
    c.src_ = w.source_sig();
    c.tgt_ = w.target_sig();
    if (!coeff.is_zero()) c.terms_[w.canonical_key()] = Term{w, std::move(coeff)};
    return c;
  }

  const SignString& source_sig() const { return src_; }
  const SignString& target_sig() const { return tgt_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WebCombo scaled(const LaurentPoly& p) const {
    WebCombo c = zero(src_, tgt_);
    if (p.is_zero()) return c;
    for (const auto& [k, t] : terms_) c.terms_[k] = Term{t.web, t.coeff * p};
    return c;
  }

  void add_term(const WebDiagram& w, const LaurentPoly& coeff) {
    if (w.source_sig() != src_ || w.target_sig() != tgt_)
      throw SignatureMismatchError("term boundary does not match the combination");
    if (coeff.is_zero()) return;
    const std::string& k = w.canonical_key();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, Term{w, coeff});
    } else {
      it->second.coeff += coeff;
      if (it->second.coeff.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const WebCombo& a, const WebCombo& b) {
    if (a.src_ != b.src_ || a.tgt_ != b.tgt_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second.coeff == ib->second.coeff)) return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, t] : terms_) {
      if (!first) out << "  +  ";
      first = false;
      out << "(" << t.coeff.str() << ") * [" << k << "]";
    }
    return out.str();
  }

 private:
  SignString src_, tgt_;
  Terms terms_;
};

inline WebCombo combo_add(const WebCombo& a, const WebCombo& b) {
  if (a.source_sig() != b.source_sig() || a.target_sig() != b.target_sig())
    throw SignatureMismatchError("cannot add combinations with different boundaries");
  WebCombo out = a;
  for (const auto& [_, t] : b.terms()) out.add_term(t.web, t.coeff);
  return out;
}

/// Bilinear extension of stacking. The result is not normalized.
inline WebCombo combo_compose(const WebCombo& upper, const WebCombo& lower) {
  if (lower.target_sig() != upper.source_sig())
    throw SignatureMismatchError("cannot compose: boundaries do not meet");
  WebCombo out = WebCombo::zero(lower.source_sig(), upper.target_sig());
  for (const auto& [_, ut] : upper.terms())
    for (const auto& [__, lt] : lower.terms())
      out.add_term(web_compose(ut.web, lt.web), ut.coeff * lt.coeff);
  return out;
}

/// Bilinear extension of juxtaposition.
inline WebCombo combo_tensor(const WebCombo& left, const WebCombo& right) {
  WebCombo out = WebCombo::zero(left.source_sig() + right.source_sig(),
                                left.target_sig() + right.target_sig());
  for (const auto& [_, lt] : left.terms())
    for (const auto& [__, rt] : right.terms())
      out.add_term(web_tensor(lt.web, rt.web), lt.coeff * rt.coeff);
  return out;
}

/// One loop/digon/square rewrite of a single diagram, or nothing when the
/// diagram is irreducible. Loop: drop a circle, scale by q^2+1+q^-2. Digon:
/// the arc replacement scaled by q+q^-1. Square: the sum of the two
/// parallel-side replacements.
inline std::optional<WebCombo> reduce_step_pattern(const WebDiagram& w,
                                                   const ReduciblePattern& p) {
  switch (p.kind) {
    case ReduciblePattern::Kind::Loop:
      return WebCombo::single(w.remove_one_loop(), loop_value());
    case ReduciblePattern::Kind::Digon:
      return WebCombo::single(w.reduce_digon(p), digon_value());
    case ReduciblePattern::Kind::Square: {
      auto [s1, s2] = w.reduce_square(p);
      WebCombo out = WebCombo::single(s1);
      out.add_term(s2, LaurentPoly::one());
      return out;
    }
  }
  return std::nullopt;
}

inline std::optional<WebCombo> reduce_step(const WebDiagram& w) {
  auto p = w.find_reducible();
  if (!p) return std::nullopt;
  return reduce_step_pattern(w, *p);
}

/// Rewrites every term until irreducible (no loop, digon or square). Each
/// step strictly decreases (vertex count, free loops) lexicographically;
/// a violation is an implementation bug and is surfaced, not looped on.
/// With a seed, the reducible term and the pattern inside it are chosen at
/// random; the result must not depend on the choices (confluence).
inline WebCombo normalize_combo(const WebCombo& c, std::optional<std::uint64_t> seed = {}) {
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  WebCombo done = WebCombo::zero(c.source_sig(), c.target_sig());
  WebCombo pending = c;

  while (!pending.is_zero()) {
    // Collect the reducible terms still pending.
    std::vector<std::string> reducible;
    WebCombo next = WebCombo::zero(c.source_sig(), c.target_sig());
    for (const auto& [k, t] : pending.terms()) {
      if (t.web.find_reducible()) {
        reducible.push_back(k);
      } else {
        if (t.web.is_closed() && t.web.interior_vertex_count() > 0)
          throw MapInvariantError(
              "closed web with vertices has no loop, digon or square\n" + t.web.dump());
        done.add_term(t.web, t.coeff);
      }
    }
    if (reducible.empty()) break;

    std::string pick = reducible.front();
    if (rng) pick = reducible[(*rng)() % reducible.size()];
    const auto& term = pending.terms().at(pick);
    const WebDiagram web = term.web;
    const LaurentPoly coeff = term.coeff;

    std::optional<WebCombo> step;
    if (rng) {
      auto all = web.find_all_reducible();
      step = reduce_step_pattern(web, all[(*rng)() % all.size()]);
    } else {
      step = reduce_step(web);
    }

    const auto parent_measure = std::make_pair(web.interior_vertex_count(), web.free_loops());
    for (const auto& [_, nt] : step->terms()) {
      const auto child_measure =
          std::make_pair(nt.web.interior_vertex_count(), nt.web.free_loops());
      if (!(child_measure < parent_measure))
        throw NonterminatingReductionError("reduction step did not decrease (vertices, loops)");
    }

    // Fold the step back in; untouched reducible terms stay pending.
    for (const auto& k : reducible) {
      if (k == pick) continue;
      const auto& t = pending.terms().at(k);
      next.add_term(t.web, t.coeff);
    }
    next = combo_add(next, step->scaled(coeff));
    pending = std::move(next);
  }
  return done;
}

/// The Kuperberg bracket of a closed web: the empty-diagram coefficient of
/// its normal form (1 for the empty diagram itself, 0 for the zero combo).
inline LaurentPoly kuperberg_bracket(const WebDiagram& w) {
  if (!w.is_closed()) throw NotClosedError("the bracket is defined on closed webs only");
  WebCombo nf = normalize_combo(WebCombo::single(w));
  if (nf.is_zero()) return LaurentPoly::zero();
  if (nf.terms().size() != 1)
    throw MapInvariantError("closed normal form is not a multiple of the empty diagram");
  const auto& t = nf.terms().begin()->second;
  if (t.web.vertex_count() != 0 || t.web.free_loops() != 0)
    throw MapInvariantError("closed normal form is not the empty diagram\n" + t.web.dump());
  return t.coeff;
}

}  // namespace sl3web
