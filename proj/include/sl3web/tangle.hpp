#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sl3web/errors.hpp"
#include "sl3web/laurent.hpp"
#include "sl3web/parse.hpp"
#include "sl3web/skein.hpp"
#include "sl3web/webgraph.hpp"
#include "sl3web/word.hpp"

namespace sl3web {

/// λ± expanded over the web alphabet: (I± ⊗ n∓) ∘ (Y± ⊗ I∓).
inline Word lambda_word(char sign) {
  const Alphabet& a = Alphabet::webs();
  if (sign == '+') {
    return Word::compose(
        Word::tensor(Word::identity(sign_string("+")), Word::gen(a.at("N-"))),
        Word::tensor(Word::gen(a.at("Y+")), Word::identity(sign_string("-"))));
  }
  return Word::compose(
      Word::tensor(Word::identity(sign_string("-")), Word::gen(a.at("N+"))),
      Word::tensor(Word::gen(a.at("Y-")), Word::identity(sign_string("+"))));
}

/// The two-vertex web between parallel strands: a sink fed by both lower
/// strands, joined to a source feeding both upper strands. This is the second
/// local picture a crossing resolves to.
inline const WebDiagram& hourglass_web() {
  static const WebDiagram h = [] {
    Word w = Word::compose(Word::gen(Alphabet::webs().at("Y+")), lambda_word('-'));
    WebDiagram d = WebDiagram::from_layered(normalize(w));
    d.validate();
    return d;
  }();
  return h;
}

inline const WebDiagram& parallel_web() {
  static const WebDiagram p = WebDiagram::identity(sign_string("++"));
  return p;
}

/// Image of a crossing in the linear web category:
///   X+ ↦ q^2 · || − q^3 · H,   X− ↦ q^-2 · || − q^-3 · H.
inline WebCombo crossing_image(char sign) {
  WebCombo c = WebCombo::single(parallel_web(), q_power(sign == '+' ? 2 : -2));
  c.add_term(hourglass_web(), -q_power(sign == '+' ? 3 : -3));
  return c;
}

/// Generator images for the tangle-to-linear-webs functor.
inline const std::map<std::string, WebCombo>& tangle_gen_images() {
  static const std::map<std::string, WebCombo> images = [] {
    std::map<std::string, WebCombo> m;
    const Alphabet& w = Alphabet::webs();
    for (const char* n : {"U+", "U-", "N+", "N-"})
      m.emplace(n, WebCombo::single(WebDiagram::generator(w.at(n))));
    m.emplace("X+", crossing_image('+'));
    m.emplace("X-", crossing_image('-'));
    return m;
  }();
  return images;
}

/// Strict tensor structure on web combinations. With `normalize_each_step`
/// every composite/tensor is reduced immediately, keeping term counts small;
/// the two orders agree by well-definedness of the skein quotient.
inline TensorOps<WebCombo> lweb_ops(bool normalize_each_step = true) {
  TensorOps<WebCombo> ops;
  ops.compose = [normalize_each_step](const WebCombo& u, const WebCombo& l) {
    WebCombo r = combo_compose(u, l);
    return normalize_each_step ? normalize_combo(r) : r;
  };
  ops.tensor = [normalize_each_step](const WebCombo& a, const WebCombo& b) {
    WebCombo r = combo_tensor(a, b);
    return normalize_each_step ? normalize_combo(r) : r;
  };
  ops.identity = [](const SignString& s) { return WebCombo::single(WebDiagram::identity(s)); };
  return ops;
}

/// F(t): the tangle invariant, in normal form.
inline WebCombo sl3_invariant(const Word& tangle) {
  return normalize_combo(extend_functor(tangle, tangle_gen_images(), lweb_ops(true)));
}

/// Crossing layer indices of a layered tangle word, ordered top to bottom.
inline std::vector<std::size_t> crossing_layers_top_down(const LayeredWord& lw) {
  std::vector<std::size_t> out;
  for (std::size_t i = lw.layers.size(); i-- > 0;) {
    const std::string& n = lw.layers[i].gen.name;
    if (n == "X+" || n == "X-") out.push_back(i);
  }
  return out;
}

/// The web of one resolution: bits[j] = true picks the hourglass at the j-th
/// crossing in top-to-bottom order, false the parallel strands.
inline WebDiagram resolve_tangle(const LayeredWord& lw, const std::vector<bool>& bits) {
  const auto crossings = crossing_layers_top_down(lw);
  std::map<std::size_t, bool> choice;
  for (std::size_t j = 0; j < crossings.size(); ++j) choice[crossings[j]] = bits.at(j);
  WebDiagram acc = WebDiagram::identity(lw.source);
  for (std::size_t i = 0; i < lw.layers.size(); ++i) {
    const Layer& ly = lw.layers[i];
    WebDiagram local;
    if (auto it = choice.find(i); it != choice.end())
      local = it->second ? hourglass_web() : parallel_web();
    else
      local = WebDiagram::generator(ly.gen);
    if (!ly.left.is_empty()) local = web_tensor(WebDiagram::identity(ly.left), local);
    if (!ly.right.is_empty()) local = web_tensor(local, WebDiagram::identity(ly.right));
    acc = web_compose(local, acc);
  }
  return acc;
}

/// Product of the per-crossing weights of a resolution: a positive crossing
/// contributes q^2 (parallel) or -q^3 (hourglass); a negative one q^-2 or
/// -q^-3.
inline LaurentPoly resolution_coefficient(const LayeredWord& lw, const std::vector<bool>& bits) {
  const auto crossings = crossing_layers_top_down(lw);
  LaurentPoly coeff = LaurentPoly::one();
  for (std::size_t j = 0; j < crossings.size(); ++j) {
    const bool positive = lw.layers[crossings[j]].gen.name == "X+";
    if (bits.at(j))
      coeff *= -q_power(positive ? 3 : -3);
    else
      coeff *= q_power(positive ? 2 : -2);
  }
  return coeff;
}

/// Brute-force resolution state sum: enumerate all 2^n crossing resolutions,
/// weight each closed-form web by its coefficient, sum, and normalize once at
/// the end.
inline WebCombo sl3_state_sum(const Word& tangle, std::size_t max_crossings = 20) {
  LayeredWord lw = normalize(tangle);
  const std::size_t n = crossing_layers_top_down(lw).size();
  if (n > max_crossings)
    throw TooManyCrossingsError("state sum over " + std::to_string(n) +
                                " crossings exceeds the cap of " +
                                std::to_string(max_crossings));
  WebCombo sum = WebCombo::zero(lw.source, lw.target);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<bool> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = (mask >> j) & 1;
    sum.add_term(resolve_tangle(lw, bits), resolution_coefficient(lw, bits));
  }
  return normalize_combo(sum);
}

/// The polynomial of a link word (empty boundary): the empty-diagram
/// coefficient of its invariant.
inline LaurentPoly sl3_link_polynomial(const Word& tangle) {
  auto [s, t] = word_type(tangle);
  if (!s.is_empty() || !t.is_empty())
    throw NotALinkError("word has boundary " + s.str() + " -> " + t.str() +
                        "; the polynomial is defined for links only");
  WebCombo inv = sl3_invariant(tangle);
  if (inv.is_zero()) return LaurentPoly::zero();
  if (inv.terms().size() != 1)
    throw MapInvariantError("link invariant did not reduce to the empty diagram");
  return inv.terms().begin()->second.coeff;
}

/// Swap X+ and X- throughout a tangle word.
inline Word mirror_word(const Word& w) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen: {
      if (n.gen.name == "X+") return Word::gen(Alphabet::tangles().at("X-"));
      if (n.gen.name == "X-") return Word::gen(Alphabet::tangles().at("X+"));
      return w;
    }
    case WordKind::Id:
      return w;
    case WordKind::Compose:
      return Word::compose(mirror_word(w.upper()), mirror_word(w.lower()));
    case WordKind::Tensor:
      return Word::tensor(mirror_word(w.left()), mirror_word(w.right()));
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Relation suites
// ---------------------------------------------------------------------------

/// The presentation relations of the web category, as word pairs.
inline const std::vector<std::tuple<std::string, Word, Word>>& web_presentation_relations() {
  static const auto rels = [] {
    const Alphabet& a = Alphabet::webs();
    auto W = [&a](const char* s) { return parse_word(s, a); };
    std::vector<std::tuple<std::string, Word, Word>> r;
    r.emplace_back("R1a+", W("(N- * I+) . (I+ * U+)"), W("I+"));
    r.emplace_back("R1a-", W("(N+ * I-) . (I- * U-)"), W("I-"));
    r.emplace_back("R1b+", W("I+"), W("(I+ * N+) . (U- * I+)"));
    r.emplace_back("R1b-", W("I-"), W("(I- * N-) . (U+ * I-)"));
    r.emplace_back("R2+", W("(I+ * N-) . (Y+ * I-)"), W("(N+ * I+) . (I- * Y+)"));
    r.emplace_back("R2-", W("(I- * N+) . (Y- * I+)"), W("(N- * I-) . (I+ * Y-)"));
    return r;
  }();
  return rels;
}

/// Checks the web presentation relations under the identity assignment into
/// web diagrams, compared by canonical key.
inline RelationReport web_presentation_suite() {
  std::map<std::string, WebDiagram> images;
  for (const Generator& g : Alphabet::webs().all()) images.emplace(g.name, WebDiagram::generator(g));
  TensorOps<WebDiagram> ops;
  ops.compose = [](const WebDiagram& u, const WebDiagram& l) { return web_compose(u, l); };
  ops.tensor = [](const WebDiagram& a, const WebDiagram& b) { return web_tensor(a, b); };
  ops.identity = [](const SignString& s) { return WebDiagram::identity(s); };
  return check_relation_set<WebDiagram>(
      web_presentation_relations(), images, ops,
      [](const WebDiagram& d) { return d; },
      [](const WebDiagram& a, const WebDiagram& b) { return a.canonical_key() == b.canonical_key(); },
      [](const WebDiagram& d) { return d.dump(); });
}

/// Turaev's relations for the tangle category. Relation (a) carries both
/// equalities and both signs; (b), (c) and (e) carry their stated variants.
/// The factor printed "(I+ I- N-)" in (f)/(g) is transcribed as
/// "(I- * I+ * N-)", the unique strand count under which the composite
/// type-checks.
inline const std::vector<std::tuple<std::string, Word, Word>>& turaev_relations() {
  static const auto rels = [] {
    const Alphabet& a = Alphabet::tangles();
    auto W = [&a](const std::string& s) { return parse_word(s, a); };
    std::vector<std::tuple<std::string, Word, Word>> r;
    r.emplace_back("a+_zigzag1", W("(N- * I+) . (I+ * U+)"), W("I+"));
    r.emplace_back("a+_zigzag2", W("I+"), W("(I+ * N+) . (U- * I+)"));
    r.emplace_back("a-_zigzag1", W("(N+ * I-) . (I- * U-)"), W("I-"));
    r.emplace_back("a-_zigzag2", W("I-"), W("(I- * N-) . (U+ * I-)"));
    for (const char* x : {"X+", "X-"}) {
      std::string lhs = std::string("(I- * I- * N-) . (I- * I- * I+ * N- * I-) . (I- * I- * ") +
                        x + " * I- * I-) . (I- * U+ * I+ * I- * I-) . (U+ * I- * I-)";
      std::string rhs = std::string("(N+ * I- * I-) . (I- * N+ * I+ * I- * I-) . (I- * I- * ") +
                        x + " * I- * I-) . (I- * I- * I+ * U- * I-) . (I- * I- * U-)";
      r.emplace_back(std::string("b_") + x, W(lhs), W(rhs));
    }
    r.emplace_back("c_1", W("X+ . X-"), W("I+ * I+"));
    r.emplace_back("c_2", W("X- . X+"), W("I+ * I+"));
    r.emplace_back("d", W("(X+ * I+) . (I+ * X+) . (X+ * I+)"),
                   W("(I+ * X+) . (X+ * I+) . (I+ * X+)"));
    r.emplace_back("e+", W("(I+ * N-) . (X+ * I-) . (I+ * U-)"), W("I+"));
    r.emplace_back("e-", W("(I+ * N-) . (X- * I-) . (I+ * U-)"), W("I+"));
    r.emplace_back("f",
                   W("(I- * I+ * N-) . (I- * X+ * I-) . (U+ * I+ * I-) . "
                     "(N+ * I+ * I-) . (I- * X- * I-) . (I- * I+ * U-)"),
                   W("I- * I+"));
    r.emplace_back("g",
                   W("(N+ * I+ * I-) . (I- * X- * I-) . (I- * I+ * U-) . "
                     "(I- * I+ * N-) . (I- * X+ * I-) . (U+ * I+ * I-)"),
                   W("I+ * I-"));
    return r;
  }();
  return rels;
}

/// Verifies every Turaev relation under the tangle functor, with normal
/// forms compared term by term.
inline RelationReport reidemeister_suite() {
  return check_relation_set<WebCombo>(
      turaev_relations(), tangle_gen_images(), lweb_ops(true),
      [](const WebCombo& c) { return normalize_combo(c); },
      [](const WebCombo& a, const WebCombo& b) { return a == b; },
      [](const WebCombo& c) { return c.str(); });
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, std::string>>& catalog_sources() {
  static const std::vector<std::pair<std::string, std::string>> entries = {
      {"unknot", "N+ . U+"},
      {"hopf_pos",
       "(N+ * N-) . (I- * X+ * I-) . (I- * X+ * I-) . (U+ * U-)"},
      {"hopf_neg",
       "(N+ * N-) . (I- * X- * I-) . (I- * X- * I-) . (U+ * U-)"},
      {"trefoil_right",
       "(N+ * N-) . (I- * X+ * I-) . (I- * X+ * I-) . (I- * X+ * I-) . (U+ * U-)"},
      {"trefoil_left",
       "(N+ * N-) . (I- * X- * I-) . (I- * X- * I-) . (I- * X- * I-) . (U+ * U-)"},
      // Trace closure of the three-strand braid word (s1 s2^-1)^2.
      {"figure_eight",
       "N- . (I+ * N- * I-) . (I+ * I+ * N- * I- * I-) . "
       "(((I+ * X-) . (X+ * I+) . (I+ * X-) . (X+ * I+)) * (I- * I- * I-)) . "
       "(I+ * I+ * U- * I- * I-) . (I+ * U- * I-) . U-"},
  };
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [n, _] : catalog_sources()) out.push_back(n);
  return out;
}

inline Word catalog_word(const std::string& name) {
  for (const auto& [n, text] : catalog_sources())
    if (n == name) return parse_word(text, Alphabet::tangles());
  throw Error("no catalog entry named \"" + name + "\"");
}

}  // namespace sl3web
