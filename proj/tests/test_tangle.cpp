#include "sl3web/tangle.hpp"

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "sl3web/parse.hpp"

using namespace sl3web;
using testutil::poly;

namespace {
const Alphabet& T = Alphabet::tangles();
Word tw(const char* text) { return parse_word(text, T); }

// Frozen from the state-sum oracle at first derivation; cross-checked by hand
// against the skein relation q^-3 p(L+) - q^3 p(L-) = -(q - q^-1) p(L0).
const LaurentPoly kUnknot = poly({{2, 1}, {0, 1}, {-2, 1}});
const LaurentPoly kHopfPos =
    poly({{10, 1}, {8, 2}, {6, 2}, {4, 2}, {2, 1}, {0, 1}});
const LaurentPoly kTrefoilRight =
    poly({{14, -1}, {12, -1}, {8, 1}, {6, 2}, {4, 1}, {2, 1}});
const LaurentPoly kFigureEight =
    poly({{8, 1}, {6, 1}, {0, -1}, {-6, 1}, {-8, 1}});
}  // namespace

TEST_CASE("crossing images") {
  WebCombo xp = crossing_image('+');
  REQUIRE(xp.terms().size() == 2);
  CHECK(xp.terms().at(parallel_web().canonical_key()).coeff == q_power(2));
  CHECK(xp.terms().at(hourglass_web().canonical_key()).coeff == -q_power(3));

  WebCombo xm = crossing_image('-');
  CHECK(xm.terms().at(parallel_web().canonical_key()).coeff == q_power(-2));
  CHECK(xm.terms().at(hourglass_web().canonical_key()).coeff == -q_power(-3));

  CHECK(normalize_combo(combo_compose(xp, xm)) ==
        WebCombo::single(WebDiagram::identity(sign_string("++"))));
}

TEST_CASE("hourglass web shape") {
  const WebDiagram& h = hourglass_web();
  CHECK(h.source_sig() == sign_string("++"));
  CHECK(h.target_sig() == sign_string("++"));
  CHECK(h.interior_vertex_count() == 2);
  CHECK(h.edge_count() == 5);
  CHECK_FALSE(h.find_reducible());  // irreducible
}

TEST_CASE("sl3_invariant on small words") {
  CHECK(sl3_invariant(Word::identity(sign_string("+"))) ==
        WebCombo::single(WebDiagram::identity(sign_string("+"))));
  CHECK(sl3_invariant(tw("X+ . X-")) ==
        WebCombo::single(WebDiagram::identity(sign_string("++"))));
  // the kink of relation (e+)
  CHECK(sl3_invariant(tw("(I+ * N-) . (X+ * I-) . (I+ * U-)")) ==
        WebCombo::single(WebDiagram::identity(sign_string("+"))));
}

TEST_CASE("sl3_state_sum") {
  // zero crossings: the tangle's own web with coefficient 1
  Word cup = tw("U+");
  CHECK(sl3_state_sum(cup) ==
        WebCombo::single(WebDiagram::from_layered(normalize(cup))));

  // one positive crossing: exactly the two weighted resolutions
  WebCombo x = sl3_state_sum(tw("X+"));
  REQUIRE(x.terms().size() == 2);
  CHECK(x.terms().at(parallel_web().canonical_key()).coeff == q_power(2));
  CHECK(x.terms().at(hourglass_web().canonical_key()).coeff == -q_power(3));

  // the crossing cap is enforced
  CHECK_THROWS_AS(sl3_state_sum(tw("(X+ . X+ . X+ . X+) . (X- . X-)"), 3),
                  TooManyCrossingsError);
}

TEST_CASE("state sum equals the functor on random tangle words") {
  Rng rng(24680);
  for (int i = 0; i < 30; ++i) {
    LayeredWord lw = randword::random_grow(rng, T, SignString::empty(), 5, 5);
    Word w = layered_to_word(lw);
    CHECK(sl3_state_sum(w) == sl3_invariant(w));
  }
}

TEST_CASE("functor laws hold after normalization") {
  Rng rng(112358);
  for (int i = 0; i < 15; ++i) {
    LayeredWord lo = randword::random_grow(rng, T, SignString::empty(), 4, 2);
    LayeredWord hi = randword::random_grow(rng, T, lo.target, 3, 2);
    Word wl = layered_to_word(lo), wh = layered_to_word(hi);
    CHECK(sl3_invariant(Word::compose(wh, wl)) ==
          normalize_combo(combo_compose(sl3_invariant(wh), sl3_invariant(wl))));
    CHECK(sl3_invariant(Word::tensor(wl, wh)) ==
          normalize_combo(combo_tensor(sl3_invariant(wl), sl3_invariant(wh))));
  }
}

TEST_CASE("reidemeister suite passes") {
  RelationReport rep = reidemeister_suite();
  CHECK(rep.outcomes.size() == 13);
  for (const auto& o : rep.outcomes) {
    INFO(o.name);
    CHECK(o.passed);
  }
}

TEST_CASE("sl3_link_polynomial") {
  CHECK(sl3_link_polynomial(tw("N+ . U+")) == kUnknot);
  CHECK_THROWS_AS(sl3_link_polynomial(tw("U+")), NotALinkError);
}

TEST_CASE("catalog entries are closed links with frozen values") {
  for (const auto& name : catalog_names()) {
    Word w = catalog_word(name);
    auto [s, t] = word_type(w);
    CHECK(s.is_empty());
    CHECK(t.is_empty());
  }
  CHECK(sl3_link_polynomial(catalog_word("unknot")) == kUnknot);
  CHECK(sl3_link_polynomial(catalog_word("hopf_pos")) == kHopfPos);
  CHECK(sl3_link_polynomial(catalog_word("hopf_neg")) == kHopfPos.bar());
  CHECK(sl3_link_polynomial(catalog_word("trefoil_right")) == kTrefoilRight);
  CHECK(sl3_link_polynomial(catalog_word("trefoil_left")) == kTrefoilRight.bar());
  CHECK(sl3_link_polynomial(catalog_word("figure_eight")) == kFigureEight);
}

TEST_CASE("mirror behavior") {
  // swapping X+ and X- and substituting q -> q^-1 recovers the original
  for (const char* name : {"hopf_pos", "trefoil_right", "figure_eight"}) {
    Word w = catalog_word(name);
    CHECK(sl3_link_polynomial(mirror_word(w)).bar() == sl3_link_polynomial(w));
  }
  // the figure eight is amphichiral: its value is bar-invariant
  CHECK(kFigureEight.bar() == kFigureEight);
}

TEST_CASE("invariance under relation rewrites") {
  Rng rng(86420);
  for (int i = 0; i < 12; ++i) {
    LayeredWord link = randword::random_link(rng, 3, 4);
    LaurentPoly reference = sl3_link_polynomial(layered_to_word(link));
    LayeredWord moved = link;
    randword::insert_random_tangle_move(rng, moved);
    CHECK(sl3_link_polynomial(layered_to_word(moved)) == reference);
  }
}
