#include "sl3web/webgraph.hpp"

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"
#include "sl3web/parse.hpp"
#include "sl3web/tangle.hpp"

using namespace sl3web;

namespace {
const Alphabet& W = Alphabet::webs();

WebDiagram web_of(const char* text) {
  return WebDiagram::from_layered(normalize(parse_word(text, W)));
}

WebDiagram theta() {
  // close the hourglass: caps on top, cups below
  WebDiagram h = hourglass_web();
  WebDiagram top = web_of("N+ * N-");
  WebDiagram mid = web_tensor(web_tensor(WebDiagram::identity(sign_string("-")), h),
                              WebDiagram::identity(sign_string("-")));
  WebDiagram bot = web_of("U+ * U-");
  WebDiagram d = web_compose(top, web_compose(mid, bot));
  d.validate();
  return d;
}
}  // namespace

TEST_CASE("webs from layered words") {
  // the empty layered word on (+) is a single upward strand
  LayeredWord id_plus{sign_string("+"), sign_string("+"), {}};
  WebDiagram strand = WebDiagram::from_layered(id_plus);
  strand.validate();
  CHECK(strand.vertex_count() == 2);
  CHECK(strand.edge_count() == 1);
  CHECK(strand.free_loops() == 0);
  CHECK(strand.canonical_key() == WebDiagram::identity(sign_string("+")).canonical_key());

  // one Y+ layer: one interior vertex, one bottom and two top boundary vertices
  WebDiagram y = web_of("Y+");
  y.validate();
  CHECK(y.interior_vertex_count() == 1);
  CHECK(y.vertex_count() == 4);
  CHECK(y.edge_count() == 3);
  CHECK(y.source_sig() == sign_string("-"));
  CHECK(y.target_sig() == sign_string("++"));

  // the zigzag word flattens to the identity strand
  WebDiagram zig = web_of("(N- * I+) . (I+ * U+)");
  zig.validate();
  CHECK(zig.canonical_key() == WebDiagram::identity(sign_string("+")).canonical_key());
}

TEST_CASE("composition") {
  WebDiagram y = web_of("Y+");
  CHECK(web_compose(WebDiagram::identity(y.target_sig()), y) == y);
  CHECK(web_compose(y, WebDiagram::identity(y.source_sig())) == y);

  // cap over cup closes into one free loop
  WebDiagram circle = web_compose(web_of("N+"), web_of("U+"));
  circle.validate();
  CHECK(circle.is_closed());
  CHECK(circle.free_loops() == 1);
  CHECK(circle.vertex_count() == 0);

  CHECK_THROWS_AS(web_compose(web_of("N+"), web_of("U-")), BoundaryMismatchError);
}

TEST_CASE("tensor") {
  WebDiagram y = web_of("Y-");
  CHECK(web_tensor(y, WebDiagram::empty()) == y);
  CHECK(web_tensor(WebDiagram::empty(), y) == y);
  CHECK(web_tensor(web_of("I+"), web_of("I-")) == WebDiagram::identity(sign_string("+-")));
  CHECK(web_tensor(WebDiagram::loops(1), WebDiagram::loops(1)).free_loops() == 2);
}

TEST_CASE("closedness") {
  CHECK(WebDiagram::empty().is_closed());
  CHECK_FALSE(web_of("I+").is_closed());
  CHECK(web_compose(web_of("N+"), web_of("U+")).is_closed());
}

TEST_CASE("find_reducible") {
  CHECK(WebDiagram::loops(1).find_reducible()->kind == ReduciblePattern::Kind::Loop);
  CHECK_FALSE(WebDiagram::empty().find_reducible());
  CHECK_FALSE(web_of("Y+").find_reducible());

  auto p = theta().find_reducible();
  REQUIRE(p);
  CHECK(p->kind == ReduciblePattern::Kind::Digon);
  // theta has two digon faces and a 2-gon outer walk; the deterministic scan
  // found one of them, and all of its darts sit on interior vertices
  for (int d : p->darts) CHECK(theta().interior(theta().owner(d)));

  // loop beats digon
  WebDiagram theta_with_loop = web_tensor(theta(), WebDiagram::loops(1));
  CHECK(theta_with_loop.find_reducible()->kind == ReduciblePattern::Kind::Loop);
}

TEST_CASE("closed webs with vertices always reduce") {
  Rng rng(1001);
  for (int i = 0; i < 60; ++i) {
    WebDiagram web = testutil::random_closed_web(rng, 4, 5);
    web.validate();
    if (web.interior_vertex_count() > 0) CHECK(web.find_reducible().has_value());
  }
}

TEST_CASE("canonical keys decide isotopy") {
  // two constructions of the identity strand
  CHECK(web_of("I+") == web_of("(N- * I+) . (I+ * U+)"));
  // distinct vertex kinds, distinct codes
  CHECK(web_of("Y+").canonical_key() != web_of("Y-").canonical_key());
  // both sides of the vertex slide build the same lambda web
  CHECK(web_of("(I+ * N-) . (Y+ * I-)") == web_of("(N+ * I+) . (I- * Y+)"));
  CHECK(web_of("(I- * N+) . (Y- * I+)") == web_of("(N- * I-) . (I+ * Y-)"));
}

TEST_CASE("canonical key invariance under word rewrites") {
  Rng rng(90210);
  for (int i = 0; i < 200; ++i) {
    LayeredWord lw = randword::random_grow(rng, W, SignString::empty(), 5, 0);
    WebDiagram reference = WebDiagram::from_layered(lw);
    reference.validate();
    LayeredWord rewritten = lw;
    for (int k = 0; k < 4; ++k) {
      switch (rng() % 3) {
        case 0: randword::apply_random_exchange(rng, rewritten); break;
        case 1: randword::insert_random_zigzag(rng, rewritten, W); break;
        case 2: randword::apply_random_r2_slide(rng, rewritten); break;
      }
    }
    WebDiagram rebuilt = WebDiagram::from_layered(rewritten);
    rebuilt.validate();
    CHECK(rebuilt.canonical_key() == reference.canonical_key());
  }
}

TEST_CASE("interchange law holds at the level of keys") {
  Rng rng(555);
  for (int i = 0; i < 40; ++i) {
    LayeredWord b = randword::random_grow(rng, W, SignString::empty(), 3, 0);
    LayeredWord a = randword::random_grow(rng, W, b.target, 2, 0);
    LayeredWord d = randword::random_grow(rng, W, SignString::empty(), 3, 0);
    LayeredWord c = randword::random_grow(rng, W, d.target, 2, 0);
    WebDiagram wa = WebDiagram::from_layered(a), wb = WebDiagram::from_layered(b);
    WebDiagram wc = WebDiagram::from_layered(c), wd = WebDiagram::from_layered(d);
    WebDiagram lhs = web_tensor(web_compose(wa, wb), web_compose(wc, wd));
    WebDiagram rhs = web_compose(web_tensor(wa, wc), web_tensor(wb, wd));
    lhs.validate();
    rhs.validate();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("validator and dump") {
  WebDiagram y = web_of("Y+");
  CHECK_NOTHROW(y.validate());
  std::string text = y.dump();
  CHECK(text.find("source") != std::string::npos);
  CHECK(text.find("->") != std::string::npos);
  CHECK(y.dump() == text);  // stable
}

TEST_CASE("degree and orientation invariants survive composition chains") {
  Rng rng(7777);
  for (int i = 0; i < 30; ++i) {
    LayeredWord lw = randword::random_grow(rng, W, SignString::empty(), 8, 0);
    WebDiagram acc = WebDiagram::identity(lw.source);
    for (const auto& ly : lw.layers) {
      WebDiagram mid = WebDiagram::generator(ly.gen);
      if (!ly.left.is_empty()) mid = web_tensor(WebDiagram::identity(ly.left), mid);
      if (!ly.right.is_empty()) mid = web_tensor(mid, WebDiagram::identity(ly.right));
      acc = web_compose(mid, acc);
      acc.validate();  // degree, orientation and Euler checks after every step
    }
  }
}
