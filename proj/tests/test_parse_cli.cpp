#include "sl3web/cli.hpp"
#include "sl3web/parse.hpp"

#include <cstdio>

#include "catch2/catch_amalgamated.hpp"
#include "helpers.hpp"

using namespace sl3web;

TEST_CASE("parsing the word grammar") {
  // the zigzag word parses to the expected tree
  Word w = parse_word("(N- * I+) . (I+ * U+)", Alphabet::webs());
  Word built = Word::compose(
      Word::tensor(Word::gen(Alphabet::webs().at("N-")), Word::identity(sign_string("+"))),
      Word::tensor(Word::identity(sign_string("+")), Word::gen(Alphabet::webs().at("U+"))));
  CHECK(words_equivalent(w, built));

  Word empty = parse_word("I0", Alphabet::webs());
  CHECK(word_type(empty).first == SignString::empty());
  CHECK(normalize(empty).layers.empty());

  // '*' binds tighter than '.'
  Word tight = parse_word("N- * I+ . I+ * U+", Alphabet::webs());
  CHECK(words_equivalent(tight, built));

  // whitespace is insignificant
  CHECK(words_equivalent(parse_word("(N-*I+).(I+*U+)", Alphabet::webs()), built));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_word("Y+ * ", Alphabet::webs());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }

  try {
    parse_word("Z+ . U+", Alphabet::webs());
    FAIL("expected UnknownGeneratorError");
  } catch (const UnknownGeneratorError& e) {
    CHECK(e.position == 0);
  }

  // X is not in the web alphabet
  CHECK_THROWS_AS(parse_word("X+", Alphabet::webs()), UnknownGeneratorError);

  try {
    parse_word("(Y+ * U+", Alphabet::webs());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("type errors carry the offending span") {
  try {
    parse_word("X+ . U+", Alphabet::tangles());
    FAIL("expected TypeMismatchError");
  } catch (const TypeMismatchError& e) {
    CHECK(e.span_begin == 0);
    CHECK(e.span_end == 7);
    CHECK(!e.offending_subword.empty());
  }
}

TEST_CASE("normalize output re-parses to an equivalent word") {
  Rng rng(1123);
  for (int i = 0; i < 40; ++i) {
    Word w = randword::random_tree_word(rng, Alphabet::merged(), SignString::empty(), 4);
    std::string text = word_to_string(layered_to_word(canonical_layered(normalize(w))));
    Word back = parse_word(text, Alphabet::merged());
    CHECK(words_equivalent(back, w));
  }
}

TEST_CASE("cli bracket and tangle runs") {
  cli::Options opts;
  auto unknot = cli::run_bracket("N+ . U+", opts);
  CHECK(unknot.exit_code == 0);
  CHECK(unknot.document.find("q^2 + 1 + q^-2") != std::string::npos);

  auto open = cli::run_bracket("U+", opts);
  CHECK(open.exit_code == 2);
  CHECK(open.document.empty());
  CHECK(!open.human.empty());

  auto bad = cli::run_bracket("N+ . Q+", opts);
  CHECK(bad.exit_code == 1);

  auto tangle = cli::run_tangle("X+ . X-", opts);
  CHECK(tangle.exit_code == 0);
  CHECK(tangle.document.find("terms") != std::string::npos);

  auto mistyped = cli::run_tangle("X+ . U+", opts);
  CHECK(mistyped.exit_code == 1);
  CHECK(mistyped.human.find("subword") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
  for (const char* format : {"text", "json"}) {
    cli::Options opts;
    opts.format = format;
    auto a = cli::run_catalog_eval("trefoil_right", opts);
    auto b = cli::run_catalog_eval("trefoil_right", opts);
    CHECK(a.exit_code == 0);
    CHECK(a.document == b.document);

    auto c = cli::run_tangle("(I+ * N-) . (X+ * I-) . (I+ * U-)", opts);
    auto d = cli::run_tangle("(I+ * N-) . (X+ * I-) . (I+ * U-)", opts);
    CHECK(c.document == d.document);
  }
}

TEST_CASE("cli check command") {
  cli::Options opts;
  opts.seed = 11;
  auto webs = cli::run_check("webs", opts);
  CHECK(webs.exit_code == 0);
  CHECK(webs.document.find("web-presentation") != std::string::npos);

  auto all = cli::run_check("all", opts);
  CHECK(all.exit_code == 0);
  CHECK(all.document.find("reidemeister") != std::string::npos);
  CHECK(all.document.find("all_passed: true") != std::string::npos);
}

TEST_CASE("cli catalog commands") {
  cli::Options opts;
  auto list = cli::run_catalog(opts);
  CHECK(list.exit_code == 0);
  for (const auto& name : catalog_names())
    CHECK(list.document.find(name) != std::string::npos);

  auto missing = cli::run_catalog_eval("borromean", opts);
  CHECK(missing.exit_code == 2);
}

TEST_CASE("cli cache round trip") {
  const std::string path = "sl3web_test_cache.json";
  std::remove(path.c_str());
  cli::Options opts;
  opts.cache_path = path;
  auto first = cli::run_catalog_eval("hopf_pos", opts);
  auto second = cli::run_catalog_eval("hopf_pos", opts);
  CHECK(first.exit_code == 0);
  CHECK(first.document == second.document);

  // a stale engine stamp invalidates the cache rather than serving bad data
  {
    std::ifstream in(path);
    nlohmann::json file = nlohmann::json::parse(in);
    CHECK(file["engine"] == cli::kEngineVersion);
  }
  std::remove(path.c_str());
}
