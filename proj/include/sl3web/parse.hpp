#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl3web/alphabet.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/word.hpp"

namespace sl3web {

// Word grammar: generators by token (Y+ Y- N+ N- U+ U- X+ X-), identities
// I+ I- I0, tensor as infix '*', composition as infix '.' with the left
// operand on top, parentheses for grouping. Whitespace is insignificant.
//
//   word := term ('.' term)*
//   term := atom ('*' atom)*
//   atom := TOKEN | '(' word ')'

namespace detail {

struct Token {
  enum class Kind { Ident, Star, Dot, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '*') {
      out.push_back({Token::Kind::Star, "*", i++});
    } else if (c == '.') {
      out.push_back({Token::Kind::Dot, ".", i++});
    } else if (c == '(') {
      out.push_back({Token::Kind::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::Kind::RParen, ")", i++});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-' || text[i] == '0')) ++i;
      out.push_back({Token::Kind::Ident, text.substr(start, i - start), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Alphabet& alphabet)
      : toks_(std::move(tokens)), alphabet_(alphabet) {}

  Word parse() {
    Word w = parse_word();
    expect(Token::Kind::End, "end of input");
    return w;
  }

  /// Byte span of a parsed subexpression, for diagnostics.
  std::pair<std::size_t, std::size_t> span(const Word& w) const {
    auto it = spans_.find(w.ptr().get());
    return it == spans_.end() ? std::make_pair(std::size_t{0}, std::size_t{0}) : it->second;
  }

 private:
  Word parse_word() {
    std::size_t begin = cur().pos;
    Word w = parse_term();
    while (cur().kind == Token::Kind::Dot) {
      ++i_;
      Word rhs = parse_term();
      // left operand is on top: accumulate as (done so far) under-composed-with next
      w = record(Word::compose(w, rhs), begin, end_of_last());
    }
    return w;
  }

  Word parse_term() {
    std::size_t begin = cur().pos;
    Word w = parse_atom();
    while (cur().kind == Token::Kind::Star) {
      ++i_;
      Word rhs = parse_atom();
      w = record(Word::tensor(w, rhs), begin, end_of_last());
    }
    return w;
  }

  Word parse_atom() {
    const Token& t = cur();
    if (t.kind == Token::Kind::LParen) {
      ++i_;
      Word w = parse_word();
      expect(Token::Kind::RParen, "')'");
      return w;
    }
    if (t.kind != Token::Kind::Ident)
      throw ParseError("expected a generator, identity or '('", t.pos);
    ++i_;
    if (t.text == "I0") return record(Word::identity(SignString::empty()), t.pos, t.pos + 2);
    if (t.text == "I+") return record(Word::identity(sign_string("+")), t.pos, t.pos + 2);
    if (t.text == "I-") return record(Word::identity(sign_string("-")), t.pos, t.pos + 2);
    const Generator* g = alphabet_.find(t.text);
    if (!g)
      throw UnknownGeneratorError("unknown generator \"" + t.text + "\"", t.pos);
    return record(Word::gen(*g), t.pos, t.pos + t.text.size());
  }

  Word record(Word w, std::size_t begin, std::size_t end) {
    spans_[w.ptr().get()] = {begin, end};
    return w;
  }

  const Token& cur() const { return toks_[i_]; }
  std::size_t end_of_last() const {
    const Token& prev = toks_[i_ - 1];
    return prev.pos + prev.text.size();
  }
  void expect(Token::Kind k, const std::string& what) {
    if (cur().kind != k) throw ParseError("expected " + what, cur().pos);
    ++i_;
  }

  std::vector<Token> toks_;
  const Alphabet& alphabet_;
  std::size_t i_ = 0;
  std::map<const void*, std::pair<std::size_t, std::size_t>> spans_;
};

/// Typing walk that reports the offending subexpression's byte span.
inline std::pair<SignString, SignString> typed_check(const Word& w, const Parser& p) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen:
      return {n.gen.source, n.gen.target};
    case WordKind::Id:
      return {n.object, n.object};
    case WordKind::Compose: {
      auto lo = typed_check(w.lower(), p);
      auto up = typed_check(w.upper(), p);
      if (lo.second != up.first) {
        auto [b, e] = p.span(w);
        throw TypeMismatchError(
            "composition mismatch: lower word ends in \"" + lo.second.str() +
                "\" but upper word expects \"" + up.first.str() + "\"",
            word_to_string(w), b, e);
      }
      return {lo.first, up.second};
    }
    case WordKind::Tensor: {
      auto l = typed_check(w.left(), p);
      auto r = typed_check(w.right(), p);
      return {l.first + r.first, l.second + r.second};
    }
  }
  throw Error("unreachable");
}

}  // namespace detail

/// Parses and type-checks a word over the given alphabet.
inline Word parse_word(const std::string& text, const Alphabet& alphabet) {
  detail::Parser p(detail::lex(text), alphabet);
  Word w = p.parse();
  detail::typed_check(w, p);
  return w;
}

}  // namespace sl3web
