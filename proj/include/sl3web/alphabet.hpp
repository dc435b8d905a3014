#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl3web/errors.hpp"
#include "sl3web/sign_string.hpp"

namespace sl3web {

/// A named arrow of a generating graph: an edge from one sign string to
/// another. Names double as the surface-syntax tokens (Y+, N-, U+, X-, ...).
struct Generator {
  std::string name;
  SignString source;
  SignString target;
  int ordinal = 0;  // fixed tie-break order: U+ < U- < N+ < N- < Y+ < Y- < X+ < X-

  friend bool operator==(const Generator& a, const Generator& b) { return a.name == b.name; }
};

/// A generating alphabet. The sign table below is the unique one under which
/// the zigzag and vertex-slide relations type-check:
///
///   U+ : "" -> -+      N+ : -+ -> ""      Y+ : - -> ++      X+ : ++ -> ++
///   U- : "" -> +-      N- : +- -> ""      Y- : + -> --      X- : ++ -> ++
///
/// Reading a boundary sign: '+' means the strand is oriented upward at that
/// boundary point, '-' downward.
class Alphabet {
 public:
  static const Alphabet& webs() {
    static const Alphabet a({"U+", "U-", "N+", "N-", "Y+", "Y-"});
    return a;
  }

  static const Alphabet& tangles() {
    static const Alphabet a({"U+", "U-", "N+", "N-", "X+", "X-"});
    return a;
  }

  /// Union of the two, for commands that normalize arbitrary words.
  static const Alphabet& merged() {
    static const Alphabet a({"U+", "U-", "N+", "N-", "Y+", "Y-", "X+", "X-"});
    return a;
  }

  const Generator* find(const std::string& name) const {
    auto it = gens_.find(name);
    return it == gens_.end() ? nullptr : &it->second;
  }

  const Generator& at(const std::string& name) const {
    const Generator* g = find(name);
    if (!g) throw Error("generator not in alphabet: " + name);
    return *g;
  }

  std::vector<Generator> all() const {
    std::vector<Generator> out;
    for (const auto& [_, g] : gens_) out.push_back(g);
    return out;
  }

 private:
  explicit Alphabet(const std::vector<std::string>& names) {
    for (const auto& n : names) gens_.emplace(n, make(n));
  }

  static Generator make(const std::string& name) {
    static const std::map<std::string, std::tuple<const char*, const char*, int>> table = {
        {"U+", {"", "-+", 0}}, {"U-", {"", "+-", 1}}, {"N+", {"-+", "", 2}},
        {"N-", {"+-", "", 3}}, {"Y+", {"-", "++", 4}}, {"Y-", {"+", "--", 5}},
        {"X+", {"++", "++", 6}}, {"X-", {"++", "++", 7}},
    };
    const auto& [src, tgt, ord] = table.at(name);
    return Generator{name, sign_string(src), sign_string(tgt), ord};
  }

  std::map<std::string, Generator> gens_;
};

}  // namespace sl3web
