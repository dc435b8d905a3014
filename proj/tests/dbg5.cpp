#include <iostream>

#include "sl3web/random_words.hpp"
#include "sl3web/word.hpp"

using namespace sl3web;

static std::string render(const std::vector<Layer>& ls) {
  std::string out;
  for (const auto& ly : ls)
    out += "[" + ly.left.str() + "|" + ly.gen.name + "|" + ly.right.str() + "] ";
  return out;
}

static std::vector<Layer> bubble_down(std::vector<Layer> s, std::size_t i, bool& ok) {
  ok = true;
  for (std::size_t k = i; k > 0; --k) {
    if (!exchangeable(s[k - 1], s[k])) {
      ok = false;
      return s;
    }
    auto [nl, nh] = exchange(s[k - 1], s[k]);
    s[k - 1] = nl;
    s[k] = nh;
  }
  return s;
}

int main() {
  Rng r(7);
  LayeredWord lw = randword::random_grow(r, Alphabet::webs(), SignString::empty(), 5, 0);
  std::cout << "word: " << render(lw.layers) << "\n";

  // step 1: extract the U+ (candidate index 3)
  bool ok;
  auto s1 = bubble_down(lw.layers, 3, ok);
  std::cout << "after bubbling U+ down: " << render(s1) << "\n";
  std::vector<Layer> rem1(s1.begin() + 1, s1.end());
  std::cout << "step-2 stack: " << render(rem1) << "\n";

  for (std::size_t i = 0; i < rem1.size(); ++i) {
    auto s = bubble_down(rem1, i, ok);
    std::cout << "  cand " << i << " (" << rem1[i].gen.name << "@" << rem1[i].left.size()
              << "): " << (ok ? "-> " + render(s) : "stuck") << "\n";
  }
  return 0;
}
