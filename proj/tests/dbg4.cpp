#include <iostream>
#include <set>
#include <vector>

#include "sl3web/random_words.hpp"
#include "sl3web/word.hpp"

using namespace sl3web;

static std::string render(const std::vector<Layer>& ls) {
  std::string out;
  for (const auto& ly : ls)
    out += "[" + ly.left.str() + "|" + ly.gen.name + "|" + ly.right.str() + "] ";
  return out;
}

int main() {
  Rng r(94);
  LayeredWord lw = randword::random_grow(r, Alphabet::webs(), SignString::empty(), 5, 0);

  // BFS over all single exchanges
  std::set<std::string> seen;
  std::vector<std::vector<Layer>> queue{lw.layers};
  seen.insert(render(lw.layers));
  std::vector<std::vector<Layer>> all{lw.layers};
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!exchangeable(cur[i], cur[i + 1])) continue;
      auto next = cur;
      auto [nl, nh] = exchange(cur[i], cur[i + 1]);
      next[i] = nl;
      next[i + 1] = nh;
      if (seen.insert(render(next)).second) {
        queue.push_back(next);
        all.push_back(next);
      }
    }
  }
  std::cout << "class size: " << all.size() << "\n";

  // the lex-min under (pad, ordinal)
  const std::vector<Layer>* best = nullptr;
  for (const auto& cand : all) {
    if (!best || detail::layer_seq_less(cand, *best)) best = &cand;
  }
  std::cout << "lex-min: " << render(*best) << "\n";
  std::cout << "canon  : " << render(canonical_layered(lw).layers) << "\n";

  // show every representative whose first three layers are U+@0, U-@0, U-@0
  for (const auto& cand : all) {
    if (cand.size() >= 3 && cand[0].gen.name == "U+" && cand[0].left.is_empty() &&
        cand[1].gen.name == "U-" && cand[1].left.is_empty() && cand[2].gen.name == "U-" &&
        cand[2].left.is_empty())
      std::cout << "pfx: " << render(cand) << "\n";
  }
  return 0;
}
