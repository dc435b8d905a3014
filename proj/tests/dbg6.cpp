#include <iostream>
#include <set>

#include "sl3web/parse.hpp"
#include "sl3web/random_words.hpp"
#include "sl3web/tangle.hpp"

using namespace sl3web;

static std::size_t closure_size(const std::vector<Layer>& start, std::size_t cap) {
  std::set<std::string> seen{detail::render_layers(start)};
  std::vector<std::vector<Layer>> work{start};
  while (!work.empty()) {
    auto cur = work.back();
    work.pop_back();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      for (const auto& [nl, nh] : exchange_variants(cur[i], cur[i + 1])) {
        auto next = cur;
        next[i] = nl;
        next[i + 1] = nh;
        if (seen.insert(detail::render_layers(next)).second) {
          work.push_back(next);
          if (seen.size() > cap) return seen.size();
        }
      }
    }
  }
  return seen.size();
}

int main() {
  for (const auto& [name, text] : catalog_sources()) {
    LayeredWord lw = normalize(parse_word(text, Alphabet::tangles()));
    std::cout << name << ": layers=" << lw.layers.size()
              << " closure=" << closure_size(lw.layers, 200000) << "\n";
  }
  Rng rng(5);
  std::size_t worst = 0;
  for (int i = 0; i < 60; ++i) {
    LayeredWord lw = randword::random_grow(rng, Alphabet::webs(), SignString::empty(), 9, 0);
    auto split = detail::split_components(lw);
    std::size_t c = closure_size(split.anchored, 200000);
    for (const auto& f : split.floats) c = std::max(c, closure_size(f, 200000));
    worst = std::max(worst, c);
  }
  std::cout << "worst closure over 60 random 9-layer web words (split parts): " << worst << "\n";
  Rng rng2(6);
  worst = 0;
  for (int i = 0; i < 40; ++i) {
    LayeredWord lw = randword::random_grow(rng2, Alphabet::tangles(), SignString::empty(), 12, 5);
    auto split = detail::split_components(lw);
    std::size_t c = closure_size(split.anchored, 200000);
    for (const auto& f : split.floats) c = std::max(c, closure_size(f, 200000));
    worst = std::max(worst, c);
  }
  std::cout << "worst closure over 40 random 12-layer tangle words (split parts): " << worst
            << "\n";
  return 0;
}
