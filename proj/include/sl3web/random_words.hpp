#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sl3web/alphabet.hpp"
#include "sl3web/word.hpp"

namespace sl3web {

// Seeded generation of random layered words, and the word-level rewrites the
// randomized verification suites are built on. Everything here is
// deterministic in the seed.

using Rng = std::mt19937_64;

namespace randword {

inline std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

struct LayerChoice {
  Generator gen;
  std::size_t pad;
};

/// All (generator, padding) pairs applicable to the boundary string.
inline std::vector<LayerChoice> applicable(const SignString& boundary, const Alphabet& alphabet,
                                           bool allow_crossings) {
  std::vector<LayerChoice> out;
  for (const Generator& g : alphabet.all()) {
    if (!allow_crossings && (g.name == "X+" || g.name == "X-")) continue;
    const std::size_t k = g.source.size();
    if (k > boundary.size()) continue;
    for (std::size_t pad = 0; pad + k <= boundary.size(); ++pad)
      if (boundary.slice(pad, k) == g.source) out.push_back({g, pad});
  }
  return out;
}

inline Layer make_layer(const SignString& boundary, const Generator& g, std::size_t pad) {
  return Layer{boundary.slice(0, pad), g, boundary.slice_from(pad + g.source.size())};
}

/// Grows `steps` random layers from `source`, spending at most `max_crossings`
/// X-generators. Crossing placements are preferred with probability 1/2 while
/// budget remains, so random tangles actually carry crossings.
inline LayeredWord random_grow(Rng& rng, const Alphabet& alphabet, SignString source,
                               std::size_t steps, std::size_t max_crossings) {
  LayeredWord lw{source, source, {}};
  SignString cur = std::move(source);
  std::size_t budget = max_crossings;
  for (std::size_t s = 0; s < steps; ++s) {
    auto cands = applicable(cur, alphabet, budget > 0);
    if (cands.empty()) break;
    std::vector<LayerChoice> crossings;
    for (const auto& c : cands)
      if (c.gen.name == "X+" || c.gen.name == "X-") crossings.push_back(c);
    const auto& pool = (!crossings.empty() && (rng() & 1)) ? crossings : cands;
    const LayerChoice& c = pool[pick(rng, pool.size())];
    if (c.gen.name == "X+" || c.gen.name == "X-") --budget;
    lw.layers.push_back(make_layer(cur, c.gen, c.pad));
    cur = lw.layers.back().above();
  }
  lw.target = cur;
  return lw;
}

/// Caps a tangle boundary down to the empty string. Tangle layers preserve
/// the (+ count) − (− count) balance, so a nonempty boundary always has an
/// adjacent cappable pair.
inline void close_with_caps(Rng& rng, LayeredWord& lw) {
  const Alphabet& a = Alphabet::tangles();
  SignString cur = lw.target;
  while (!cur.is_empty()) {
    std::vector<LayerChoice> caps;
    for (std::size_t pad = 0; pad + 2 <= cur.size(); ++pad) {
      if (cur.slice(pad, 2) == sign_string("-+")) caps.push_back({a.at("N+"), pad});
      if (cur.slice(pad, 2) == sign_string("+-")) caps.push_back({a.at("N-"), pad});
    }
    if (caps.empty()) throw Error("unbalanced boundary cannot be closed: " + cur.str());
    const LayerChoice& c = caps[pick(rng, caps.size())];
    lw.layers.push_back(make_layer(cur, c.gen, c.pad));
    cur = lw.layers.back().above();
  }
  lw.target = cur;
}

/// A random link word: grown from the empty boundary over the tangle
/// alphabet, then closed.
inline LayeredWord random_link(Rng& rng, std::size_t max_crossings, std::size_t grow_steps) {
  LayeredWord lw =
      random_grow(rng, Alphabet::tangles(), SignString::empty(), grow_steps, max_crossings);
  close_with_caps(rng, lw);
  return lw;
}

/// A random tree-shaped word equivalent-rich in Compose/Tensor/Id nodes,
/// for exercising normalization itself.
inline Word random_tree_word(Rng& rng, const Alphabet& alphabet, const SignString& source,
                             std::size_t layer_budget) {
  LayeredWord base = random_grow(rng, alphabet, source, layer_budget, 2);
  Word w = layered_to_word(base);
  // sprinkle identity composites and re-tensorings
  for (int i = 0; i < 2; ++i) {
    switch (pick(rng, 3)) {
      case 0:
        w = Word::compose(Word::identity(word_type(w).second), w);
        break;
      case 1:
        w = Word::compose(w, Word::identity(word_type(w).first));
        break;
      case 2: {
        LayeredWord side = random_grow(rng, alphabet, SignString::empty(), 1 + pick(rng, 2), 1);
        w = pick(rng, 2) ? Word::tensor(w, layered_to_word(side))
                         : Word::tensor(layered_to_word(side), w);
        break;
      }
    }
  }
  return w;
}

// --- word-level rewrites ----------------------------------------------------

inline SignString boundary_at(const LayeredWord& lw, std::size_t height) {
  SignString cur = lw.source;
  for (std::size_t i = 0; i < height; ++i) cur = lw.layers[i].above();
  return cur;
}

/// Swaps one random exchangeable adjacent pair, picking a random variant
/// where two exist; false when none exists.
inline bool apply_random_exchange(Rng& rng, LayeredWord& lw) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + 1 < lw.layers.size(); ++i)
    if (exchangeable(lw.layers[i], lw.layers[i + 1])) sites.push_back(i);
  if (sites.empty()) return false;
  const std::size_t i = sites[pick(rng, sites.size())];
  auto variants = exchange_variants(lw.layers[i], lw.layers[i + 1]);
  const auto& [nl, nh] = variants[pick(rng, variants.size())];
  lw.layers[i] = nl;
  lw.layers[i + 1] = nh;
  return true;
}

/// Inserts a zigzag (one side of the R1a/R1b relations) on a random strand at
/// a random height. Valid over both alphabets; the boundary is unchanged.
inline bool insert_random_zigzag(Rng& rng, LayeredWord& lw, const Alphabet& alphabet) {
  const std::size_t height = pick(rng, lw.layers.size() + 1);
  SignString cur = boundary_at(lw, height);
  if (cur.is_empty()) return false;
  const std::size_t c = 1 + pick(rng, cur.size());  // 1-based column
  const char s = cur.at(c - 1);
  const bool flavor_a = pick(rng, 2) == 0;
  Generator cup, cap;
  std::size_t cup_pad, cap_pad;
  if (s == '+') {
    if (flavor_a) {  // (n- ⊗ I+) ∘ (I+ ⊗ u+)
      cup = alphabet.at("U+"); cup_pad = c;
      cap = alphabet.at("N-"); cap_pad = c - 1;
    } else {  // (I+ ⊗ n+) ∘ (u- ⊗ I+)
      cup = alphabet.at("U-"); cup_pad = c - 1;
      cap = alphabet.at("N+"); cap_pad = c;
    }
  } else {
    if (flavor_a) {  // (n+ ⊗ I-) ∘ (I- ⊗ u-)
      cup = alphabet.at("U-"); cup_pad = c;
      cap = alphabet.at("N+"); cap_pad = c - 1;
    } else {  // (I- ⊗ n-) ∘ (u+ ⊗ I-)
      cup = alphabet.at("U+"); cup_pad = c - 1;
      cap = alphabet.at("N-"); cap_pad = c;
    }
  }
  Layer l1 = make_layer(cur, cup, cup_pad);
  Layer l2 = make_layer(l1.above(), cap, cap_pad);
  lw.layers.insert(lw.layers.begin() + height, {l1, l2});
  lw.check();
  return true;
}

/// Applies the vertex-slide relation R2 at one random matching adjacent pair:
/// (Y± at pad p, n∓ at pad p+1)  <->  (Y± at pad p+1, n± at pad p).
inline bool apply_random_r2_slide(Rng& rng, LayeredWord& lw) {
  const Alphabet& a = Alphabet::webs();
  struct Site {
    std::size_t index;
    Generator new_y, new_cap;
    std::size_t new_y_pad, new_cap_pad;
  };
  std::vector<Site> sites;
  for (std::size_t i = 0; i + 1 < lw.layers.size(); ++i) {
    const Layer& lo = lw.layers[i];
    const Layer& hi = lw.layers[i + 1];
    const std::size_t p = lo.left.size();
    const std::size_t q = hi.left.size();
    if (lo.gen.name == "Y+" && hi.gen.name == "N-" && q == p + 1)
      sites.push_back({i, a.at("Y+"), a.at("N+"), p + 1, p});
    else if (lo.gen.name == "Y+" && hi.gen.name == "N+" && q + 1 == p)
      sites.push_back({i, a.at("Y+"), a.at("N-"), p - 1, p});
    else if (lo.gen.name == "Y-" && hi.gen.name == "N+" && q == p + 1)
      sites.push_back({i, a.at("Y-"), a.at("N-"), p + 1, p});
    else if (lo.gen.name == "Y-" && hi.gen.name == "N-" && q + 1 == p)
      sites.push_back({i, a.at("Y-"), a.at("N+"), p - 1, p});
  }
  if (sites.empty()) return false;
  const Site& s = sites[pick(rng, sites.size())];
  SignString below = lw.layers[s.index].below();
  Layer l1 = make_layer(below, s.new_y, s.new_y_pad);
  Layer l2 = make_layer(l1.above(), s.new_cap, s.new_cap_pad);
  lw.layers[s.index] = l1;
  lw.layers[s.index + 1] = l2;
  lw.check();
  return true;
}

/// Inserts one Reidemeister-style move into a tangle word without changing
/// its boundary: (c) a cancelling crossing pair on adjacent upward strands,
/// (e±) a kink on an upward strand, or (a) a zigzag.
inline void insert_random_tangle_move(Rng& rng, LayeredWord& lw) {
  const Alphabet& a = Alphabet::tangles();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t height = pick(rng, lw.layers.size() + 1);
    SignString cur = boundary_at(lw, height);
    switch (pick(rng, 3)) {
      case 0: {  // relation (c): X+ . X-  (or X- . X+) on adjacent ++
        std::vector<std::size_t> pads;
        for (std::size_t pad = 0; pad + 2 <= cur.size(); ++pad)
          if (cur.slice(pad, 2) == sign_string("++")) pads.push_back(pad);
        if (pads.empty()) continue;
        const std::size_t pad = pads[pick(rng, pads.size())];
        const bool plus_first = pick(rng, 2) == 0;
        Layer l1 = make_layer(cur, a.at(plus_first ? "X+" : "X-"), pad);
        Layer l2 = make_layer(l1.above(), a.at(plus_first ? "X-" : "X+"), pad);
        lw.layers.insert(lw.layers.begin() + height, {l1, l2});
        lw.check();
        return;
      }
      case 1: {  // relation (e±): kink on an upward strand
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < cur.size(); ++i)
          if (cur.at(i) == '+') cols.push_back(i + 1);
        if (cols.empty()) continue;
        const std::size_t c = cols[pick(rng, cols.size())];
        Layer l1 = make_layer(cur, a.at("U-"), c);
        Layer l2 = make_layer(l1.above(), a.at(pick(rng, 2) ? "X+" : "X-"), c - 1);
        Layer l3 = make_layer(l2.above(), a.at("N-"), c);
        lw.layers.insert(lw.layers.begin() + height, {l1, l2, l3});
        lw.check();
        return;
      }
      case 2: {  // relation (a)
        if (insert_random_zigzag(rng, lw, a)) return;
        continue;
      }
    }
  }
}

}  // namespace randword
}  // namespace sl3web
