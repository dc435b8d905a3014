#pragma once

#include <vector>

#include "sl3web/laurent.hpp"
#include "sl3web/random_words.hpp"
#include "sl3web/tangle.hpp"

namespace testutil {

using namespace sl3web;

/// Builds sum of c_i q^{e_i} from {exponent, coefficient} pairs.
inline LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += LaurentPoly::monomial(c, e);
  return p;
}

inline LaurentPoly random_poly(Rng& rng, int max_abs_exp = 3, int max_abs_coeff = 3) {
  LaurentPoly p;
  const int nterms = static_cast<int>(rng() % 4);
  for (int i = 0; i < nterms; ++i) {
    long long e = static_cast<long long>(rng() % (2 * max_abs_exp + 1)) - max_abs_exp;
    long long c = static_cast<long long>(rng() % (2 * max_abs_coeff + 1)) - max_abs_coeff;
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

/// The resolution of a tangle word as a word over the web alphabet: parallel
/// smoothings drop the crossing layer, hourglass smoothings splice in the
/// hourglass word's layers.
inline LayeredWord resolution_word(const LayeredWord& link, const std::vector<bool>& bits) {
  const Alphabet& w = Alphabet::webs();
  static const LayeredWord hourglass_layers =
      normalize(Word::compose(Word::gen(w.at("Y+")), lambda_word('-')));
  const auto crossings = crossing_layers_top_down(link);
  std::map<std::size_t, bool> choice;
  for (std::size_t j = 0; j < crossings.size(); ++j) choice[crossings[j]] = bits.at(j);

  LayeredWord out{link.source, link.target, {}};
  for (std::size_t i = 0; i < link.layers.size(); ++i) {
    const Layer& ly = link.layers[i];
    if (auto it = choice.find(i); it != choice.end()) {
      if (it->second) {
        for (const Layer& hl : hourglass_layers.layers)
          out.layers.push_back(Layer{ly.left + hl.left, hl.gen, hl.right + ly.right});
      }
      // parallel smoothing: the crossing layer becomes an identity and vanishes
    } else {
      out.layers.push_back(Layer{ly.left, w.at(ly.gen.name), ly.right});
    }
  }
  out.check();
  return out;
}

/// A random closed web word: one random resolution of a random link word.
inline LayeredWord random_closed_web_word(Rng& rng, std::size_t max_crossings,
                                          std::size_t grow_steps) {
  LayeredWord link = randword::random_link(rng, max_crossings, grow_steps);
  const std::size_t n = crossing_layers_top_down(link).size();
  std::vector<bool> bits(n);
  for (std::size_t j = 0; j < n; ++j) bits[j] = rng() & 1;
  return resolution_word(link, bits);
}

inline WebDiagram random_closed_web(Rng& rng, std::size_t max_crossings, std::size_t grow_steps) {
  return WebDiagram::from_layered(random_closed_web_word(rng, max_crossings, grow_steps));
}

inline LaurentPoly combo_scalar(const WebCombo& c) {
  if (c.is_zero()) return LaurentPoly::zero();
  return c.terms().begin()->second.coeff;
}

}  // namespace testutil
