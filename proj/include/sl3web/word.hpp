#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sl3web/alphabet.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/sign_string.hpp"

namespace sl3web {

enum class WordKind { Gen, Id, Compose, Tensor };

/// A formal expression over a generating alphabet: leaves are generators and
/// identities, internal nodes are composition (upper after lower) and tensor
/// (left beside right). Words are immutable and cheap to copy.
class Word {
 public:
  struct Node {
    WordKind kind;
    Generator gen;                    // Gen
    SignString object;                // Id
    std::shared_ptr<const Node> a;    // Compose: upper;  Tensor: left
    std::shared_ptr<const Node> b;    // Compose: lower;  Tensor: right
  };

  static Word gen(const Generator& g) {
    return Word(std::make_shared<const Node>(Node{WordKind::Gen, g, {}, nullptr, nullptr}));
  }

  static Word identity(SignString s) {
    return Word(std::make_shared<const Node>(
        Node{WordKind::Id, {}, std::move(s), nullptr, nullptr}));
  }

  /// upper ∘ lower (upper stacked on top).
  static Word compose(const Word& upper, const Word& lower) {
    return Word(std::make_shared<const Node>(
        Node{WordKind::Compose, {}, {}, upper.node_, lower.node_}));
  }

  static Word tensor(const Word& left, const Word& right) {
    return Word(std::make_shared<const Node>(
        Node{WordKind::Tensor, {}, {}, left.node_, right.node_}));
  }

  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& ptr() const { return node_; }

  Word upper() const { return Word(node_->a); }
  Word lower() const { return Word(node_->b); }
  Word left() const { return Word(node_->a); }
  Word right() const { return Word(node_->b); }

 private:
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar form of a word: generators by token, Id(s) as a tensor of I+/I-
/// tokens (I0 for the empty string), '.' for composition, '*' for tensor.
inline std::string word_to_string(const Word& w) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen:
      return n.gen.name;
    case WordKind::Id: {
      if (n.object.is_empty()) return "I0";
      std::string out;
      for (std::size_t i = 0; i < n.object.size(); ++i) {
        if (i) out += " * ";
        out += (n.object.at(i) == '+') ? "I+" : "I-";
      }
      if (n.object.size() > 1) return "(" + out + ")";
      return out;
    }
    case WordKind::Compose:
      return "(" + word_to_string(w.upper()) + " . " + word_to_string(w.lower()) + ")";
    case WordKind::Tensor:
      return "(" + word_to_string(w.left()) + " * " + word_to_string(w.right()) + ")";
  }
  return {};
}

/// (source, target) by structural recursion; throws TypeMismatchError naming
/// the offending subword when a Compose node's inner boundaries differ.
inline std::pair<SignString, SignString> word_type(const Word& w) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen:
      return {n.gen.source, n.gen.target};
    case WordKind::Id:
      return {n.object, n.object};
    case WordKind::Compose: {
      auto lo = word_type(w.lower());
      auto up = word_type(w.upper());
      if (lo.second != up.first) {
        throw TypeMismatchError(
            "composition mismatch: lower word ends in \"" + lo.second.str() +
                "\" but upper word expects \"" + up.first.str() + "\"",
            word_to_string(w));
      }
      return {lo.first, up.second};
    }
    case WordKind::Tensor: {
      auto l = word_type(w.left());
      auto r = word_type(w.right());
      return {l.first + r.first, l.second + r.second};
    }
  }
  throw Error("unreachable");
}

/// 1 for leaves, 1 + max of children otherwise.
inline std::size_t word_rank(const Word& w) {
  const auto& n = w.node();
  if (n.kind == WordKind::Gen || n.kind == WordKind::Id) return 1;
  return 1 + std::max(word_rank(Word(w).left()), word_rank(Word(w).right()));
}

inline std::size_t crossing_count(const Word& w) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen:
      return (n.gen.name == "X+" || n.gen.name == "X-") ? 1 : 0;
    case WordKind::Id:
      return 0;
    default:
      return crossing_count(w.left()) + crossing_count(w.right());
  }
}

// ---------------------------------------------------------------------------
// Layered (staircase) form
// ---------------------------------------------------------------------------

/// One horizontal slice: the word id_left ⊗ gen ⊗ id_right.
struct Layer {
  SignString left;
  Generator gen;
  SignString right;

  SignString below() const { return left + gen.source + right; }
  SignString above() const { return left + gen.target + right; }

  friend bool operator==(const Layer& a, const Layer& b) {
    return a.left == b.left && a.gen.name == b.gen.name && a.right == b.right;
  }
};

/// A composition of layers, bottom to top. The empty layer sequence denotes
/// the identity on `source` (== `target`).
struct LayeredWord {
  SignString source;
  SignString target;
  std::vector<Layer> layers;

  friend bool operator==(const LayeredWord& a, const LayeredWord& b) = default;

  /// Adjacent layers must meet: boundary above layer k == boundary below k+1.
  void check() const {
    SignString cur = source;
    for (const auto& ly : layers) {
      if (ly.below() != cur)
        throw TypeMismatchError("layer does not fit boundary \"" + cur.str() + "\"");
      cur = ly.above();
    }
    if (cur != target) throw TypeMismatchError("layered word does not reach its target");
  }
};

inline std::vector<Layer> pad_right(std::vector<Layer> layers, const SignString& s) {
  for (auto& ly : layers) ly.right = ly.right + s;
  return layers;
}

inline std::vector<Layer> pad_left(std::vector<Layer> layers, const SignString& s) {
  for (auto& ly : layers) ly.left = s + ly.left;
  return layers;
}

namespace detail {
inline std::vector<Layer> normalize_layers(const Word& w) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Id:
      return {};
    case WordKind::Gen:
      return {Layer{SignString::empty(), n.gen, SignString::empty()}};
    case WordKind::Compose: {
      auto out = normalize_layers(w.lower());
      auto up = normalize_layers(w.upper());
      out.insert(out.end(), up.begin(), up.end());
      return out;
    }
    case WordKind::Tensor: {
      // a ⊗ b  =  (id_{t(a)} ⊗ b) ∘ (a ⊗ id_{s(b)})
      auto ta = word_type(w.left()).second;
      auto sb = word_type(w.right()).first;
      auto out = pad_right(normalize_layers(w.left()), sb);
      auto up = pad_left(normalize_layers(w.right()), ta);
      out.insert(out.end(), up.begin(), up.end());
      return out;
    }
  }
  throw Error("unreachable");
}
}  // namespace detail

/// Staircase form: every word is equivalent to a composition of layers
/// id ⊗ gen ⊗ id; identity leaves contribute no layers.
inline LayeredWord normalize(const Word& w) {
  auto [s, t] = word_type(w);
  LayeredWord lw{s, t, detail::normalize_layers(w)};
  lw.check();
  return lw;
}

/// Rebuild a Word from a layered word (used for printing and round trips).
inline Word layered_to_word(const LayeredWord& lw) {
  if (lw.layers.empty()) return Word::identity(lw.source);
  std::optional<Word> acc;
  for (const auto& ly : lw.layers) {
    Word layer_word = Word::gen(ly.gen);
    if (!ly.left.is_empty()) layer_word = Word::tensor(Word::identity(ly.left), layer_word);
    if (!ly.right.is_empty()) layer_word = Word::tensor(layer_word, Word::identity(ly.right));
    acc = acc ? Word::compose(layer_word, *acc) : layer_word;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Canonical form under the interchange (exchange) move
// ---------------------------------------------------------------------------

/// Two adjacent layers commute when the upper generator consumes only strands
/// the lower generator passes through: its foot interval lies entirely left
/// or entirely right of the lower generator's head interval.
inline bool exchangeable(const Layer& lo, const Layer& hi) {
  const std::size_t a = lo.left.size();
  const std::size_t gt = lo.gen.target.size();
  const std::size_t b = hi.left.size();
  const std::size_t hs = hi.gen.source.size();
  return b >= a + gt || b + hs <= a;
}

namespace detail {
inline std::pair<Layer, Layer> exchange_one(const Layer& lo, const Layer& hi, bool hi_right) {
  const SignString below = lo.below();
  const std::size_t a = lo.left.size();
  const std::size_t gs = lo.gen.source.size();
  const std::size_t gt = lo.gen.target.size();
  const std::size_t b = hi.left.size();
  const std::size_t hs = hi.gen.source.size();
  const std::size_t ht = hi.gen.target.size();

  const std::size_t nb = hi_right ? b - gt + gs : b;
  Layer new_lo{below.slice(0, nb), hi.gen, below.slice_from(nb + hs)};
  assert(below.slice(nb, hs) == hi.gen.source);

  const SignString mid = new_lo.above();
  const std::size_t na = hi_right ? a : a - hs + ht;
  Layer new_hi{mid.slice(0, na), lo.gen, mid.slice_from(na + gs)};
  assert(mid.slice(na, gs) == lo.gen.source);
  return {new_lo, new_hi};
}
}  // namespace detail

/// All ways of sliding the upper layer below the lower one. Usually one; a
/// cap followed by a cup at the same cut slides down on either side of the
/// cap's strands (cup∘cap = cup⊗cap = cap⊗cup), giving two.
inline std::vector<std::pair<Layer, Layer>> exchange_variants(const Layer& lo, const Layer& hi) {
  const std::size_t a = lo.left.size();
  const std::size_t gt = lo.gen.target.size();
  const std::size_t b = hi.left.size();
  const std::size_t hs = hi.gen.source.size();
  std::vector<std::pair<Layer, Layer>> out;
  if (b >= a + gt) out.push_back(detail::exchange_one(lo, hi, true));
  if (b + hs <= a) {
    auto v = detail::exchange_one(lo, hi, false);
    if (out.empty() || !(out[0].first == v.first && out[0].second == v.second))
      out.push_back(std::move(v));
  }
  return out;
}

/// Slide the upper layer below the lower one (first variant when two exist).
inline std::pair<Layer, Layer> exchange(const Layer& lo, const Layer& hi) {
  assert(exchangeable(lo, hi));
  auto v = exchange_variants(lo, hi);
  return v.front();
}

namespace detail {

inline bool layer_seq_less(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  // Lexicographic on (leftmost position, generator ordinal). Sequences
  // compared here share a source boundary, so the first differing pair fully
  // determines the layers.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    auto ka = std::make_pair(a[i].left.size(), a[i].gen.ordinal);
    auto kb = std::make_pair(b[i].left.size(), b[i].gen.ordinal);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

/// Every stack reachable by sliding layer `i` all the way to the bottom,
/// following each exchange variant.
inline std::vector<std::vector<Layer>> slide_to_bottom(const std::vector<Layer>& stack,
                                                       std::size_t i) {
  std::vector<std::vector<Layer>> cur = {stack};
  for (std::size_t k = i; k > 0; --k) {
    std::vector<std::vector<Layer>> next;
    for (const auto& s : cur) {
      for (const auto& [nl, nh] : exchange_variants(s[k - 1], s[k])) {
        std::vector<Layer> t = s;
        t[k - 1] = nl;
        t[k] = nh;
        if (std::find(next.begin(), next.end(), t) == next.end()) next.push_back(std::move(t));
      }
    }
    if (next.empty()) return {};
    cur = std::move(next);
  }
  return cur;
}

inline std::vector<Layer> canonical_stack(const std::vector<Layer>& stack) {
  if (stack.empty()) return {};
  // Candidates: all stacks obtained by sliding some layer to the bottom. The
  // extracted layer is the same for every candidate tied on (position,
  // ordinal); the remainders may differ when several equal events are in
  // flight, so ties recurse and the least full sequence wins.
  std::optional<std::pair<std::size_t, int>> best_key;
  std::vector<std::vector<Layer>> tied;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    for (auto& s : slide_to_bottom(stack, i)) {
      std::pair<std::size_t, int> key{s[0].left.size(), s[0].gen.ordinal};
      if (!best_key || key < *best_key) {
        best_key = key;
        tied.clear();
        tied.push_back(std::move(s));
      } else if (key == *best_key) {
        if (std::find(tied.begin(), tied.end(), s) == tied.end()) tied.push_back(std::move(s));
      }
    }
  }
  assert(!tied.empty());  // i == 0 always slides trivially

  std::optional<std::vector<Layer>> best;
  for (const auto& s : tied) {
    std::vector<Layer> result = canonical_stack(std::vector<Layer>(s.begin() + 1, s.end()));
    result.insert(result.begin(), s[0]);
    if (!best || layer_seq_less(result, *best)) best = std::move(result);
  }
  return *best;
}

inline std::string render_layers(const std::vector<Layer>& layers) {
  std::string out;
  for (const auto& ly : layers)
    out += "[" + ly.left.str() + "|" + ly.gen.name + "|" + ly.right.str() + "]";
  return out;
}

/// Splits a word into its boundary-anchored part and its floating closed
/// components, each re-projected onto its own strands.
struct ComponentSplit {
  std::vector<Layer> anchored;             // over the original source
  std::vector<std::vector<Layer>> floats;  // closed words over their own strands
};

inline ComponentSplit split_components(const LayeredWord& lw) {
  const std::size_t n = lw.layers.size();
  const std::size_t anchor = n;  // virtual node for everything boundary-attached
  std::vector<std::size_t> parent(n + 1);
  for (std::size_t i = 0; i <= n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  // strand provenance: the layer that produced it, or anchor for source strands
  std::vector<std::size_t> strand(lw.source.size(), anchor);
  for (std::size_t k = 0; k < n; ++k) {
    const Layer& ly = lw.layers[k];
    const std::size_t p = ly.left.size();
    const std::size_t in = ly.gen.source.size();
    for (std::size_t i = 0; i < in; ++i) unite(k, strand[p + i]);
    std::vector<std::size_t> next(strand.begin(), strand.begin() + p);
    next.insert(next.end(), ly.gen.target.size(), k);
    next.insert(next.end(), strand.begin() + p + in, strand.end());
    strand = std::move(next);
  }
  for (std::size_t s : strand) unite(anchor, s);

  // second pass: project each layer onto its component's strands
  ComponentSplit out;
  std::map<std::size_t, std::size_t> float_index;  // root -> index in out.floats
  struct BStrand {
    char sign;
    std::size_t root;
  };
  std::vector<BStrand> boundary;
  for (std::size_t i = 0; i < lw.source.size(); ++i)
    boundary.push_back({lw.source.at(i), find(anchor)});
  for (std::size_t k = 0; k < n; ++k) {
    const Layer& ly = lw.layers[k];
    const std::size_t p = ly.left.size();
    const std::size_t in = ly.gen.source.size();
    const std::size_t root = find(k);
    std::string left, right;
    for (std::size_t i = 0; i < p; ++i)
      if (boundary[i].root == root) left += boundary[i].sign;
    for (std::size_t i = p + in; i < boundary.size(); ++i)
      if (boundary[i].root == root) right += boundary[i].sign;
    Layer projected{SignString(left), ly.gen, SignString(right)};
    if (root == find(anchor)) {
      out.anchored.push_back(std::move(projected));
    } else {
      auto [it, fresh] = float_index.try_emplace(root, out.floats.size());
      if (fresh) out.floats.emplace_back();
      out.floats[it->second].push_back(std::move(projected));
    }
    std::vector<BStrand> next(boundary.begin(), boundary.begin() + p);
    for (std::size_t i = 0; i < ly.gen.target.size(); ++i)
      next.push_back({ly.gen.target.at(i), root});
    next.insert(next.end(), boundary.begin() + p + in, boundary.end());
    boundary = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Unique representative of the interchange-equivalence class, with floating
/// closed components taken as position-free: the word splits into its
/// boundary-anchored part and its closed components; each part is normalized
/// by greedy minimal extraction (slide the exchange-minimal layer with least
/// (leftmost position, generator ordinal) to the bottom, recursing through
/// ties); the closed components are sorted and stacked first, at the left
/// edge.
inline LayeredWord canonical_layered(const LayeredWord& lw) {
  detail::ComponentSplit split = detail::split_components(lw);
  std::vector<std::vector<Layer>> floats;
  floats.reserve(split.floats.size());
  for (const auto& f : split.floats) floats.push_back(detail::canonical_stack(f));
  std::sort(floats.begin(), floats.end(),
            [](const std::vector<Layer>& a, const std::vector<Layer>& b) {
              return detail::render_layers(a) < detail::render_layers(b);
            });
  std::vector<Layer> out;
  out.reserve(lw.layers.size());
  for (const auto& f : floats)
    for (const Layer& ly : f) out.push_back(Layer{ly.left, ly.gen, ly.right + lw.source});
  for (Layer& ly : detail::canonical_stack(split.anchored)) out.push_back(std::move(ly));
  LayeredWord result{lw.source, lw.target, std::move(out)};
  result.check();
  return result;
}

/// Equality of morphisms in the free tensor category.
inline bool words_equivalent(const Word& w1, const Word& w2) {
  auto t1 = word_type(w1);
  auto t2 = word_type(w2);
  if (t1 != t2) return false;
  return canonical_layered(normalize(w1)) == canonical_layered(normalize(w2));
}

// ---------------------------------------------------------------------------
// Functor extension (free property made operational)
// ---------------------------------------------------------------------------

/// The strict tensor structure of a target category on morphism values M.
template <typename M>
struct TensorOps {
  std::function<M(const M&, const M&)> compose;  // (upper, lower)
  std::function<M(const M&, const M&)> tensor;   // (left, right)
  std::function<M(const SignString&)> identity;
};

/// Structural recursion replacing Gen leaves by their images and Id leaves by
/// target identities. Well-defined on equivalence classes provided the target
/// ops satisfy the strict tensor axioms.
template <typename M>
M extend_functor(const Word& w, const std::map<std::string, M>& gen_images,
                 const TensorOps<M>& ops) {
  const auto& n = w.node();
  switch (n.kind) {
    case WordKind::Gen: {
      auto it = gen_images.find(n.gen.name);
      if (it == gen_images.end())
        throw MissingImageError("no image assigned to generator " + n.gen.name);
      return it->second;
    }
    case WordKind::Id:
      return ops.identity(n.object);
    case WordKind::Compose:
      return ops.compose(extend_functor(w.upper(), gen_images, ops),
                         extend_functor(w.lower(), gen_images, ops));
    case WordKind::Tensor:
      return ops.tensor(extend_functor(w.left(), gen_images, ops),
                        extend_functor(w.right(), gen_images, ops));
  }
  throw Error("unreachable");
}

struct RelationOutcome {
  std::string name;
  bool passed = false;
  std::string lhs_image;  // filled on failure (and harmlessly on success)
  std::string rhs_image;
};

struct RelationReport {
  std::vector<RelationOutcome> outcomes;
  bool all_passed() const {
    for (const auto& o : outcomes)
      if (!o.passed) return false;
    return true;
  }
};

/// Checks phi(lhs) == phi(rhs) for each relation pair after normalizing both
/// images. Each pair is first checked to have equal source and equal target;
/// a mistyped relation (e.g. a mistranscribed long composite) throws.
template <typename M>
RelationReport check_relation_set(
    const std::vector<std::tuple<std::string, Word, Word>>& relations,
    const std::map<std::string, M>& gen_images, const TensorOps<M>& ops,
    const std::function<M(const M&)>& normalizer,
    const std::function<bool(const M&, const M&)>& equal,
    const std::function<std::string(const M&)>& describe) {
  RelationReport report;
  for (const auto& [name, lhs, rhs] : relations) {
    auto tl = word_type(lhs);
    auto tr = word_type(rhs);
    if (tl != tr)
      throw TypeMismatchError("relation " + name + " relates words of different types: (" +
                              tl.first.str() + " -> " + tl.second.str() + ") vs (" +
                              tr.first.str() + " -> " + tr.second.str() + ")");
    M li = normalizer(extend_functor(lhs, gen_images, ops));
    M ri = normalizer(extend_functor(rhs, gen_images, ops));
    RelationOutcome o;
    o.name = name;
    o.passed = equal(li, ri);
    if (!o.passed) {
      o.lhs_image = describe(li);
      o.rhs_image = describe(ri);
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace sl3web
