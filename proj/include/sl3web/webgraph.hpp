#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "sl3web/alphabet.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/sign_string.hpp"
#include "sl3web/word.hpp"

namespace sl3web {

enum class VertexKind : std::uint8_t { Sink, Source, BottomBoundary, TopBoundary };

/// Loop, digon or square located by `find_reducible`. `darts` lists the face
/// orbit (empty for Loop).
struct ReduciblePattern {
  enum class Kind { Loop, Digon, Square };
  Kind kind;
  std::vector<int> darts;
};

/// A web diagram as a planar combinatorial map: interior vertices are
/// trivalent sinks/sources, boundary vertices are univalent and pinned to the
/// two boundary lines in index order, and each vertex carries the
/// counterclockwise cyclic order of its incident half-edges. Verticeless
/// circles are kept in a counter, not in the map. Immutable after
/// construction; every operation returns a fresh diagram.
class WebDiagram {
 public:
  struct Vertex {
    VertexKind kind;
    int index;  // 1-based boundary position; 0 for interior vertices
  };

  WebDiagram() = default;

  static WebDiagram empty() { return WebDiagram(); }

  static WebDiagram loops(long long n) {
    WebDiagram d;
    d.loops_ = n;
    return d;
  }

  /// Straight strands: bottom i joined to top i, oriented by the sign.
  static WebDiagram identity(const SignString& sig) {
    WebDiagram d;
    d.src_ = sig;
    d.tgt_ = sig;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      int b = d.add_vertex(VertexKind::BottomBoundary, static_cast<int>(i + 1));
      int t = d.add_vertex(VertexKind::TopBoundary, static_cast<int>(i + 1));
      if (sig.at(i) == '+')
        d.add_edge(b, t);
      else
        d.add_edge(t, b);
    }
    return d;
  }

  /// Local picture of one web generator (Y±, n±, u±).
  static WebDiagram generator(const Generator& g) {
    WebDiagram d;
    d.src_ = g.source;
    d.tgt_ = g.target;
    if (g.name == "U+") {
      int t1 = d.add_vertex(VertexKind::TopBoundary, 1);
      int t2 = d.add_vertex(VertexKind::TopBoundary, 2);
      d.add_edge(t1, t2);
    } else if (g.name == "U-") {
      int t1 = d.add_vertex(VertexKind::TopBoundary, 1);
      int t2 = d.add_vertex(VertexKind::TopBoundary, 2);
      d.add_edge(t2, t1);
    } else if (g.name == "N+") {
      int b1 = d.add_vertex(VertexKind::BottomBoundary, 1);
      int b2 = d.add_vertex(VertexKind::BottomBoundary, 2);
      d.add_edge(b2, b1);
    } else if (g.name == "N-") {
      int b1 = d.add_vertex(VertexKind::BottomBoundary, 1);
      int b2 = d.add_vertex(VertexKind::BottomBoundary, 2);
      d.add_edge(b1, b2);
    } else if (g.name == "Y+") {
      // Interior source; ccw rotation is (down, up-right, up-left).
      int b1 = d.add_vertex(VertexKind::BottomBoundary, 1);
      int t1 = d.add_vertex(VertexKind::TopBoundary, 1);
      int t2 = d.add_vertex(VertexKind::TopBoundary, 2);
      int s = d.add_vertex(VertexKind::Source, 0);
      d.add_edge(s, b1);
      d.add_edge(s, t2);
      d.add_edge(s, t1);
    } else if (g.name == "Y-") {
      int b1 = d.add_vertex(VertexKind::BottomBoundary, 1);
      int t1 = d.add_vertex(VertexKind::TopBoundary, 1);
      int t2 = d.add_vertex(VertexKind::TopBoundary, 2);
      int s = d.add_vertex(VertexKind::Sink, 0);
      d.add_edge(b1, s);
      d.add_edge(t2, s);
      d.add_edge(t1, s);
    } else {
      throw Error("not a web generator: " + g.name);
    }
    return d;
  }

  /// Each layer contributes its local picture wired onto the strands below.
  static WebDiagram from_layered(const LayeredWord& lw);

  friend WebDiagram web_tensor(const WebDiagram& left, const WebDiagram& right);
  friend WebDiagram web_compose(const WebDiagram& upper, const WebDiagram& lower);

  const SignString& source_sig() const { return src_; }
  const SignString& target_sig() const { return tgt_; }
  long long free_loops() const { return loops_; }
  bool is_closed() const { return src_.is_empty() && tgt_.is_empty(); }

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t interior_vertex_count() const {
    std::size_t n = 0;
    for (const auto& v : verts_)
      if (v.kind == VertexKind::Sink || v.kind == VertexKind::Source) ++n;
    return n;
  }
  std::size_t edge_count() const { return owner_.size() / 2; }

  // --- faces and reducible patterns ---------------------------------------

  int twin(int h) const { return twin_[h]; }
  int owner(int h) const { return owner_[h]; }
  bool outgoing(int h) const { return outgoing_[h]; }

  /// Rotation successor at the owner of h.
  int rot_next(int h) const {
    const auto& r = rot_[owner_[h]];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == h) return r[(i + 1) % r.size()];
    throw MapInvariantError("half-edge missing from its owner's rotation");
  }

  /// Next dart along the face on the left of h.
  int face_next(int h) const { return rot_next(twin_[h]); }

  /// Face orbits, each listed from its smallest dart, in order of that dart.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(owner_.size(), false);
    for (int h = 0; h < static_cast<int>(owner_.size()); ++h) {
      if (seen[h]) continue;
      std::vector<int> orbit;
      int cur = h;
      do {
        orbit.push_back(cur);
        seen[cur] = true;
        cur = face_next(cur);
      } while (cur != h);
      out.push_back(std::move(orbit));
    }
    return out;
  }

  bool interior(int vertex) const {
    return verts_[vertex].kind == VertexKind::Sink || verts_[vertex].kind == VertexKind::Source;
  }

  std::optional<ReduciblePattern> find_reducible() const {
    if (loops_ > 0) return ReduciblePattern{ReduciblePattern::Kind::Loop, {}};
    std::optional<ReduciblePattern> square;
    for (const auto& f : faces()) {
      if (!face_is_interior(f)) continue;
      if (f.size() == 2) return make_digon(f);
      if (f.size() == 4 && !square) square = make_square(f);
    }
    return square;
  }

  std::vector<ReduciblePattern> find_all_reducible() const {
    std::vector<ReduciblePattern> out;
    if (loops_ > 0) out.push_back(ReduciblePattern{ReduciblePattern::Kind::Loop, {}});
    for (const auto& f : faces()) {
      if (!face_is_interior(f)) continue;
      if (f.size() == 2) out.push_back(make_digon(f));
      if (f.size() == 4) out.push_back(make_square(f));
    }
    return out;
  }

  // --- skein surgeries ------------------------------------------------------

  WebDiagram remove_one_loop() const {
    if (loops_ <= 0) throw Error("no free loop to remove");
    WebDiagram d = *this;
    d.loops_ -= 1;
    d.key_cache_.clear();
    return d;
  }

  /// Replace the digon by a single arc joining its two external strands.
  WebDiagram reduce_digon(const ReduciblePattern& p) const {
    if (p.kind != ReduciblePattern::Kind::Digon) throw Error("not a digon pattern");
    const int d1 = p.darts[0], d2 = p.darts[1];
    const int a = owner_[d1], b = owner_[d2];
    std::vector<bool> vdel(verts_.size(), false);
    vdel[a] = vdel[b] = true;
    std::vector<bool> edel(owner_.size(), false);
    mark_edge(edel, d1);
    mark_edge(edel, d2);
    const int xa = external_dart(a, {d1, twin_[d2]});
    const int xb = external_dart(b, {d2, twin_[d1]});
    std::map<int, int> conn{{xa, xb}, {xb, xa}};
    return rebuild(*this, vdel, edel, conn, src_, tgt_);
  }

  /// The two parallel-side replacements of a square, in face-traversal order.
  std::pair<WebDiagram, WebDiagram> reduce_square(const ReduciblePattern& p) const {
    if (p.kind != ReduciblePattern::Kind::Square) throw Error("not a square pattern");
    const auto& d = p.darts;
    std::vector<bool> vdel(verts_.size(), false);
    std::vector<bool> edel(owner_.size(), false);
    std::vector<int> x(4);
    for (int i = 0; i < 4; ++i) {
      vdel[owner_[d[i]]] = true;
      mark_edge(edel, d[i]);
    }
    for (int i = 0; i < 4; ++i)
      x[i] = external_dart(owner_[d[i]], {d[i], twin_[d[(i + 3) % 4]]});
    std::map<int, int> conn_a{{x[0], x[1]}, {x[1], x[0]}, {x[2], x[3]}, {x[3], x[2]}};
    std::map<int, int> conn_b{{x[1], x[2]}, {x[2], x[1]}, {x[3], x[0]}, {x[0], x[3]}};
    return {rebuild(*this, vdel, edel, conn_a, src_, tgt_),
            rebuild(*this, vdel, edel, conn_b, src_, tgt_)};
  }

  // --- canonical key --------------------------------------------------------

  /// Deterministic code equal for boundary-preserving-isotopic diagrams:
  /// signatures, loop count, then one rooted traversal per boundary-attached
  /// component (rooted at its first boundary vertex) and minimized traversals
  /// of closed components, sorted. Reflections are not quotiented.
  const std::string& canonical_key() const {
    if (!key_cache_.empty()) return key_cache_;
    std::ostringstream out;
    out << "S" << src_.str() << ";T" << tgt_.str() << ";L" << loops_;

    std::vector<int> comp(verts_.size(), -1);
    int ncomp = 0;
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      if (comp[v] != -1) continue;
      std::queue<std::size_t> q;
      q.push(v);
      comp[v] = ncomp;
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (int h : rot_[u]) {
          int w = owner_[twin_[h]];
          if (comp[w] == -1) {
            comp[w] = ncomp;
            q.push(static_cast<std::size_t>(w));
          }
        }
      }
      ++ncomp;
    }

    std::vector<bool> emitted(ncomp, false);
    for (int v : boundary_vertices_in_order()) {
      if (emitted[comp[v]]) continue;
      emitted[comp[v]] = true;
      out << ";R" << rooted_code(rot_[v][0]);
    }
    std::vector<std::string> closed;
    for (int c = 0; c < ncomp; ++c) {
      if (emitted[c]) continue;
      std::string best;
      for (int h = 0; h < static_cast<int>(owner_.size()); ++h) {
        if (comp[owner_[h]] != c) continue;
        std::string code = rooted_code(h);
        if (best.empty() || code < best) best = std::move(code);
      }
      closed.push_back(std::move(best));
    }
    std::sort(closed.begin(), closed.end());
    for (const auto& c : closed) out << ";C" << c;
    key_cache_ = out.str();
    return key_cache_;
  }

  friend bool operator==(const WebDiagram& a, const WebDiagram& b) {
    return a.canonical_key() == b.canonical_key();
  }

  /// Stable diffable text: vertices, edges (tail -> head), rotations.
  std::string dump() const {
    std::ostringstream out;
    out << "web " << src_.str() << " -> " << tgt_.str() << ", loops=" << loops_ << "\n";
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      out << "  v" << v << " " << kind_name(verts_[v].kind);
      if (verts_[v].index) out << "(" << verts_[v].index << ")";
      out << "\n";
    }
    for (int h = 0; h < static_cast<int>(owner_.size()); ++h) {
      if (h < twin_[h] && outgoing_[h])
        out << "  e " << owner_[h] << " -> " << owner_[twin_[h]] << "  [" << h << "," << twin_[h]
            << "]\n";
      else if (h < twin_[h] && !outgoing_[h])
        out << "  e " << owner_[twin_[h]] << " -> " << owner_[h] << "  [" << twin_[h] << "," << h
            << "]\n";
    }
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      out << "  rot v" << v << ":";
      for (int h : rot_[v]) out << " " << h;
      out << "\n";
    }
    return out.str();
  }

  /// Structural validator; throws MapInvariantError with a dump on failure.
  void validate() const;

 private:
  std::vector<Vertex> verts_;
  std::vector<int> owner_;
  std::vector<int> twin_;
  std::vector<bool> outgoing_;             // edge points away from the owner
  std::vector<std::vector<int>> rot_;      // ccw cyclic order per vertex
  long long loops_ = 0;
  SignString src_, tgt_;
  mutable std::string key_cache_;

  static const char* kind_name(VertexKind k) {
    switch (k) {
      case VertexKind::Sink: return "sink";
      case VertexKind::Source: return "source";
      case VertexKind::BottomBoundary: return "bottom";
      case VertexKind::TopBoundary: return "top";
    }
    return "?";
  }

  int add_vertex(VertexKind k, int index) {
    verts_.push_back(Vertex{k, index});
    rot_.emplace_back();
    return static_cast<int>(verts_.size()) - 1;
  }

  /// New edge oriented tail -> head; half-edges append to the endpoints'
  /// rotations in call order.
  void add_edge(int tail, int head) {
    int h1 = static_cast<int>(owner_.size());
    int h2 = h1 + 1;
    owner_.push_back(tail);
    owner_.push_back(head);
    twin_.push_back(h2);
    twin_.push_back(h1);
    outgoing_.push_back(true);
    outgoing_.push_back(false);
    rot_[tail].push_back(h1);
    rot_[head].push_back(h2);
  }

  void mark_edge(std::vector<bool>& edel, int h) const {
    edel[h] = true;
    edel[twin_[h]] = true;
  }

  int external_dart(int vertex, std::initializer_list<int> face_darts) const {
    for (int h : rot_[vertex]) {
      bool on_face = false;
      for (int f : face_darts)
        if (h == f) on_face = true;
      if (!on_face) return h;
    }
    throw MapInvariantError("interior vertex has no external strand\n" + dump());
  }

  bool face_is_interior(const std::vector<int>& orbit) const {
    for (int h : orbit)
      if (!interior(owner_[h])) return false;
    return true;
  }

  ReduciblePattern make_digon(const std::vector<int>& f) const {
    const int a = owner_[f[0]], b = owner_[f[1]];
    if (a == b || verts_[a].kind == verts_[b].kind)
      throw MapInvariantError("degenerate 2-face\n" + dump());
    return ReduciblePattern{ReduciblePattern::Kind::Digon, f};
  }

  ReduciblePattern make_square(const std::vector<int>& f) const {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j)
        if (owner_[f[i]] == owner_[f[j]])
          throw MapInvariantError("4-face revisits a vertex\n" + dump());
      if (verts_[owner_[f[i]]].kind == verts_[owner_[f[(i + 1) % 4]]].kind)
        throw MapInvariantError("4-face does not alternate sink/source\n" + dump());
    }
    return ReduciblePattern{ReduciblePattern::Kind::Square, f};
  }

  std::vector<int> boundary_vertices_in_order() const {
    std::vector<int> bottoms(src_.size(), -1), tops(tgt_.size(), -1);
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      if (verts_[v].kind == VertexKind::BottomBoundary) bottoms[verts_[v].index - 1] = v;
      if (verts_[v].kind == VertexKind::TopBoundary) tops[verts_[v].index - 1] = v;
    }
    std::vector<int> out = bottoms;
    out.insert(out.end(), tops.begin(), tops.end());
    return out;
  }

  /// BFS dart numbering from the root; two rooted components give the same
  /// code iff some map isomorphism preserving kinds, flags and rotations
  /// carries one root to the other.
  std::string rooted_code(int root) const {
    std::map<int, int> num;
    std::vector<int> order;
    std::queue<int> q;
    num[root] = 0;
    order.push_back(root);
    q.push(root);
    while (!q.empty()) {
      int d = q.front();
      q.pop();
      for (int nxt : {rot_next(d), twin_[d]}) {
        if (!num.count(nxt)) {
          num[nxt] = static_cast<int>(order.size());
          order.push_back(nxt);
          q.push(nxt);
        }
      }
    }
    std::ostringstream out;
    for (int d : order) {
      const Vertex& v = verts_[owner_[d]];
      out << num[rot_next(d)] << "." << num[twin_[d]] << "." << (outgoing_[d] ? "o" : "i") << ".";
      switch (v.kind) {
        case VertexKind::Sink: out << "k"; break;
        case VertexKind::Source: out << "s"; break;
        case VertexKind::BottomBoundary: out << "b" << v.index; break;
        case VertexKind::TopBoundary: out << "t" << v.index; break;
      }
      out << "|";
    }
    return out.str();
  }

  /// Shared gluing engine behind composition and the skein surgeries.
  ///
  /// Deletes the flagged vertices and edges, then reconnects: every surviving
  /// edge-end that lost its vertex ("dangling") is paired by `conn` with the
  /// dangling end it should fuse onto. Strand chains through several deleted
  /// vertices collapse to single edges; chains with no surviving endpoint
  /// close up and increment the free-loop counter.
  static WebDiagram rebuild(const WebDiagram& in, const std::vector<bool>& vdel,
                            const std::vector<bool>& edel, const std::map<int, int>& conn,
                            SignString new_src, SignString new_tgt) {
    WebDiagram out;
    out.src_ = std::move(new_src);
    out.tgt_ = std::move(new_tgt);
    out.loops_ = in.loops_;

    std::vector<int> vmap(in.verts_.size(), -1);
    for (std::size_t v = 0; v < in.verts_.size(); ++v)
      if (!vdel[v]) vmap[v] = out.add_vertex(in.verts_[v].kind, in.verts_[v].index);

    const int H = static_cast<int>(in.owner_.size());
    std::vector<bool> visited(H, false);
    std::vector<int> endmap(H, -1);

    auto new_edge = [&](int old_a, int old_b) {
      if (in.outgoing_[old_a] == in.outgoing_[old_b])
        throw MapInvariantError("fused strand ends disagree on orientation\n" + in.dump());
      int h1 = static_cast<int>(out.owner_.size());
      int h2 = h1 + 1;
      out.owner_.push_back(vmap[in.owner_[old_a]]);
      out.owner_.push_back(vmap[in.owner_[old_b]]);
      out.twin_.push_back(h2);
      out.twin_.push_back(h1);
      out.outgoing_.push_back(in.outgoing_[old_a]);
      out.outgoing_.push_back(in.outgoing_[old_b]);
      endmap[old_a] = h1;
      endmap[old_b] = h2;
    };

    for (int h = 0; h < H; ++h) {
      if (visited[h] || edel[h]) continue;
      const bool h_alive = !vdel[in.owner_[h]];
      const bool t_alive = !vdel[in.owner_[in.twin_[h]]];
      if (h_alive && t_alive) {
        visited[h] = visited[in.twin_[h]] = true;
        new_edge(h, in.twin_[h]);
      } else if (h_alive) {
        visited[h] = true;
        int cur = in.twin_[h];
        while (true) {
          visited[cur] = true;
          int partner = conn.at(cur);
          visited[partner] = true;
          int other = in.twin_[partner];
          visited[other] = true;
          if (!vdel[in.owner_[other]]) {
            new_edge(h, other);
            break;
          }
          cur = other;
        }
      }
      // both ends deleted: handled from a surviving end or by the cycle pass
    }

    for (int h = 0; h < H; ++h) {
      if (visited[h] || edel[h]) continue;
      int cur = h;
      do {
        visited[cur] = visited[in.twin_[cur]] = true;
        cur = conn.at(in.twin_[cur]);
      } while (cur != h);
      out.loops_ += 1;
    }

    for (std::size_t v = 0; v < in.verts_.size(); ++v) {
      if (vdel[v]) continue;
      auto& r = out.rot_[vmap[v]];
      for (int h : in.rot_[v]) {
        if (endmap[h] < 0) throw MapInvariantError("surviving corner lost its edge\n" + in.dump());
        r.push_back(endmap[h]);
      }
    }
    return out;
  }
};

inline WebDiagram web_tensor(const WebDiagram& left, const WebDiagram& right) {
  WebDiagram d;
  d.src_ = left.src_ + right.src_;
  d.tgt_ = left.tgt_ + right.tgt_;
  d.loops_ = left.loops_ + right.loops_;
  d.verts_ = left.verts_;
  for (const auto& v : right.verts_) {
    WebDiagram::Vertex nv = v;
    if (v.kind == VertexKind::BottomBoundary) nv.index += static_cast<int>(left.src_.size());
    if (v.kind == VertexKind::TopBoundary) nv.index += static_cast<int>(left.tgt_.size());
    d.verts_.push_back(nv);
  }
  const int voff = static_cast<int>(left.verts_.size());
  const int hoff = static_cast<int>(left.owner_.size());
  d.owner_ = left.owner_;
  d.twin_ = left.twin_;
  d.outgoing_ = left.outgoing_;
  for (int o : right.owner_) d.owner_.push_back(o + voff);
  for (int t : right.twin_) d.twin_.push_back(t + hoff);
  for (bool f : right.outgoing_) d.outgoing_.push_back(f);
  d.rot_ = left.rot_;
  for (const auto& r : right.rot_) {
    std::vector<int> nr;
    for (int h : r) nr.push_back(h + hoff);
    d.rot_.push_back(std::move(nr));
  }
  return d;
}

inline WebDiagram web_compose(const WebDiagram& upper, const WebDiagram& lower) {
  if (lower.tgt_ != upper.src_)
    throw BoundaryMismatchError("cannot stack: lower target \"" + lower.tgt_.str() +
                                "\" != upper source \"" + upper.src_.str() + "\"");
  // Merge the two maps, then glue seam vertices away.
  WebDiagram m;
  m.loops_ = lower.loops_ + upper.loops_;
  m.verts_ = lower.verts_;
  m.verts_.insert(m.verts_.end(), upper.verts_.begin(), upper.verts_.end());
  const int voff = static_cast<int>(lower.verts_.size());
  const int hoff = static_cast<int>(lower.owner_.size());
  m.owner_ = lower.owner_;
  m.twin_ = lower.twin_;
  m.outgoing_ = lower.outgoing_;
  for (int o : upper.owner_) m.owner_.push_back(o + voff);
  for (int t : upper.twin_) m.twin_.push_back(t + hoff);
  for (bool f : upper.outgoing_) m.outgoing_.push_back(f);
  m.rot_ = lower.rot_;
  for (const auto& r : upper.rot_) {
    std::vector<int> nr;
    for (int h : r) nr.push_back(h + hoff);
    m.rot_.push_back(std::move(nr));
  }

  const std::size_t seam = lower.tgt_.size();
  std::vector<int> lower_top(seam, -1), upper_bottom(seam, -1);
  for (std::size_t v = 0; v < lower.verts_.size(); ++v)
    if (lower.verts_[v].kind == VertexKind::TopBoundary)
      lower_top[lower.verts_[v].index - 1] = static_cast<int>(v);
  for (std::size_t v = 0; v < upper.verts_.size(); ++v)
    if (upper.verts_[v].kind == VertexKind::BottomBoundary)
      upper_bottom[upper.verts_[v].index - 1] = static_cast<int>(v) + voff;

  std::vector<bool> vdel(m.verts_.size(), false);
  std::map<int, int> conn;
  for (std::size_t j = 0; j < seam; ++j) {
    vdel[lower_top[j]] = true;
    vdel[upper_bottom[j]] = true;
    int hl = m.rot_[lower_top[j]][0];
    int hu = m.rot_[upper_bottom[j]][0];
    conn[hl] = hu;
    conn[hu] = hl;
  }
  std::vector<bool> edel(m.owner_.size(), false);
  return WebDiagram::rebuild(m, vdel, edel, conn, lower.src_, upper.tgt_);
}

inline WebDiagram WebDiagram::from_layered(const LayeredWord& lw) {
  lw.check();
  WebDiagram acc = identity(lw.source);
  for (const auto& ly : lw.layers) {
    WebDiagram mid = generator(ly.gen);
    if (!ly.left.is_empty()) mid = web_tensor(identity(ly.left), mid);
    if (!ly.right.is_empty()) mid = web_tensor(mid, identity(ly.right));
    acc = web_compose(mid, acc);
  }
  return acc;
}

inline void WebDiagram::validate() const {
  auto fail = [&](const std::string& msg) { throw MapInvariantError(msg + "\n" + dump()); };
  const int H = static_cast<int>(owner_.size());
  if (static_cast<int>(twin_.size()) != H || static_cast<int>(outgoing_.size()) != H)
    fail("half-edge arrays inconsistent");
  for (int h = 0; h < H; ++h) {
    if (twin_[h] == h || twin_[twin_[h]] != h) fail("twin is not a fixed-point-free involution");
    if (outgoing_[h] == outgoing_[twin_[h]]) fail("edge halves share a direction flag");
    if (owner_[h] < 0 || owner_[h] >= static_cast<int>(verts_.size())) fail("dangling owner");
  }
  std::vector<std::vector<int>> incident(verts_.size());
  for (int h = 0; h < H; ++h) incident[owner_[h]].push_back(h);
  std::vector<int> bottom_seen(src_.size(), 0), top_seen(tgt_.size(), 0);
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    auto sorted_rot = rot_[v];
    std::sort(sorted_rot.begin(), sorted_rot.end());
    std::sort(incident[v].begin(), incident[v].end());
    if (sorted_rot != incident[v]) fail("rotation is not a permutation of incident half-edges");
    const Vertex& vx = verts_[v];
    switch (vx.kind) {
      case VertexKind::Sink:
      case VertexKind::Source: {
        if (rot_[v].size() != 3) fail("interior vertex is not trivalent");
        for (int h : rot_[v])
          if (outgoing_[h] != (vx.kind == VertexKind::Source))
            fail("interior vertex mixes edge directions");
        break;
      }
      case VertexKind::BottomBoundary: {
        if (rot_[v].size() != 1) fail("boundary vertex is not univalent");
        if (vx.index < 1 || vx.index > static_cast<int>(src_.size())) fail("bottom index range");
        bottom_seen[vx.index - 1]++;
        const bool up = src_.at(vx.index - 1) == '+';
        if (outgoing_[rot_[v][0]] != up) fail("bottom boundary orientation mismatch");
        break;
      }
      case VertexKind::TopBoundary: {
        if (rot_[v].size() != 1) fail("boundary vertex is not univalent");
        if (vx.index < 1 || vx.index > static_cast<int>(tgt_.size())) fail("top index range");
        top_seen[vx.index - 1]++;
        const bool arriving = tgt_.at(vx.index - 1) == '+';
        if (outgoing_[rot_[v][0]] == arriving) fail("top boundary orientation mismatch");
        break;
      }
    }
  }
  for (int c : bottom_seen)
    if (c != 1) fail("bottom boundary positions not covered exactly once");
  for (int c : top_seen)
    if (c != 1) fail("top boundary positions not covered exactly once");

  // Euler check per component: V - E + F = 2 on face orbits.
  std::vector<int> comp(verts_.size(), -1);
  int ncomp = 0;
  for (std::size_t v = 0; v < verts_.size(); ++v) {
    if (comp[v] != -1) continue;
    std::queue<std::size_t> q;
    q.push(v);
    comp[v] = ncomp;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (int h : rot_[u]) {
        int w = owner_[twin_[h]];
        if (comp[w] == -1) {
          comp[w] = ncomp;
          q.push(static_cast<std::size_t>(w));
        }
      }
    }
    ++ncomp;
  }
  std::vector<long long> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
  for (std::size_t v = 0; v < verts_.size(); ++v) vcnt[comp[v]]++;
  for (int h = 0; h < H; ++h)
    if (h < twin_[h]) ecnt[comp[owner_[h]]]++;
  for (const auto& f : faces()) fcnt[comp[owner_[f[0]]]]++;
  for (int c = 0; c < ncomp; ++c)
    if (vcnt[c] - ecnt[c] + fcnt[c] != 2) fail("Euler check failed on a component");
}

}  // namespace sl3web
