#include "tapes/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tapes {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

struct Builder {
  UnionFind uf;
  std::vector<Hyperedge> edges;  // vertex ids are pre-quotient
  const MonSignature& sig;

  explicit Builder(const MonSignature& s) : sig(s) {}

  struct Boundary {
    std::vector<int> left, right;
  };

  Boundary build(const Circuit& c) {
    switch (c->kind) {
      case CircKind::Id: {
        int v = uf.make();
        return {{v}, {v}};
      }
      case CircKind::IdUnit:
        return {{}, {}};
      case CircKind::Gen: {
        const Generator& g = sig.generator(c->sort_a);
        std::vector<int> src, tgt;
        for (std::size_t i = 0; i < g.arity.size(); ++i)
          src.push_back(uf.make());
        for (std::size_t i = 0; i < g.coarity.size(); ++i)
          tgt.push_back(uf.make());
        edges.push_back({c->sort_a, src, tgt});
        return {src, tgt};
      }
      case CircKind::Sym: {
        int u = uf.make(), v = uf.make();
        return {{u, v}, {v, u}};
      }
      case CircKind::Copier: {
        int v = uf.make();
        return {{v}, {v, v}};
      }
      case CircKind::Discharger: {
        int v = uf.make();
        return {{v}, {}};
      }
      case CircKind::Cocopier: {
        int v = uf.make();
        return {{v, v}, {v}};
      }
      case CircKind::Codischarger: {
        int v = uf.make();
        return {{}, {v}};
      }
      case CircKind::Seq: {
        Boundary ba = build(c->a);
        Boundary bb = build(c->b);
        assert(ba.right.size() == bb.left.size());
        for (std::size_t i = 0; i < ba.right.size(); ++i)
          uf.merge(ba.right[i], bb.left[i]);
        return {ba.left, bb.right};
      }
      case CircKind::Tensor: {
        Boundary ba = build(c->a);
        Boundary bb = build(c->b);
        ba.left.insert(ba.left.end(), bb.left.begin(), bb.left.end());
        ba.right.insert(ba.right.end(), bb.right.begin(), bb.right.end());
        return ba;
      }
    }
    assert(false && "malformed circuit node");
    return {};
  }
};

}  // namespace

InterfacedHypergraph to_hypergraph(const Circuit& c, const MonSignature& sig) {
  auto types = type_check_circuit(c, sig);  // also validates Frobenius mode
  Builder b(sig);
  Builder::Boundary boundary = b.build(c);

  // Quotient by the union-find and renumber representatives in first-seen
  // order (edges first, then boundaries) for a deterministic raw encoding.
  std::map<int, int> renum;
  auto id_of = [&](int raw) {
    int root = b.uf.find(raw);
    auto it = renum.find(root);
    if (it != renum.end()) return it->second;
    int fresh = static_cast<int>(renum.size());
    renum.emplace(root, fresh);
    return fresh;
  };

  InterfacedHypergraph h;
  for (const Hyperedge& e : b.edges) {
    Hyperedge out;
    out.label = e.label;
    for (int v : e.sources) out.sources.push_back(id_of(v));
    for (int v : e.targets) out.targets.push_back(id_of(v));
    h.edges.push_back(std::move(out));
  }
  for (int v : boundary.left) h.left.push_back(id_of(v));
  for (int v : boundary.right) h.right.push_back(id_of(v));
  // Vertices created but untouched by any edge or boundary cannot exist: every
  // make() above is referenced. Still, derive the count from the map.
  h.vertex_count = static_cast<int>(renum.size());

  if (!sig.frobenius_enabled) assert(is_linear(h));
  (void)types;
  return h;
}

bool is_linear(const InterfacedHypergraph& h) {
  std::vector<int> produced(h.vertex_count, 0), consumed(h.vertex_count, 0);
  for (int v : h.left) ++produced[v];
  for (int v : h.right) ++consumed[v];
  for (const Hyperedge& e : h.edges) {
    for (int v : e.sources) ++consumed[v];
    for (int v : e.targets) ++produced[v];
  }
  for (int v = 0; v < h.vertex_count; ++v)
    if (produced[v] != 1 || consumed[v] != 1) return false;
  return true;
}

namespace {

/** One round of colour refinement: a vertex signature collects its boundary
 * pinning and, for every incident edge port, the edge label together with the
 * colours at all ports of that edge. Signatures are ranked to dense ints. */
std::vector<int> refine(const InterfacedHypergraph& h,
                        const std::vector<int>& colour) {
  auto edge_profile = [&](const Hyperedge& e) {
    std::string p = e.label + "(";
    for (int v : e.sources) p += std::to_string(colour[v]) + " ";
    p += "|";
    for (int v : e.targets) p += std::to_string(colour[v]) + " ";
    return p + ")";
  };
  // A vertex's signature is its old colour plus the sorted multiset of its
  // port incidences, each tagged with the full colour profile of its edge.
  std::vector<std::vector<std::string>> parts(h.vertex_count);
  for (int v = 0; v < h.vertex_count; ++v)
    parts[v].push_back("c" + std::to_string(colour[v]));
  for (const Hyperedge& e : h.edges) {
    std::string prof = edge_profile(e);
    for (std::size_t i = 0; i < e.sources.size(); ++i)
      parts[e.sources[i]].push_back("s" + std::to_string(i) + prof);
    for (std::size_t i = 0; i < e.targets.size(); ++i)
      parts[e.targets[i]].push_back("t" + std::to_string(i) + prof);
  }
  std::vector<std::string> joined(h.vertex_count);
  for (int v = 0; v < h.vertex_count; ++v) {
    std::sort(parts[v].begin() + 1, parts[v].end());
    for (const std::string& p : parts[v]) joined[v] += p + ";";
  }
  std::vector<std::string> uniq = joined;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> next(h.vertex_count);
  for (int v = 0; v < h.vertex_count; ++v)
    next[v] = static_cast<int>(
        std::lower_bound(uniq.begin(), uniq.end(), joined[v]) - uniq.begin());
  return next;
}

int colour_classes(const std::vector<int>& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) +
                                  1;
}

/** Encoding of the graph under a total vertex order (smaller = earlier). */
std::string encode(const InterfacedHypergraph& h,
                   const std::vector<int>& order) {
  std::vector<std::string> edge_strs;
  for (const Hyperedge& e : h.edges) {
    std::string s = e.label + "(";
    for (int v : e.sources) s += std::to_string(order[v]) + " ";
    s += "|";
    for (int v : e.targets) s += std::to_string(order[v]) + " ";
    s += ")";
    edge_strs.push_back(std::move(s));
  }
  std::sort(edge_strs.begin(), edge_strs.end());
  std::string out = "n" + std::to_string(h.vertex_count) + "#";
  for (const std::string& s : edge_strs) out += s;
  out += "#L";
  for (int v : h.left) out += std::to_string(order[v]) + " ";
  out += "#R";
  for (int v : h.right) out += std::to_string(order[v]) + " ";
  return out;
}

void canonical_search(const InterfacedHypergraph& h, std::vector<int> colour,
                      std::string& best, bool& have_best) {
  // Refine to a fixpoint.
  while (true) {
    std::vector<int> next = refine(h, colour);
    if (colour_classes(next) == colour_classes(colour)) {
      colour = std::move(next);
      break;
    }
    colour = std::move(next);
  }

  // Find the first colour class with more than one vertex.
  int classes = colour_classes(colour);
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < h.vertex_count; ++v) members[colour[v]].push_back(v);
  int split = -1;
  for (int c = 0; c < classes; ++c)
    if (members[c].size() > 1) {
      split = c;
      break;
    }

  if (split < 0) {
    // Discrete colouring: colours are a total order on vertices.
    std::string enc = encode(h, colour);
    if (!have_best || enc < best) {
      best = std::move(enc);
      have_best = true;
    }
    return;
  }

  for (int v : members[split]) {
    // Individualize v: give it a fresh colour below its current class.
    std::vector<int> c2(h.vertex_count);
    for (int w = 0; w < h.vertex_count; ++w)
      c2[w] = colour[w] * 2 + (w == v ? 0 : 1);
    canonical_search(h, std::move(c2), best, have_best);
  }
}

}  // namespace

std::string canonical_key(const InterfacedHypergraph& h) {
  // Boundary vertices receive position-pinned colours (isomorphisms must fix
  // boundary positions), remaining vertices start uniform.
  std::vector<std::vector<int>> pin(h.vertex_count);
  for (std::size_t i = 0; i < h.left.size(); ++i)
    pin[h.left[i]].push_back(static_cast<int>(i) + 1);
  for (std::size_t i = 0; i < h.right.size(); ++i)
    pin[h.right[i]].push_back(-(static_cast<int>(i) + 1));
  std::map<std::vector<int>, int> ranks;
  for (int v = 0; v < h.vertex_count; ++v) ranks[pin[v]] = 0;
  int r = 0;
  for (auto& kv : ranks) kv.second = r++;
  std::vector<int> colour(h.vertex_count);
  for (int v = 0; v < h.vertex_count; ++v) colour[v] = ranks[pin[v]];

  std::string best;
  bool have_best = false;
  canonical_search(h, std::move(colour), best, have_best);
  assert(have_best);
  return best;
}

namespace {

struct HomSearch {
  const InterfacedHypergraph& from;
  const InterfacedHypergraph& to;
  std::vector<int> map;  // from-vertex -> to-vertex or -1
  // to-edges indexed by label for candidate lookup
  std::map<std::string, std::vector<const Hyperedge*>> by_label;

  HomSearch(const InterfacedHypergraph& f, const InterfacedHypergraph& t)
      : from(f), to(t), map(f.vertex_count, -1) {
    for (const Hyperedge& e : to.edges) by_label[e.label].push_back(&e);
  }

  bool assign(int v, int w) {
    if (map[v] == -1) {
      map[v] = w;
      return true;
    }
    return map[v] == w;
  }

  bool run() {
    // Pin boundaries pointwise.
    if (from.left.size() != to.left.size() ||
        from.right.size() != to.right.size())
      return false;
    for (std::size_t i = 0; i < from.left.size(); ++i)
      if (!assign(from.left[i], to.left[i])) return false;
    for (std::size_t i = 0; i < from.right.size(); ++i)
      if (!assign(from.right[i], to.right[i])) return false;

    // Order edges so that each one shares mapped vertices with the prefix
    // when possible (connectivity-guided, cheap static heuristic).
    std::vector<const Hyperedge*> order;
    std::vector<bool> used(from.edges.size(), false);
    std::vector<bool> touched(from.vertex_count, false);
    for (int v = 0; v < from.vertex_count; ++v)
      if (map[v] != -1) touched[v] = true;
    for (std::size_t step = 0; step < from.edges.size(); ++step) {
      int pick = -1;
      for (std::size_t i = 0; i < from.edges.size(); ++i) {
        if (used[i]) continue;
        bool conn = false;
        for (int v : from.edges[i].sources) conn = conn || touched[v];
        for (int v : from.edges[i].targets) conn = conn || touched[v];
        if (conn) {
          pick = static_cast<int>(i);
          break;
        }
        if (pick < 0) pick = static_cast<int>(i);
      }
      used[pick] = true;
      for (int v : from.edges[pick].sources) touched[v] = true;
      for (int v : from.edges[pick].targets) touched[v] = true;
      order.push_back(&from.edges[pick]);
    }

    if (!match(order, 0)) return false;

    // Vertices in no edge and no boundary may map anywhere.
    for (int v = 0; v < from.vertex_count; ++v)
      if (map[v] == -1 && to.vertex_count == 0) return false;
    return true;
  }

  bool match(const std::vector<const Hyperedge*>& order, std::size_t k) {
    if (k == order.size()) return true;
    const Hyperedge& e = *order[k];
    auto it = by_label.find(e.label);
    if (it == by_label.end()) return false;
    for (const Hyperedge* cand : it->second) {
      if (cand->sources.size() != e.sources.size() ||
          cand->targets.size() != e.targets.size())
        continue;
      std::vector<std::pair<int, int>> undo;
      bool ok = true;
      auto try_ports = [&](const std::vector<int>& fp,
                           const std::vector<int>& tp) {
        for (std::size_t i = 0; i < fp.size() && ok; ++i) {
          if (map[fp[i]] == -1) {
            map[fp[i]] = tp[i];
            undo.emplace_back(fp[i], -1);
          } else if (map[fp[i]] != tp[i]) {
            ok = false;
          }
        }
      };
      try_ports(e.sources, cand->sources);
      try_ports(e.targets, cand->targets);
      if (ok && match(order, k + 1)) return true;
      for (auto& [v, old] : undo) map[v] = old;
    }
    return false;
  }
};

}  // namespace

bool hom_exists(const InterfacedHypergraph& from,
                const InterfacedHypergraph& to) {
  HomSearch s(from, to);
  return s.run();
}

std::string to_dot(const InterfacedHypergraph& h, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (int v = 0; v < h.vertex_count; ++v)
    os << "  v" << v << " [shape=point, label=\"\"];\n";
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Hyperedge& e = h.edges[i];
    os << "  e" << i << " [shape=box, label=\"" << e.label << "\"];\n";
    for (std::size_t p = 0; p < e.sources.size(); ++p)
      os << "  v" << e.sources[p] << " -> e" << i << " [label=\"" << p
         << "\"];\n";
    for (std::size_t p = 0; p < e.targets.size(); ++p)
      os << "  e" << i << " -> v" << e.targets[p] << " [label=\"" << p
         << "\"];\n";
  }
  for (std::size_t i = 0; i < h.left.size(); ++i) {
    os << "  L" << i << " [shape=plaintext, label=\"L" << i << "\"];\n";
    os << "  L" << i << " -> v" << h.left[i] << " [style=dashed];\n";
  }
  for (std::size_t i = 0; i < h.right.size(); ++i) {
    os << "  R" << i << " [shape=plaintext, label=\"R" << i << "\"];\n";
    os << "  v" << h.right[i] << " -> R" << i << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tapes
