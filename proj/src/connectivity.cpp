#include "tlink/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace tlink {

bool is_path(const tournament& t, const path& p) {
  if (p.empty()) return false;
  std::vector<char> seen(t.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= t.size() || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i + 1 < p.size() && !t.has_arc(p[i], p[i + 1])) return false;
  }
  return true;
}

namespace {

// Unit-capacity flow network over the vertex-split view of a tournament:
// node 2v is the in-half of vertex v, node 2v+1 the out-half, joined by a
// capacity-1 arc. Tournament arcs and virtual terminal arcs get capacity
// n+1 so that every minimum cut consists of split arcs only and therefore
// reads off directly as a vertex separator. Adjacency lists are built in
// ascending vertex order and BFS scans them in order, so augmentation is
// deterministic (shortest paths, lowest id first).
class split_flow {
 public:
  explicit split_flow(const tournament& t, bool cap_all_vertices,
                      const std::vector<char>& uncapped)
      : t_(t), n_(t.size()), big_(t.size() + 1) {
    adj_.resize(2 * n_ + 2);
    for (int v = 0; v < n_; ++v) {
      add_edge(in_node(v), out_node(v), cap_all_vertices || !uncapped[v] ? 1 : big_);
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (u != v && t.has_arc(u, v)) add_edge(out_node(u), in_node(v), big_);
      }
    }
  }

  static int in_node(int v) { return 2 * v; }
  static int out_node(int v) { return 2 * v + 1; }
  int source_node() const { return 2 * n_; }
  int sink_node() const { return 2 * n_ + 1; }

  void add_edge(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  // Augments one unit along a shortest residual path; false when none exists.
  bool augment(int src, int dst) {
    std::vector<int> parent_edge(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue;
    queue.push_back(src);
    seen[src] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      if (v == dst) break;
      for (int e : adj_[v]) {
        const edge& ed = edges_[e];
        if (ed.cap <= 0 || seen[ed.to]) continue;
        seen[ed.to] = 1;
        parent_edge[ed.to] = e;
        queue.push_back(ed.to);
      }
    }
    if (!seen[dst]) return false;
    for (int v = dst; v != src;) {
      const int e = parent_edge[v];
      edges_[e].cap -= 1;
      edges_[e ^ 1].cap += 1;
      v = edges_[e ^ 1].to;
    }
    return true;
  }

  int run(int src, int dst, int limit) {
    int flow = 0;
    while (flow < limit && augment(src, dst)) ++flow;
    return flow;
  }

  // Split arcs that are saturated and residual-unreachable on the sink side:
  // the minimum vertex separator.
  cut_witness extract_cut(int src) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue;
    queue.push_back(src);
    seen[src] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      for (int e : adj_[queue[qi]]) {
        const edge& ed = edges_[e];
        if (ed.cap <= 0 || seen[ed.to]) continue;
        seen[ed.to] = 1;
        queue.push_back(ed.to);
      }
    }
    cut_witness w;
    for (int v = 0; v < n_; ++v) {
      if (seen[in_node(v)] && !seen[out_node(v)]) {
        w.separator.push_back(v);
      } else if (seen[out_node(v)]) {
        w.side_from.push_back(v);
      } else {
        w.side_to.push_back(v);
      }
    }
    return w;
  }

  // Walks unit flow out of `src`, consuming it, translating node visits back
  // to original vertices; cuts each walk at its first vertex in `stop_at`.
  std::vector<path> decompose(int src, int dst, const std::vector<char>& stop_at) {
    std::vector<path> out;
    for (int e : adj_[src]) {
      edge& first = edges_[e];
      if (first.to == src || !is_forward(e) || edges_[e ^ 1].cap <= 0) continue;
      // one unit left src along e
      path p;
      consume(e);
      int node = first.to;
      while (node != dst) {
        const int v = node / 2;
        if (node == in_node(v)) p.push_back(v);
        if (node == in_node(v) && stop_at[v]) break;
        int next = -1;
        for (int e2 : adj_[node]) {
          if (!is_forward(e2)) continue;
          if (edges_[e2 ^ 1].cap > 0) {  // forward edge carrying flow
            next = e2;
            break;
          }
        }
        if (next < 0) break;  // no further flow; defensive
        consume(next);
        node = edges_[next].to;
      }
      if (!p.empty()) out.push_back(std::move(p));
    }
    return out;
  }

 private:
  struct edge {
    int to;
    int cap;
  };

  bool is_forward(int e) const { return (e & 1) == 0; }
  void consume(int e) {
    edges_[e].cap += 1;
    edges_[e ^ 1].cap -= 1;
  }

  const tournament& t_;
  int n_;
  int big_;
  std::vector<edge> edges_;
  std::vector<std::vector<int>> adj_;
};

std::vector<char> no_vertices(int n) { return std::vector<char>(n, 0); }

// 64-bit row/column masks for cheap lower bounds on local connectivity.
struct degree_masks {
  int words;
  std::vector<uint64_t> out;  // out[v*words + w]
  std::vector<uint64_t> in;

  explicit degree_masks(const tournament& t) {
    const int n = t.size();
    words = (n + 63) / 64;
    out.assign(static_cast<size_t>(n) * words, 0);
    in.assign(static_cast<size_t>(n) * words, 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && t.has_arc(u, v)) {
          out[static_cast<size_t>(u) * words + v / 64] |= uint64_t{1} << (v % 64);
          in[static_cast<size_t>(v) * words + u / 64] |= uint64_t{1} << (u % 64);
        }
      }
    }
  }

  // Number of common out/in neighbors: disjoint length-2 paths u -> w -> v.
  int common(int u, int v) const {
    int c = 0;
    for (int w = 0; w < words; ++w) {
      c += std::popcount(out[static_cast<size_t>(u) * words + w] &
                         in[static_cast<size_t>(v) * words + w]);
    }
    return c;
  }

  // Greedy count of additional disjoint length-3 paths u -> a -> b -> v with
  // a, b outside the common neighborhood. Together with common() this lower
  // bounds the number of internally disjoint u->v paths.
  int greedy_len3(int u, int v) const {
    const int n = words * 64;
    std::vector<uint64_t> bmask(words), used(words, 0);
    for (int w = 0; w < words; ++w) {
      const uint64_t common_w = out[static_cast<size_t>(u) * words + w] &
                                in[static_cast<size_t>(v) * words + w];
      bmask[w] = in[static_cast<size_t>(v) * words + w] & ~common_w;
    }
    clear_bit(bmask, u);
    int matched = 0;
    for (int a = 0; a < n; ++a) {
      if (!test_bit(out, u, a)) continue;
      if (test_bit(in, v, a)) continue;  // reserved for a length-2 path
      if (a == v) continue;
      for (int w = 0; w < words; ++w) {
        const uint64_t cand = out[static_cast<size_t>(a) * words + w] & bmask[w] & ~used[w];
        if (cand) {
          used[w] |= cand & (~cand + 1);  // lowest candidate b
          ++matched;
          break;
        }
      }
    }
    return matched;
  }

 private:
  bool test_bit(const std::vector<uint64_t>& rows, int row, int bit) const {
    return (rows[static_cast<size_t>(row) * words + bit / 64] >> (bit % 64)) & 1;
  }
  static void clear_bit(std::vector<uint64_t>& mask, int bit) {
    mask[bit / 64] &= ~(uint64_t{1} << (bit % 64));
  }
};

int pair_flow(const tournament& t, int u, int v, int limit) {
  std::vector<char> uncapped(t.size(), 0);
  uncapped[u] = uncapped[v] = 1;
  split_flow net(t, false, uncapped);
  return net.run(split_flow::out_node(u), split_flow::in_node(v), limit);
}

}  // namespace

bool is_strong(const tournament& t) {
  const int n = t.size();
  if (n < 1) throw input_error("is_strong on empty tournament");
  if (n == 1) return true;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int w = 0; w < n; ++w) {
        if (seen[w] || v == w) continue;
        const bool arc = pass == 0 ? t.has_arc(v, w) : t.has_arc(w, v);
        if (arc) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(queue.size()) != n) return false;
  }
  return true;
}

int vertex_connectivity(const tournament& t) {
  const int n = t.size();
  if (n < 2) throw input_error("vertex_connectivity requires at least 2 vertices");
  if (!is_strong(t)) return 0;
  // kappa never exceeds the minimum out- or in-degree: deleting the full
  // out-neighborhood (in-neighborhood) of a witness vertex disconnects it.
  int best = std::min({n - 1, t.min_out_degree(), t.min_in_degree()});
  const degree_masks masks(t);
  for (int u = 0; u < n && best > 0; ++u) {
    for (int v = 0; v < n && best > 0; ++v) {
      if (u == v || t.has_arc(u, v)) continue;
      const int c2 = masks.common(u, v);
      if (c2 >= best) continue;
      if (c2 + masks.greedy_len3(u, v) >= best) continue;
      best = std::min(best, pair_flow(t, u, v, best));
    }
  }
  return best;
}

bool is_k_strong(const tournament& t, int k) {
  if (k < 1) throw input_error("is_k_strong requires k >= 1");
  const int n = t.size();
  if (n < k + 1) return false;
  if (t.min_out_degree() < k || t.min_in_degree() < k) return false;
  if (!is_strong(t)) return false;
  const degree_masks masks(t);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || t.has_arc(u, v)) continue;
      const int c2 = masks.common(u, v);
      if (c2 >= k) continue;
      if (c2 + masks.greedy_len3(u, v) >= k) continue;
      if (pair_flow(t, u, v, k) < k) return false;
    }
  }
  return true;
}

namespace {

split_flow set_network(const tournament& t, const vertex_set& s, const vertex_set& z) {
  split_flow net(t, true, no_vertices(t.size()));
  for (int v : s) net.add_edge(net.source_node(), split_flow::in_node(v), t.size() + 1);
  for (int v : z) net.add_edge(split_flow::out_node(v), net.sink_node(), t.size() + 1);
  return net;
}

void check_set_pair(const tournament& t, const vertex_set& s, const vertex_set& z) {
  if (s.empty() || z.empty()) throw input_error("source and target sets must be nonempty");
  for (int v : s) {
    if (v < 0 || v >= t.size()) throw input_error("source set contains invalid vertex");
  }
  for (int v : z) {
    if (v < 0 || v >= t.size()) throw input_error("target set contains invalid vertex");
  }
  if (!set_intersect(s, z).empty()) {
    throw input_error("source and target sets must be disjoint");
  }
}

}  // namespace

std::optional<std::vector<path>> disjoint_paths_between_sets(const tournament& t,
                                                             const vertex_set& s,
                                                             const vertex_set& z,
                                                             int k) {
  check_set_pair(t, s, z);
  if (k < 1 || static_cast<size_t>(k) > s.size() || static_cast<size_t>(k) > z.size()) {
    throw input_error("need 1 <= k <= |S|, |Z|");
  }
  split_flow net = set_network(t, s, z);
  if (net.run(net.source_node(), net.sink_node(), k) < k) return std::nullopt;
  std::vector<char> stop_at(t.size(), 0);
  for (int v : z) stop_at[v] = 1;
  std::vector<path> paths = net.decompose(net.source_node(), net.sink_node(), stop_at);
  return paths;
}

int max_disjoint_paths(const tournament& t, const vertex_set& s, const vertex_set& z) {
  check_set_pair(t, s, z);
  split_flow net = set_network(t, s, z);
  return net.run(net.source_node(), net.sink_node(), t.size());
}

std::optional<cut_witness> min_vertex_cut(const tournament& t, int s, int u) {
  if (s < 0 || s >= t.size() || u < 0 || u >= t.size() || s == u) {
    throw input_error("min_vertex_cut requires two distinct valid vertices");
  }
  if (t.has_arc(s, u)) return std::nullopt;  // uncuttable pair
  std::vector<char> uncapped(t.size(), 0);
  uncapped[s] = uncapped[u] = 1;
  split_flow net(t, false, uncapped);
  net.run(split_flow::out_node(s), split_flow::in_node(u), t.size());
  return net.extract_cut(split_flow::out_node(s));
}

}  // namespace tlink
