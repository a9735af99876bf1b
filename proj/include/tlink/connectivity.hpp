#pragma once

#include <optional>
#include <vector>

#include "tlink/core.hpp"

namespace tlink {

// A path is a vertex sequence of length >= 1 whose consecutive entries are
// joined by arcs and which repeats no vertex.
using path = std::vector<int>;

bool is_path(const tournament& t, const path& p);

// Deleting `separator` leaves no path from side_from to side_to.
struct cut_witness {
  vertex_set separator;
  vertex_set side_from;
  vertex_set side_to;
};

bool is_strong(const tournament& t);

// Largest k such that t is k-strong: minimum, over ordered pairs (u, v) with
// no arc u->v, of the minimum u->v vertex cut (vertex-split unit-capacity
// flow), capped at n-1. Returns 0 iff t is not strong. Requires n >= 2.
int vertex_connectivity(const tournament& t);

// True iff n >= k+1 and vertex_connectivity(t) >= k. Requires k >= 1.
bool is_k_strong(const tournament& t, int k);

// k fully vertex-disjoint paths, each starting in s, ending at its first
// touched vertex of z, or nullopt when no such family exists. The maximum
// achievable k equals the minimum s-z separating vertex set.
std::optional<std::vector<path>> disjoint_paths_between_sets(const tournament& t,
                                                             const vertex_set& s,
                                                             const vertex_set& z,
                                                             int k);

// Size of the maximum family of fully vertex-disjoint s->z paths.
int max_disjoint_paths(const tournament& t, const vertex_set& s, const vertex_set& z);

// Minimum vertex set whose removal kills every s->t path, with the two sides
// of the split; nullopt when the arc s->t makes the pair uncuttable.
std::optional<cut_witness> min_vertex_cut(const tournament& t, int s, int u);

}  // namespace tlink
