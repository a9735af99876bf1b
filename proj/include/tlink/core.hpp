#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlink/errors.hpp"

namespace tlink {

// A vertex set is a sorted, duplicate-free vector of vertex ids.
using vertex_set = std::vector<int>;

vertex_set make_set(std::vector<int> xs);
bool set_contains(const vertex_set& s, int v);
vertex_set set_union(const vertex_set& a, const vertex_set& b);
vertex_set set_minus(const vertex_set& a, const vertex_set& b);
vertex_set set_intersect(const vertex_set& a, const vertex_set& b);

// A tournament on n labeled vertices: exactly one arc between every pair of
// distinct vertices, stored as an n x n orientation matrix for O(1) arc
// queries. Sub-views built with induced()/remove() carry a label map back to
// the root tournament's ids; labels are kept strictly increasing so that
// lowest-local-id and lowest-root-id tie-breaks coincide.
//
// Tournaments are immutable after construction and freely shareable.
class tournament {
 public:
  tournament() = default;

  // matrix[i*n+j] != 0 means arc i->j. Rejects self-arcs and any pair that is
  // not oriented exactly one way.
  static tournament from_matrix(int n, const std::vector<char>& matrix);

  // One orientation flag per unordered pair (i, j), i < j, in lexicographic
  // pair order; a true bit means arc i->j.
  static tournament from_pair_bits(int n, const std::vector<char>& bits);

  int size() const { return n_; }

  bool has_arc(int u, int v) const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  vertex_set out_neighbors(int v) const;
  vertex_set in_neighbors(int v) const;

  // Vertex of minimum out-degree, lowest local id among ties.
  int min_out_degree_vertex() const;
  int min_out_degree() const;
  int max_out_degree() const;
  int min_in_degree() const;

  // Subtournament on `members` (local ids); labels compose to root ids.
  tournament induced(const vertex_set& members) const;
  // Subtournament with `members` deleted; equals induced on the complement.
  tournament remove(const vertex_set& members) const;

  int label(int v) const;
  const std::vector<int>& labels() const { return labels_; }
  std::optional<int> local_of(int root_id) const;
  vertex_set to_root(const vertex_set& local) const;

  bool operator==(const tournament& other) const = default;

 private:
  int n_ = 0;
  std::vector<char> adj_;    // adj_[i*n_+j] == 1 iff arc i->j
  std::vector<int> labels_;  // strictly increasing root ids

  void check_vertex(int v) const;
};

// Plain-text tournament format "TRN1": line 1 the literal TRN1, line 2 the
// vertex count n, then n rows of n characters over {0,1} where row i,
// column j is 1 iff arc i->j. Any violation of the tournament invariant is
// rejected with input_error.
tournament read_trn1(std::istream& in);
tournament read_trn1_file(const std::string& file);
std::string write_trn1(const tournament& t);
void write_trn1_file(const tournament& t, const std::string& file);

}  // namespace tlink
