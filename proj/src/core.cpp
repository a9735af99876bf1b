#include "tlink/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace tlink {

vertex_set make_set(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool set_contains(const vertex_set& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

vertex_set set_union(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

vertex_set set_minus(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

vertex_set set_intersect(const vertex_set& a, const vertex_set& b) {
  vertex_set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void tournament::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                      std::to_string(n_) + ")");
  }
}

tournament tournament::from_matrix(int n, const std::vector<char>& matrix) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  if (matrix.size() != static_cast<size_t>(n) * n) {
    throw input_error("orientation matrix has wrong size");
  }
  tournament t;
  t.n_ = n;
  t.adj_.assign(matrix.begin(), matrix.end());
  for (auto& c : t.adj_) c = c ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    if (t.adj_[static_cast<size_t>(i) * n + i]) {
      throw input_error("self-arc at vertex " + std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      const bool ij = t.adj_[static_cast<size_t>(i) * n + j];
      const bool ji = t.adj_[static_cast<size_t>(j) * n + i];
      if (ij == ji) {
        throw input_error("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") must be oriented exactly one way");
      }
    }
  }
  t.labels_.resize(n);
  for (int i = 0; i < n; ++i) t.labels_[i] = i;
  return t;
}

tournament tournament::from_pair_bits(int n, const std::vector<char>& bits) {
  if (n < 0) throw input_error("vertex count must be nonnegative");
  const size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
  if (bits.size() != pairs) throw input_error("orientation bit vector has wrong size");
  std::vector<char> matrix(static_cast<size_t>(n) * n, 0);
  size_t b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++b) {
      if (bits[b]) {
        matrix[static_cast<size_t>(i) * n + j] = 1;
      } else {
        matrix[static_cast<size_t>(j) * n + i] = 1;
      }
    }
  }
  return from_matrix(n, matrix);
}

bool tournament::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw input_error("has_arc requires distinct vertices");
  return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

int tournament::out_degree(int v) const {
  check_vertex(v);
  const char* row = adj_.data() + static_cast<size_t>(v) * n_;
  int d = 0;
  for (int j = 0; j < n_; ++j) d += row[j];
  return d;
}

int tournament::in_degree(int v) const { return n_ - 1 - out_degree(v); }

vertex_set tournament::out_neighbors(int v) const {
  check_vertex(v);
  const char* row = adj_.data() + static_cast<size_t>(v) * n_;
  vertex_set out;
  for (int j = 0; j < n_; ++j) {
    if (row[j]) out.push_back(j);
  }
  return out;
}

vertex_set tournament::in_neighbors(int v) const {
  check_vertex(v);
  vertex_set out;
  for (int i = 0; i < n_; ++i) {
    if (adj_[static_cast<size_t>(i) * n_ + v]) out.push_back(i);
  }
  return out;
}

int tournament::min_out_degree_vertex() const {
  if (n_ < 1) throw input_error("min_out_degree_vertex on empty tournament");
  int best = 0;
  int best_d = out_degree(0);
  for (int v = 1; v < n_; ++v) {
    const int d = out_degree(v);
    if (d < best_d) {
      best = v;
      best_d = d;
    }
  }
  return best;
}

int tournament::min_out_degree() const {
  return out_degree(min_out_degree_vertex());
}

int tournament::max_out_degree() const {
  if (n_ < 1) throw input_error("max_out_degree on empty tournament");
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
  return best;
}

int tournament::min_in_degree() const {
  if (n_ < 1) throw input_error("min_in_degree on empty tournament");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, in_degree(v));
  return best;
}

tournament tournament::induced(const vertex_set& members) const {
  vertex_set m = make_set(members);
  for (int v : m) check_vertex(v);
  const int k = static_cast<int>(m.size());
  tournament t;
  t.n_ = k;
  t.adj_.assign(static_cast<size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      t.adj_[static_cast<size_t>(a) * k + b] =
          adj_[static_cast<size_t>(m[a]) * n_ + m[b]];
    }
  }
  t.labels_.resize(k);
  for (int a = 0; a < k; ++a) t.labels_[a] = labels_[m[a]];
  return t;
}

tournament tournament::remove(const vertex_set& members) const {
  vertex_set m = make_set(members);
  for (int v : m) check_vertex(v);
  vertex_set all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return induced(set_minus(all, m));
}

int tournament::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<int> tournament::local_of(int root_id) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), root_id);
  if (it == labels_.end() || *it != root_id) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

vertex_set tournament::to_root(const vertex_set& local) const {
  vertex_set out;
  out.reserve(local.size());
  for (int v : local) out.push_back(label(v));
  return out;  // labels are increasing, so sortedness is preserved
}

namespace {

constexpr int kMaxParsedVertices = 4096;

std::string get_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw input_error(std::string("trn1: missing ") + what);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

tournament read_trn1(std::istream& in) {
  if (get_line(in, "header") != "TRN1") {
    throw input_error("trn1: first line must be the literal TRN1");
  }
  const std::string nline = get_line(in, "vertex count");
  int n = 0;
  const auto [ptr, ec] = std::from_chars(nline.data(), nline.data() + nline.size(), n);
  if (ec != std::errc{} || ptr != nline.data() + nline.size()) {
    throw input_error("trn1: vertex count line is not an integer: '" + nline + "'");
  }
  if (n < 1) throw input_error("trn1: vertex count must be at least 1");
  if (n > kMaxParsedVertices) {
    throw input_error("trn1: vertex count " + std::to_string(n) + " exceeds parser cap " +
                      std::to_string(kMaxParsedVertices));
  }
  std::vector<char> matrix(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const std::string row = get_line(in, ("row " + std::to_string(i)).c_str());
    if (static_cast<int>(row.size()) != n) {
      throw input_error("trn1: row " + std::to_string(i) + " has length " +
                        std::to_string(row.size()) + ", expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw input_error("trn1: row " + std::to_string(i) +
                          " contains a character other than 0/1");
      }
      matrix[static_cast<size_t>(i) * n + j] = row[j] == '1';
    }
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (!rest.empty() && rest.back() == '\r') rest.pop_back();
    if (!rest.empty()) throw input_error("trn1: unexpected content after matrix rows");
  }
  return tournament::from_matrix(n, matrix);
}

tournament read_trn1_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw input_error("cannot open file: " + file);
  return read_trn1(in);
}

std::string write_trn1(const tournament& t) {
  std::ostringstream out;
  out << "TRN1\n" << t.size() << "\n";
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      out << (i != j && t.has_arc(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

void write_trn1_file(const tournament& t, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw input_error("cannot open file for writing: " + file);
  out << write_trn1(t);
  if (!out) throw input_error("failed writing file: " + file);
}

}  // namespace tlink
