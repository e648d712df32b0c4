#ifndef CCGT_GRAPH_HPP
#define CCGT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <unordered_map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccgt {

using Vertex = int;

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string &msg, int line_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"),
        line(line_) {}
};

/// Tri-state verdict for queries on truncated balls.
enum class Verdict { Yes, No, Inconclusive };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Yes: return "yes";
  case Verdict::No: return "no";
  default: return "inconclusive";
  }
}

/// The 1-skeleton of a cube complex: a simple connected graph with
/// labeled vertices. A graph may be a finite complex in full, or the
/// ball of some radius around a basepoint of a lazily generated one;
/// in the latter case vertices at maximal depth may be missing
/// neighbors and queries near the boundary go inconclusive.
class CubeComplex {
public:
  CubeComplex() = default;

  Vertex add_vertex(const std::string &label);
  void add_edge(Vertex a, Vertex b);
  /// Capacity hint for bulk construction.
  void reserve(int nvertices, int nedges) {
    labels_.reserve(nvertices);
    adj_.reserve(nvertices);
    index_.reserve(nvertices);
    edges_.reserve(nedges);
    edge_index_.reserve(nedges);
  }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex a, Vertex b) const;

  const std::string &label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find_vertex(const std::string &label) const;

  /// Edges in insertion order, endpoints normalized a < b.
  const std::vector<std::pair<Vertex, Vertex>> &edges() const { return edges_; }
  int edge_index(Vertex a, Vertex b) const;

  void set_basepoint(Vertex v) { base_ = v; }
  std::optional<Vertex> basepoint() const { return base_; }

  /// Declares this graph to be the radius-R ball around the basepoint
  /// of a larger complex. Records BFS depths; vertices at depth R are
  /// boundary vertices.
  void declare_ball(Vertex base, int radius);
  bool is_ball() const { return radius_ >= 0; }
  int ball_radius() const { return radius_; }
  int depth(Vertex v) const;
  /// True when v has all its neighbors present (depth < radius).
  bool interior(Vertex v) const;

  int dimension_bound() const { return dim_bound_; }
  void set_dimension_bound(int d) { dim_bound_ = d; }

  std::vector<int> bfs_distances(Vertex from) const;
  bool connected() const;
  /// Two vertices in different components, if any.
  std::optional<std::pair<Vertex, Vertex>> disconnection_witness() const;

  /// All-pairs distance matrix; computed once on demand.
  const std::vector<std::vector<int>> &distance_matrix() const;

  int distance(Vertex a, Vertex b) const;

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  // key packs the sorted endpoints into one word
  std::unordered_map<uint64_t, int> edge_index_;
  std::optional<Vertex> base_;
  std::vector<int> depth_;
  int radius_ = -1;
  int dim_bound_ = 8;
  mutable std::vector<std::vector<int>> dist_;
};

/// "cubegraph v1" line format: header `cubegraph 1`, then `v <id>`,
/// `e <id1> <id2>`, optional `base <id>`, `#` comments.
CubeComplex load_cubegraph(std::istream &in);
CubeComplex load_cubegraph_file(const std::string &path);
void save_cubegraph(const CubeComplex &g, std::ostream &out);

// Small builders used throughout tests and the corpus.
CubeComplex make_hypercube(int n);
CubeComplex make_path(int n);            // P_n, n vertices
CubeComplex make_cycle(int n);
CubeComplex make_star(int leaves);
CubeComplex make_grid(int rows, int cols);

} // namespace ccgt

#endif
