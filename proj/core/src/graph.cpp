#include "ccgt/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ccgt {

namespace {
uint64_t edge_key(Vertex a, Vertex b) {
  return static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32 |
         static_cast<uint32_t>(b);
}
} // namespace

Vertex CubeComplex::add_vertex(const std::string &label) {
  auto it = index_.find(label);
  if (it != index_.end())
    throw std::invalid_argument("duplicate vertex label: " + label);
  Vertex v = static_cast<Vertex>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, v);
  adj_.emplace_back();
  dist_.clear();
  return v;
}

void CubeComplex::add_edge(Vertex a, Vertex b) {
  if (a == b)
    throw std::invalid_argument("self-loop at vertex " + labels_.at(a));
  if (a > b)
    std::swap(a, b);
  uint64_t key = edge_key(a, b);
  if (edge_index_.count(key))
    throw std::invalid_argument("parallel edge " + labels_.at(a) + "-" +
                                labels_.at(b));
  edge_index_.emplace(key, static_cast<int>(edges_.size()));
  edges_.push_back({a, b});
  auto insert_sorted = [](std::vector<Vertex> &vec, Vertex x) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
  };
  insert_sorted(adj_[a], b);
  insert_sorted(adj_[b], a);
  dist_.clear();
}

bool CubeComplex::adjacent(Vertex a, Vertex b) const {
  const auto &na = adj_.at(a);
  return std::binary_search(na.begin(), na.end(), b);
}

std::optional<Vertex> CubeComplex::find_vertex(const std::string &label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

int CubeComplex::edge_index(Vertex a, Vertex b) const {
  if (a > b)
    std::swap(a, b);
  auto it = edge_index_.find(edge_key(a, b));
  if (it == edge_index_.end())
    throw std::invalid_argument("no such edge");
  return it->second;
}

void CubeComplex::declare_ball(Vertex base, int radius) {
  base_ = base;
  radius_ = radius;
  depth_ = bfs_distances(base);
}

int CubeComplex::depth(Vertex v) const {
  if (radius_ < 0)
    return 0;
  return depth_.at(v);
}

bool CubeComplex::interior(Vertex v) const {
  if (radius_ < 0)
    return true;
  return depth_.at(v) < radius_;
}

std::vector<int> CubeComplex::bfs_distances(Vertex from) const {
  std::vector<int> dist(adj_.size(), -1);
  std::deque<Vertex> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

bool CubeComplex::connected() const {
  return !disconnection_witness().has_value();
}

std::optional<std::pair<Vertex, Vertex>>
CubeComplex::disconnection_witness() const {
  if (adj_.empty())
    return std::nullopt;
  auto dist = bfs_distances(0);
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (dist[v] < 0)
      return std::make_pair(Vertex{0}, v);
  return std::nullopt;
}

const std::vector<std::vector<int>> &CubeComplex::distance_matrix() const {
  if (dist_.empty()) {
    dist_.reserve(adj_.size());
    for (Vertex v = 0; v < num_vertices(); ++v)
      dist_.push_back(bfs_distances(v));
  }
  return dist_;
}

int CubeComplex::distance(Vertex a, Vertex b) const {
  return distance_matrix()[a][b];
}

CubeComplex load_cubegraph(std::istream &in) {
  CubeComplex g;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::string base_label;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok))
      continue;
    if (!header_seen) {
      std::string version;
      if (tok != "cubegraph" || !(ls >> version) || version != "1")
        throw ParseError("expected header 'cubegraph 1'", lineno);
      header_seen = true;
      continue;
    }
    if (tok == "v") {
      std::string id;
      if (!(ls >> id))
        throw ParseError("v line needs an id", lineno);
      try {
        g.add_vertex(id);
      } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (tok == "e") {
      std::string a, b;
      if (!(ls >> a >> b))
        throw ParseError("e line needs two ids", lineno);
      edges.push_back({{a, b}, lineno});
    } else if (tok == "base") {
      if (!(ls >> base_label))
        throw ParseError("base line needs an id", lineno);
    } else {
      throw ParseError("unknown record '" + tok + "'", lineno);
    }
  }
  if (!header_seen)
    throw ParseError("missing header 'cubegraph 1'", 1);
  for (const auto &[pair, ln] : edges) {
    auto a = g.find_vertex(pair.first);
    auto b = g.find_vertex(pair.second);
    if (!a || !b)
      throw ParseError("edge references unknown vertex", ln);
    try {
      g.add_edge(*a, *b);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what(), ln);
    }
  }
  if (!base_label.empty()) {
    auto b = g.find_vertex(base_label);
    if (!b)
      throw ParseError("base references unknown vertex", lineno);
    g.set_basepoint(*b);
  }
  return g;
}

CubeComplex load_cubegraph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return load_cubegraph(in);
}

void save_cubegraph(const CubeComplex &g, std::ostream &out) {
  out << "cubegraph 1\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    out << "v " << g.label(v) << "\n";
  for (const auto &[a, b] : g.edges())
    out << "e " << g.label(a) << " " << g.label(b) << "\n";
  if (g.basepoint())
    out << "base " << g.label(*g.basepoint()) << "\n";
}

CubeComplex make_hypercube(int n) {
  CubeComplex g;
  int size = 1 << n;
  for (int m = 0; m < size; ++m) {
    std::string lbl;
    for (int i = 0; i < n; ++i)
      lbl += (m >> i & 1) ? '1' : '0';
    if (n == 0)
      lbl = "0";
    g.add_vertex(lbl);
  }
  for (int m = 0; m < size; ++m)
    for (int i = 0; i < n; ++i)
      if (!(m >> i & 1))
        g.add_edge(m, m | (1 << i));
  return g;
}

CubeComplex make_path(int n) {
  CubeComplex g;
  for (int i = 0; i < n; ++i)
    g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

CubeComplex make_cycle(int n) {
  CubeComplex g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

CubeComplex make_star(int leaves) {
  CubeComplex g;
  g.add_vertex("c");
  for (int i = 0; i < leaves; ++i) {
    Vertex v = g.add_vertex("l" + std::to_string(i));
    g.add_edge(0, v);
  }
  return g;
}

CubeComplex make_grid(int rows, int cols) {
  CubeComplex g;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      g.add_vertex(std::to_string(r) + "," + std::to_string(c));
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols)
        g.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows)
        g.add_edge(at(r, c), at(r + 1, c));
    }
  return g;
}

} // namespace ccgt
