#include "hyperwalk/structures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    std::ostringstream os;
    os << what << " references vertex " << v << " outside [0, " << n << ")";
    throw spec_error(os.str());
  }
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::array<int, 2>> edges,
             bool directed, std::vector<std::string> labels)
    : vertex_count_(vertex_count), directed_(directed), labels_(std::move(labels)) {
  if (vertex_count_ < 0) throw spec_error("vertex count must be nonnegative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
    throw spec_error("label table size does not match vertex count");

  std::set<std::array<int, 2>> seen;
  edges_.reserve(edges.size());
  for (auto e : edges) {
    check_vertex(e[0], vertex_count_, "edge");
    check_vertex(e[1], vertex_count_, "edge");
    if (e[0] == e[1]) throw spec_error("self-loops are not allowed");
    if (!directed_ && e[0] > e[1]) std::swap(e[0], e[1]);
    if (!seen.insert(e).second) throw spec_error("duplicate edge");
    edges_.push_back(e);
  }

  adjacency_.assign(vertex_count_, {});
  for (const auto& e : edges_) {
    adjacency_[e[0]].push_back(e[1]);
    adjacency_[e[1]].push_back(e[0]);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, vertex_count_, "neighbor query");
  return adjacency_[v];
}

bool Graph::adjacent(int i, int j) const {
  const auto& nb = neighbors(i);
  check_vertex(j, vertex_count_, "adjacency query");
  return std::binary_search(nb.begin(), nb.end(), j);
}

Graph Graph::path(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw spec_error("cycle needs at least three vertices");
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
  std::vector<std::array<int, 2>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
                       bool directed, std::vector<std::string> labels)
    : vertex_count_(vertex_count), directed_(directed), labels_(std::move(labels)) {
  if (vertex_count_ < 0) throw spec_error("vertex count must be nonnegative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
    throw spec_error("label table size does not match vertex count");

  edges_.reserve(edges.size());
  for (auto& e : edges) {
    if (e.empty()) throw spec_error("hyperedges must be nonempty");
    for (int v : e) check_vertex(v, vertex_count_, "hyperedge");
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw spec_error("repeated vertex within one edge");
    edges_.push_back(directed_ ? std::move(e) : std::move(sorted));
  }

  incident_.assign(vertex_count_, {});
  for (int e = 0; e < edge_count(); ++e)
    for (int v : edges_[e]) incident_[v].push_back(e);
}

const std::vector<int>& Hypergraph::edge(int e) const {
  if (e < 0 || e >= edge_count()) throw spec_error("edge label out of range");
  return edges_[e];
}

int Hypergraph::degree(int v) const {
  return static_cast<int>(incident_edges(v).size());
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
  check_vertex(v, vertex_count_, "incidence query");
  return incident_[v];
}

bool Hypergraph::k_regular(int k) const {
  for (const auto& e : edges_)
    if (static_cast<int>(e.size()) != k) return false;
  return true;
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
  return Hypergraph(g.vertex_count(), std::move(edges), g.directed(), g.labels());
}

Graph Hypergraph::to_graph() const {
  if (directed_) throw spec_error("only undirected hypergraphs convert to graphs");
  if (!k_regular(2)) throw spec_error("only 2-regular hypergraphs convert to graphs");
  std::vector<std::array<int, 2>> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({e[0], e[1]});
  return Graph(vertex_count_, std::move(edges), false, labels_);
}

std::vector<std::array<int, 2>> incidence_pairs(const Hypergraph& h) {
  std::vector<std::array<int, 2>> pairs;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> vs = h.edge(e);
    std::sort(vs.begin(), vs.end());
    for (int v : vs) pairs.push_back({v, e});
  }
  return pairs;
}

std::string TessellationReport::summary() const {
  if (valid) return "valid tessellation";
  std::ostringstream os;
  os << "invalid tessellation:";
  for (const auto& issue : issues) {
    os << " [";
    if (issue.polygon >= 0) os << "polygon " << issue.polygon << ": ";
    os << issue.message << "]";
  }
  return os.str();
}

TessellationReport validate_tessellation(const Tessellation& t, const Graph& g) {
  if (t.covered_set_size != g.vertex_count())
    throw spec_error("tessellation and graph disagree on the vertex-set size");

  TessellationReport report;
  const int n = g.vertex_count();
  std::vector<int> owner(n, -1);

  for (int p = 0; p < static_cast<int>(t.polygons.size()); ++p) {
    const auto& poly = t.polygons[p];
    if (poly.empty()) {
      report.issues.push_back({p, "empty polygon"});
      continue;
    }
    bool indices_ok = true;
    for (int v : poly) {
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "vertex " << v << " out of range";
        report.issues.push_back({p, os.str()});
        indices_ok = false;
        continue;
      }
      if (owner[v] == p) {
        report.issues.push_back({p, "repeated vertex within the polygon"});
        indices_ok = false;
      } else if (owner[v] >= 0) {
        std::ostringstream os;
        os << "vertex " << v << " already covered by polygon " << owner[v];
        report.issues.push_back({p, os.str()});
      } else {
        owner[v] = p;
      }
    }
    if (indices_ok && poly.size() >= 2 && !clique_check(g, poly)) {
      report.issues.push_back({p, "polygon does not induce a clique"});
    }
  }

  for (int v = 0; v < n; ++v) {
    if (owner[v] < 0) {
      std::ostringstream os;
      os << "vertex " << v << " is not covered";
      report.issues.push_back({-1, os.str()});
    }
  }

  report.valid = report.issues.empty();
  return report;
}

bool clique_check(const Graph& g, std::span<const int> subset) {
  std::vector<int> vs(subset.begin(), subset.end());
  for (int v : vs) check_vertex(v, g.vertex_count(), "clique check");
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace hyperwalk
