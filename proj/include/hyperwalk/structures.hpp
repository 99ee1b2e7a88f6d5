#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

namespace hyperwalk {

/// Simple graph on dense vertex indices 0..N-1.
///
/// Undirected edges are stored once, as canonical (min,max) pairs.
/// Directed edges keep their orientation; adjacency queries symmetrize,
/// so every stored arc connects both endpoints for walk purposes.
/// Self-loops and duplicate edges are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::array<int, 2>> edges,
        bool directed = false, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return vertex_count_; }
  bool directed() const noexcept { return directed_; }
  const std::vector<std::array<int, 2>>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Number of distinct neighbors of v.
  int degree(int v) const;
  /// Distinct neighbors of v, ascending.
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int i, int j) const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);

 private:
  int vertex_count_ = 0;
  bool directed_ = false;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

/// Hypergraph: vertices 0..N-1 plus a list of vertex subsets.
///
/// An edge's label is its position in the list; two edges with the same
/// vertex set are distinct edges. In the directed variant every edge is an
/// ordered vertex sequence, traversed cyclically by the directed shift.
/// Vertices may not repeat within a single edge in either variant.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int vertex_count, std::vector<std::vector<int>> edges,
             bool directed = false, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return vertex_count_; }
  bool directed() const noexcept { return directed_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  /// Vertices of edge e. Ascending for undirected edges, as given otherwise.
  const std::vector<int>& edge(int e) const;
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  int edge_size(int e) const { return static_cast<int>(edge(e).size()); }
  /// Number of edges incident to v.
  int degree(int v) const;
  /// Labels of edges incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const;

  /// True iff every edge has exactly k vertices.
  bool k_regular(int k) const;

  static Hypergraph from_graph(const Graph& g);
  /// Inverse of from_graph; requires an undirected 2-regular hypergraph.
  Graph to_graph() const;

 private:
  int vertex_count_ = 0;
  bool directed_ = false;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::string> labels_;
};

/// All (vertex, edge-label) pairs with v in e, edge-major then
/// vertex-ascending. The result has exactly sum_e |e| entries and fixes the
/// basis order of every walk built on the hypergraph.
std::vector<std::array<int, 2>> incidence_pairs(const Hypergraph& h);

/// A partition of {0..covered_set_size-1} into polygons. Plain data;
/// validate_tessellation performs the actual checking.
struct Tessellation {
  std::vector<std::vector<int>> polygons;
  int covered_set_size = 0;
};

struct TessellationIssue {
  int polygon;  // -1 for issues not tied to a single polygon
  std::string message;
};

struct TessellationReport {
  bool valid = false;
  std::vector<TessellationIssue> issues;
  std::string summary() const;
};

/// Checks that t partitions the vertex set of g and that every polygon of
/// size >= 2 induces a clique. Every violating polygon is reported.
/// Throws spec_error if t and g disagree on the vertex-set size.
TessellationReport validate_tessellation(const Tessellation& t, const Graph& g);

/// True iff all distinct pairs in subset are adjacent in g.
bool clique_check(const Graph& g, std::span<const int> subset);

}  // namespace hyperwalk
