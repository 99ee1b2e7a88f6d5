#include "hyperwalk/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = Complex(normal(rng), normal(rng));
  return m;
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  if (dim <= 0) throw spec_error("operator dimension must be positive");
  Eigen::MatrixXcd a = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Eigen::VectorXcd random_state(int dim, Rng& rng) {
  if (dim <= 0) throw spec_error("state dimension must be positive");
  Eigen::VectorXcd v = gaussian_matrix(dim, 1, rng);
  return v / v.norm();
}

std::pair<Complex, Complex> random_rt(int degree, Rng& rng) {
  if (degree <= 0) throw spec_error("degree must be positive");
  // The block (r-t) I + t J has eigenvalues r + (d-1) t and r - t; putting
  // both on the unit circle keeps it unitary.
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex on_uniform = std::polar(1.0, angle(rng));
  const Complex on_rest = std::polar(1.0, angle(rng));
  const Complex t = (on_uniform - on_rest) / static_cast<double>(degree);
  const Complex r = on_rest + t;
  return {r, t};
}

Graph random_graph(Rng& rng, int max_vertices, int max_edges) {
  if (max_vertices < 2 || max_edges < 1)
    throw spec_error("unsatisfiable size bounds: a graph walk needs an edge");
  const int n = uniform_int(rng, 2, max_vertices);
  const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;
  const int want =
      uniform_int(rng, 1, static_cast<int>(std::min<long long>(max_edges, all_pairs)));
  std::set<std::array<int, 2>> edges;
  while (static_cast<int>(edges.size()) < want) {
    int a = uniform_int(rng, 0, n - 1);
    int b = uniform_int(rng, 0, n - 1);
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Hypergraph random_hypergraph(Rng& rng, int max_vertices, int max_edges) {
  if (max_vertices < 1 || max_edges < 1)
    throw spec_error("unsatisfiable size bounds: a hyperwalk needs an edge");
  const int n = uniform_int(rng, 1, max_vertices);
  const int m = uniform_int(rng, 1, max_edges);
  std::vector<std::vector<int>> edges;
  for (int e = 0; e < m; ++e) {
    const int size = uniform_int(rng, 1, n);
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(size);
    std::sort(verts.begin(), verts.end());
    edges.push_back(std::move(verts));
  }
  return Hypergraph(n, std::move(edges));
}

std::vector<Tessellation> random_tessellations(Rng& rng, const Graph& g, int count) {
  if (count < 1) throw spec_error("at least one tessellation is required");
  std::vector<Tessellation> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Tessellation t;
    t.covered_set_size = g.vertex_count();
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> used(g.vertex_count(), 0);
    for (int v : order) {
      if (used[v]) continue;
      // Grow a clique greedily from v among unused neighbors.
      std::vector<int> poly{v};
      used[v] = 1;
      std::vector<int> candidates = g.neighbors(v);
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (int w : candidates) {
        if (used[w]) continue;
        bool ok = true;
        for (int u : poly)
          if (!g.adjacent(u, w)) {
            ok = false;
            break;
          }
        if (ok) {
          poly.push_back(w);
          used[w] = 1;
        }
      }
      std::sort(poly.begin(), poly.end());
      t.polygons.push_back(std::move(poly));
    }
    out.push_back(std::move(t));
  }
  return out;
}

WalkInstance random_coined_line_instance(Rng& rng, int max_positions) {
  if (max_positions < 2) throw spec_error("unsatisfiable size bounds");
  const int positions = uniform_int(rng, 2, max_positions);
  return build_coined_line(random_unitary(2, rng), positions);
}

WalkInstance random_scattering_instance(Rng& rng, const Graph& g) {
  // Mix Haar blocks with (r, t)-induced blocks.
  std::vector<Eigen::MatrixXcd> coins(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    if (uniform_int(rng, 0, 1) == 0) {
      coins[v] = random_unitary(d, rng);
    } else {
      const auto [r, t] = random_rt(d, rng);
      Eigen::MatrixXcd blk = Eigen::MatrixXcd::Constant(d, d, t);
      blk.diagonal().setConstant(r);
      coins[v] = std::move(blk);
    }
  }
  return build_scattering(g, coins);
}

WalkInstance random_generalized_coined_instance(Rng& rng, const Graph& g, int coins) {
  if (coins < 1) throw spec_error("at least one coin is required");
  std::vector<std::array<int, 2>> labels;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j : g.neighbors(i)) labels.push_back({i, j});
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw spec_error("graph has no edges");

  std::vector<Eigen::MatrixXcd> schedule;
  schedule.reserve(coins);
  for (int k = 0; k < coins; ++k) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    int base = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      if (d == 0) continue;
      // Directions out of v occupy a contiguous index range.
      Eigen::MatrixXcd blk = random_unitary(d, rng);
      c.block(base, base, d, d) = blk;
      base += d;
    }
    schedule.push_back(std::move(c));
  }
  return build_generalized_coined(g, std::move(schedule));
}

WalkInstance random_szegedy_instance(Rng& rng, const Graph& g) {
  std::vector<Eigen::VectorXcd> amps(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    amps[v] = random_state(d, rng);
  }
  return build_szegedy(g, amps);
}

WalkInstance random_staggered_instance(Rng& rng, const Graph& g, int tessellations) {
  auto tess = random_tessellations(rng, g, tessellations);
  std::vector<std::vector<Eigen::MatrixXcd>> blocks;
  blocks.reserve(tess.size());
  for (const auto& t : tess) {
    std::vector<Eigen::MatrixXcd> stage;
    stage.reserve(t.polygons.size());
    for (const auto& p : t.polygons)
      stage.push_back(random_unitary(static_cast<int>(p.size()), rng));
    blocks.push_back(std::move(stage));
  }
  return build_staggered_blocks(g, tess, blocks);
}

WalkInstance random_hyperwalk_instance(Rng& rng, const Hypergraph& h,
                                       int schedule_len) {
  if (schedule_len < 1) throw spec_error("the schedule must not be empty");
  std::vector<HyperwalkStage> schedule;
  schedule.reserve(schedule_len);
  for (int k = 0; k < schedule_len; ++k) {
    HyperwalkStage stage;
    stage.coins.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.degree(v) > 0) stage.coins[v] = random_unitary(h.degree(v), rng);
    stage.shifts.resize(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e)
      stage.shifts[e] = random_unitary(h.edge_size(e), rng);
    schedule.push_back(std::move(stage));
  }
  return build_hyperwalk(h, std::move(schedule));
}

}  // namespace hyperwalk
