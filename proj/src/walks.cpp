#include "hyperwalk/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

BasisPtr directed_pair_basis(const Graph& g) {
  std::vector<std::array<int, 2>> labels;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j : g.neighbors(i)) labels.push_back({i, j});
  if (labels.empty()) throw spec_error("graph has no edges; the walk space is empty");
  return std::make_shared<BasisMap>(BasisKind::DirectedPair, std::move(labels));
}

Eigen::MatrixXcd flip_flop_shift(const BasisMap& basis) {
  const int n = basis.size();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) {
    const auto& l = basis.label(idx);
    s(basis.index_of(l[1], l[0]), idx) = 1.0;
  }
  return s;
}

// Both orientations of an edge report the edge's smaller endpoint. This is
// the vertex assignment under which the pair-basis walk and its Szegedy
// relabeling produce the same distribution at every single step.
MeasurementMap edge_anchor_measurement(const Graph& g, const BasisMap& basis) {
  MeasurementMap m;
  m.vertex_count = g.vertex_count();
  m.vertex_of.resize(basis.size());
  for (int idx = 0; idx < basis.size(); ++idx) {
    const auto& l = basis.label(idx);
    m.vertex_of[idx] = std::min(l[0], l[1]);
  }
  return m;
}

void check_unit_vector(const Eigen::VectorXcd& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > unitary_tolerance()) {
    std::ostringstream os;
    os << what << " must be a unit vector (norm = " << v.norm() << ")";
    throw spec_error(os.str());
  }
}

void check_block(const Eigen::MatrixXcd& blk, int dim, const std::string& what) {
  if (blk.rows() != dim || blk.cols() != dim) {
    std::ostringstream os;
    os << what << " must be " << dim << "x" << dim << ", got " << blk.rows() << "x"
       << blk.cols();
    throw spec_error(os.str());
  }
  const double dev = unitarity_deviation(blk);
  if (!(dev <= unitary_tolerance()))
    throw unitarity_error(what + " is not unitary", dev);
}

}  // namespace

std::string_view model_name(WalkModel m) {
  switch (m) {
    case WalkModel::CoinedLine: return "coined-line";
    case WalkModel::ScatteringCoined: return "scattering-coined";
    case WalkModel::Szegedy: return "szegedy";
    case WalkModel::Staggered: return "staggered";
    case WalkModel::Hyperwalk: return "hyperwalk";
  }
  return "unknown";
}

WalkModel model_from_name(std::string_view name) {
  if (name == "coined-line") return WalkModel::CoinedLine;
  if (name == "scattering-coined") return WalkModel::ScatteringCoined;
  if (name == "szegedy") return WalkModel::Szegedy;
  if (name == "staggered") return WalkModel::Staggered;
  if (name == "hyperwalk") return WalkModel::Hyperwalk;
  throw parse_error("unknown walk model: " + std::string(name));
}

int WalkInstance::vertex_count() const {
  switch (model) {
    case WalkModel::CoinedLine: return std::get<LineDetail>(detail).positions;
    case WalkModel::Szegedy: return 2 * graph->vertex_count();
    case WalkModel::ScatteringCoined: return graph->vertex_count();
    case WalkModel::Staggered: return graph->vertex_count();
    case WalkModel::Hyperwalk: return hypergraph->vertex_count();
  }
  return 0;
}

Eigen::MatrixXcd grover_reflection(int dim) {
  if (dim <= 0) throw spec_error("operator dimension must be positive");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  m.array() -= Complex(2.0 / dim, 0.0);
  return m;
}

Eigen::MatrixXcd preset_unitary(std::string_view name, int dim) {
  if (dim <= 0) throw spec_error("operator dimension must be positive");
  if (name == "identity") return Eigen::MatrixXcd::Identity(dim, dim);
  if (name == "grover") return grover_reflection(dim);
  if (name == "hadamard") {
    if (dim != 2) throw spec_error("the hadamard preset is two-dimensional");
    Eigen::MatrixXcd h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
  }
  if (name == "dft") {
    Eigen::MatrixXcd f(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        f(j, k) = scale * std::polar(1.0, 2.0 * std::numbers::pi * j * k / dim);
    return f;
  }
  throw parse_error("unknown operator preset: " + std::string(name));
}

WalkInstance build_coined_line(const Eigen::MatrixXcd& coin, int positions) {
  if (positions < 2) throw spec_error("a coined line needs at least two positions");
  check_block(coin, 2, "line walk coin");

  const int n = 2 * positions;
  std::vector<std::array<int, 2>> labels;
  labels.reserve(n);
  for (int c = 0; c < 2; ++c)
    for (int p = 0; p < positions; ++p) labels.push_back({c, p});
  auto basis = std::make_shared<BasisMap>(BasisKind::CoinPosition, std::move(labels));

  Eigen::MatrixXcd cfull = Eigen::MatrixXcd::Zero(n, n);
  for (int c = 0; c < 2; ++c)
    for (int cc = 0; cc < 2; ++cc)
      for (int p = 0; p < positions; ++p)
        cfull(cc * positions + p, c * positions + p) = coin(cc, c);

  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  for (int p = 0; p < positions; ++p) {
    s((p + positions - 1) % positions, p) = 1.0;                        // coin 0: -1
    s(positions + (p + 1) % positions, positions + p) = 1.0;            // coin 1: +1
  }

  WalkInstance w;
  w.model = WalkModel::CoinedLine;
  w.basis = basis;
  w.stages.push_back(certify_unitary(s * cfull, basis));
  w.measurement.vertex_count = positions;
  w.measurement.vertex_of.resize(n);
  for (int idx = 0; idx < n; ++idx) w.measurement.vertex_of[idx] = basis->label(idx)[1];
  w.detail = LineDetail{positions};
  return w;
}

WalkInstance build_scattering(
    const Graph& g, const std::vector<std::vector<Eigen::MatrixXcd>>& coin_schedule) {
  if (coin_schedule.empty()) throw spec_error("the schedule must not be empty");
  auto basis = directed_pair_basis(g);
  const Eigen::MatrixXcd shift = flip_flop_shift(*basis);

  WalkInstance w;
  w.model = WalkModel::ScatteringCoined;
  w.basis = basis;
  w.graph = g;
  CoinedDetail detail;
  detail.shift = shift;

  for (const auto& coins : coin_schedule) {
    if (static_cast<int>(coins.size()) != g.vertex_count())
      throw spec_error("one coin per vertex is required");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(basis->size(), basis->size());
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      if (nb.empty()) continue;
      std::ostringstream what;
      what << "coin at vertex " << v;
      check_block(coins[v], static_cast<int>(nb.size()), what.str());
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = 0; b < nb.size(); ++b)
          c(basis->index_of(nb[a], v), basis->index_of(nb[b], v)) = coins[v](a, b);
    }
    w.stages.push_back(certify_unitary(shift * c, basis));
    detail.coin_schedule.push_back(std::move(c));
  }

  w.measurement = edge_anchor_measurement(g, *basis);
  w.detail = std::move(detail);
  return w;
}

WalkInstance build_scattering(const Graph& g,
                              const std::vector<Eigen::MatrixXcd>& vertex_coins) {
  return build_scattering(g, std::vector<std::vector<Eigen::MatrixXcd>>{vertex_coins});
}

WalkInstance build_scattering_rt(const Graph& g,
                                 const std::vector<std::pair<Complex, Complex>>& rt) {
  if (static_cast<int>(rt.size()) != g.vertex_count())
    throw spec_error("one (r, t) pair per vertex is required");
  std::vector<Eigen::MatrixXcd> coins(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    const auto [r, t] = rt[v];
    Eigen::MatrixXcd blk = Eigen::MatrixXcd::Constant(d, d, t);
    blk.diagonal().setConstant(r);
    const double dev = unitarity_deviation(blk);
    if (!(dev <= unitary_tolerance())) {
      std::ostringstream os;
      os << "(r, t) at vertex " << v << " does not induce a unitary block";
      throw unitarity_error(os.str(), dev);
    }
    coins[v] = std::move(blk);
  }
  return build_scattering(g, coins);
}

WalkInstance build_generalized_coined(const Graph& g,
                                      std::vector<Eigen::MatrixXcd> full_coins) {
  if (full_coins.empty()) throw spec_error("the schedule must not be empty");
  auto basis = directed_pair_basis(g);
  const Eigen::MatrixXcd shift = flip_flop_shift(*basis);

  WalkInstance w;
  w.model = WalkModel::ScatteringCoined;
  w.basis = basis;
  w.graph = g;
  CoinedDetail detail;
  detail.shift = shift;
  for (auto& c : full_coins) {
    check_block(c, basis->size(), "full-basis coin");
    w.stages.push_back(certify_unitary(shift * c, basis));
    detail.coin_schedule.push_back(std::move(c));
  }
  w.measurement = edge_anchor_measurement(g, *basis);
  w.detail = std::move(detail);
  return w;
}

WalkInstance build_szegedy(const Graph& g,
                           const std::vector<Eigen::VectorXcd>& amplitudes) {
  if (static_cast<int>(amplitudes.size()) != g.vertex_count())
    throw spec_error("one amplitude vector per vertex is required");
  auto basis = directed_pair_basis(g);
  const int n = basis->size();

  Eigen::MatrixXcd u1 = -Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd u2 = -Eigen::MatrixXcd::Identity(n, n);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    if (nb.empty()) continue;
    const auto& a = amplitudes[v];
    if (a.size() != static_cast<int>(nb.size())) {
      std::ostringstream os;
      os << "amplitude vector at vertex " << v << " must have " << nb.size()
         << " entries (one per neighbor)";
      throw spec_error(os.str());
    }
    check_unit_vector(a, "|d_v>");
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd dbar = Eigen::VectorXcd::Zero(n);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      d(basis->index_of(v, nb[k])) = a(k);
      dbar(basis->index_of(nb[k], v)) = a(k);
    }
    u1 += 2.0 * d * d.adjoint();
    u2 += 2.0 * dbar * dbar.adjoint();
  }

  WalkInstance w;
  w.model = WalkModel::Szegedy;
  w.basis = basis;
  w.graph = g;
  w.stages.push_back(certify_unitary(std::move(u1), basis));
  w.stages.push_back(certify_unitary(std::move(u2), basis));
  w.measurement = edge_anchor_measurement(g, *basis);
  w.detail = SzegedyDetail{};
  return w;
}

WalkInstance build_szegedy_stages(const Graph& g, Eigen::MatrixXcd u1,
                                  Eigen::MatrixXcd u2) {
  auto basis = directed_pair_basis(g);
  WalkInstance w;
  w.model = WalkModel::Szegedy;
  w.basis = basis;
  w.graph = g;
  w.stages.push_back(certify_unitary(std::move(u1), basis));
  w.stages.push_back(certify_unitary(std::move(u2), basis));
  w.measurement = edge_anchor_measurement(g, *basis);
  w.detail = SzegedyDetail{};
  return w;
}

namespace {

WalkInstance staggered_base(const Graph& g, std::vector<Tessellation> tessellations) {
  if (tessellations.empty()) throw spec_error("at least one tessellation is required");
  for (std::size_t k = 0; k < tessellations.size(); ++k) {
    const auto report = validate_tessellation(tessellations[k], g);
    if (!report.valid) {
      std::ostringstream os;
      os << "tessellation " << k << ": " << report.summary();
      throw spec_error(os.str());
    }
  }
  std::vector<std::array<int, 2>> labels;
  labels.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back({v, 0});
  WalkInstance w;
  w.model = WalkModel::Staggered;
  w.basis = std::make_shared<BasisMap>(BasisKind::Vertex, std::move(labels));
  w.graph = g;
  w.measurement.vertex_count = g.vertex_count();
  w.measurement.vertex_of.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) w.measurement.vertex_of[v] = v;
  w.detail = StaggeredDetail{std::move(tessellations)};
  return w;
}

}  // namespace

WalkInstance build_staggered(
    const Graph& g, const std::vector<Tessellation>& tessellations,
    const std::vector<std::vector<Eigen::VectorXcd>>& amplitudes) {
  if (amplitudes.size() != tessellations.size())
    throw spec_error("one amplitude family per tessellation is required");
  WalkInstance w = staggered_base(g, tessellations);
  const int n = g.vertex_count();

  for (std::size_t k = 0; k < tessellations.size(); ++k) {
    const auto& polys = tessellations[k].polygons;
    if (amplitudes[k].size() != polys.size())
      throw spec_error("one amplitude vector per polygon is required");
    Eigen::MatrixXcd u = -Eigen::MatrixXcd::Identity(n, n);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      std::vector<int> poly = polys[i];
      std::sort(poly.begin(), poly.end());
      const auto& a = amplitudes[k][i];
      if (a.size() != static_cast<int>(poly.size()))
        throw spec_error("amplitude vector length must match the polygon size");
      check_unit_vector(a, "|d_{k,i}>");
      Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
      for (std::size_t j = 0; j < poly.size(); ++j) d(poly[j]) = a(j);
      u += 2.0 * d * d.adjoint();
    }
    w.stages.push_back(certify_unitary(std::move(u), w.basis, polys));
  }
  return w;
}

WalkInstance build_staggered_blocks(
    const Graph& g, const std::vector<Tessellation>& tessellations,
    const std::vector<std::vector<Eigen::MatrixXcd>>& blocks) {
  if (blocks.size() != tessellations.size())
    throw spec_error("one block family per tessellation is required");
  WalkInstance w = staggered_base(g, tessellations);
  const int n = g.vertex_count();

  for (std::size_t k = 0; k < tessellations.size(); ++k) {
    const auto& polys = tessellations[k].polygons;
    if (blocks[k].size() != polys.size())
      throw spec_error("one block per polygon is required");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      std::vector<int> poly = polys[i];
      std::sort(poly.begin(), poly.end());
      std::ostringstream what;
      what << "block for polygon " << i << " of tessellation " << k;
      check_block(blocks[k][i], static_cast<int>(poly.size()), what.str());
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (std::size_t b = 0; b < poly.size(); ++b)
          u(poly[a], poly[b]) = blocks[k][i](a, b);
    }
    w.stages.push_back(certify_unitary(std::move(u), w.basis, polys));
  }
  return w;
}

WalkInstance build_staggered_explicit(const Graph& g,
                                      const std::vector<Tessellation>& tessellations,
                                      const std::vector<Eigen::MatrixXcd>& stages) {
  if (stages.size() != tessellations.size())
    throw spec_error("one stage matrix per tessellation is required");
  WalkInstance w = staggered_base(g, tessellations);
  for (std::size_t k = 0; k < tessellations.size(); ++k)
    w.stages.push_back(
        certify_unitary(stages[k], w.basis, tessellations[k].polygons));
  return w;
}

WalkInstance build_hyperwalk(const Hypergraph& h,
                             std::vector<HyperwalkStage> schedule) {
  if (schedule.empty()) throw spec_error("the schedule must not be empty");
  auto pairs = incidence_pairs(h);
  if (pairs.empty()) throw spec_error("hypergraph has no incidence pairs");
  auto basis = std::make_shared<BasisMap>(BasisKind::VertexEdge, pairs);
  const int n = basis->size();

  std::vector<std::vector<int>> vertex_groups;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) continue;
    std::vector<int> group;
    for (int e : h.incident_edges(v)) group.push_back(basis->index_of(v, e));
    vertex_groups.push_back(std::move(group));
  }
  std::vector<std::vector<int>> edge_groups;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> group;
    std::vector<int> vs = h.edge(e);
    std::sort(vs.begin(), vs.end());
    for (int v : vs) group.push_back(basis->index_of(v, e));
    edge_groups.push_back(std::move(group));
  }

  WalkInstance w;
  w.model = WalkModel::Hyperwalk;
  w.basis = basis;
  w.hypergraph = h;

  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const auto& stage = schedule[k];
    if (static_cast<int>(stage.coins.size()) != h.vertex_count())
      throw spec_error("one coin per vertex is required");
    if (static_cast<int>(stage.shifts.size()) != h.edge_count())
      throw spec_error("one shift per edge is required");

    Eigen::MatrixXcd uv = Eigen::MatrixXcd::Zero(n, n);
    for (int v = 0; v < h.vertex_count(); ++v) {
      const auto& inc = h.incident_edges(v);
      if (inc.empty()) continue;
      std::ostringstream what;
      what << "coin at vertex " << v;
      check_block(stage.coins[v], static_cast<int>(inc.size()), what.str());
      for (std::size_t a = 0; a < inc.size(); ++a)
        for (std::size_t b = 0; b < inc.size(); ++b)
          uv(basis->index_of(v, inc[a]), basis->index_of(v, inc[b])) =
              stage.coins[v](a, b);
    }
    Eigen::MatrixXcd ue = Eigen::MatrixXcd::Zero(n, n);
    for (int e = 0; e < h.edge_count(); ++e) {
      std::vector<int> vs = h.edge(e);
      std::sort(vs.begin(), vs.end());
      std::ostringstream what;
      what << "shift at edge " << e;
      check_block(stage.shifts[e], static_cast<int>(vs.size()), what.str());
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
          ue(basis->index_of(vs[a], e), basis->index_of(vs[b], e)) =
              stage.shifts[e](a, b);
    }
    w.stages.push_back(certify_unitary(std::move(uv), basis, vertex_groups));
    w.stages.push_back(certify_unitary(std::move(ue), basis, edge_groups));
  }

  w.measurement.vertex_count = h.vertex_count();
  w.measurement.vertex_of.resize(n);
  for (int idx = 0; idx < n; ++idx) w.measurement.vertex_of[idx] = basis->label(idx)[0];
  w.detail = HyperwalkDetail{static_cast<int>(schedule.size()), false};
  return w;
}

WalkInstance build_hyperwalk(const Hypergraph& h, std::vector<Eigen::MatrixXcd> coins,
                             std::vector<Eigen::MatrixXcd> shifts) {
  std::vector<HyperwalkStage> schedule;
  schedule.push_back({std::move(coins), std::move(shifts)});
  return build_hyperwalk(h, std::move(schedule));
}

WalkInstance build_hyperwalk_composed(const Hypergraph& h,
                                      std::vector<Eigen::MatrixXcd> stages) {
  if (stages.empty()) throw spec_error("the schedule must not be empty");
  auto pairs = incidence_pairs(h);
  if (pairs.empty()) throw spec_error("hypergraph has no incidence pairs");
  auto basis = std::make_shared<BasisMap>(BasisKind::VertexEdge, pairs);

  WalkInstance w;
  w.model = WalkModel::Hyperwalk;
  w.basis = basis;
  w.hypergraph = h;
  const int k = static_cast<int>(stages.size());
  for (auto& s : stages) w.stages.push_back(certify_unitary(std::move(s), basis));
  w.measurement.vertex_count = h.vertex_count();
  w.measurement.vertex_of.resize(basis->size());
  for (int idx = 0; idx < basis->size(); ++idx)
    w.measurement.vertex_of[idx] = basis->label(idx)[0];
  w.detail = HyperwalkDetail{k, true};
  return w;
}

HyperwalkStage grover_hyperwalk_stage(const Hypergraph& h) {
  HyperwalkStage stage;
  stage.coins.reserve(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v)
    stage.coins.push_back(h.degree(v) > 0 ? grover_reflection(h.degree(v))
                                          : Eigen::MatrixXcd());
  stage.shifts.reserve(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e)
    stage.shifts.push_back(grover_reflection(h.edge_size(e)));
  return stage;
}

std::vector<Eigen::MatrixXcd> build_directed_shift(const Hypergraph& h) {
  if (!h.directed())
    throw spec_error("directed shifts require ordered (directed) hyperedges");
  std::vector<Eigen::MatrixXcd> shifts;
  shifts.reserve(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& seq = h.edge(e);
    const int l = static_cast<int>(seq.size());
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    auto pos = [&](int v) {
      return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                              sorted.begin());
    };
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(l, l);
    for (int i = 0; i < l; ++i) s(pos(seq[(i + 1) % l]), pos(seq[i])) = 1.0;
    shifts.push_back(std::move(s));
  }
  return shifts;
}

std::vector<Eigen::VectorXcd> uniform_szegedy_amplitudes(const Graph& g) {
  std::vector<Eigen::VectorXcd> amps(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    amps[v] = Eigen::VectorXcd::Constant(d, Complex(1.0 / std::sqrt(d), 0.0));
  }
  return amps;
}

std::vector<std::vector<Eigen::VectorXcd>> uniform_staggered_amplitudes(
    const std::vector<Tessellation>& tessellations) {
  std::vector<std::vector<Eigen::VectorXcd>> amps;
  amps.reserve(tessellations.size());
  for (const auto& t : tessellations) {
    std::vector<Eigen::VectorXcd> stage;
    stage.reserve(t.polygons.size());
    for (const auto& p : t.polygons) {
      const int l = static_cast<int>(p.size());
      stage.push_back(Eigen::VectorXcd::Constant(l, Complex(1.0 / std::sqrt(l), 0.0)));
    }
    amps.push_back(std::move(stage));
  }
  return amps;
}

std::vector<int> Trajectory::cycle_boundaries() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    if (cycle_boundary(i)) out.push_back(i);
  return out;
}

Trajectory run(const WalkInstance& w, const StateVector& psi0, int steps) {
  if (steps < 0) throw spec_error("step count must be nonnegative");
  if (!same_basis(w.basis, psi0.basis))
    throw spec_error("initial state does not live on the walk's basis");
  if (!is_normalized(psi0)) throw spec_error("initial state is not normalized");
  if (w.stages.empty()) throw spec_error("walk has no stages");

  Trajectory t;
  t.cycle_length = w.cycle_length();
  t.states.reserve(steps + 1);
  t.states.push_back(psi0);
  Eigen::VectorXcd cur = psi0.amplitudes;
  for (int k = 0; k < steps; ++k) {
    cur = w.stages[k % w.stages.size()].matrix() * cur;
    t.states.push_back({cur, w.basis});
  }
  return t;
}

}  // namespace hyperwalk
