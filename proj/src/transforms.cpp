#include "hyperwalk/transforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

constexpr std::string_view kTransformNames[] = {
    "szegedy-from-coined",
    "coined-from-szegedy",
    "coined-from-hyperwalk",
    "staggered-from-generalized-hyperwalk",
    "generalized-coined-from-staggered",
    "coined-from-generalized-coined",
    "generalized-hyperwalk-from-staggered",
};

const CoinedDetail& coined_detail(const WalkInstance& w, std::string_view what) {
  if (w.model != WalkModel::ScatteringCoined)
    throw transform_error(std::string(what) + " needs a coined walk on a graph");
  const auto* d = std::get_if<CoinedDetail>(&w.detail);
  if (!d) throw transform_error(std::string(what) + " needs coin/shift metadata");
  return *d;
}

const StaggeredDetail& staggered_detail(const WalkInstance& w, std::string_view what) {
  if (w.model != WalkModel::Staggered)
    throw transform_error(std::string(what) + " needs a staggered walk");
  const auto* d = std::get_if<StaggeredDetail>(&w.detail);
  if (!d) throw transform_error(std::string(what) + " needs tessellation metadata");
  return *d;
}

const HyperwalkDetail& hyperwalk_detail(const WalkInstance& w, std::string_view what) {
  if (w.model != WalkModel::Hyperwalk)
    throw transform_error(std::string(what) + " needs a hyperwalk");
  const auto* d = std::get_if<HyperwalkDetail>(&w.detail);
  if (!d) throw transform_error(std::string(what) + " needs schedule metadata");
  return *d;
}

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

int pair_count(const Graph& g) {
  int n = 0;
  for (int v = 0; v < g.vertex_count(); ++v) n += g.degree(v);
  return n;
}

int incidence_count(const Hypergraph& h) {
  int n = 0;
  for (int e = 0; e < h.edge_count(); ++e) n += h.edge_size(e);
  return n;
}

// Incidence pairs of h as staggered vertices, with the vertex and edge
// groupings as tessellations and the union of their cliques as the graph.
struct IncidenceStructure {
  Graph graph;
  Tessellation vertex_tess;
  Tessellation edge_tess;
};

IncidenceStructure incidence_structure(const Hypergraph& h) {
  const auto pairs = incidence_pairs(h);
  const int w = static_cast<int>(pairs.size());
  if (w == 0) throw transform_error("hypergraph has no incidence pairs");

  IncidenceStructure out;
  out.vertex_tess.covered_set_size = w;
  out.edge_tess.covered_set_size = w;

  std::vector<std::vector<int>> by_vertex(h.vertex_count());
  std::vector<std::vector<int>> by_edge(h.edge_count());
  for (int i = 0; i < w; ++i) {
    by_vertex[pairs[i][0]].push_back(i);
    by_edge[pairs[i][1]].push_back(i);
  }
  for (auto& p : by_vertex)
    if (!p.empty()) out.vertex_tess.polygons.push_back(std::move(p));
  for (auto& p : by_edge)
    if (!p.empty()) out.edge_tess.polygons.push_back(std::move(p));

  std::set<std::array<int, 2>> edges;
  auto add_cliques = [&](const Tessellation& t) {
    for (const auto& poly : t.polygons)
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (std::size_t b = a + 1; b < poly.size(); ++b)
          edges.insert({std::min(poly[a], poly[b]), std::max(poly[a], poly[b])});
  };
  add_cliques(out.vertex_tess);
  add_cliques(out.edge_tess);
  out.graph = Graph(w, {edges.begin(), edges.end()});
  return out;
}

// Graph extension for the staggered-to-coined construction: one new vertex
// per polygon per tessellation, connected to that polygon's vertices.
struct PolygonExtension {
  Graph graph;
  std::vector<int> offsets;                  // first added vertex per tessellation
  std::vector<std::vector<int>> polygon_of;  // polygon index of v per tessellation
  std::vector<int> tessellation_of;          // per added vertex (0-based from offset)
  int added = 0;
};

PolygonExtension polygon_extension(const Graph& g,
                                   const std::vector<Tessellation>& tessellations) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(tessellations.size());
  PolygonExtension out;
  out.offsets.resize(k);
  out.polygon_of.assign(k, std::vector<int>(n, -1));
  for (int i = 0; i < k; ++i) {
    out.offsets[i] = n + out.added;
    const auto& polys = tessellations[i].polygons;
    for (int p = 0; p < static_cast<int>(polys.size()); ++p) {
      for (int v : polys[p]) out.polygon_of[i][v] = p;
      out.tessellation_of.push_back(i);
    }
    out.added += static_cast<int>(polys.size());
  }
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < k; ++i) {
    const auto& polys = tessellations[i].polygons;
    for (int p = 0; p < static_cast<int>(polys.size()); ++p)
      for (int v : polys[p]) edges.push_back({v, out.offsets[i] + p});
  }
  out.graph = Graph(n + out.added, std::move(edges));
  return out;
}

Graph layered_graph(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::set<std::array<int, 2>> edges;
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) {
      for (int i = 0; i < k; ++i) {
        const int a = v + i * n;
        const int b = w + ((i + 1) % k) * n;
        edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
  }
  return Graph(k * n, {edges.begin(), edges.end()});
}

Graph bipartite_incidence_graph(const Hypergraph& h) {
  std::vector<std::array<int, 2>> edges;
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edge(e)) edges.push_back({v, h.vertex_count() + e});
  return Graph(h.vertex_count() + h.edge_count(), std::move(edges));
}

}  // namespace

StateVector map_state(const StateMap& m, const StateVector& source, BasisPtr target) {
  if (static_cast<int>(m.target_index.size()) != source.amplitudes.size())
    throw spec_error("state map does not cover the source basis");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(target->size());
  for (int i = 0; i < source.amplitudes.size(); ++i) {
    if (source.amplitudes(i) == Complex{0.0, 0.0}) continue;
    const int j = m.target_index[i];
    if (j < 0)
      throw spec_error("state map is not defined on the initial state's support");
    out(j) = source.amplitudes(i);
  }
  return {std::move(out), std::move(target)};
}

TransformResult identity_transform(const WalkInstance& w) {
  TransformResult tr;
  tr.name = "identity";
  tr.target = w;
  tr.state_map.target_index.resize(w.basis->size());
  for (int i = 0; i < w.basis->size(); ++i) tr.state_map.target_index[i] = i;
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(w));
  return tr;
}

TransformResult szegedy_from_coined(const WalkInstance& w) {
  const auto& d = coined_detail(w, "szegedy-from-coined");
  if (w.stages.size() != 1)
    throw transform_error("szegedy-from-coined needs a static coin");

  const Eigen::MatrixXcd& c = d.coin_schedule[0];
  Eigen::MatrixXcd u2 = d.shift * c * d.shift;

  TransformResult tr;
  tr.name = "szegedy-from-coined";
  tr.target = build_szegedy_stages(*w.graph, c, std::move(u2));
  tr.target.measurement = w.measurement;

  tr.state_map.target_index.resize(w.basis->size());
  for (int i = 0; i < w.basis->size(); ++i) tr.state_map.target_index[i] = i;
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult coined_from_szegedy(const WalkInstance& w) {
  if (w.model != WalkModel::Szegedy || w.stages.size() != 2)
    throw transform_error("coined-from-szegedy needs a Szegedy walk");
  const Eigen::MatrixXcd shift = flip_flop_shift(*w.basis);
  const Eigen::MatrixXcd& u1 = w.stages[0].matrix();
  const Eigen::MatrixXcd& u2 = w.stages[1].matrix();
  const double mismatch = (u2 - shift * u1 * shift).cwiseAbs().maxCoeff();
  if (mismatch > 1e-9) {
    std::ostringstream os;
    os << "coined-from-szegedy needs U2 = S U1 S (max mismatch " << mismatch << ")";
    throw transform_error(os.str());
  }

  TransformResult tr;
  tr.name = "coined-from-szegedy";
  tr.target = build_generalized_coined(*w.graph, {u1});
  tr.target.measurement = w.measurement;

  tr.state_map.target_index.resize(w.basis->size());
  for (int i = 0; i < w.basis->size(); ++i) tr.state_map.target_index[i] = i;
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult coined_from_hyperwalk(const WalkInstance& w) {
  const auto& d = hyperwalk_detail(w, "coined-from-hyperwalk");
  if (d.composed || d.schedule_pairs != 1)
    throw transform_error("coined-from-hyperwalk needs a static hyperwalk");

  const Hypergraph& h = *w.hypergraph;
  const int nv = h.vertex_count();
  const Graph bip = bipartite_incidence_graph(h);
  auto basis = directed_pair_basis(bip);
  const int n = basis->size();

  const Eigen::MatrixXcd& uv = w.stages[0].matrix();
  const Eigen::MatrixXcd& ue = w.stages[1].matrix();
  const BasisMap& src = *w.basis;

  // Coin U_V (+) U_E: vertex blocks act on |v,e>-side states, edge blocks
  // on the |e,v>-side, both copied entry-by-entry from the source stages.
  Eigen::MatrixXcd coin = Eigen::MatrixXcd::Zero(n, n);
  for (int p = 0; p < src.size(); ++p) {
    const auto [pv, pe] = src.label(p);
    for (int q = 0; q < src.size(); ++q) {
      const auto [qv, qe] = src.label(q);
      if (uv(q, p) != Complex{0.0, 0.0})
        coin(basis->index_of(qv, nv + qe), basis->index_of(pv, nv + pe)) = uv(q, p);
      if (ue(q, p) != Complex{0.0, 0.0})
        coin(basis->index_of(nv + qe, qv), basis->index_of(nv + pe, pv)) = ue(q, p);
    }
  }

  TransformResult tr;
  tr.name = "coined-from-hyperwalk";
  tr.target = build_generalized_coined(bip, {std::move(coin)});

  MeasurementMap m;
  m.vertex_count = nv;
  m.vertex_of.assign(n, -1);
  for (int idx = 0; idx < n; ++idx) {
    const auto& l = basis->label(idx);
    if (l[0] < nv) m.vertex_of[idx] = l[0];
  }
  tr.target.measurement = std::move(m);

  tr.state_map.target_index.resize(src.size());
  for (int p = 0; p < src.size(); ++p) {
    const auto& l = src.label(p);
    tr.state_map.target_index[p] = basis->index_of(l[0], nv + l[1]);
  }
  tr.step_map = {2, 0, 2};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult staggered_from_generalized_hyperwalk(const WalkInstance& w) {
  const auto& d = hyperwalk_detail(w, "staggered-from-generalized-hyperwalk");
  if (d.composed)
    throw transform_error(
        "staggered-from-generalized-hyperwalk needs alternating U_V/U_E stages");

  const Hypergraph& h = *w.hypergraph;
  IncidenceStructure inc = incidence_structure(h);

  std::vector<Tessellation> stage_tess;
  std::vector<Eigen::MatrixXcd> stage_matrices;
  stage_tess.reserve(w.stages.size());
  for (std::size_t s = 0; s < w.stages.size(); ++s) {
    stage_tess.push_back(s % 2 == 0 ? inc.vertex_tess : inc.edge_tess);
    stage_matrices.push_back(w.stages[s].matrix());
  }

  TransformResult tr;
  tr.name = "staggered-from-generalized-hyperwalk";
  tr.target = build_staggered_explicit(inc.graph, stage_tess, stage_matrices);

  MeasurementMap m;
  m.vertex_count = h.vertex_count();
  m.vertex_of.resize(w.basis->size());
  for (int i = 0; i < w.basis->size(); ++i) m.vertex_of[i] = w.basis->label(i)[0];
  tr.target.measurement = std::move(m);

  tr.state_map.target_index.resize(w.basis->size());
  for (int i = 0; i < w.basis->size(); ++i) tr.state_map.target_index[i] = i;
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult generalized_coined_from_staggered(const WalkInstance& w) {
  const auto& d = staggered_detail(w, "generalized-coined-from-staggered");
  const Graph& g = *w.graph;
  const int n = g.vertex_count();
  const int k = w.cycle_length();

  PolygonExtension ext = polygon_extension(g, d.tessellations);
  auto basis = directed_pair_basis(ext.graph);
  const int nb = basis->size();
  auto t_of = [&](int tess, int v) {
    return ext.offsets[tess] + ext.polygon_of[tess][v];
  };

  // Fixed coin: forwards |v,t_i> to |v,t_{i+1}> and holds |t_i,v> in place.
  Eigen::MatrixXcd cycler = Eigen::MatrixXcd::Zero(nb, nb);
  for (int idx = 0; idx < nb; ++idx) {
    const auto& l = basis->label(idx);
    if (l[0] < n) {
      const int next = (ext.tessellation_of[l[1] - n] + 1) % k;
      cycler(basis->index_of(l[0], t_of(next, l[0])), idx) = 1.0;
    } else {
      cycler(idx, idx) = 1.0;
    }
  }

  std::vector<Eigen::MatrixXcd> coin_schedule;
  coin_schedule.reserve(2 * k);
  for (int i = 0; i < k; ++i) {
    // Stage i of the staggered walk, applied on the directions of the
    // tessellation-i polygon vertices.
    Eigen::MatrixXcd ci = Eigen::MatrixXcd::Identity(nb, nb);
    const auto& polys = d.tessellations[i].polygons;
    const Eigen::MatrixXcd& u = w.stages[i].matrix();
    for (int p = 0; p < static_cast<int>(polys.size()); ++p) {
      const int t = ext.offsets[i] + p;
      for (int a : polys[p]) ci(basis->index_of(t, a), basis->index_of(t, a)) = 0.0;
      for (int a : polys[p])
        for (int b : polys[p])
          ci(basis->index_of(t, a), basis->index_of(t, b)) = u(a, b);
    }
    coin_schedule.push_back(std::move(ci));
    coin_schedule.push_back(cycler);
  }

  TransformResult tr;
  tr.name = "generalized-coined-from-staggered";
  tr.target = build_generalized_coined(ext.graph, std::move(coin_schedule));

  MeasurementMap m;
  m.vertex_count = n;
  m.vertex_of.assign(nb, -1);
  for (int idx = 0; idx < nb; ++idx) {
    const auto& l = basis->label(idx);
    if (l[0] >= n) m.vertex_of[idx] = l[1];
  }
  tr.target.measurement = std::move(m);

  tr.state_map.target_index.resize(n);
  for (int v = 0; v < n; ++v)
    tr.state_map.target_index[v] = basis->index_of(t_of(0, v), v);
  tr.step_map = {2 * k, 0, k};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult coined_from_generalized_coined(const WalkInstance& w) {
  const auto& d = coined_detail(w, "coined-from-generalized-coined");
  const int k = static_cast<int>(d.coin_schedule.size());
  if (k == 1) return identity_transform(w);

  const Graph& g = *w.graph;
  const int n = g.vertex_count();
  const Graph lg = layered_graph(g, k);
  auto basis = directed_pair_basis(lg);
  const int nl = basis->size();
  const BasisMap& src = *w.basis;

  // Layer stamps: at step t the walk occupies layer t mod k, pointing one
  // layer down; the coin redirects it one layer up.
  auto down = [&](int i, int x, int y) {
    return basis->index_of(x + i * n, y + ((i - 1 + k) % k) * n);
  };
  auto up = [&](int i, int x, int y) {
    return basis->index_of(x + i * n, y + ((i + 1) % k) * n);
  };

  Eigen::MatrixXcd coin = Eigen::MatrixXcd::Zero(nl, nl);
  for (int i = 0; i < k; ++i) {
    const Eigen::MatrixXcd& ci = d.coin_schedule[i];
    for (int p = 0; p < src.size(); ++p) {
      const auto [px, py] = src.label(p);
      for (int q = 0; q < src.size(); ++q) {
        if (ci(q, p) == Complex{0.0, 0.0}) continue;
        const auto [qx, qz] = src.label(q);
        coin(up(i, qx, qz), down(i, px, py)) = ci(q, p);
      }
    }
    if (k >= 3) {
      for (int p = 0; p < src.size(); ++p) {
        const auto [px, py] = src.label(p);
        coin(down(i, px, py), up(i, px, py)) = 1.0;
      }
    }
  }

  TransformResult tr;
  tr.name = "coined-from-generalized-coined";
  tr.target = build_generalized_coined(lg, {std::move(coin)});

  MeasurementMap m;
  m.vertex_count = w.measurement.vertex_count;
  m.vertex_of.assign(nl, -1);
  for (int i = 0; i < k; ++i)
    for (int p = 0; p < src.size(); ++p) {
      const auto [px, py] = src.label(p);
      m.vertex_of[down(i, px, py)] = w.measurement.vertex_of[p];
    }
  tr.target.measurement = std::move(m);

  tr.state_map.target_index.resize(src.size());
  for (int p = 0; p < src.size(); ++p) {
    const auto [px, py] = src.label(p);
    tr.state_map.target_index[p] = down(0, px, py);
  }
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult generalized_hyperwalk_from_staggered(const WalkInstance& w) {
  staggered_detail(w, "generalized-hyperwalk-from-staggered");
  const Graph& g = *w.graph;
  const int n = g.vertex_count();

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  const Hypergraph h(n, {all});

  // Every vertex has degree one, so the coins are trivial; composing them
  // into the edge shifts leaves one stage per staggered stage.
  std::vector<Eigen::MatrixXcd> stages;
  stages.reserve(w.stages.size());
  for (const auto& s : w.stages) stages.push_back(s.matrix());

  TransformResult tr;
  tr.name = "generalized-hyperwalk-from-staggered";
  tr.target = build_hyperwalk_composed(h, std::move(stages));

  tr.state_map.target_index.resize(n);
  for (int v = 0; v < n; ++v) tr.state_map.target_index[v] = v;
  tr.step_map = {1, 0, 1};
  tr.sizes = shape_sizes(shape_of(tr.target));
  return tr;
}

TransformResult apply_transform(std::string_view name, const WalkInstance& w) {
  if (name == "identity") return identity_transform(w);
  if (name == "szegedy-from-coined") return szegedy_from_coined(w);
  if (name == "coined-from-szegedy") return coined_from_szegedy(w);
  if (name == "coined-from-hyperwalk") return coined_from_hyperwalk(w);
  if (name == "staggered-from-generalized-hyperwalk")
    return staggered_from_generalized_hyperwalk(w);
  if (name == "generalized-coined-from-staggered")
    return generalized_coined_from_staggered(w);
  if (name == "coined-from-generalized-coined")
    return coined_from_generalized_coined(w);
  if (name == "generalized-hyperwalk-from-staggered")
    return generalized_hyperwalk_from_staggered(w);
  throw transform_error("unknown transform: " + std::string(name));
}

std::span<const std::string_view> transform_names() { return kTransformNames; }

WalkShape shape_of(const WalkInstance& w) {
  WalkShape s;
  s.model = w.model;
  s.graph = w.graph;
  s.hypergraph = w.hypergraph;
  s.schedule_len = w.cycle_length();
  if (const auto* d = std::get_if<StaggeredDetail>(&w.detail))
    s.stage_tessellations = d->tessellations;
  if (const auto* d = std::get_if<LineDetail>(&w.detail)) s.positions = d->positions;
  if (const auto* d = std::get_if<HyperwalkDetail>(&w.detail)) s.composed = d->composed;
  return s;
}

SizeReport shape_sizes(const WalkShape& s) {
  SizeReport r;
  r.operator_count = s.schedule_len;
  switch (s.model) {
    case WalkModel::CoinedLine:
      r.vertex_count = s.positions;
      r.basis_size = 2 * s.positions;
      break;
    case WalkModel::ScatteringCoined:
      r.vertex_count = s.graph->vertex_count();
      r.basis_size = pair_count(*s.graph);
      break;
    case WalkModel::Szegedy:
      r.vertex_count = 2 * s.graph->vertex_count();
      r.basis_size = pair_count(*s.graph);
      break;
    case WalkModel::Staggered:
      r.vertex_count = s.graph->vertex_count();
      r.basis_size = s.graph->vertex_count();
      break;
    case WalkModel::Hyperwalk:
      r.vertex_count = s.hypergraph->vertex_count();
      r.basis_size = incidence_count(*s.hypergraph);
      break;
  }
  return r;
}

WalkShape apply_shape_transform(std::string_view name, const WalkShape& s) {
  WalkShape out;
  if (name == "identity") return s;

  if (name == "szegedy-from-coined") {
    if (s.model != WalkModel::ScatteringCoined || s.schedule_len != 1)
      throw transform_error("szegedy-from-coined needs a static coined walk");
    out.model = WalkModel::Szegedy;
    out.graph = s.graph;
    out.schedule_len = 2;
    return out;
  }
  if (name == "coined-from-szegedy") {
    if (s.model != WalkModel::Szegedy)
      throw transform_error("coined-from-szegedy needs a Szegedy walk");
    out.model = WalkModel::ScatteringCoined;
    out.graph = s.graph;
    out.schedule_len = 1;
    return out;
  }
  if (name == "coined-from-hyperwalk") {
    if (s.model != WalkModel::Hyperwalk || s.composed || s.schedule_len != 2)
      throw transform_error("coined-from-hyperwalk needs a static hyperwalk");
    out.model = WalkModel::ScatteringCoined;
    out.graph = bipartite_incidence_graph(*s.hypergraph);
    out.schedule_len = 1;
    return out;
  }
  if (name == "staggered-from-generalized-hyperwalk") {
    if (s.model != WalkModel::Hyperwalk || s.composed || s.schedule_len % 2 != 0)
      throw transform_error(
          "staggered-from-generalized-hyperwalk needs alternating U_V/U_E stages");
    IncidenceStructure inc = incidence_structure(*s.hypergraph);
    out.model = WalkModel::Staggered;
    out.graph = std::move(inc.graph);
    out.schedule_len = s.schedule_len;
    for (int i = 0; i < s.schedule_len; ++i)
      out.stage_tessellations.push_back(i % 2 == 0 ? inc.vertex_tess : inc.edge_tess);
    return out;
  }
  if (name == "generalized-coined-from-staggered") {
    if (s.model != WalkModel::Staggered ||
        static_cast<int>(s.stage_tessellations.size()) != s.schedule_len)
      throw transform_error("generalized-coined-from-staggered needs a staggered walk");
    PolygonExtension ext = polygon_extension(*s.graph, s.stage_tessellations);
    out.model = WalkModel::ScatteringCoined;
    out.graph = std::move(ext.graph);
    out.schedule_len = 2 * s.schedule_len;
    return out;
  }
  if (name == "coined-from-generalized-coined") {
    if (s.model != WalkModel::ScatteringCoined)
      throw transform_error("coined-from-generalized-coined needs a coined walk");
    if (s.schedule_len == 1) return s;
    out.model = WalkModel::ScatteringCoined;
    out.graph = layered_graph(*s.graph, s.schedule_len);
    out.schedule_len = 1;
    return out;
  }
  if (name == "generalized-hyperwalk-from-staggered") {
    if (s.model != WalkModel::Staggered)
      throw transform_error("generalized-hyperwalk-from-staggered needs a staggered walk");
    const int n = s.graph->vertex_count();
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    out.model = WalkModel::Hyperwalk;
    out.hypergraph = Hypergraph(n, {all});
    out.schedule_len = s.schedule_len;
    out.composed = true;
    return out;
  }
  throw transform_error("unknown transform: " + std::string(name));
}

std::vector<std::pair<std::string, SizeReport>> transform_chain_size(
    const WalkShape& source, std::span<const std::string> chain) {
  std::vector<std::pair<std::string, SizeReport>> out;
  out.emplace_back("source", shape_sizes(source));
  WalkShape cur = source;
  for (const auto& name : chain) {
    cur = apply_shape_transform(name, cur);
    out.emplace_back(name, shape_sizes(cur));
  }
  return out;
}

}  // namespace hyperwalk
