#include "hyperwalk/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw parse_error(msg); }

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(std::string("expected integer field \"") + key + "\"");
  return j[key].get<int>();
}

bool is_complex_pair(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (is_complex_pair(j)) return {j[0].get<double>(), j[1].get<double>()};
  fail("expected a number or an [re, im] pair");
}

Json vector_to_json(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Eigen::VectorXcd vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a nonempty array of amplitudes");
  Eigen::VectorXcd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a nonempty array of matrix rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e[0], e[1]}));
  out["edges"] = std::move(edges);
  if (g.directed()) out["directed"] = true;
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) fail("expected a graph object");
  const int n = int_field(j, "vertices");
  std::vector<std::array<int, 2>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail("graph edges must be [i, j] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  const bool directed = j.value("directed", false);
  try {
    return Graph(n, std::move(edges), directed, std::move(labels));
  } catch (const spec_error& e) {
    fail(std::string("invalid graph: ") + e.what());
  }
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json out;
  out["vertices"] = h.vertex_count();
  out["edges"] = h.edges();
  if (h.directed()) out["directed"] = true;
  if (!h.labels().empty()) out["labels"] = h.labels();
  return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) fail("expected a hypergraph object");
  const int n = int_field(j, "vertices");
  std::vector<std::vector<int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.empty()) fail("hyperedges must be nonempty arrays");
      std::vector<int> verts;
      for (const auto& v : e) {
        if (!v.is_number_integer()) fail("hyperedge entries must be vertex indices");
        verts.push_back(v.get<int>());
      }
      edges.push_back(std::move(verts));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  const bool directed = j.value("directed", false);
  try {
    return Hypergraph(n, std::move(edges), directed, std::move(labels));
  } catch (const spec_error& e) {
    fail(std::string("invalid hypergraph: ") + e.what());
  }
}

Json tessellation_to_json(const Tessellation& t) {
  return Json{{"polygons", t.polygons}};
}

Tessellation tessellation_from_json(const Json& j, int covered_set_size) {
  if (!j.is_object() || !j.contains("polygons") || !j["polygons"].is_array())
    fail("expected a tessellation object with a \"polygons\" array");
  Tessellation t;
  t.covered_set_size = covered_set_size;
  for (const auto& p : j["polygons"]) {
    if (!p.is_array()) fail("polygons must be arrays of vertex indices");
    std::vector<int> poly;
    for (const auto& v : p) {
      if (!v.is_number_integer()) fail("polygon entries must be vertex indices");
      poly.push_back(v.get<int>());
    }
    t.polygons.push_back(std::move(poly));
  }
  return t;
}

namespace {

// Operator value: preset name or explicit matrix.
Eigen::MatrixXcd resolve_op(const Json& value, int dim, const std::string& what) {
  if (value.is_string()) {
    try {
      return preset_unitary(value.get<std::string>(), dim);
    } catch (const spec_error& e) {
      fail(what + ": " + e.what());
    }
  }
  if (value.is_array()) {
    Eigen::MatrixXcd m = matrix_from_json(value);
    if (m.rows() != dim || m.cols() != dim) {
      std::ostringstream os;
      os << what << ": expected a " << dim << "x" << dim << " matrix";
      fail(os.str());
    }
    return m;
  }
  fail(what + ": expected a preset name or a matrix");
}

// Operator maps have a "default" plus per-element overrides keyed by the
// element's index, optionally prefixed ("v3", "e2").
const Json* opmap_entry(const Json& map, char prefix, int index) {
  const std::string plain = std::to_string(index);
  const std::string prefixed = std::string(1, prefix) + plain;
  if (map.contains(prefixed)) return &map.at(prefixed);
  if (map.contains(plain)) return &map.at(plain);
  if (map.contains("default")) return &map.at("default");
  return nullptr;
}

WalkInstance parse_coined_line(const Json& j) {
  const int positions = int_field(j, "positions");
  if (!j.contains("coin")) fail("coined-line specs need a \"coin\"");
  return build_coined_line(resolve_op(j["coin"], 2, "coin"), positions);
}

std::vector<Eigen::MatrixXcd> scattering_stage_coins(const Json& stage, const Graph& g) {
  std::vector<Eigen::MatrixXcd> coins(g.vertex_count());
  if (stage.contains("coins")) {
    const Json& map = stage["coins"];
    if (!map.is_object()) fail("\"coins\" must be an object");
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) continue;
      const Json* entry = opmap_entry(map, 'v', v);
      if (!entry) fail("no coin given for vertex " + std::to_string(v));
      coins[v] = resolve_op(*entry, g.degree(v), "coin at vertex " + std::to_string(v));
    }
    return coins;
  }
  if (stage.contains("scattering")) {
    const Json& map = stage["scattering"];
    if (!map.is_object()) fail("\"scattering\" must be an object");
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      if (d == 0) continue;
      const Json* entry = opmap_entry(map, 'v', v);
      if (!entry) fail("no (r, t) pair given for vertex " + std::to_string(v));
      if (!entry->is_array() || entry->size() != 2)
        fail("scattering entries must be [r, t] pairs");
      const Complex r = complex_from_json((*entry)[0]);
      const Complex t = complex_from_json((*entry)[1]);
      Eigen::MatrixXcd blk = Eigen::MatrixXcd::Constant(d, d, t);
      blk.diagonal().setConstant(r);
      coins[v] = std::move(blk);
    }
    return coins;
  }
  fail("scattering-coined stages need \"coins\" or \"scattering\"");
}

WalkInstance parse_scattering(const Json& j) {
  Graph g = graph_from_json(j.at("structure"));
  if (j.contains("coin_schedule")) {
    std::vector<Eigen::MatrixXcd> coins;
    for (const auto& c : j["coin_schedule"]) coins.push_back(matrix_from_json(c));
    return build_generalized_coined(g, std::move(coins));
  }
  std::vector<std::vector<Eigen::MatrixXcd>> schedule;
  if (j.contains("schedule")) {
    if (!j["schedule"].is_array() || j["schedule"].empty())
      fail("\"schedule\" must be a nonempty array");
    for (const auto& stage : j["schedule"])
      schedule.push_back(scattering_stage_coins(stage, g));
  } else {
    schedule.push_back(scattering_stage_coins(j, g));
  }
  return build_scattering(g, schedule);
}

WalkInstance parse_szegedy(const Json& j) {
  Graph g = graph_from_json(j.at("structure"));
  if (j.contains("stages")) {
    if (!j["stages"].is_array() || j["stages"].size() != 2)
      fail("szegedy \"stages\" must list exactly two matrices");
    return build_szegedy_stages(g, matrix_from_json(j["stages"][0]),
                                matrix_from_json(j["stages"][1]));
  }
  if (!j.contains("amplitudes")) fail("szegedy specs need \"amplitudes\" or \"stages\"");
  const Json& amps = j["amplitudes"];
  if (amps.is_string() && amps.get<std::string>() == "uniform")
    return build_szegedy(g, uniform_szegedy_amplitudes(g));
  if (!amps.is_object()) fail("\"amplitudes\" must be \"uniform\" or an object");
  std::vector<Eigen::VectorXcd> vectors(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    const Json* entry = opmap_entry(amps, 'v', v);
    if (!entry) fail("no amplitudes given for vertex " + std::to_string(v));
    if (entry->is_string() && entry->get<std::string>() == "uniform") {
      vectors[v] = Eigen::VectorXcd::Constant(d, Complex(1.0 / std::sqrt(d), 0.0));
    } else {
      vectors[v] = vector_from_json(*entry);
    }
  }
  return build_szegedy(g, vectors);
}

std::vector<Tessellation> parse_tessellations(const Json& j, int n) {
  if (!j.contains("tessellations") || !j["tessellations"].is_array() ||
      j["tessellations"].empty())
    fail("staggered specs need a nonempty \"tessellations\" array");
  std::vector<Tessellation> ts;
  for (const auto& t : j["tessellations"]) ts.push_back(tessellation_from_json(t, n));
  return ts;
}

WalkInstance parse_staggered(const Json& j) {
  Graph g = graph_from_json(j.at("structure"));
  auto ts = parse_tessellations(j, g.vertex_count());
  if (j.contains("stages")) {
    std::vector<Eigen::MatrixXcd> stages;
    for (const auto& s : j["stages"]) stages.push_back(matrix_from_json(s));
    return build_staggered_explicit(g, ts, stages);
  }
  if (j.contains("blocks")) {
    const Json& b = j["blocks"];
    if (!b.is_array() || b.size() != ts.size())
      fail("\"blocks\" must list one block family per tessellation");
    std::vector<std::vector<Eigen::MatrixXcd>> blocks;
    for (const auto& family : b) {
      std::vector<Eigen::MatrixXcd> stage;
      for (const auto& m : family) stage.push_back(matrix_from_json(m));
      blocks.push_back(std::move(stage));
    }
    return build_staggered_blocks(g, ts, blocks);
  }
  if (!j.contains("amplitudes")) fail("staggered specs need amplitudes, blocks or stages");
  const Json& amps = j["amplitudes"];
  if (amps.is_string() && amps.get<std::string>() == "uniform")
    return build_staggered(g, ts, uniform_staggered_amplitudes(ts));
  if (!amps.is_array() || amps.size() != ts.size())
    fail("\"amplitudes\" must be \"uniform\" or one vector family per tessellation");
  std::vector<std::vector<Eigen::VectorXcd>> families;
  for (const auto& family : amps) {
    std::vector<Eigen::VectorXcd> stage;
    for (const auto& v : family) stage.push_back(vector_from_json(v));
    families.push_back(std::move(stage));
  }
  return build_staggered(g, ts, families);
}

HyperwalkStage hyperwalk_stage_from_json(const Json& stage, const Hypergraph& h) {
  if (!stage.contains("coins") || !stage.contains("shifts"))
    fail("hyperwalk stages need \"coins\" and \"shifts\"");
  HyperwalkStage out;
  out.coins.resize(h.vertex_count());
  const Json& coins = stage["coins"];
  if (!coins.is_object()) fail("\"coins\" must be an object");
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) continue;
    const Json* entry = opmap_entry(coins, 'v', v);
    if (!entry) fail("no coin given for vertex " + std::to_string(v));
    out.coins[v] = resolve_op(*entry, h.degree(v), "coin at vertex " + std::to_string(v));
  }
  out.shifts.resize(h.edge_count());
  const Json& shifts = stage["shifts"];
  if (!shifts.is_object()) fail("\"shifts\" must be an object");
  std::vector<Eigen::MatrixXcd> directed;  // built lazily
  for (int e = 0; e < h.edge_count(); ++e) {
    const Json* entry = opmap_entry(shifts, 'e', e);
    if (!entry) fail("no shift given for edge " + std::to_string(e));
    if (entry->is_string() && entry->get<std::string>() == "directed") {
      if (directed.empty()) directed = build_directed_shift(h);
      out.shifts[e] = directed[e];
    } else {
      out.shifts[e] =
          resolve_op(*entry, h.edge_size(e), "shift at edge " + std::to_string(e));
    }
  }
  return out;
}

WalkInstance parse_hyperwalk(const Json& j) {
  Hypergraph h = hypergraph_from_json(j.at("structure"));
  if (j.contains("stages")) {
    std::vector<Eigen::MatrixXcd> stages;
    for (const auto& s : j["stages"]) stages.push_back(matrix_from_json(s));
    return build_hyperwalk_composed(h, std::move(stages));
  }
  std::vector<HyperwalkStage> schedule;
  if (j.contains("schedule")) {
    if (!j["schedule"].is_array() || j["schedule"].empty())
      fail("\"schedule\" must be a nonempty array");
    for (const auto& stage : j["schedule"])
      schedule.push_back(hyperwalk_stage_from_json(stage, h));
  } else {
    schedule.push_back(hyperwalk_stage_from_json(j, h));
  }
  return build_hyperwalk(h, std::move(schedule));
}

}  // namespace

WalkInstance walk_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
    fail("walk specs need a \"model\" field");
  switch (model_from_name(j["model"].get<std::string>())) {
    case WalkModel::CoinedLine: return parse_coined_line(j);
    case WalkModel::ScatteringCoined: return parse_scattering(j);
    case WalkModel::Szegedy: return parse_szegedy(j);
    case WalkModel::Staggered: return parse_staggered(j);
    case WalkModel::Hyperwalk: return parse_hyperwalk(j);
  }
  fail("unreachable");
}

WalkShape shape_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
    fail("walk specs need a \"model\" field");
  WalkShape s;
  s.model = model_from_name(j["model"].get<std::string>());
  switch (s.model) {
    case WalkModel::CoinedLine:
      s.positions = int_field(j, "positions");
      s.schedule_len = 1;
      break;
    case WalkModel::ScatteringCoined:
      s.graph = graph_from_json(j.at("structure"));
      if (j.contains("coin_schedule"))
        s.schedule_len = static_cast<int>(j["coin_schedule"].size());
      else if (j.contains("schedule"))
        s.schedule_len = static_cast<int>(j["schedule"].size());
      break;
    case WalkModel::Szegedy:
      s.graph = graph_from_json(j.at("structure"));
      s.schedule_len = 2;
      break;
    case WalkModel::Staggered:
      s.graph = graph_from_json(j.at("structure"));
      s.stage_tessellations = parse_tessellations(j, s.graph->vertex_count());
      s.schedule_len = static_cast<int>(s.stage_tessellations.size());
      break;
    case WalkModel::Hyperwalk:
      s.hypergraph = hypergraph_from_json(j.at("structure"));
      if (j.contains("stages")) {
        s.schedule_len = static_cast<int>(j["stages"].size());
        s.composed = true;
      } else if (j.contains("schedule")) {
        s.schedule_len = 2 * static_cast<int>(j["schedule"].size());
      } else {
        s.schedule_len = 2;
      }
      break;
  }
  return s;
}

Json walk_to_json(const WalkInstance& w) {
  Json out;
  out["model"] = std::string(model_name(w.model));
  switch (w.model) {
    case WalkModel::CoinedLine: {
      out["positions"] = std::get<LineDetail>(w.detail).positions;
      // The stage is S (C (x) I); recover the coin from the stored stage is
      // unnecessary -- line walks round-trip through coin_schedule instead.
      const auto& stage = w.stages[0].matrix();
      const int n = std::get<LineDetail>(w.detail).positions;
      Eigen::MatrixXcd coin(2, 2);
      // stage(s(c',0), c*n) = coin(c', c) where s applies the shift; read
      // the coin back off the first position column.
      coin(0, 0) = stage(n - 1, 0);
      coin(1, 0) = stage(n + 1, 0);
      coin(0, 1) = stage(n - 1, n);
      coin(1, 1) = stage(n + 1, n);
      out["coin"] = matrix_to_json(coin);
      break;
    }
    case WalkModel::ScatteringCoined: {
      out["structure"] = graph_to_json(*w.graph);
      const auto& d = std::get<CoinedDetail>(w.detail);
      Json coins = Json::array();
      for (const auto& c : d.coin_schedule) coins.push_back(matrix_to_json(c));
      out["coin_schedule"] = std::move(coins);
      break;
    }
    case WalkModel::Szegedy: {
      out["structure"] = graph_to_json(*w.graph);
      out["stages"] =
          Json::array({matrix_to_json(w.stages[0].matrix()),
                       matrix_to_json(w.stages[1].matrix())});
      break;
    }
    case WalkModel::Staggered: {
      out["structure"] = graph_to_json(*w.graph);
      const auto& d = std::get<StaggeredDetail>(w.detail);
      Json ts = Json::array();
      for (const auto& t : d.tessellations) ts.push_back(tessellation_to_json(t));
      out["tessellations"] = std::move(ts);
      Json stages = Json::array();
      for (const auto& s : w.stages) stages.push_back(matrix_to_json(s.matrix()));
      out["stages"] = std::move(stages);
      break;
    }
    case WalkModel::Hyperwalk: {
      out["structure"] = hypergraph_to_json(*w.hypergraph);
      Json stages = Json::array();
      for (const auto& s : w.stages) stages.push_back(matrix_to_json(s.matrix()));
      out["stages"] = std::move(stages);
      break;
    }
  }
  return out;
}

StateVector state_from_json(const Json& j, const WalkInstance& w) {
  if (j.is_array() || (j.is_object() && j.contains("amplitudes"))) {
    Eigen::VectorXcd amps = vector_from_json(j.is_array() ? j : j["amplitudes"]);
    if (amps.size() != w.basis->size())
      fail("amplitude vector length does not match the basis size");
    StateVector s{std::move(amps), w.basis};
    if (!is_normalized(s)) throw spec_error("initial state is not normalized");
    return s;
  }
  if (!j.is_object()) fail("expected an amplitude array or a basis label object");
  int a = 0, b = 0;
  switch (w.basis->kind()) {
    case BasisKind::CoinPosition:
      a = int_field(j, "coin");
      b = int_field(j, "position");
      break;
    case BasisKind::DirectedPair:
      a = int_field(j, "from");
      b = int_field(j, "to");
      break;
    case BasisKind::VertexEdge:
      a = int_field(j, "vertex");
      b = int_field(j, "edge");
      break;
    case BasisKind::Vertex:
      a = int_field(j, "vertex");
      b = 0;
      break;
  }
  const int idx = w.basis->find(a, b);
  if (idx < 0) {
    std::ostringstream os;
    os << "label (" << a << ", " << b << ") is not a basis state of this walk";
    fail(os.str());
  }
  return basis_state(w.basis, a, b);
}

Json measurement_to_json(const MeasurementMap& m) {
  return Json{{"vertex_count", m.vertex_count}, {"assignment", m.vertex_of}};
}

MeasurementMap measurement_from_json(const Json& j) {
  MeasurementMap m;
  m.vertex_count = int_field(j, "vertex_count");
  if (!j.contains("assignment") || !j["assignment"].is_array())
    fail("measurements need an \"assignment\" array");
  m.vertex_of = j["assignment"].get<std::vector<int>>();
  return m;
}

Json transform_result_to_json(const TransformResult& tr) {
  Json out;
  out["transform"] = tr.name;
  out["target"] = walk_to_json(tr.target);
  out["measurement"] = measurement_to_json(tr.target.measurement);
  out["state_map"] = tr.state_map.target_index;
  out["step_map"] = Json{{"a", tr.step_map.a},
                         {"b", tr.step_map.b},
                         {"source_stride", tr.step_map.source_stride}};
  out["sizes"] = Json{{"vertices", tr.sizes.vertex_count},
                      {"basis", tr.sizes.basis_size},
                      {"operators", tr.sizes.operator_count}};
  return out;
}

TransformResult transform_result_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target")) fail("expected a transform document");
  TransformResult tr;
  tr.name = j.value("transform", "unknown");
  tr.target = walk_from_json(j["target"]);
  if (j.contains("measurement")) {
    MeasurementMap m = measurement_from_json(j["measurement"]);
    if (static_cast<int>(m.vertex_of.size()) != tr.target.basis->size())
      fail("measurement assignment does not cover the target basis");
    tr.target.measurement = std::move(m);
  }
  if (!j.contains("state_map") || !j["state_map"].is_array())
    fail("transform documents need a \"state_map\" array");
  tr.state_map.target_index = j["state_map"].get<std::vector<int>>();
  for (int t : tr.state_map.target_index)
    if (t >= tr.target.basis->size()) fail("state map points outside the target basis");
  if (j.contains("step_map")) {
    const Json& sm = j["step_map"];
    tr.step_map.a = sm.value("a", 1LL);
    tr.step_map.b = sm.value("b", 0LL);
    tr.step_map.source_stride = sm.value("source_stride", 1);
    if (tr.step_map.a <= 0 || tr.step_map.source_stride <= 0 || tr.step_map.b < 0)
      fail("step map must be strictly increasing");
  }
  if (j.contains("sizes")) {
    tr.sizes.vertex_count = j["sizes"].value("vertices", 0);
    tr.sizes.basis_size = j["sizes"].value("basis", 0);
    tr.sizes.operator_count = j["sizes"].value("operators", 0);
  } else {
    tr.sizes = shape_sizes(shape_of(tr.target));
  }
  return tr;
}

Json equivalence_report_to_json(const EquivalenceReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.checked_steps) steps.push_back(Json::array({s[0], s[1]}));
  return Json{{"verdict", r.pass ? "pass" : "fail"},
              {"strong", r.strong},
              {"max_deviation", r.max_deviation},
              {"tolerance", r.tolerance},
              {"checked_steps", std::move(steps)},
              {"basis_sizes", Json{{"source", r.basis_sizes[0]},
                                   {"target", r.basis_sizes[1]}}},
              {"note", r.note}};
}

Json suite_report_to_json(const SuiteReport& r) {
  Json out{{"pair", r.pair_name},
           {"seed", r.seed},
           {"instances", r.total},
           {"passed", r.passed},
           {"worst_deviation", r.worst_deviation},
           {"verdict", r.pass() ? "pass" : "fail"}};
  return out;
}

std::string format_double(double x) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace hyperwalk
