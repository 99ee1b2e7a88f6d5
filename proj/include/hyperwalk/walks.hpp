#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "hyperwalk/state.hpp"
#include "hyperwalk/structures.hpp"

namespace hyperwalk {

enum class WalkModel { CoinedLine, ScatteringCoined, Szegedy, Staggered, Hyperwalk };

std::string_view model_name(WalkModel m);
WalkModel model_from_name(std::string_view name);

/// Coined walk on a cycle of positions.
struct LineDetail {
  int positions = 0;
};

/// Coined walk on a graph: stage i applies shift * coin_schedule[i]. The
/// coin matrices are kept on the full pair basis so transformations can
/// take them apart again.
struct CoinedDetail {
  Eigen::MatrixXcd shift;
  std::vector<Eigen::MatrixXcd> coin_schedule;
};

struct SzegedyDetail {};

struct StaggeredDetail {
  std::vector<Tessellation> tessellations;  // one per stage
};

struct HyperwalkDetail {
  int schedule_pairs = 1;  // stages alternate U_V, U_E unless composed
  bool composed = false;   // one precomposed operator per stage
};

/// A compiled walk: basis, cyclic stage schedule, and the vertex
/// measurement its distributions refer to. Immutable once built.
struct WalkInstance {
  WalkModel model = WalkModel::ScatteringCoined;
  BasisPtr basis;
  std::vector<UnitaryOperator> stages;
  MeasurementMap measurement;
  std::optional<Graph> graph;
  std::optional<Hypergraph> hypergraph;
  std::variant<std::monostate, LineDetail, CoinedDetail, SzegedyDetail,
               StaggeredDetail, HyperwalkDetail>
      detail;

  int cycle_length() const { return static_cast<int>(stages.size()); }
  /// Vertex count of the walk's own structure (for the Szegedy model this
  /// counts both sides of the bipartite duplication).
  int vertex_count() const;
};

// -- operator presets ------------------------------------------------------

/// "identity", "hadamard" (dim 2), "dft", "grover". The Grover preset is
/// the reflection I - 2|u><u| about the uniform vector.
Eigen::MatrixXcd preset_unitary(std::string_view name, int dim);
Eigen::MatrixXcd grover_reflection(int dim);

// -- walk builders ---------------------------------------------------------

/// Walk on a cycle of N positions with a two-dimensional coin. One step is
/// S (C (x) I_N); coin state 0 moves -1, coin state 1 moves +1, mod N.
WalkInstance build_coined_line(const Eigen::MatrixXcd& coin, int positions);

/// Scattering-style coined walk on a graph. coin_schedule[k][v] is the
/// deg(v)-dimensional block acting on the states |i,v> arriving at v,
/// indexed by ascending neighbor i. Each step applies S * C_k cyclically.
WalkInstance build_scattering(
    const Graph& g, const std::vector<std::vector<Eigen::MatrixXcd>>& coin_schedule);
WalkInstance build_scattering(const Graph& g,
                              const std::vector<Eigen::MatrixXcd>& vertex_coins);

/// Convenience form taking per-vertex reflection/transmission pairs. The
/// induced block (r-t) I + t J must be unitary as a whole, which is checked;
/// the norm condition |r|^2 + (deg-1)|t|^2 = 1 alone is not sufficient.
WalkInstance build_scattering_rt(const Graph& g,
                                 const std::vector<std::pair<Complex, Complex>>& rt);

/// Coined walk on a graph from full-basis coin matrices, one per schedule
/// slot. Used for generalized (time-varying) coined walks.
WalkInstance build_generalized_coined(const Graph& g,
                                      std::vector<Eigen::MatrixXcd> full_coins);

/// Szegedy walk from amplitudes: amplitudes[v] lists a_{v,w} over the
/// ascending neighbors w of v and must be a unit vector. Stages are the two
/// reflections, applied alternately starting with the first.
WalkInstance build_szegedy(const Graph& g,
                           const std::vector<Eigen::VectorXcd>& amplitudes);

/// Szegedy walk with explicit stage unitaries on the pair basis.
WalkInstance build_szegedy_stages(const Graph& g, Eigen::MatrixXcd u1,
                                  Eigen::MatrixXcd u2);

/// Staggered walk from per-polygon amplitude vectors: amplitudes[k][i] lists
/// a_{k,j} over the ascending vertices of polygon i of tessellation k.
/// Stage k is the reflection 2 sum_i |d_{k,i}><d_{k,i}| - I.
WalkInstance build_staggered(
    const Graph& g, const std::vector<Tessellation>& tessellations,
    const std::vector<std::vector<Eigen::VectorXcd>>& amplitudes);

/// Staggered walk with an arbitrary unitary block per polygon.
WalkInstance build_staggered_blocks(
    const Graph& g, const std::vector<Tessellation>& tessellations,
    const std::vector<std::vector<Eigen::MatrixXcd>>& blocks);

/// Staggered walk with explicit full stage matrices; each stage must be
/// block-diagonal over its tessellation's polygons.
WalkInstance build_staggered_explicit(const Graph& g,
                                      const std::vector<Tessellation>& tessellations,
                                      const std::vector<Eigen::MatrixXcd>& stages);

struct HyperwalkStage {
  std::vector<Eigen::MatrixXcd> coins;   // one per vertex, dim deg(v)
  std::vector<Eigen::MatrixXcd> shifts;  // one per edge, dim |e|
};

/// Hyperwalk on the incidence basis {|v,e> : v in e}. Every schedule entry
/// contributes two stages, U_V = sum_v C_v then U_E = sum_e S_e; one walk
/// step is the pair U_E U_V.
WalkInstance build_hyperwalk(const Hypergraph& h,
                             std::vector<HyperwalkStage> schedule);
WalkInstance build_hyperwalk(const Hypergraph& h, std::vector<Eigen::MatrixXcd> coins,
                             std::vector<Eigen::MatrixXcd> shifts);

/// Hyperwalk whose stages are already composed, one operator per stage.
WalkInstance build_hyperwalk_composed(const Hypergraph& h,
                                      std::vector<Eigen::MatrixXcd> stages);

/// Grover coins and shifts for a hypergraph (the reflection preset at every
/// vertex and edge).
HyperwalkStage grover_hyperwalk_stage(const Hypergraph& h);

/// Cyclic permutation shifts for ordered hyperedges: |v_i,e> -> |v_{i+1},e>
/// with wraparound, expressed in each edge's ascending-vertex block basis.
/// Two-element edges yield the canonical swap.
std::vector<Eigen::MatrixXcd> build_directed_shift(const Hypergraph& h);

std::vector<Eigen::VectorXcd> uniform_szegedy_amplitudes(const Graph& g);
std::vector<std::vector<Eigen::VectorXcd>> uniform_staggered_amplitudes(
    const std::vector<Tessellation>& tessellations);

// -- evolution -------------------------------------------------------------

struct Trajectory {
  std::vector<StateVector> states;  // psi_0 .. psi_n
  int cycle_length = 1;

  int steps() const { return static_cast<int>(states.size()) - 1; }
  bool cycle_boundary(int step) const { return step % cycle_length == 0; }
  std::vector<int> cycle_boundaries() const;
};

/// Applies the cyclic stage schedule: one step = one stage application.
/// psi0 must be normalized on the walk's basis.
Trajectory run(const WalkInstance& w, const StateVector& psi0, int steps);

}  // namespace hyperwalk
