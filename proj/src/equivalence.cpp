#include "hyperwalk/equivalence.hpp"

#include <algorithm>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

EquivalenceReport run_check(const WalkInstance& source, const StateVector& psi,
                            const TransformResult& tr, int n_max, double tol,
                            bool require_strong) {
  if (n_max < 0) throw spec_error("comparison horizon must be nonnegative");
  if (!(tol > 0)) throw spec_error("tolerance must be positive");
  if (!same_basis(source.basis, psi.basis))
    throw spec_error("initial state does not live on the source basis");
  if (source.measurement.vertex_count != tr.target.measurement.vertex_count)
    throw spec_error("source and target measurements disagree on the vertex set");

  EquivalenceReport rep;
  rep.tolerance = tol;
  rep.basis_sizes = {source.basis->size(), tr.target.basis->size()};
  rep.strong = rep.basis_sizes[1] <= rep.basis_sizes[0] && tr.step_map.identity();

  StateVector target_psi = map_state(tr.state_map, psi, tr.target.basis);

  const long long src_steps = tr.step_map.source_steps(n_max);
  const long long tgt_steps = tr.step_map.target_steps(n_max);
  Trajectory src_traj = run(source, psi, static_cast<int>(src_steps));
  Trajectory tgt_traj = run(tr.target, target_psi, static_cast<int>(tgt_steps));

  for (int n = 0; n <= n_max; ++n) {
    const long long ns = tr.step_map.source_steps(n);
    const long long nt = tr.step_map.target_steps(n);
    const Eigen::VectorXd ps =
        measure_vertices(src_traj.states[ns], source.measurement);
    const Eigen::VectorXd pt =
        measure_vertices(tgt_traj.states[nt], tr.target.measurement);
    rep.max_deviation =
        std::max(rep.max_deviation, (ps - pt).cwiseAbs().maxCoeff());
    rep.checked_steps.push_back({ns, nt});
  }

  rep.pass = rep.max_deviation <= tol;
  if (require_strong && !rep.strong) {
    rep.pass = false;
    rep.note = "strong condition failed: target basis grew or step map is not identity";
  }
  return rep;
}

}  // namespace

EquivalenceReport check_instance(const WalkInstance& source, const StateVector& psi,
                                 const TransformResult& tr, int n_max, double tol) {
  return run_check(source, psi, tr, n_max, tol, false);
}

EquivalenceReport check_strong_instance(const WalkInstance& source,
                                        const StateVector& psi,
                                        const TransformResult& tr, int n_max,
                                        double tol) {
  return run_check(source, psi, tr, n_max, tol, true);
}

namespace {

struct SuiteCase {
  WalkInstance source;
  TransformResult result;
  bool strong = false;
};

SuiteCase make_case(std::string_view pair, Rng& rng, const SizeBounds& bounds) {
  SuiteCase c;
  if (pair == "coined-from-hyperwalk") {
    Hypergraph h = random_hypergraph(rng, bounds.max_vertices, bounds.max_edges);
    c.source = random_hyperwalk_instance(rng, h, 1);
    c.result = coined_from_hyperwalk(c.source);
  } else if (pair == "staggered-from-generalized-hyperwalk") {
    Hypergraph h = random_hypergraph(rng, bounds.max_vertices, bounds.max_edges);
    const int k = 1 + static_cast<int>(rng() % 3);
    c.source = random_hyperwalk_instance(rng, h, k);
    c.result = staggered_from_generalized_hyperwalk(c.source);
  } else if (pair == "generalized-coined-from-staggered") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    const int k = 1 + static_cast<int>(rng() % bounds.max_tessellations);
    c.source = random_staggered_instance(rng, g, k);
    c.result = generalized_coined_from_staggered(c.source);
  } else if (pair == "coined-from-generalized-coined") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    const int k = 1 + static_cast<int>(rng() % bounds.max_coins);
    c.source = random_generalized_coined_instance(rng, g, k);
    c.result = coined_from_generalized_coined(c.source);
  } else if (pair == "generalized-hyperwalk-from-staggered") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    const int k = 1 + static_cast<int>(rng() % bounds.max_tessellations);
    c.source = random_staggered_instance(rng, g, k);
    c.result = generalized_hyperwalk_from_staggered(c.source);
    c.strong = true;
  } else if (pair == "szegedy-from-coined") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    c.source = random_scattering_instance(rng, g);
    c.result = szegedy_from_coined(c.source);
  } else if (pair == "coined-from-szegedy") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    c.source = random_szegedy_instance(rng, g);
    c.result = coined_from_szegedy(c.source);
  } else if (pair == "szegedy-coined-roundtrip") {
    Graph g = random_graph(rng, bounds.max_vertices, bounds.max_edges);
    c.source = random_scattering_instance(rng, g);
    TransformResult mid = szegedy_from_coined(c.source);
    TransformResult back = coined_from_szegedy(mid.target);
    // Compose the two label bijections into one transform record.
    c.result.name = "szegedy-coined-roundtrip";
    c.result.target = std::move(back.target);
    c.result.state_map.target_index.resize(c.source.basis->size());
    for (int i = 0; i < c.source.basis->size(); ++i)
      c.result.state_map.target_index[i] =
          back.state_map.target_index[mid.state_map.target_index[i]];
    c.result.step_map = {1, 0, 1};
    c.result.sizes = back.sizes;
  } else {
    throw spec_error("unknown model pair: " + std::string(pair));
  }
  return c;
}

}  // namespace

SuiteReport randomized_suite(std::string_view model_pair, int instance_count,
                             const SizeBounds& bounds, std::uint64_t seed, int n_max,
                             double tol) {
  if (instance_count < 0) throw spec_error("instance count must be nonnegative");
  if (bounds.max_vertices < 1 || bounds.max_edges < 1 ||
      bounds.max_tessellations < 1 || bounds.max_coins < 1)
    throw spec_error("unsatisfiable size bounds");

  SuiteReport suite;
  suite.pair_name = std::string(model_pair);
  suite.seed = seed;
  suite.total = instance_count;

  Rng master(seed);
  for (int i = 0; i < instance_count; ++i) {
    Rng rng(master());
    SuiteCase c = make_case(model_pair, rng, bounds);
    StateVector psi{random_state(c.source.basis->size(), rng), c.source.basis};
    EquivalenceReport rep =
        c.strong ? check_strong_instance(c.source, psi, c.result, n_max, tol)
                 : check_instance(c.source, psi, c.result, n_max, tol);
    suite.worst_deviation = std::max(suite.worst_deviation, rep.max_deviation);
    if (rep.pass) ++suite.passed;
    suite.reports.push_back(std::move(rep));
  }
  return suite;
}

}  // namespace hyperwalk
