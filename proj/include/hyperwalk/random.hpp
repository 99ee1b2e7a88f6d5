#pragma once

#include <random>

#include "hyperwalk/walks.hpp"

namespace hyperwalk {

using Rng = std::mt19937_64;

/// Haar-like random unitary: orthonormalized complex Gaussian matrix with
/// the QR phase ambiguity fixed.
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);

/// Normalized complex Gaussian vector.
Eigen::VectorXcd random_state(int dim, Rng& rng);

/// Random (r, t) pair whose induced scattering block is unitary for the
/// given degree.
std::pair<Complex, Complex> random_rt(int degree, Rng& rng);

/// Random graph with at least one edge; no self-loops, no duplicates.
Graph random_graph(Rng& rng, int max_vertices, int max_edges);

/// Random hypergraph with at least one edge; duplicate edge sets allowed.
Hypergraph random_hypergraph(Rng& rng, int max_vertices, int max_edges);

/// Random clique-or-singleton partitions of g's vertex set.
std::vector<Tessellation> random_tessellations(Rng& rng, const Graph& g, int count);

WalkInstance random_coined_line_instance(Rng& rng, int max_positions);
WalkInstance random_scattering_instance(Rng& rng, const Graph& g);
/// Time-varying coined walk with k vertex-preserving Haar coin blocks.
WalkInstance random_generalized_coined_instance(Rng& rng, const Graph& g, int coins);
WalkInstance random_szegedy_instance(Rng& rng, const Graph& g);
WalkInstance random_staggered_instance(Rng& rng, const Graph& g, int tessellations);
WalkInstance random_hyperwalk_instance(Rng& rng, const Hypergraph& h, int schedule_len);

}  // namespace hyperwalk
