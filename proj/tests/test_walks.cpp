#include <doctest.h>

#include <cmath>

#include "hyperwalk/errors.hpp"
#include "hyperwalk/random.hpp"
#include "hyperwalk/walks.hpp"

using namespace hyperwalk;

namespace {

// Brute-force line-walk step built independently of the builder: the full
// matrix S (C (x) I_N) assembled by explicit loops, coin-major indexing.
Eigen::MatrixXcd line_step_oracle(const Eigen::Matrix2cd& coin, int n) {
  Eigen::MatrixXcd cfull = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int c = 0; c < 2; ++c)
    for (int cc = 0; cc < 2; ++cc)
      for (int p = 0; p < n; ++p) cfull(cc * n + p, c * n + p) = coin(cc, c);
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int p = 0; p < n; ++p) {
    shift((p + n - 1) % n, p) = 1.0;
    shift(n + (p + 1) % n, n + p) = 1.0;
  }
  return shift * cfull;
}

Eigen::VectorXd positions_of(const WalkInstance& w, const StateVector& s) {
  return measure_vertices(s, w.measurement);
}

}  // namespace

TEST_CASE("identity-coin line walk drifts deterministically left") {
  auto w = build_coined_line(Eigen::MatrixXcd::Identity(2, 2), 8);
  auto traj = run(w, basis_state(w.basis, 0, 5), 3);
  const auto p = positions_of(w, traj.states[3]);
  CHECK(p(2) == doctest::Approx(1.0));
  CHECK(p.sum() == doctest::Approx(1.0));
}

TEST_CASE("line boundaries are cyclic") {
  auto w = build_coined_line(Eigen::MatrixXcd::Identity(2, 2), 6);
  auto traj = run(w, basis_state(w.basis, 0, 0), 1);
  CHECK(positions_of(w, traj.states[1])(5) == doctest::Approx(1.0));
  auto up = run(w, basis_state(w.basis, 1, 5), 1);
  CHECK(positions_of(w, up.states[1])(0) == doctest::Approx(1.0));
}

TEST_CASE("hadamard line walk splits evenly after one step") {
  auto w = build_coined_line(preset_unitary("hadamard", 2), 16);
  auto traj = run(w, basis_state(w.basis, 0, 7), 1);
  const auto p = positions_of(w, traj.states[1]);
  CHECK(p(6) == doctest::Approx(0.5));
  CHECK(p(8) == doctest::Approx(0.5));
}

TEST_CASE("two hadamard steps match the brute-force product") {
  const int n = 16;
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  auto w = build_coined_line(h, n);
  auto traj = run(w, basis_state(w.basis, 0, 7), 2);

  const Eigen::MatrixXcd step = line_step_oracle(h, n);
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(2 * n);
  expected(7) = 1.0;  // coin 0, position 7
  expected = step * (step * expected);
  CHECK((traj.states[2].amplitudes - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("non-unitary line coins are rejected") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = 1.0;
  bad(1, 1) = 0.5;
  CHECK_THROWS_AS(build_coined_line(bad, 8), unitarity_error);
  CHECK_THROWS_AS(build_coined_line(Eigen::MatrixXcd::Identity(2, 2), 1), spec_error);
}

TEST_CASE("full reflection makes the scattering walk act as sigma_x per edge") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  std::vector<std::pair<Complex, Complex>> rt(4, {Complex(1.0, 0.0), Complex(0.0, 0.0)});
  auto w = build_scattering_rt(g, rt);
  const Eigen::MatrixXcd& u = w.stages[0].matrix();
  for (const auto& e : g.edges()) {
    const int ij = w.basis->index_of(e[0], e[1]);
    const int ji = w.basis->index_of(e[1], e[0]);
    CHECK(u(ji, ij) == Complex(1.0, 0.0));
    CHECK(u(ij, ji) == Complex(1.0, 0.0));
    CHECK(u(ij, ij) == Complex(0.0, 0.0));
  }
  // sigma_x squared is the identity on every edge subspace
  CHECK((u * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("Grover scattering values give the diffusion block at degree three") {
  // Star with center 0: deg(0) = 3, leaves have degree 1.
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<std::pair<Complex, Complex>> rt(4);
  for (int v = 0; v < 4; ++v) {
    const double d = star.degree(v);
    rt[v] = {Complex(2.0 / d - 1.0, 0.0), Complex(2.0 / d, 0.0)};
  }
  auto w = build_scattering_rt(star, rt);

  // Extract the arrival block at the center from the composed stage by
  // undoing the shift: C = S * stage.
  const Eigen::MatrixXcd& stage = w.stages[0].matrix();
  Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(stage.rows(), stage.cols());
  for (int idx = 0; idx < w.basis->size(); ++idx) {
    const auto& l = w.basis->label(idx);
    shift(w.basis->index_of(l[1], l[0]), idx) = 1.0;
  }
  const Eigen::MatrixXcd coin = shift * stage;

  Eigen::MatrixXcd oracle =
      2.0 * Eigen::MatrixXcd::Constant(3, 3, Complex(1.0 / 3.0, 0.0)) -
      Eigen::MatrixXcd::Identity(3, 3);
  const std::vector<int> arrivals = {w.basis->index_of(1, 0),
                                     w.basis->index_of(2, 0),
                                     w.basis->index_of(3, 0)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(std::abs(coin(arrivals[a], arrivals[b]) - oracle(a, b)) < 1e-15);
}

TEST_CASE("a regular graph with one repeated coin is a block sum of it") {
  Graph ring = Graph::cycle(5);
  Rng rng(9);
  const Eigen::MatrixXcd c0 = random_unitary(2, rng);
  auto w = build_scattering(ring, std::vector<Eigen::MatrixXcd>(5, c0));
  const auto* d = std::get_if<CoinedDetail>(&w.detail);
  REQUIRE(d != nullptr);
  for (int v = 0; v < 5; ++v) {
    const auto& nb = ring.neighbors(v);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK(d->coin_schedule[0](w.basis->index_of(nb[a], v),
                                  w.basis->index_of(nb[b], v)) == c0(a, b));
  }
}

TEST_CASE("bad scattering inputs are rejected") {
  Graph g = Graph::path(3);
  std::vector<std::pair<Complex, Complex>> rt(3, {Complex(0.9, 0.0), Complex(0.1, 0.0)});
  CHECK_THROWS_AS(build_scattering_rt(g, rt), unitarity_error);

  std::vector<Eigen::MatrixXcd> coins(3, Eigen::MatrixXcd::Identity(2, 2));
  // vertex 0 has degree 1, so a 2x2 coin is a dimension mismatch
  CHECK_THROWS_AS(build_scattering(g, coins), spec_error);
}

TEST_CASE("szegedy reflections fix their defining vectors") {
  Graph square = Graph::cycle(4);
  auto w = build_szegedy(square, uniform_szegedy_amplitudes(square));
  const Eigen::MatrixXcd& u1 = w.stages[0].matrix();
  const int n = w.basis->size();

  for (int v = 0; v < 4; ++v) {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
    for (int nb : square.neighbors(v))
      d(w.basis->index_of(v, nb)) = Complex(1.0 / std::sqrt(2.0), 0.0);
    CHECK((u1 * d - d).cwiseAbs().maxCoeff() < 1e-14);
  }

  // Anything orthogonal to every |d_v> is negated: within one vertex group
  // the antisymmetric combination is orthogonal to the uniform one.
  Eigen::VectorXcd anti = Eigen::VectorXcd::Zero(n);
  const auto& nb = square.neighbors(0);
  anti(w.basis->index_of(0, nb[0])) = Complex(1.0 / std::sqrt(2.0), 0.0);
  anti(w.basis->index_of(0, nb[1])) = Complex(-1.0 / std::sqrt(2.0), 0.0);
  CHECK((u1 * anti + anti).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("szegedy stages match an independently assembled oracle") {
  Graph square = Graph::cycle(4);
  auto w = build_szegedy(square, uniform_szegedy_amplitudes(square));
  const int n = w.basis->size();

  Eigen::MatrixXcd u1 = -Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd u2 = -Eigen::MatrixXcd::Identity(n, n);
  for (int v = 0; v < 4; ++v) {
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd dbar = Eigen::VectorXcd::Zero(n);
    for (int nb : square.neighbors(v)) {
      d(w.basis->index_of(v, nb)) = Complex(1.0 / std::sqrt(2.0), 0.0);
      dbar(w.basis->index_of(nb, v)) = Complex(1.0 / std::sqrt(2.0), 0.0);
    }
    u1 += 2.0 * d * d.adjoint();
    u2 += 2.0 * dbar * dbar.adjoint();
  }
  CHECK((w.stages[0].matrix() - u1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((w.stages[1].matrix() - u2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(unitarity_deviation(u1) < 1e-10);
  CHECK(unitarity_deviation(u2) < 1e-10);

  // Distributions agree with stepping the oracle matrices by hand.
  Rng rng(3);
  StateVector psi{random_state(n, rng), w.basis};
  auto traj = run(w, psi, 3);
  Eigen::VectorXcd expected = u1 * (u2 * (u1 * psi.amplitudes));
  CHECK((traj.states[3].amplitudes - expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("szegedy amplitude errors are rejected") {
  Graph square = Graph::cycle(4);
  auto amps = uniform_szegedy_amplitudes(square);
  amps[2] *= 2.0;
  CHECK_THROWS_AS(build_szegedy(square, amps), spec_error);
  amps = uniform_szegedy_amplitudes(square);
  amps[1] = Eigen::VectorXcd::Constant(3, Complex(1.0 / std::sqrt(3.0), 0.0));
  CHECK_THROWS_AS(build_szegedy(square, amps), spec_error);
}

TEST_CASE("staggered walk with singleton polygons is the identity") {
  Graph g = Graph::path(3);
  Tessellation singles{{{0}, {1}, {2}}, 3};
  auto w = build_staggered(g, {singles},
                           uniform_staggered_amplitudes({singles}));
  CHECK((w.stages[0].matrix() - Eigen::MatrixXcd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("a uniform two-vertex polygon reflects as a swap block") {
  Graph g = Graph::path(3);
  Tessellation t{{{0, 1}, {2}}, 3};
  auto w = build_staggered(g, {t}, uniform_staggered_amplitudes({t}));
  const Eigen::MatrixXcd& u = w.stages[0].matrix();
  CHECK(std::abs(u(0, 0)) < 1e-15);
  CHECK(std::abs(u(0, 1) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(u(1, 0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(u(1, 1)) < 1e-15);
  CHECK(u(2, 2) == Complex(1.0, 0.0));
}

TEST_CASE("staggered construction rejects invalid input") {
  Graph path = Graph::path(3);
  Tessellation bad{{{0, 2}, {1}}, 3};
  CHECK_THROWS_AS(
      build_staggered(path, {bad}, uniform_staggered_amplitudes({bad})),
      spec_error);

  Tessellation ok{{{0, 1}, {2}}, 3};
  auto amps = uniform_staggered_amplitudes({ok});
  amps[0][0] *= 0.5;
  CHECK_THROWS_AS(build_staggered(path, {ok}, amps), spec_error);
}

TEST_CASE("random staggered stages are certified and block-diagonal") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 8, 10);
    auto w = random_staggered_instance(rng, g, 2);
    for (const auto& stage : w.stages) {
      CHECK(unitarity_deviation(stage.matrix()) <= 1e-10);
      CHECK(stage.block_structure().has_value());
    }
  }
}

TEST_CASE("hyperwalk grover preset blocks follow the reflection formula") {
  Hypergraph fig3(4, {{0, 1, 2}, {0, 1}, {2, 3}});
  auto stage = grover_hyperwalk_stage(fig3);
  auto w = build_hyperwalk(fig3, {stage});
  REQUIRE(w.stages.size() == 2);
  const Eigen::MatrixXcd& uv = w.stages[0].matrix();
  const Eigen::MatrixXcd& ue = w.stages[1].matrix();

  // Vertex A sits in edges a and b: its coin is the 2x2 reflection.
  const int a0 = w.basis->index_of(0, 0);
  const int a1 = w.basis->index_of(0, 1);
  CHECK(uv(a0, a0) == Complex(0.0, 0.0));
  CHECK(uv(a0, a1) == Complex(-1.0, 0.0));
  // Edge a holds three vertices: diagonal 1 - 2/3.
  const int p0 = w.basis->index_of(0, 0);
  CHECK(std::abs(ue(p0, p0) - Complex(1.0 / 3.0, 0.0)) < 1e-15);

  // Inter-block couplings vanish exactly.
  for (int p = 0; p < w.basis->size(); ++p)
    for (int q = 0; q < w.basis->size(); ++q) {
      if (w.basis->label(p)[0] != w.basis->label(q)[0])
        CHECK(uv(q, p) == Complex(0.0, 0.0));
      if (w.basis->label(p)[1] != w.basis->label(q)[1])
        CHECK(ue(q, p) == Complex(0.0, 0.0));
    }
}

TEST_CASE("2-regular grover shifts produce the negated swap") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = random_graph(rng, 6, 6);
    Hypergraph h = Hypergraph::from_graph(g);
    auto w = build_hyperwalk(h, {grover_hyperwalk_stage(h)});
    CHECK(w.basis->size() == 2 * h.edge_count());
    const Eigen::MatrixXcd& ue = w.stages[1].matrix();
    for (int e = 0; e < h.edge_count(); ++e) {
      const auto& verts = h.edge(e);
      const int i = w.basis->index_of(verts[0], e);
      const int j = w.basis->index_of(verts[1], e);
      CHECK(ue(i, i) == Complex(0.0, 0.0));
      CHECK(ue(i, j) == Complex(-1.0, 0.0));
      CHECK(ue(j, i) == Complex(-1.0, 0.0));
      CHECK(ue(j, j) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("one all-vertex hyperedge with trivial coins applies the shift alone") {
  Rng rng(19);
  const int n = 5;
  std::vector<int> all = {0, 1, 2, 3, 4};
  Hypergraph h(n, {all});
  const Eigen::MatrixXcd u = random_unitary(n, rng);
  std::vector<Eigen::MatrixXcd> coins(n, Eigen::MatrixXcd::Identity(1, 1));
  auto w = build_hyperwalk(h, coins, {u});
  const Eigen::MatrixXcd step = w.stages[1].matrix() * w.stages[0].matrix();
  CHECK((step - u).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("hyperwalk dimension mismatches are rejected") {
  Hypergraph h(3, {{0, 1, 2}});
  std::vector<Eigen::MatrixXcd> coins(3, Eigen::MatrixXcd::Identity(1, 1));
  CHECK_THROWS_AS(
      build_hyperwalk(h, coins, {Eigen::MatrixXcd::Identity(2, 2)}),
      spec_error);
}

TEST_CASE("directed shifts cycle their edges") {
  SUBCASE("two-element edges give the canonical swap") {
    Hypergraph h(2, {{0, 1}}, true);
    const auto shifts = build_directed_shift(h);
    Eigen::MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK((shifts[0] - swap).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("three-element edges rotate") {
    Hypergraph h(3, {{0, 1, 2}}, true);
    const auto shifts = build_directed_shift(h);
    // |0,e> -> |1,e> -> |2,e> -> |0,e>
    CHECK(shifts[0](1, 0) == Complex(1.0, 0.0));
    CHECK(shifts[0](2, 1) == Complex(1.0, 0.0));
    CHECK(shifts[0](0, 2) == Complex(1.0, 0.0));
  }
  SUBCASE("the edge order defines the cycle regardless of vertex order") {
    Hypergraph h(4, {{2, 0, 3}}, true);
    const auto shifts = build_directed_shift(h);
    // Block basis ascending: 0, 2, 3. Sequence 2 -> 0 -> 3 -> 2.
    CHECK(shifts[0](0, 1) == Complex(1.0, 0.0));
    CHECK(shifts[0](2, 0) == Complex(1.0, 0.0));
    CHECK(shifts[0](1, 2) == Complex(1.0, 0.0));
  }
  SUBCASE("l_e applications are the identity") {
    for (int l = 2; l <= 6; ++l) {
      std::vector<int> seq(l);
      for (int i = 0; i < l; ++i) seq[i] = i;
      Hypergraph h(l, {seq}, true);
      const auto shifts = build_directed_shift(h);
      Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(l, l);
      for (int i = 0; i < l; ++i) power = shifts[0] * power;
      CHECK((power - Eigen::MatrixXcd::Identity(l, l)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("undirected hypergraphs have no directed shift") {
    Hypergraph h(2, {{0, 1}});
    CHECK_THROWS_AS(build_directed_shift(h), spec_error);
  }
}

TEST_CASE("run returns the full trajectory and honors the schedule") {
  Graph square = Graph::cycle(4);
  auto w = build_szegedy(square, uniform_szegedy_amplitudes(square));
  Rng rng(23);
  StateVector psi{random_state(w.basis->size(), rng), w.basis};

  SUBCASE("zero steps") {
    auto traj = run(w, psi, 0);
    CHECK(traj.states.size() == 1);
    CHECK(traj.cycle_boundaries() == std::vector<int>{0});
  }
  SUBCASE("stage alternation") {
    auto traj = run(w, psi, 3);
    const Eigen::VectorXcd expected =
        w.stages[0].matrix() *
        (w.stages[1].matrix() * (w.stages[0].matrix() * psi.amplitudes));
    CHECK((traj.states[3].amplitudes - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(traj.cycle_boundaries() == std::vector<int>{0, 2});
  }
  SUBCASE("basis mismatch is rejected") {
    auto other = build_coined_line(Eigen::MatrixXcd::Identity(2, 2), 4);
    CHECK_THROWS_AS(run(other, psi, 1), spec_error);
  }
}

TEST_CASE("single-stage runs match the dense matrix power") {
  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = random_graph(rng, 6, 8);
    auto w = random_scattering_instance(rng, g);
    StateVector psi{random_state(w.basis->size(), rng), w.basis};
    const int steps = 12;
    auto traj = run(w, psi, steps);
    Eigen::MatrixXcd power =
        Eigen::MatrixXcd::Identity(w.basis->size(), w.basis->size());
    for (int k = 0; k < steps; ++k) power = w.stages[0].matrix() * power;
    CHECK((traj.states[steps].amplitudes - power * psi.amplitudes)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("norm drift stays below n times 1e-12 for a thousand steps") {
  Rng rng(37);
  Graph g = random_graph(rng, 6, 8);
  auto w = random_scattering_instance(rng, g);
  StateVector psi{random_state(w.basis->size(), rng), w.basis};
  auto traj = run(w, psi, 1000);
  for (int n = 0; n <= 1000; n += 100)
    CHECK(std::abs(traj.states[n].amplitudes.norm() - 1.0) <= n * 1e-12 + 1e-15);
}

TEST_CASE("every builder certifies every stage") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = random_graph(rng, 7, 8);
    Hypergraph h = random_hypergraph(rng, 6, 4);
    const WalkInstance instances[] = {
        random_coined_line_instance(rng, 9),
        random_scattering_instance(rng, g),
        random_szegedy_instance(rng, g),
        random_staggered_instance(rng, g, 2),
        random_hyperwalk_instance(rng, h, 2),
    };
    for (const auto& w : instances)
      for (const auto& stage : w.stages)
        CHECK(unitarity_deviation(stage.matrix()) <= 1e-10);
  }
}

TEST_CASE("operator presets") {
  CHECK(unitarity_deviation(preset_unitary("dft", 5)) < 1e-10);
  CHECK(unitarity_deviation(preset_unitary("grover", 7)) < 1e-10);
  CHECK((preset_unitary("identity", 3) - Eigen::MatrixXcd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK_THROWS_AS(preset_unitary("hadamard", 3), spec_error);
  CHECK_THROWS_AS(preset_unitary("nonsense", 2), parse_error);
}
