#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace hyperwalk {

using Complex = std::complex<double>;

/// Max-entry tolerance used for unitarity certification and norm checks.
/// One global knob; defaults to 1e-10.
double unitary_tolerance();
void set_unitary_tolerance(double tol);

enum class BasisKind {
  CoinPosition,  // (coin, position) on a line
  DirectedPair,  // (i, j) with i ~ j on a graph
  VertexEdge,    // (v, e) with v in e on a hypergraph
  Vertex,        // (v, 0) plain vertex space
};

/// Ordered bijection between model-specific basis labels and dense indices.
/// The enumeration order is fixed by whichever constructor owns the basis.
class BasisMap {
 public:
  BasisMap(BasisKind kind, std::vector<std::array<int, 2>> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  BasisKind kind() const noexcept { return kind_; }
  const std::array<int, 2>& label(int index) const;
  const std::vector<std::array<int, 2>>& labels() const noexcept { return labels_; }

  /// Dense index of a label; throws spec_error if absent.
  int index_of(int a, int b) const;
  /// Dense index of a label, or -1 if absent.
  int find(int a, int b) const noexcept;

  bool operator==(const BasisMap& other) const;

 private:
  BasisKind kind_;
  std::vector<std::array<int, 2>> labels_;
  std::unordered_map<std::uint64_t, int> index_;
};

using BasisPtr = std::shared_ptr<const BasisMap>;

bool same_basis(const BasisPtr& a, const BasisPtr& b);

struct StateVector {
  Eigen::VectorXcd amplitudes;
  BasisPtr basis;
};

/// Unit vector on the given basis label.
StateVector basis_state(BasisPtr basis, int a, int b);
double norm_error(const StateVector& s);
bool is_normalized(const StateVector& s, double tol = unitary_tolerance());

/// ||U'U - I||_max for a square matrix; +inf when not square.
double unitarity_deviation(const Eigen::MatrixXcd& m);

/// Dense complex matrix certified unitary at construction, optionally with
/// block-diagonal structure metadata (index subsets; couplings between
/// distinct blocks must be exactly zero).
class UnitaryOperator {
 public:
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  const BasisPtr& basis() const noexcept { return basis_; }
  const std::optional<std::vector<std::vector<int>>>& block_structure() const noexcept {
    return blocks_;
  }

  friend UnitaryOperator certify_unitary(
      Eigen::MatrixXcd matrix, BasisPtr basis,
      std::optional<std::vector<std::vector<int>>> blocks);

 private:
  UnitaryOperator(Eigen::MatrixXcd m, BasisPtr b,
                  std::optional<std::vector<std::vector<int>>> blocks)
      : matrix_(std::move(m)), basis_(std::move(b)), blocks_(std::move(blocks)) {}

  Eigen::MatrixXcd matrix_;
  BasisPtr basis_;
  std::optional<std::vector<std::vector<int>>> blocks_;
};

/// Wraps the matrix iff it is unitary within unitary_tolerance(); throws
/// unitarity_error (with the measured deviation) or spec_error otherwise.
UnitaryOperator certify_unitary(
    Eigen::MatrixXcd matrix, BasisPtr basis,
    std::optional<std::vector<std::vector<int>>> blocks = std::nullopt);

/// Assignment basis index -> vertex, possibly partial (-1 = unassigned).
struct MeasurementMap {
  std::vector<int> vertex_of;
  int vertex_count = 0;

  bool total() const;
};

StateVector apply(const UnitaryOperator& u, const StateVector& s);

/// Vertex probability distribution: P(v) = sum of |amplitude|^2 over basis
/// states assigned to v. With strict=true an unnormalized state is rejected.
Eigen::VectorXd measure_vertices(const StateVector& s, const MeasurementMap& m,
                                 bool strict = false);

}  // namespace hyperwalk
