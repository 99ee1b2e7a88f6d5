#include "hyperwalk/state.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

std::atomic<double>& tolerance_slot() {
  static std::atomic<double> tol{1e-10};
  return tol;
}

std::uint64_t label_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

double unitary_tolerance() { return tolerance_slot().load(); }

void set_unitary_tolerance(double tol) {
  if (!(tol > 0)) throw spec_error("tolerance must be positive");
  tolerance_slot().store(tol);
}

BasisMap::BasisMap(BasisKind kind, std::vector<std::array<int, 2>> labels)
    : kind_(kind), labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < size(); ++i) {
    const auto& l = labels_[i];
    if (l[0] < 0 || l[1] < 0) throw spec_error("basis labels must be nonnegative");
    if (!index_.emplace(label_key(l[0], l[1]), i).second)
      throw spec_error("basis labels must be distinct");
  }
}

const std::array<int, 2>& BasisMap::label(int index) const {
  if (index < 0 || index >= size()) throw spec_error("basis index out of range");
  return labels_[index];
}

int BasisMap::index_of(int a, int b) const {
  const int i = find(a, b);
  if (i < 0) {
    std::ostringstream os;
    os << "label (" << a << ", " << b << ") is not in the basis";
    throw spec_error(os.str());
  }
  return i;
}

int BasisMap::find(int a, int b) const noexcept {
  if (a < 0 || b < 0) return -1;
  auto it = index_.find(label_key(a, b));
  return it == index_.end() ? -1 : it->second;
}

bool BasisMap::operator==(const BasisMap& other) const {
  return kind_ == other.kind_ && labels_ == other.labels_;
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

StateVector basis_state(BasisPtr basis, int a, int b) {
  if (!basis) throw spec_error("null basis");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(basis->size());
  amps(basis->index_of(a, b)) = 1.0;
  return {std::move(amps), std::move(basis)};
}

double norm_error(const StateVector& s) { return std::abs(s.amplitudes.norm() - 1.0); }

bool is_normalized(const StateVector& s, double tol) { return norm_error(s) <= tol; }

double unitarity_deviation(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.rows() == 0) return 0.0;
  Eigen::MatrixXcd gram = m.adjoint() * m;
  gram -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return gram.cwiseAbs().maxCoeff();
}

UnitaryOperator certify_unitary(Eigen::MatrixXcd matrix, BasisPtr basis,
                                std::optional<std::vector<std::vector<int>>> blocks) {
  if (!basis) throw spec_error("null basis");
  if (matrix.rows() != matrix.cols()) throw spec_error("operator matrix must be square");
  if (matrix.rows() != basis->size())
    throw spec_error("operator dimension does not match the basis");

  const double dev = unitarity_deviation(matrix);
  if (!(dev <= unitary_tolerance())) {
    std::ostringstream os;
    os << "matrix is not unitary: max |U'U - I| = " << dev;
    throw unitarity_error(os.str(), dev);
  }

  if (blocks) {
    std::vector<int> block_of(basis->size(), -1);
    for (int b = 0; b < static_cast<int>(blocks->size()); ++b) {
      for (int i : (*blocks)[b]) {
        if (i < 0 || i >= basis->size()) throw spec_error("block index out of range");
        if (block_of[i] >= 0) throw spec_error("blocks must be disjoint");
        block_of[i] = b;
      }
    }
    for (int c = 0; c < matrix.cols(); ++c) {
      for (int r = 0; r < matrix.rows(); ++r) {
        if (block_of[r] >= 0 && block_of[c] >= 0 && block_of[r] != block_of[c] &&
            matrix(r, c) != Complex{0.0, 0.0}) {
          std::ostringstream os;
          os << "entry (" << r << ", " << c << ") couples distinct blocks";
          throw spec_error(os.str());
        }
      }
    }
  }

  return UnitaryOperator(std::move(matrix), std::move(basis), std::move(blocks));
}

bool MeasurementMap::total() const {
  for (int v : vertex_of)
    if (v < 0) return false;
  return true;
}

StateVector apply(const UnitaryOperator& u, const StateVector& s) {
  if (!same_basis(u.basis(), s.basis))
    throw spec_error("operator and state act on different bases");
  return {u.matrix() * s.amplitudes, s.basis};
}

Eigen::VectorXd measure_vertices(const StateVector& s, const MeasurementMap& m,
                                 bool strict) {
  if (static_cast<int>(m.vertex_of.size()) != s.amplitudes.size())
    throw spec_error("measurement map does not cover the state's basis");
  if (strict && !is_normalized(s))
    throw spec_error("state is not normalized");

  Eigen::VectorXd p = Eigen::VectorXd::Zero(m.vertex_count);
  for (int i = 0; i < s.amplitudes.size(); ++i) {
    const int v = m.vertex_of[i];
    if (v < 0) continue;
    if (v >= m.vertex_count) throw spec_error("measurement assigns an invalid vertex");
    p(v) += std::norm(s.amplitudes(i));
  }
  return p;
}

}  // namespace hyperwalk
