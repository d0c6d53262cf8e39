// Copyright 2026 The ctrlshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctrlshift/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace ctrlshift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kProductStructureTol = 1e-8;

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}

struct ExtractedGate {
  Eigen::MatrixXcd gate;        // induced data gate, scale included
  Eigen::VectorXcd residual;    // residual program state |Pi'>
};

// Rearranges a composite output vector into a (program x data) matrix.
Eigen::MatrixXcd as_program_by_data(const Eigen::VectorXcd& v, RegisterOrder order,
                                    Eigen::Index program_dim, Eigen::Index data_dim) {
  Eigen::MatrixXcd m(program_dim, data_dim);
  for (Eigen::Index p = 0; p < program_dim; ++p) {
    for (Eigen::Index d = 0; d < data_dim; ++d) {
      m(p, d) = (order == RegisterOrder::ProgramFirst) ? v(p * data_dim + d)
                                                       : v(d * program_dim + p);
    }
  }
  return m;
}

StateVector arrange(RegisterOrder order, const StateVector& program,
                    const StateVector& data) {
  return (order == RegisterOrder::ProgramFirst) ? tensor(program, data)
                                                : tensor(data, program);
}

// Rank-1 defect of a matrix with known total weight: sqrt(1 - s_max^2 / sum s^2).
double rank1_defect(const Eigen::JacobiSVD<Eigen::MatrixXcd>& svd) {
  const double total = svd.singularValues().squaredNorm();
  if (total <= 0.0) return 1.0;
  const double top = svd.singularValues()(0) * svd.singularValues()(0);
  return std::sqrt(std::max(0.0, 1.0 - top / total));
}

// Applies the network to |program> x (every data basis state) and factors the
// stacked outputs as |Pi'> x u. Throws when the outputs are not rank-1.
ExtractedGate extract_induced_gate(const Operator& network, RegisterOrder order,
                                   const StateVector& program, const RegisterShape& data_shape,
                                   const RegisterShape& program_shape) {
  const auto dp = static_cast<Eigen::Index>(program_shape.total_dim());
  const auto dd = static_cast<Eigen::Index>(data_shape.total_dim());
  Eigen::MatrixXcd stacked(dp, dd * dd);  // rows: program out; cols: (data out, data in)
  for (Eigen::Index in = 0; in < dd; ++in) {
    const StateVector basis = StateVector::basis_state(data_shape, static_cast<std::size_t>(in));
    const StateVector out = apply(network, arrange(order, program, basis));
    const Eigen::MatrixXcd m = as_program_by_data(out.amps(), order, dp, dd);
    for (Eigen::Index o = 0; o < dd; ++o) {
      for (Eigen::Index p = 0; p < dp; ++p) stacked(p, o * dd + in) = m(p, o);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double defect = rank1_defect(svd);
  if (defect > kProductStructureTol) {
    throw ProductStructureViolation(
        "network output is not a program x data product state", defect);
  }
  ExtractedGate result{Eigen::MatrixXcd(dd, dd), svd.matrixU().col(0)};
  const Eigen::VectorXcd gate_vec = svd.singularValues()(0) * svd.matrixV().col(0).conjugate();
  for (Eigen::Index o = 0; o < dd; ++o) {
    for (Eigen::Index in = 0; in < dd; ++in) result.gate(o, in) = gate_vec(o * dd + in);
  }
  return result;
}

Eigen::Vector4cd bell_vector(BellOutcome outcome) {
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (outcome) {
    case BellOutcome::PhiPlus:
      v(0) = r;
      v(3) = r;
      break;
    case BellOutcome::PsiPlus:
      v(1) = r;
      v(2) = r;
      break;
    case BellOutcome::PsiMinus:
      v(1) = r;
      v(2) = -r;
      break;
    case BellOutcome::PhiMinus:
      v(0) = r;
      v(3) = -r;
      break;
  }
  return v;
}

}  // namespace

OrthogonalityReport program_orthogonality_check(const Operator& network, RegisterOrder order,
                                                const StateVector& program_a,
                                                const StateVector& program_b,
                                                const std::vector<StateVector>& data_samples) {
  require(network.is_unitary(), "program_orthogonality_check: network must be unitary");
  require(program_a.shape() == program_b.shape(),
          "program_orthogonality_check: program shapes differ");
  const RegisterShape& program_shape = program_a.shape();
  const std::size_t dp = program_shape.total_dim();
  const std::size_t dn = network.dim();
  require(dn % dp == 0 && dn / dp >= 1,
          "program_orthogonality_check: network does not factor over the program register");
  require(!data_samples.empty(), "program_orthogonality_check: need data samples");
  const RegisterShape& data_shape = data_samples.front().shape();
  require(data_shape.total_dim() * dp == dn,
          "program_orthogonality_check: data samples do not match network size");

  const ExtractedGate ga =
      extract_induced_gate(network, order, program_a, data_shape, program_shape);
  const ExtractedGate gb =
      extract_induced_gate(network, order, program_b, data_shape, program_shape);

  OrthogonalityReport report;
  report.program_overlap = overlap(program_a, program_b);
  const Complex residual_overlap = ga.residual.dot(gb.residual);
  for (const StateVector& d : data_samples) {
    require(d.shape() == data_shape, "program_orthogonality_check: data sample shape mismatch");
    const Complex data_term =
        (ga.gate * d.amps()).dot(gb.gate * d.amps());  // <D|u_a^dag u_b|D>
    const Complex rhs = data_term * residual_overlap;
    report.residuals.push_back(std::abs(report.program_overlap - rhs));
  }
  report.max_violation =
      *std::max_element(report.residuals.begin(), report.residuals.end());
  return report;
}

double output_independence_check(const Operator& network, RegisterOrder order,
                                 const StateVector& program, const StateVector& data_a,
                                 const StateVector& data_b) {
  require(network.is_unitary(), "output_independence_check: network must be unitary");
  require(data_a.shape() == data_b.shape(), "output_independence_check: data shapes differ");
  require(std::abs(overlap(data_a, data_b)) > kIdentityTol,
          "output_independence_check: data states must not be orthogonal");
  const auto dp = static_cast<Eigen::Index>(program.shape().total_dim());
  const auto dd = static_cast<Eigen::Index>(data_a.shape().total_dim());
  require(static_cast<std::size_t>(dp * dd) == network.dim(),
          "output_independence_check: register sizes do not match network");

  Eigen::VectorXcd residuals[2];
  const StateVector* data[2] = {&data_a, &data_b};
  for (int i = 0; i < 2; ++i) {
    const StateVector out = apply(network, arrange(order, program, *data[i]));
    const Eigen::MatrixXcd m = as_program_by_data(out.amps(), order, dp, dd);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double defect = rank1_defect(svd);
    if (defect > kProductStructureTol) {
      throw ProductStructureViolation(
          "network output is not a program x data product state", defect);
    }
    residuals[i] = svd.matrixU().col(0);
  }
  const double align = std::abs(residuals[0].dot(residuals[1]));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * align));
}

Operator matrix_mult_operator(int n) {
  require(n >= 2, "matrix_mult_operator: n must be >= 2");
  const RegisterShape shape({n, n, n});
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const Eigen::Index col = (static_cast<Eigen::Index>(k) * n + i) * n + k;
      const Eigen::Index row = static_cast<Eigen::Index>(i) * n * n;
      m(row, col) = 1.0;
    }
  }
  return Operator(shape, std::move(m));
}

Operator make_programming_map(int n) {
  require(n >= 2, "make_programming_map: n must be >= 2");
  const RegisterShape shape({n, n, n});
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  const double scale = std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // |U> stores U column-first: |k>|j>|i> carries psi_k U_{ij} / sqrt(n).
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const Eigen::Index col = (static_cast<Eigen::Index>(k) * n + k) * n + i;
      const Eigen::Index row = static_cast<Eigen::Index>(i) * n * n;
      m(row, col) = scale;
    }
  }
  return Operator(shape, std::move(m));
}

ProgrammingApplication apply_programming_operator(const StateVector& psi, const Operator& a) {
  const auto n = static_cast<Eigen::Index>(psi.dim());
  require(a.dim() == psi.dim(), "apply_programming_operator: operator must match data size");
  require(n >= 2, "apply_programming_operator: data dimension must be >= 2");
  // Raw row-major program encoding |A> = sum A_{ij} |i>|j>.
  Eigen::VectorXcd program(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) program(i * n + j) = a.matrix()(i, j);
  }
  Eigen::VectorXcd joint(n * n * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    joint.segment(k * n * n, n * n) = psi.amps()(k) * program;
  }
  const Operator m = matrix_mult_operator(static_cast<int>(n));
  ProgrammingApplication out;
  out.output = m.matrix() * joint;
  out.norm = out.output.norm();
  return out;
}

OperatorEncoding encode_operator_state(const Operator& u) {
  const auto n = static_cast<Eigen::Index>(u.dim());
  require(n >= 2, "encode_operator_state: dimension must be >= 2");
  Eigen::VectorXcd raw(n * n);
  for (Eigen::Index j = 0; j < n; ++j) raw.segment(j * n, n) = u.matrix().col(j);
  raw /= std::sqrt(static_cast<double>(n));
  OperatorEncoding enc{StateVector::normalized(u.shape().concat(u.shape()), raw), raw.norm(),
                       u.is_unitary()};
  return enc;
}

BellProjection bell_project(const StateVector& psi, const Operator& u, BellOutcome outcome) {
  require(psi.dim() == 2, "bell_project: psi must be a single qubit");
  require(u.dim() == 2 && u.is_unitary(), "bell_project: u must be a 2x2 unitary");
  const StateVector joint = tensor(psi, encode_operator_state(u).state);
  const Eigen::Vector4cd bell = bell_vector(outcome);
  Eigen::Vector2cd branch = Eigen::Vector2cd::Zero();
  for (Eigen::Index ab = 0; ab < 4; ++ab) {
    for (Eigen::Index t = 0; t < 2; ++t) {
      branch(t) += std::conj(bell(ab)) * joint.amps()(ab * 2 + t);
    }
  }
  BellProjection out{branch.squaredNorm(),
                     StateVector::normalized(RegisterShape::qubits(1), branch)};
  return out;
}

ResidueReport residue_decomposition(const Operator& g, const Operator& programming_map) {
  require(g.shape() == programming_map.shape(), "residue_decomposition: shape mismatch");
  require(g.is_unitary(), "residue_decomposition: g must be unitary");
  Operator residue = g - programming_map;
  const auto dim = static_cast<Eigen::Index>(g.dim());
  double reconstruction = 0.0;
  // Probe the identity G = L + R on basis states and a uniform superposition.
  for (Eigen::Index k = 0; k <= dim; ++k) {
    Eigen::VectorXcd probe;
    if (k < dim) {
      probe = Eigen::VectorXcd::Zero(dim);
      probe(k) = 1.0;
    } else {
      probe = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    }
    const double dev =
        (g.matrix() * probe - (programming_map.matrix() * probe + residue.matrix() * probe))
            .norm();
    reconstruction = std::max(reconstruction, dev);
  }
  const double nonunitarity =
      (programming_map.matrix().adjoint() * programming_map.matrix() -
       Eigen::MatrixXcd::Identity(dim, dim))
          .norm();
  return ResidueReport{std::move(residue), reconstruction, nonunitarity};
}

LieClosureReport lie_closure_dimension(const std::vector<Operator>& generators, int max_depth) {
  require(!generators.empty(), "lie_closure_dimension: need at least one generator");
  require(max_depth >= 0, "lie_closure_dimension: max_depth must be nonnegative");
  const RegisterShape& shape = generators.front().shape();
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  for (const Operator& g : generators) {
    require(g.shape() == shape, "lie_closure_dimension: generator shapes differ");
    require(g.is_hermitian(), "lie_closure_dimension: generators must be hermitian");
  }

  std::vector<Eigen::MatrixXcd> basis;       // orthonormal traceless hermitian directions
  std::vector<Eigen::VectorXd> basis_vecs;   // their real vectorizations
  const auto vectorize = [dim](const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v(2 * dim * dim);
    Eigen::Index at = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        v(at++) = m(i, j).real();
        v(at++) = m(i, j).imag();
      }
    }
    return v;
  };
  const auto try_add = [&](Eigen::MatrixXcd candidate) {
    candidate -= (candidate.trace() / static_cast<double>(dim)) *
                 Eigen::MatrixXcd::Identity(dim, dim);
    double scale = candidate.norm();
    if (scale <= 1e-12) return false;
    candidate /= scale;
    Eigen::VectorXd vec = vectorize(candidate);
    for (const Eigen::VectorXd& b : basis_vecs) vec -= b.dot(vec) * b;
    const double residual_norm = vec.norm();
    if (residual_norm <= 1e-9) return false;
    vec /= residual_norm;
    // Rebuild the matrix from the orthogonalized vector to keep the stored
    // basis consistent with basis_vecs.
    Eigen::MatrixXcd m(dim, dim);
    Eigen::Index at = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        m(i, j) = Complex(vec(at), vec(at + 1));
        at += 2;
      }
    }
    basis.push_back(std::move(m));
    basis_vecs.push_back(std::move(vec));
    return true;
  };

  for (const Operator& g : generators) try_add(g.matrix());

  LieClosureReport report;
  report.generator_count = static_cast<int>(generators.size());
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t old_size = basis.size();
    bool grew = false;
    for (std::size_t a = 0; a < old_size; ++a) {
      for (std::size_t b = a + 1; b < old_size; ++b) {
        const Eigen::MatrixXcd comm = kI * (basis[a] * basis[b] - basis[b] * basis[a]);
        if (try_add(comm)) grew = true;
      }
    }
    if (!grew) break;
    report.depth_reached = depth;
  }
  report.closure_dimension = static_cast<int>(basis.size());
  return report;
}

ProductFormulaErrors product_formula_error(const Operator& h1, const Operator& h2, double tau) {
  require(h1.shape() == h2.shape(), "product_formula_error: shape mismatch");
  const Operator u1 = expi_hermitian(h1, -tau);
  const Operator u2 = expi_hermitian(h2, -tau);
  ProductFormulaErrors out;
  out.sum_error = frob_distance(u1 * u2, expi_hermitian(h1 + h2, -tau));
  // e^{-[H1,H2] t^2} = e^{i (i[H1,H2]) t^2} with hermitian i[H1,H2].
  const Operator k = kI * (h1 * h2 - h2 * h1);
  const Operator reference = expi_hermitian(k, tau * tau);
  out.commutator_error =
      frob_distance(u1 * u2 * u1.adjoint() * u2.adjoint(), reference);
  return out;
}

double rebit_expectation(double phi, double rx, double ry) {
  require(std::abs(rx * rx + ry * ry - 1.0) <= kValidationTol,
          "rebit_expectation: (rx, ry) must be a unit vector");
  const double ux = std::cos(phi) * rx - std::sin(phi) * ry;
  const double uy = std::sin(phi) * rx + std::cos(phi) * ry;
  return rx * ux + ry * uy;
}

}  // namespace ctrlshift
