// Copyright 2026 The scb-pulsec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "scb/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "scb/error.hpp"

namespace scb {

namespace {

std::string echo(const Eigen::MatrixXcd &m) {
    std::ostringstream os;
    os.precision(17);
    os << m;
    return os.str();
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("{}: dimension mismatch ({} vs {})", what, a.dim(), b.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("matrix must be square and non-empty, got {}x{}", m_.rows(),
                                m_.cols()));
    }
    for (Eigen::Index i = 0; i < m_.size(); ++i) {
        const Complex z = m_.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidArgument, "matrix has a non-finite entry");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::span<const Complex> entries)
    : ComplexMatrix([&] {
          if (entries.size() != dim * dim) {
              throw Error(ErrorCode::InvalidArgument,
                          fmt::format("expected {} entries for dim {}, got {}", dim * dim, dim,
                                      entries.size()));
          }
          const auto n = static_cast<Eigen::Index>(dim);
          Eigen::MatrixXcd m(n, n);
          for (Eigen::Index r = 0; r < n; ++r) {
              for (Eigen::Index c = 0; c < n; ++c) {
                  m(r, c) = entries[static_cast<std::size_t>(r * n + c)];
              }
          }
          return m;
      }()) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix([&] {
          const auto n = static_cast<Eigen::Index>(rows.size());
          Eigen::MatrixXcd m(n, n);
          Eigen::Index r = 0;
          for (const auto &row : rows) {
              if (static_cast<Eigen::Index>(row.size()) != n) {
                  throw Error(ErrorCode::InvalidArgument, "matrix rows must all have length dim");
              }
              Eigen::Index c = 0;
              for (const Complex &z : row) {
                  m(r, c++) = z;
              }
              ++r;
          }
          return m;
      }()) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag[static_cast<std::size_t>(i)];
    }
    return ComplexMatrix(std::move(m));
}

std::vector<Complex> ComplexMatrix::entries() const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m_.size()));
    for (Eigen::Index r = 0; r < m_.rows(); ++r) {
        for (Eigen::Index c = 0; c < m_.cols(); ++c) {
            out.push_back(m_(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    return mat_mul(*this, rhs);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
    require_same_dim(*this, rhs, "operator+");
    return ComplexMatrix(Eigen::MatrixXcd(m_ + rhs.m_));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
    require_same_dim(*this, rhs, "operator-");
    return ComplexMatrix(Eigen::MatrixXcd(m_ - rhs.m_));
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) {
    return ComplexMatrix(Eigen::MatrixXcd(scalar * m.m_));
}

void Tolerance::validate() const {
    if (!(unitarity_tol > 0.0) || !(match_tol > 0.0) || unitarity_tol > match_tol) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("invalid tolerance (unitarity_tol={}, match_tol={})", unitarity_tol,
                                match_tol));
    }
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
} // namespace pauli

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "mat_mul");
    return ComplexMatrix(Eigen::MatrixXcd(a.eigen() * b.eigen()));
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    return ComplexMatrix(Eigen::MatrixXcd(a.eigen().adjoint()));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index na = a.eigen().rows();
    const Eigen::Index nb = b.eigen().rows();
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix &u) {
    const auto n = u.eigen().rows();
    return (u.eigen().adjoint() * u.eigen() - Eigen::MatrixXcd::Identity(n, n))
        .cwiseAbs()
        .maxCoeff();
}

bool is_unitary(const ComplexMatrix &u, double tol) { return unitarity_defect(u) <= tol; }

ComplexMatrix expm_evolution(const ComplexMatrix &h, double duration, double hbar,
                             double hermiticity_tol) {
    if (!(duration >= 0.0) || !std::isfinite(duration)) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("evolution duration must be finite and >= 0, got {}", duration));
    }
    if (!(hbar > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
    }
    const Eigen::MatrixXcd &m = h.eigen();
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > hermiticity_tol * scale) {
        throw Error(ErrorCode::NotHermitian,
                    fmt::format("generator is not Hermitian: max|h - h^dagger| = {:.3e} "
                                "(max|h| = {:.3e})",
                                asym, scale));
    }
    if (scale == 0.0) {
        return ComplexMatrix::identity(h.dim());
    }

    // Symmetrize so the solver sees an exactly self-adjoint input.
    const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenNonConvergence,
                    "Hermitian eigensolver did not converge for input:\n" + echo(m));
    }
    const Eigen::VectorXd &energies = solver.eigenvalues();
    Eigen::VectorXcd phases(energies.size());
    for (Eigen::Index k = 0; k < energies.size(); ++k) {
        phases(k) = std::polar(1.0, -energies(k) * duration / hbar);
    }
    const Eigen::MatrixXcd &vecs = solver.eigenvectors();
    return ComplexMatrix(Eigen::MatrixXcd(vecs * phases.asDiagonal() * vecs.adjoint()));
}

double fidelity_up_to_phase(const ComplexMatrix &u, const ComplexMatrix &v,
                            const Tolerance &tol) {
    require_same_dim(u, v, "fidelity_up_to_phase");
    for (const ComplexMatrix *m : {&u, &v}) {
        const double defect = unitarity_defect(*m);
        if (defect > tol.unitarity_tol) {
            throw Error(ErrorCode::NotUnitary,
                        fmt::format("fidelity_up_to_phase: argument is not unitary "
                                    "(max|U^dagger U - I| = {:.3e} > {:.3e})",
                                    defect, tol.unitarity_tol));
        }
    }
    const Complex overlap = (u.eigen().adjoint() * v.eigen()).trace();
    const double f = std::abs(overlap) / static_cast<double>(u.dim());
    return std::min(f, 1.0);
}

double relative_phase(const ComplexMatrix &u, const ComplexMatrix &v) {
    require_same_dim(u, v, "relative_phase");
    return std::arg((v.eigen().adjoint() * u.eigen()).trace());
}

ComplexMatrix embed(const ComplexMatrix &op, std::span<const int> qubits, int width) {
    const int k = static_cast<int>(qubits.size());
    if (width < 1 || width > 16 || k < 1 || op.dim() != (std::size_t{1} << k)) {
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("cannot embed a dim-{} operator on {} qubit(s) of a {}-qubit "
                                "register",
                                op.dim(), k, width));
    }
    for (int a = 0; a < k; ++a) {
        if (qubits[a] < 0 || qubits[a] >= width) {
            throw Error(ErrorCode::InvalidArgument,
                        fmt::format("qubit index {} outside register of width {}", qubits[a],
                                    width));
        }
        for (int b = a + 1; b < k; ++b) {
            if (qubits[a] == qubits[b]) {
                throw Error(ErrorCode::InvalidArgument, "embed: repeated qubit index");
            }
        }
    }

    const Eigen::Index n = Eigen::Index{1} << width;
    // Bit position (from the least significant end) of register qubit q.
    auto bit = [width](int q) { return width - 1 - q; };
    auto local_index = [&](Eigen::Index global) {
        Eigen::Index idx = 0;
        for (int a = 0; a < k; ++a) {
            idx = (idx << 1) | ((global >> bit(qubits[a])) & 1);
        }
        return idx;
    };
    Eigen::Index op_mask = 0;
    for (int a = 0; a < k; ++a) {
        op_mask |= Eigen::Index{1} << bit(qubits[a]);
    }

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index row = 0; row < n; ++row) {
        for (Eigen::Index col = 0; col < n; ++col) {
            if ((row & ~op_mask) != (col & ~op_mask)) {
                continue;
            }
            out(row, col) = op.eigen()(local_index(row), local_index(col));
        }
    }
    return ComplexMatrix(std::move(out));
}

double wrap_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(angle, two_pi); // [-pi, pi]
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

} // namespace scb
