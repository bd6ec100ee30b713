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
#pragma once

/// @file linalg.hpp
/// Dense complex matrices for the handful of qubits this project deals with
/// (dimension 2, 4 and small tensor products), plus the few operations the
/// rest of the code needs: products, adjoints, Kronecker products, the
/// unitary generated by a Hermitian matrix, and gate distances.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace scb {

using Complex = std::complex<double>;

/// Square complex matrix with finite entries. Immutable after construction
/// except through assignment.
class ComplexMatrix {
  public:
    /// Throws Error(InvalidArgument) if `m` is empty, not square, or holds a
    /// non-finite entry.
    explicit ComplexMatrix(Eigen::MatrixXcd m);

    /// Row-major entries; `entries.size()` must equal `dim * dim`.
    ComplexMatrix(std::size_t dim, std::span<const Complex> entries);

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    [[nodiscard]] const Eigen::MatrixXcd &eigen() const noexcept { return m_; }

    /// Row-major copy of the entries.
    [[nodiscard]] std::vector<Complex> entries() const;

    [[nodiscard]] ComplexMatrix operator*(const ComplexMatrix &rhs) const;
    [[nodiscard]] ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    [[nodiscard]] ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m);

  private:
    Eigen::MatrixXcd m_;
};

/// Thresholds used by the unitarity checks and gate comparisons.
struct Tolerance {
    double unitarity_tol = 1e-12;
    double match_tol = 1e-9;

    /// Throws unless both are positive and unitarity_tol <= match_tol.
    void validate() const;
};

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
} // namespace pauli

[[nodiscard]] ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b);
[[nodiscard]] ComplexMatrix dagger(const ComplexMatrix &a);
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest absolute entry of a - b. Dimensions must agree.
[[nodiscard]] double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |(u^dagger u - I)_ij|
[[nodiscard]] double unitarity_defect(const ComplexMatrix &u);

[[nodiscard]] bool is_unitary(const ComplexMatrix &u, double tol);

/// exp(-i h duration / hbar) for Hermitian `h`.
///
/// Computed from the eigendecomposition of `h`: the eigenvalues become
/// phases and the eigenvectors rebuild the result, so the output is unitary
/// to round-off. `h` is accepted when max|h - h^dagger| is within
/// `hermiticity_tol` relative to max|h|.
[[nodiscard]] ComplexMatrix expm_evolution(const ComplexMatrix &h, double duration,
                                           double hbar, double hermiticity_tol = 1e-12);

/// |tr(u^dagger v)| / dim, in [0, 1]. Equals 1 iff u = e^{i gamma} v.
/// Both arguments must be unitary within `tol.unitarity_tol`.
[[nodiscard]] double fidelity_up_to_phase(const ComplexMatrix &u, const ComplexMatrix &v,
                                          const Tolerance &tol = {});

/// Phase gamma in (-pi, pi] that best aligns v with u, i.e. arg tr(v^dagger u),
/// so that u ~ e^{i gamma} v.
[[nodiscard]] double relative_phase(const ComplexMatrix &u, const ComplexMatrix &v);

/// Embed a k-qubit operator acting on `qubits` (in the operator's own
/// factor order) into a `width`-qubit register. Qubit 0 is the most
/// significant tensor factor.
[[nodiscard]] ComplexMatrix embed(const ComplexMatrix &op, std::span<const int> qubits,
                                  int width);

/// Wrap an angle into (-pi, pi].
[[nodiscard]] double wrap_angle(double angle);

} // namespace scb
