#pragma once

#include <Eigen/Dense>

#include "oqs/common.hpp"

namespace oqs {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Largest dimension kron() will produce; anything bigger is a sign the
// caller should be using the strided state kernels instead.
inline constexpr Eigen::Index kMaxKronDim = 4096;

double max_abs(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tolerance = tol::unitarity);
bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::hermiticity);

// Standard Kronecker product, first factor slowest-varying.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// e^{i*scale*h} for Hermitian h, via eigendecomposition (exactly unitary
// up to the accuracy of the eigensolver). Throws ContractError if h is
// not Hermitian within tol::hermiticity.
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double scale);

}  // namespace oqs
