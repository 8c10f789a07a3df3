#include "oqs/linalg.hpp"

namespace oqs {

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    ComplexMatrix r = m.adjoint() * m;
    r.diagonal().array() -= 1.0;
    return max_abs(r) <= tolerance;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tolerance;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxKronDim || cols > kMaxKronDim)
        throw SizeError("kron: result dimension " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds limit " + std::to_string(kMaxKronDim));
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double scale) {
    if (h.rows() != h.cols())
        throw SizeError("expm_i_hermitian: matrix not square");
    const double herm_err = max_abs(h - h.adjoint());
    if (herm_err > tol::hermiticity)
        throw ContractError("expm_i_hermitian: input not Hermitian, max deviation " +
                            std::to_string(herm_err));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("expm_i_hermitian: eigendecomposition failed");
    ComplexVector phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases(k) = std::polar(1.0, scale * es.eigenvalues()(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace oqs
