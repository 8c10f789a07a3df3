#include "oqs/gates.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace oqs {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

QubitAxis axis_x() { return {1.0, 0.0, 0.0}; }
QubitAxis axis_y() { return {0.0, 1.0, 0.0}; }
QubitAxis axis_z() { return {0.0, 0.0, 1.0}; }

CdAxisMode CdAxisMode::xy_plane(double phi) {
    if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
        throw ContractError("CdAxisMode: phi must lie in [0, 2pi)");
    CdAxisMode m;
    m.kind = Kind::XyPlane;
    m.phi = phi;
    return m;
}

ComplexMatrix qubit_rotation(const QubitAxis& axis, double theta) {
    const double nrm = axis.nx * axis.nx + axis.ny * axis.ny + axis.nz * axis.nz;
    if (std::abs(nrm - 1.0) > 1e-12)
        throw ContractError("qubit_rotation: axis is not a unit vector");
    ComplexMatrix gen = axis.nx * pauli_x() + axis.ny * pauli_y() + axis.nz * pauli_z();
    return expm_i_hermitian(gen, -theta / 2.0);
}

ComplexMatrix conditional_displacement(const TruncatedMode& mode, cd beta,
                                       const CdAxisMode& axis) {
    ComplexMatrix d_plus = displacement(mode, beta);
    ComplexMatrix d_minus = displacement(mode, -beta);
    ComplexMatrix p_plus(2, 2), p_minus(2, 2);
    if (axis.is_z()) {
        p_plus << 1, 0, 0, 0;
        p_minus << 0, 0, 0, 1;
    } else {
        // sigma_phi = cos(phi) X + sin(phi) Y has eigenvectors
        // (|0> +- e^{i phi} |1>)/sqrt2
        const cd e = std::polar(1.0, axis.phi);
        p_plus << 0.5, 0.5 * std::conj(e), 0.5 * e, 0.5;
        p_minus << 0.5, -0.5 * std::conj(e), -0.5 * e, 0.5;
    }
    return kron(d_plus, p_plus) + kron(d_minus, p_minus);
}

ComplexMatrix rzz(double theta) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    const cd on_diag = std::polar(1.0, -theta / 2.0);
    const cd off_diag = std::polar(1.0, theta / 2.0);
    m(0, 0) = on_diag;
    m(1, 1) = off_diag;
    m(2, 2) = off_diag;
    m(3, 3) = on_diag;
    return m;
}

ComplexMatrix ex_readout(const TruncatedMode& mode, double delta) {
    if (delta < 0.0) throw ContractError("ex_readout: delta must be >= 0");
    ComplexMatrix main = expm_i_hermitian(kron(mode.x, pauli_x()), kSqrtPi / 2.0);
    if (delta == 0.0) return main;
    ComplexMatrix pre = expm_i_hermitian(kron(mode.p, pauli_y()), kSqrtPi * delta * delta);
    return main * pre;
}

std::shared_ptr<const ComplexMatrix> ex_readout_cached(int n_max, double delta) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::shared_ptr<const ComplexMatrix>> cache;
    const auto key = std::make_pair(n_max, delta);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const ComplexMatrix>(ex_readout(make_mode(n_max), delta));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, built);
    return it->second;
}

}  // namespace oqs
