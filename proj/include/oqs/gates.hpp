#pragma once

#include <memory>

#include "oqs/fock.hpp"

namespace oqs {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Unit rotation axis on the Bloch sphere.
struct QubitAxis {
    double nx = 0.0, ny = 0.0, nz = 0.0;
};

QubitAxis axis_x();
QubitAxis axis_y();
QubitAxis axis_z();

// Control axis of a conditional displacement: either Z-basis qubit
// control or a Pauli in the X-Y plane, sigma_phi = cos(phi) X + sin(phi) Y.
struct CdAxisMode {
    enum class Kind { ZControl, XyPlane };
    Kind kind = Kind::ZControl;
    double phi = 0.0;  // used only for XyPlane

    static CdAxisMode z_control() { return {}; }
    static CdAxisMode xy_plane(double phi);
    bool is_z() const { return kind == Kind::ZControl; }
};

// R_n(theta) = e^{-i theta/2 n.sigma}
ComplexMatrix qubit_rotation(const QubitAxis& axis, double theta);

// CD(beta, sigma) = e^{(beta a^dag - beta* a) (x) sigma}, built by
// block-diagonalizing in the control-Pauli eigenbasis:
// D(beta) (x) P+ + D(-beta) (x) P-. For Z control the result is block
// diagonal in the computational basis.
ComplexMatrix conditional_displacement(const TruncatedMode& mode, cd beta,
                                       const CdAxisMode& axis);

// R_ZZ(theta) = e^{-i theta/2 Z (x) Z} = diag(e^{-i t/2}, e^{i t/2}, e^{i t/2}, e^{-i t/2})
ComplexMatrix rzz(double theta);

// Logical Z-basis readout map for finite-energy GKP codewords:
// E_x(sqrt(pi)/2, delta) = e^{i (sqrt(pi)/2) x (x) X} . e^{i sqrt(pi) delta^2 p (x) Y},
// with the momentum precorrection factor acting first on states. Acts on
// a single oscillator-qubit pair, dimension 2(n_max+1).
ComplexMatrix ex_readout(const TruncatedMode& mode, double delta);

// Cached variant keyed on (n_max, delta); construction is idempotent and
// reads are safe from concurrent threads.
std::shared_ptr<const ComplexMatrix> ex_readout_cached(int n_max, double delta);

}  // namespace oqs
