#pragma once

#include <Eigen/Dense>
#include <complex>

#include "meadd/angles.hpp"
#include "meadd/errors.hpp"

namespace meadd {

using complexd = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

// Parameters of the excitation-preserving two-qubit unitary
//
//   W = [ e^{i gamma}                                              ]
//       [   e^{-i zeta} cos(theta)   -i e^{i chi} sin(theta)       ]
//       [   -i e^{-i chi} sin(theta)  e^{i zeta} cos(theta)        ]
//       [                                  e^{-i (gamma + phi)}    ]
//
// in the basis |00>, |01>, |10>, |11| (left qubit is the high bit).
// theta: swap angle in [0, pi/2]; chi: swap azimuthal phase (indefinite at
// theta = 0); phi: controlled phase; zeta, gamma: single-qubit-like Z phases.
// Ideal CZ is theta = zeta = gamma = 0, phi = pi.
struct GateParams {
    double theta = 0.0;
    double zeta = 0.0;
    double chi = 0.0;
    double phi = 0.0;
    double gamma = 0.0;
};

// Single-qubit rotation R(mu, zeta, chi) = Z(zeta - chi) X(mu) Z(zeta + chi),
// the 2x2 sibling of the odd block above with mu = 2*theta.
struct SingleQubitParams {
    double mu = 0.0;
    double zeta = 0.0;
    double chi = 0.0;
};

struct ExtractResult {
    GateParams params;
    bool chi_defined = true;
};

// W restricted to the parity sectors: even span {|00>,|11>}, odd {|01>,|10>}.
// reassemble: u = e^{i even_prefactor} even_block (+) odd_block, with
// even_block in SU(2), odd_block raw, and even_prefactor in [-pi/2, pi/2).
// For Eq-form inputs the prefactor equals -phi/2.
struct ParityParts {
    Matrix2cd even_block;
    Matrix2cd odd_block;
    double even_prefactor = 0.0;
};

// Factorization W = e^{-i phi/4} (Z(post_l) (x) Z(post_r)) F(theta, phi)
//                   (Z(pre_l) (x) Z(pre_r))
// with F the fundamental entangler. The differential phases are
// (zeta +- chi)/2; the symmetric phase gamma' = gamma + phi/2 commutes with F
// and is folded into the post rotations.
struct KakFactors {
    double pre_z_left = 0.0;
    double pre_z_right = 0.0;
    double post_z_left = 0.0;
    double post_z_right = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

Matrix2cd pauli_x();
Matrix2cd pauli_y();
Matrix2cd pauli_z();

// Rotation conventions: A(phi) = exp(-i phi A / 2) for A in {X, Y, Z}.
Matrix2cd rot_x(double phi);
Matrix2cd rot_y(double phi);
Matrix2cd rot_z(double phi);

// PhX(mu, vartheta) = Z(vartheta) X(mu) Z(-vartheta).
Matrix2cd phased_x(double mu, double vartheta);

Matrix4cd kron2(const Matrix2cd& left, const Matrix2cd& right);

Matrix4cd build_two_qubit(const GateParams& p);
Matrix2cd build_single_qubit(const SingleQubitParams& p);

// Inverse of build_two_qubit up to global phase. Throws
// NotExcitationPreserving when off-block weight exceeds 1e-9, Error when u is
// not unitary within 1e-9. theta lands in [0, pi/2]; chi is reported as 0
// with chi_defined = false when sin(theta) < 1e-9.
ExtractResult extract_params(const Matrix4cd& u);

ParityParts parity_decompose(const Matrix4cd& u);

// F(theta, phi) = exp(-i theta (XX + YY)/2 - i phi ZZ/4).
// F(0, pi) is CZ up to single-qubit Z phases; F(pi/4, 0) and F(pi/2, 0) are
// the sqrt-iSWAP and iSWAP entanglers.
Matrix4cd fundamental_entangler(double theta, double phi);

KakFactors kak_decompose(const GateParams& p);
Matrix4cd kak_compose(const KakFactors& f);

struct EulerResult {
    SingleQubitParams params;
    bool zeta_defined = true;
    bool chi_defined = true;
};

// Inverse of build_single_qubit up to global phase; mu lands in [0, pi].
EulerResult euler_decompose(const Matrix2cd& u);

// Rabi angle of Z(2*zeta-conjugated) rotations: cos(Omega) = cos(theta)cos(zeta),
// with Omega in [theta, pi - theta].
double rabi_angle(double theta, double zeta);

// min over global phase of the Frobenius distance between unitaries.
double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace meadd
