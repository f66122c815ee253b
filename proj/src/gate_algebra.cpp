#include "meadd/gate_algebra.hpp"

#include <cmath>

namespace meadd {

namespace {

constexpr complexd kI{0.0, 1.0};
constexpr double kBlockTol = 1e-9;

complexd phase(double a) { return std::polar(1.0, a); }

// Circular mean of two nearby angle estimates.
double mean_angle(double a, double b) {
    return std::arg(phase(a) + phase(b));
}

} // namespace

Matrix2cd pauli_x() {
    Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2cd pauli_y() {
    Matrix2cd m;
    m << 0, -kI, kI, 0;
    return m;
}

Matrix2cd pauli_z() {
    Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Matrix2cd rot_x(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    Matrix2cd m;
    m << c, -kI * s, -kI * s, c;
    return m;
}

Matrix2cd rot_y(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    Matrix2cd m;
    m << c, -s, s, c;
    return m;
}

Matrix2cd rot_z(double phi) {
    Matrix2cd m;
    m << phase(-phi / 2.0), 0, 0, phase(phi / 2.0);
    return m;
}

Matrix2cd phased_x(double mu, double vartheta) {
    return rot_z(vartheta) * rot_x(mu) * rot_z(-vartheta);
}

Matrix4cd kron2(const Matrix2cd& left, const Matrix2cd& right) {
    Matrix4cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.block<2, 2>(2 * i, 2 * j) = left(i, j) * right;
    return m;
}

Matrix4cd build_two_qubit(const GateParams& p) {
    const double c = std::cos(p.theta), s = std::sin(p.theta);
    Matrix4cd u = Matrix4cd::Zero();
    u(0, 0) = phase(p.gamma);
    u(1, 1) = phase(-p.zeta) * c;
    u(1, 2) = -kI * phase(p.chi) * s;
    u(2, 1) = -kI * phase(-p.chi) * s;
    u(2, 2) = phase(p.zeta) * c;
    u(3, 3) = phase(-(p.gamma + p.phi));
    return u;
}

Matrix2cd build_single_qubit(const SingleQubitParams& p) {
    const double c = std::cos(p.mu / 2.0), s = std::sin(p.mu / 2.0);
    Matrix2cd u;
    u << phase(-p.zeta) * c, -kI * phase(p.chi) * s,
         -kI * phase(-p.chi) * s, phase(p.zeta) * c;
    return u;
}

ExtractResult extract_params(const Matrix4cd& u) {
    if ((u.adjoint() * u - Matrix4cd::Identity()).norm() > 1e-9)
        throw Error("extract_params: input is not unitary");

    double off = 0.0; // weight outside the allowed block sparsity pattern
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const bool allowed = (i == j) || (i == 1 && j == 2) || (i == 2 && j == 1);
            if (!allowed) off += std::norm(u(i, j));
        }
    if (std::sqrt(off) > kBlockTol)
        throw NotExcitationPreserving("extract_params: off-block weight above 1e-9");

    // Strip the odd-block global phase: det(odd) = e^{2 i alpha}. The
    // half-angle is taken principal, alpha in (-pi/2, pi/2]; the residual
    // Z2 gauge (gamma, zeta, chi, alpha) -> (+pi each) is fixed by this choice.
    const complexd det_odd = u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1);
    const double alpha = std::arg(det_odd) / 2.0;
    const complexd g = phase(-alpha);

    ExtractResult r;
    const double c_mag = (std::abs(u(1, 1)) + std::abs(u(2, 2))) / 2.0;
    const double s_mag = (std::abs(u(1, 2)) + std::abs(u(2, 1))) / 2.0;
    r.params.theta = std::atan2(s_mag, c_mag);

    r.params.gamma = std::arg(u(0, 0) * g);
    r.params.phi = wrap_to_pi(-std::arg(u(3, 3) * g) - r.params.gamma);

    if (c_mag > kBlockTol)
        r.params.zeta = mean_angle(-std::arg(u(1, 1) * g), std::arg(u(2, 2) * g));
    if (s_mag > kBlockTol) {
        r.params.chi = mean_angle(std::arg(kI * u(1, 2) * g), -std::arg(kI * u(2, 1) * g));
    } else {
        r.params.chi = 0.0;
        r.chi_defined = false;
    }
    return r;
}

ParityParts parity_decompose(const Matrix4cd& u) {
    ParityParts p;
    Matrix2cd even;
    even << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
    p.odd_block << u(1, 1), u(1, 2), u(2, 1), u(2, 2);

    const complexd det_even = even.determinant();
    if (std::abs(det_even) < 0.5)
        throw NotExcitationPreserving("parity_decompose: even block is not unitary");
    // Half-angle on [-pi, pi) so an Eq-form gate yields exactly -phi/2
    // (phi = pi maps to -pi/2, not +pi/2).
    p.even_prefactor = wrap_to_pi_low(std::arg(det_even)) / 2.0;
    p.even_block = phase(-p.even_prefactor) * even;
    return p;
}

Matrix4cd fundamental_entangler(double theta, double phi) {
    const double c = std::cos(theta), s = std::sin(theta);
    Matrix4cd f = Matrix4cd::Zero();
    f(0, 0) = phase(-phi / 4.0);
    f(3, 3) = phase(-phi / 4.0);
    const complexd q = phase(phi / 4.0);
    f(1, 1) = q * c;
    f(1, 2) = -kI * q * s;
    f(2, 1) = -kI * q * s;
    f(2, 2) = q * c;
    return f;
}

KakFactors kak_decompose(const GateParams& p) {
    KakFactors f;
    f.theta = p.theta;
    f.phi = p.phi;
    const double zeta_plus = (p.zeta + p.chi) / 2.0;
    const double zeta_minus = (p.zeta - p.chi) / 2.0;
    const double gamma_sym = p.gamma + p.phi / 2.0;
    f.pre_z_left = zeta_plus;
    f.pre_z_right = -zeta_plus;
    f.post_z_left = -gamma_sym + zeta_minus;
    f.post_z_right = -gamma_sym - zeta_minus;
    return f;
}

Matrix4cd kak_compose(const KakFactors& f) {
    const Matrix4cd pre = kron2(rot_z(f.pre_z_left), rot_z(f.pre_z_right));
    const Matrix4cd post = kron2(rot_z(f.post_z_left), rot_z(f.post_z_right));
    return phase(-f.phi / 4.0) * post * fundamental_entangler(f.theta, f.phi) * pre;
}

EulerResult euler_decompose(const Matrix2cd& u) {
    if ((u.adjoint() * u - Matrix2cd::Identity()).norm() > 1e-9)
        throw Error("euler_decompose: input is not unitary");
    const double beta = std::arg(u.determinant()) / 2.0;
    const Matrix2cd v = phase(-beta) * u;

    EulerResult r;
    const double c_mag = (std::abs(v(0, 0)) + std::abs(v(1, 1))) / 2.0;
    const double s_mag = (std::abs(v(0, 1)) + std::abs(v(1, 0))) / 2.0;
    r.params.mu = 2.0 * std::atan2(s_mag, c_mag);
    if (c_mag > kBlockTol) {
        r.params.zeta = mean_angle(-std::arg(v(0, 0)), std::arg(v(1, 1)));
    } else {
        r.params.zeta = 0.0;
        r.zeta_defined = false;
    }
    if (s_mag > kBlockTol) {
        r.params.chi = mean_angle(std::arg(kI * v(0, 1)), -std::arg(kI * v(1, 0)));
    } else {
        r.params.chi = 0.0;
        r.chi_defined = false;
    }
    return r;
}

double rabi_angle(double theta, double zeta) {
    const double c = std::cos(theta) * std::cos(zeta);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const double overlap = std::abs((a.adjoint() * b).trace());
    const double d2 = a.squaredNorm() + b.squaredNorm() - 2.0 * overlap;
    return std::sqrt(std::max(0.0, d2));
}

} // namespace meadd
