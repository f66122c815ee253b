#include "meadd/noise_model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace meadd {

namespace {

constexpr complexd kI{0.0, 1.0};

// rho -> K0 rho K0^+ + K1 rho K1^+ with single-qubit Kraus pairs embedded on
// one qubit of a two-qubit state.
void apply_kraus_pair(Matrix4cd& rho, const Matrix2cd& k0, const Matrix2cd& k1,
                      int qubit) {
    const Matrix2cd id = Matrix2cd::Identity();
    const Matrix4cd a = qubit == 0 ? kron2(k0, id) : kron2(id, k0);
    const Matrix4cd b = qubit == 0 ? kron2(k1, id) : kron2(id, k1);
    rho = a * rho * a.adjoint() + b * rho * b.adjoint();
}

void damping_kraus(double lambda1, Matrix2cd& k0, Matrix2cd& k1) {
    const double p = 1.0 - std::exp(-lambda1);
    k0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - p);
    k1 << 0.0, std::sqrt(p), 0.0, 0.0;
}

void dephasing_kraus(double lambda2, Matrix2cd& k0, Matrix2cd& k1) {
    const double c = std::exp(-lambda2);
    k0 = std::sqrt((1.0 + c) / 2.0) * Matrix2cd::Identity();
    k1 = std::sqrt((1.0 - c) / 2.0) * pauli_z();
}

} // namespace

void NoiseConfig::validate() const {
    if (shots < 0) throw ConfigError("shots must be >= 0");
    if (readout_flip < 0.0 || readout_flip >= 0.5)
        throw ConfigError("readout_flip must lie in [0, 0.5)");
    if (zeta_drift_std < 0.0 || gamma_drift_std < 0.0 || sq_phase_drift_std < 0.0)
        throw ConfigError("drift stds must be >= 0");
    if (lambda1 < 0.0 || lambda2 < 0.0)
        throw ConfigError("decoherence rates must be >= 0");
}

NoiseRealization draw_realization(const NoiseConfig& cfg, std::uint64_t instance_index) {
    // Tag 0x6472 keeps realization streams disjoint from sampling streams.
    RngStream rng = derive_stream(cfg.seed, {0x6472, instance_index});
    NoiseRealization r;
    // Draw unconditionally so the stream layout is independent of which
    // stds are switched on.
    const double g_zeta = rng.gaussian();
    const double g_gamma = rng.gaussian();
    const double g_left = rng.gaussian();
    const double g_right = rng.gaussian();
    r.zeta = cfg.zeta_drift_std * g_zeta;
    r.gamma = cfg.gamma_drift_std * g_gamma;
    r.sq_phase_left = cfg.sq_phase_drift_std * g_left;
    r.sq_phase_right = cfg.sq_phase_drift_std * g_right;
    return r;
}

Matrix2cd mw_error_unitary(const AxisError& e) {
    if (!e.any()) return Matrix2cd::Identity();
    const double a = std::sqrt(e.x * e.x + e.y * e.y + e.z * e.z);
    const Matrix2cd n =
        (e.x * pauli_x() + e.y * pauli_y() + e.z * pauli_z()) / a;
    return std::cos(a) * Matrix2cd::Identity() - kI * std::sin(a) * n;
}

Matrix2cd noisy_x_gate(const AxisError& e) { return mw_error_unitary(e) * pauli_x(); }

Matrix4cd pure_state(const Eigen::Vector4cd& psi) { return psi * psi.adjoint(); }

Matrix2cd pure_state_1q(const Eigen::Vector2cd& psi) { return psi * psi.adjoint(); }

void apply_unitary(Matrix4cd& rho, const Matrix4cd& u) {
    rho = u * rho * u.adjoint();
}

void apply_unitary_1q(Matrix2cd& rho, const Matrix2cd& u) {
    rho = u * rho * u.adjoint();
}

namespace {

template <typename Mat>
void check_channel_input(const Mat& rho) {
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 ||
        std::abs(rho.trace().imag()) > 1e-9)
        throw InvalidState("channel input trace is not 1");
    if (rho.diagonal().real().minCoeff() < -1e-9)
        throw InvalidState("channel input has a negative population");
}

} // namespace

void apply_decoherence_cycle(Matrix4cd& rho, double lambda1, double lambda2) {
    check_channel_input(rho);
    Matrix2cd k0, k1;
    if (lambda1 > 0.0) {
        damping_kraus(lambda1, k0, k1);
        apply_kraus_pair(rho, k0, k1, 0);
        apply_kraus_pair(rho, k0, k1, 1);
    }
    if (lambda2 > 0.0) {
        dephasing_kraus(lambda2, k0, k1);
        apply_kraus_pair(rho, k0, k1, 0);
        apply_kraus_pair(rho, k0, k1, 1);
    }
}

void apply_decoherence_cycle_1q(Matrix2cd& rho, double lambda1, double lambda2) {
    check_channel_input(rho);
    Matrix2cd k0, k1;
    if (lambda1 > 0.0) {
        damping_kraus(lambda1, k0, k1);
        rho = k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
    }
    if (lambda2 > 0.0) {
        dephasing_kraus(lambda2, k0, k1);
        rho = k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
    }
}

void validate_density(const Matrix4cd& rho) {
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
        std::abs(rho.trace().imag()) > 1e-8)
        throw InvalidState("density matrix trace is not 1");
    if ((rho - rho.adjoint()).norm() > 1e-8)
        throw InvalidState("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw InvalidState("density matrix has a negative eigenvalue");
}

namespace {

template <std::size_t N, typename Mat>
std::array<double, N> diagonal_distribution(const Mat& rho) {
    std::array<double, N> p{};
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const complexd d = rho(static_cast<int>(i), static_cast<int>(i));
        if (std::abs(d.imag()) > 1e-9 || d.real() < -1e-9)
            throw BadDistribution("density diagonal is not a probability");
        p[i] = std::max(0.0, d.real());
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw BadDistribution("outcome probabilities do not sum to 1");
    for (auto& v : p) v /= sum;
    return p;
}

} // namespace

std::array<double, 4> outcome_probabilities(const Matrix4cd& rho) {
    return diagonal_distribution<4>(rho);
}

std::array<double, 2> outcome_probabilities_1q(const Matrix2cd& rho) {
    return diagonal_distribution<2>(rho);
}

std::array<double, 4> readout_flip_map(const std::array<double, 4>& p, double f) {
    if (f == 0.0) return p;
    std::array<double, 4> q{};
    for (int out = 0; out < 4; ++out)
        for (int in = 0; in < 4; ++in) {
            const int flips = ((out ^ in) & 1) + (((out ^ in) >> 1) & 1);
            q[out] += p[in] * std::pow(f, flips) * std::pow(1.0 - f, 2 - flips);
        }
    return q;
}

std::array<double, 2> readout_flip_map_1q(const std::array<double, 2>& p, double f) {
    return {p[0] * (1.0 - f) + p[1] * f, p[1] * (1.0 - f) + p[0] * f};
}

std::array<long, 4> sample_outcomes(const std::array<double, 4>& p, long shots,
                                    RngStream& rng) {
    std::array<long, 4> counts{};
    for (long s = 0; s < shots; ++s) ++counts[rng.categorical(p)];
    return counts;
}

std::array<long, 2> sample_outcomes_1q(const std::array<double, 2>& p, long shots,
                                       RngStream& rng) {
    std::array<long, 2> counts{};
    for (long s = 0; s < shots; ++s) ++counts[rng.categorical(p)];
    return counts;
}

std::array<long, 4> sample_counts(const std::array<double, 4>& p, long shots,
                                  double readout_flip, RngStream& rng) {
    double sum = 0.0;
    for (double v : p) sum += v;
    if (std::abs(sum - 1.0) > 1e-9)
        throw BadDistribution("outcome probabilities do not sum to 1");
    return sample_outcomes(readout_flip_map(p, readout_flip), shots, rng);
}

std::array<long, 2> sample_counts_1q(const std::array<double, 2>& p, long shots,
                                     double readout_flip, RngStream& rng) {
    if (std::abs(p[0] + p[1] - 1.0) > 1e-9)
        throw BadDistribution("outcome probabilities do not sum to 1");
    return sample_outcomes_1q(readout_flip_map_1q(p, readout_flip), shots, rng);
}

double marginal_z(const std::array<double, 4>& p, int qubit) {
    // Outcome index = 2 * left + right; bit value 0 maps to +1.
    double z = 0.0;
    for (int i = 0; i < 4; ++i) {
        const int bit = qubit == 0 ? (i >> 1) & 1 : i & 1;
        z += (bit == 0 ? 1.0 : -1.0) * p[i];
    }
    return z;
}

} // namespace meadd
