#pragma once

#include <array>
#include <cstdint>

#include "meadd/gate_algebra.hpp"
#include "meadd/rng.hpp"

namespace meadd {

// Coherent error on a decoupling pulse: the pulse is preceded by
// exp(-i (x X + y Y + z Z)). An over-rotation by a fraction r of a pi pulse
// corresponds to x = r * pi / 2.
struct AxisError {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool any() const { return x != 0.0 || y != 0.0 || z != 0.0; }
};

// Error model for simulated experiments. All rates are per cycle (one gate
// repetition plus its decoupling layer); drifts are quasi-static, redrawn
// once per circuit instance and held for all repetitions within it.
struct NoiseConfig {
    long shots = 0;                  // 0 => exact expectation values
    double readout_flip = 0.0;       // symmetric per-qubit assignment error
    AxisError mw_error_left;         // applied to every decoupling pulse
    AxisError mw_error_right;
    double zeta_drift_std = 0.0;     // quasi-static gate-parameter drift
    double gamma_drift_std = 0.0;
    double sq_phase_drift_std = 0.0; // quasi-static single-qubit phase drift
    double lambda1 = 0.0;            // amplitude-damping rate per cycle
    double lambda2 = 0.0;            // pure-dephasing rate per cycle
    std::uint64_t seed = 0;

    bool has_channel() const { return lambda1 > 0.0 || lambda2 > 0.0; }

    // Throws ConfigError on negative rates/stds, readout_flip >= 0.5, or
    // shots < 0. shots == 0 selects exact expectation values.
    void validate() const;
};

// Quasi-static offsets drawn once per circuit instance and held for all
// cycles within it.
struct NoiseRealization {
    double zeta = 0.0;
    double gamma = 0.0;
    double sq_phase_left = 0.0;
    double sq_phase_right = 0.0;
};

// Deterministic in (cfg.seed, instance_index); instances are independent.
NoiseRealization draw_realization(const NoiseConfig& cfg, std::uint64_t instance_index);

Matrix2cd mw_error_unitary(const AxisError& e);

// Imperfect pi pulse: exp(-i (x X + y Y + z Z)) * X, the full exponential.
Matrix2cd noisy_x_gate(const AxisError& e);

Matrix4cd pure_state(const Eigen::Vector4cd& psi);
Matrix2cd pure_state_1q(const Eigen::Vector2cd& psi);

void apply_unitary(Matrix4cd& rho, const Matrix4cd& u);
void apply_unitary_1q(Matrix2cd& rho, const Matrix2cd& u);

// Amplitude damping (branch probability 1 - e^{-lambda1}) followed by pure
// dephasing (coherence factor e^{-lambda2}) on each qubit. Throws
// InvalidState when the input trace is off unity beyond 1e-9 or the diagonal
// is negative beyond round-off.
void apply_decoherence_cycle(Matrix4cd& rho, double lambda1, double lambda2);
void apply_decoherence_cycle_1q(Matrix2cd& rho, double lambda1, double lambda2);

// Throws InvalidState when trace or positivity is violated beyond 1e-8.
void validate_density(const Matrix4cd& rho);

// Diagonal in the measurement basis, clamped of negative round-off and
// renormalized. Throws BadDistribution when the diagonal is broken beyond
// round-off.
std::array<double, 4> outcome_probabilities(const Matrix4cd& rho);
std::array<double, 2> outcome_probabilities_1q(const Matrix2cd& rho);

// Independent symmetric assignment errors on both qubits, applied to the
// outcome distribution.
std::array<double, 4> readout_flip_map(const std::array<double, 4>& p, double f);
std::array<double, 2> readout_flip_map_1q(const std::array<double, 2>& p, double f);

std::array<long, 4> sample_outcomes(const std::array<double, 4>& p, long shots,
                                    RngStream& rng);
std::array<long, 2> sample_outcomes_1q(const std::array<double, 2>& p, long shots,
                                       RngStream& rng);

// Readout flips followed by a multinomial draw; the one-stop wrapper used by
// the circuit runners. Throws BadDistribution when p does not sum to 1
// within 1e-9.
std::array<long, 4> sample_counts(const std::array<double, 4>& p, long shots,
                                  double readout_flip, RngStream& rng);
std::array<long, 2> sample_counts_1q(const std::array<double, 2>& p, long shots,
                                     double readout_flip, RngStream& rng);

// <Z> of one qubit from the joint outcome distribution; qubit 0 is the left
// (high) bit, 1 the right.
double marginal_z(const std::array<double, 4>& p, int qubit);

} // namespace meadd
