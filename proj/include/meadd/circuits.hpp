#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "meadd/gate_algebra.hpp"
#include "meadd/noise_model.hpp"

namespace meadd {

// Product preparations used across the circuit families. Labels read left
// qubit then right qubit; Plus is (|0> + |1>)/sqrt(2).
enum class Prep { ZeroPlus, PlusZero, PlusOne, OnePlus, OneZero, ZeroOne };

// What a complex expectation refers to: the <X>+i<Y> coherence of one qubit
// (the other traced out), or the odd-parity Bell pair <X_odd>+i<Y_odd>.
enum class Meas { Right, Left, OddBell };

enum class SwapAxis { XAxis, YAxis };

using ExpectationKey = std::pair<Prep, Meas>;

// One depth point of a circuit family. complex_expectations holds values of
// the form <X>+i<Y>; counts/populations describe the computational-basis
// circuit when the family has one (swap and crosstalk families). counts stays
// zero in exact-expectation mode; populations always carries frequencies.
struct DepthRecord {
    long depth = 0;
    std::map<ExpectationKey, complexd> complex_expectations;
    std::array<long, 4> counts{};
    std::array<double, 4> populations{};
    double parity_postselected_fraction = 1.0;
};

// Probe-overlap records of the single-qubit families: probabilities of the
// tau = 0 and tau = pi/2 probe states after `depth` cycles.
struct ProbeRecord {
    long depth = 0;
    double z_offset = 0.0;
    double p0 = 0.0;
    double p_quarter = 0.0;
};

struct PhaseMethodRecord {
    double z_phase = 0.0;
    std::vector<DepthRecord> records;
};

struct RunOptions {
    std::uint64_t realization = 0;    // namespaces drift draws and rng streams
    double chi_step_per_cycle = 0.0;  // phase-tracking test mode (swap family)
    bool postselect = true;           // drop even-parity outcomes in Bell records
};

// Assembles the measured odd-block matrix from a record that carries the
// |0+> / |+0> prep pair: rows (right, left) measured side, columns the prep.
Matrix2cd odd_matrix(const DepthRecord& rec);

// Gate interleaved with X(x)X decoupling; per depth 2n the zmat equals
// e^{i n phi} C_odd^{2n} exactly in the noiseless exact mode. Throws OddDepth
// on odd or non-positive depths.
std::vector<DepthRecord> run_cphase_family(const GateParams& gate,
                                           const NoiseConfig& noise,
                                           const std::vector<long>& depths,
                                           const RunOptions& options = {});

// Prep |10>, gate + X(x)X (X_axis) or Y(x)X (Y_axis) decoupling, measuring
// computational populations plus the odd-parity Bloch coherences.
std::vector<DepthRecord> run_swap_family(const GateParams& gate,
                                         const NoiseConfig& noise,
                                         const std::vector<long>& depths,
                                         SwapAxis axis,
                                         const RunOptions& options = {});

// Bare gate repetitions (no decoupling): zmat(n) = e^{-i n gamma} B^n with B
// the odd block. Any positive depths allowed.
std::vector<DepthRecord> run_floquet_family(const GateParams& gate,
                                            const NoiseConfig& noise,
                                            const std::vector<long>& depths,
                                            const RunOptions& options = {});

// Per-cycle unitary Z(z) R(mu, zeta, chi); probe prepared in the nominal
// cycle eigenbasis, measured against the tau = 0 and tau = pi/2 probes:
// noiseless 2*p0 - 1 + i(2*p_quarter - 1) = e^{i 2 n Omega}.
std::vector<ProbeRecord> run_single_qubit_family(
    const SingleQubitParams& gate, const NoiseConfig& noise,
    const std::vector<long>& depths, const std::vector<double>& z_offsets,
    const std::array<double, 2>& tau_basis = {0.0, pi / 2},
    const RunOptions& options = {});

// Composite cycle: X(-pi/2) then X(pi) per repetition. Quasi-static
// single-qubit phase drift shifts both pulse phases together and cancels in
// the composite detuning zeta = chi_half - chi_pi.
std::vector<ProbeRecord> run_relative_axis_family(const SingleQubitParams& x_pi,
                                                  const SingleQubitParams& x_half,
                                                  const NoiseConfig& noise,
                                                  const std::vector<long>& depths,
                                                  const RunOptions& options = {});

// Stray-coupling swap gate (theta per cycle, azimuth chi) under XY4
// decoupling on both qubits; swap-family records.
std::vector<DepthRecord> run_crosstalk_family(double theta_xtalk, double chi,
                                              const NoiseConfig& noise,
                                              const std::vector<long>& depths,
                                              const RunOptions& options = {});

// Depth-1 coherence products of all four product preps, both qubits measured:
// z(0+,R) = W11 e^{-i gamma}, z(0+,L) = W21 e^{-i gamma}, and so on with the
// |00> amplitude as the phase reference. Measurement flipping enters as a
// doubled shot count per circuit (symmetric readout).
DepthRecord run_baseline_unitary_tomography(const GateParams& gate,
                                            const NoiseConfig& noise,
                                            const RunOptions& options = {});

// Cycle (Z(z) (x) I) W repeated; one record set per inserted z phase. The
// zmat at depth n equals e^{-i n (gamma - z/2)} (Z_odd(z) B)^n exactly in the
// noiseless exact mode.
std::vector<PhaseMethodRecord> run_baseline_phase_method(
    const GateParams& gate, const NoiseConfig& noise,
    const std::vector<long>& depths = {1, 2, 4, 8},
    const std::array<double, 2>& z_phases = {0.0, pi},
    const RunOptions& options = {});

} // namespace meadd
