#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "meadd/noise_model.hpp"

using namespace meadd;

TEST_CASE("rng: frozen reference values and determinism") {
    // splitmix64 golden vector: first output from state 0.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
    // mt19937_64 standard: 10000th draw from the default seed.
    RngStream a(5489u);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = a.next_u64();
    CHECK(v == 9981545732273789042ULL);

    RngStream b1 = derive_stream(42, {1, 2, 3});
    RngStream b2 = derive_stream(42, {1, 2, 3});
    RngStream b3 = derive_stream(42, {1, 3, 2});
    const std::uint64_t x = b1.next_u64();
    CHECK(x == b2.next_u64());
    CHECK(x != b3.next_u64()); // path order matters
}

TEST_CASE("rng: distribution transforms behave") {
    RngStream rng(7);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));

    double gs = 0.0, gs2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.gaussian();
        gs += g;
        gs2 += g * g;
    }
    CHECK(std::abs(gs / n) < 0.01);
    CHECK(gs2 / n == doctest::Approx(1.0).epsilon(0.02));

    const std::array<double, 4> probs{0.1, 0.2, 0.3, 0.4};
    std::array<long, 4> hist{};
    for (int i = 0; i < n; ++i) ++hist[rng.categorical(probs)];
    for (int k = 0; k < 4; ++k)
        CHECK(static_cast<double>(hist[k]) / n ==
              doctest::Approx(probs[k]).epsilon(0.05));

    CHECK(rng.binomial(0, 0.3) == 0);
    long bsum = 0;
    for (int i = 0; i < 2000; ++i) bsum += rng.binomial(100, 0.3);
    CHECK(static_cast<double>(bsum) / 2000 == doctest::Approx(30.0).epsilon(0.02));
}

TEST_CASE("mw error unitary: frozen values and exponential oracle") {
    CHECK((mw_error_unitary({}) - Matrix2cd::Identity()).norm() == 0.0);
    // A full over-rotation fraction r = 1 on a pi pulse: exp(-i pi X / 2) = -iX.
    const Matrix2cd full = mw_error_unitary({pi / 2, 0.0, 0.0});
    CHECK((full - complexd(0.0, -1.0) * pauli_x()).norm() < 1e-14);

    RngStream rng(3);
    for (int k = 0; k < 10; ++k) {
        AxisError e{0.2 * rng.gaussian(), 0.2 * rng.gaussian(), 0.2 * rng.gaussian()};
        const Matrix2cd h = e.x * pauli_x() + e.y * pauli_y() + e.z * pauli_z();
        const Matrix2cd oracle = (complexd(0.0, -1.0) * h).exp();
        CHECK((mw_error_unitary(e) - oracle).norm() < 1e-12);
    }
}

TEST_CASE("channel: trace preservation and positivity") {
    RngStream rng(5);
    Eigen::Vector4cd psi;
    for (int i = 0; i < 4; ++i) psi(i) = complexd(rng.gaussian(), rng.gaussian());
    psi.normalize();
    Matrix4cd rho = pure_state(psi);
    for (int cycle = 0; cycle < 50; ++cycle) {
        apply_decoherence_cycle(rho, 0.02, 0.05);
        validate_density(rho);
    }
    CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("channel: single-qubit closed-form decay") {
    // |+> under n cycles: coherence e^{-n (lambda1/2 + lambda2)}, excited
    // population e^{-n lambda1} / 2.
    const double lambda1 = 0.02, lambda2 = 0.03;
    Matrix2cd rho = pure_state_1q(Eigen::Vector2cd(1.0, 1.0).normalized());
    for (int n = 1; n <= 40; ++n) {
        apply_decoherence_cycle_1q(rho, lambda1, lambda2);
        const double coh = std::exp(-n * (lambda1 / 2.0 + lambda2)) / 2.0;
        const double pop = std::exp(-n * lambda1) / 2.0;
        CHECK(std::abs(rho(0, 1)) == doctest::Approx(coh).epsilon(1e-10));
        CHECK(rho(1, 1).real() == doctest::Approx(pop).epsilon(1e-10));
    }
}

TEST_CASE("channel: odd-sector coherence survives postselection exactly") {
    // Bell state in the single-excitation sector: the odd-sector population
    // and the |01><10| coherence both decay with amplitude damping, but the
    // postselected coherence depends on dephasing only.
    const double lambda1 = 0.04, lambda2 = 0.015;
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(1) = psi(2) = 1.0 / std::sqrt(2.0);
    Matrix4cd rho = pure_state(psi);
    for (int n = 1; n <= 30; ++n) {
        apply_decoherence_cycle(rho, lambda1, lambda2);
        const double odd_mass = (rho(1, 1) + rho(2, 2)).real();
        const double coherence = std::abs(rho(1, 2));
        CHECK(odd_mass == doctest::Approx(std::exp(-n * lambda1)).epsilon(1e-10));
        CHECK(coherence ==
              doctest::Approx(std::exp(-n * (lambda1 + 2 * lambda2)) / 2.0)
                  .epsilon(1e-10));
        // T1 cancels in the ratio; only dephasing is left.
        CHECK(2.0 * coherence / odd_mass ==
              doctest::Approx(std::exp(-2.0 * n * lambda2)).epsilon(1e-10));
    }
}

TEST_CASE("outcome probabilities, readout flips, marginals") {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(1) = 1.0; // |01>: left 0, right 1
    const auto p = outcome_probabilities(pure_state(psi));
    CHECK(p[1] == doctest::Approx(1.0));
    CHECK(marginal_z(p, 0) == doctest::Approx(1.0));
    CHECK(marginal_z(p, 1) == doctest::Approx(-1.0));

    // Flip map: marginal <Z> scales by (1 - 2f) per qubit; f = 1/2 erases it.
    RngStream rng(9);
    std::array<double, 4> q{};
    double norm = 0.0;
    for (auto& v : q) {
        v = rng.uniform();
        norm += v;
    }
    for (auto& v : q) v /= norm;
    const double f = 0.07;
    const auto qf = readout_flip_map(q, f);
    CHECK(std::abs(qf[0] + qf[1] + qf[2] + qf[3] - 1.0) < 1e-12);
    for (int qubit : {0, 1})
        CHECK(marginal_z(qf, qubit) ==
              doctest::Approx((1.0 - 2.0 * f) * marginal_z(q, qubit)).epsilon(1e-12));
    const auto qhalf = readout_flip_map(q, 0.5);
    CHECK(std::abs(marginal_z(qhalf, 0)) < 1e-12);

    const std::array<double, 2> p1{0.3, 0.7};
    const auto p1f = readout_flip_map_1q(p1, f);
    CHECK(p1f[0] - p1f[1] ==
          doctest::Approx((1.0 - 2.0 * f) * (p1[0] - p1[1])).epsilon(1e-12));

    Matrix4cd broken = Matrix4cd::Identity();
    CHECK_THROWS_AS((void)outcome_probabilities(broken), BadDistribution);
    CHECK_THROWS_AS(validate_density(broken), InvalidState);
}

TEST_CASE("sampling: determinism and concentration") {
    const std::array<double, 4> p{0.4, 0.1, 0.25, 0.25};
    RngStream r1(123), r2(123);
    const auto c1 = sample_outcomes(p, 100000, r1);
    const auto c2 = sample_outcomes(p, 100000, r2);
    CHECK(c1 == c2);
    long total = 0;
    for (int k = 0; k < 4; ++k) {
        total += c1[k];
        // 5 sigma of a binomial with n = 1e5.
        const double sigma = std::sqrt(p[k] * (1 - p[k]) * 100000.0);
        CHECK(std::abs(c1[k] - p[k] * 100000.0) < 5.0 * sigma);
    }
    CHECK(total == 100000);

    const NoiseConfig quiet;
    const auto d = draw_realization(quiet, 7);
    CHECK(d.zeta == 0.0);
    CHECK(d.gamma == 0.0);
    CHECK(d.sq_phase_left == 0.0);
    CHECK(d.sq_phase_right == 0.0);
}

TEST_CASE("noise realizations: determinism, independence, statistics") {
    NoiseConfig cfg;
    cfg.seed = 42;
    cfg.zeta_drift_std = 0.1;
    cfg.gamma_drift_std = 0.02;
    cfg.sq_phase_drift_std = 0.05;

    const auto a = draw_realization(cfg, 3);
    const auto b = draw_realization(cfg, 3);
    CHECK(a.zeta == b.zeta);
    CHECK(a.gamma == b.gamma);
    CHECK(a.sq_phase_left == b.sq_phase_left);
    CHECK(a.sq_phase_right == b.sq_phase_right);
    const auto c = draw_realization(cfg, 4);
    CHECK(a.zeta != c.zeta);

    double sum = 0.0, sum2 = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double z = draw_realization(cfg, static_cast<std::uint64_t>(i)).zeta;
        sum += z;
        sum2 += z * z;
    }
    const double mean = sum / n;
    const double std = std::sqrt(sum2 / n - mean * mean);
    CHECK(std == doctest::Approx(0.1).epsilon(0.03));
    CHECK(std::abs(mean) < 0.005);
}

TEST_CASE("noisy x gate and config validation") {
    CHECK((noisy_x_gate({}) - pauli_x()).norm() == 0.0);
    // 10% over-rotation: a rotation by 1.1 pi about x.
    const Matrix2cd ideal = rot_x(1.1 * pi);
    const Matrix2cd noisy = noisy_x_gate({0.05 * pi, 0.0, 0.0});
    // rot_x(pi) = -i X, so the product picks up the same -i.
    CHECK((complexd(0.0, -1.0) * noisy - ideal).norm() < 1e-14);
    // Pure Z error: exp(-i eps Z) X = Z(2 eps) X up to the rotation phase.
    const Matrix2cd ze = noisy_x_gate({0.0, 0.0, 0.02});
    CHECK((ze - rot_z(0.04) * pauli_x()).norm() < 1e-14);

    NoiseConfig bad;
    bad.readout_flip = 0.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = NoiseConfig{};
    bad.lambda1 = -1e-3;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = NoiseConfig{};
    bad.shots = -1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    NoiseConfig ok;
    ok.shots = 100;
    ok.readout_flip = 0.49;
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("sample_counts wrapper: flips then draws; rejects broken input") {
    RngStream r1(11), r2(11);
    const std::array<double, 2> p{0.25, 0.75};
    const auto direct = sample_outcomes_1q(readout_flip_map_1q(p, 0.1), 5000, r1);
    const auto wrapped = sample_counts_1q(p, 5000, 0.1, r2);
    CHECK(direct == wrapped);

    const std::array<double, 4> broken{0.3, 0.3, 0.3, 0.3};
    CHECK_THROWS_AS((void)sample_counts(broken, 10, 0.0, r1), BadDistribution);

    // Deterministic all-mass case.
    const std::array<double, 4> point{1.0, 0.0, 0.0, 0.0};
    const auto counts = sample_counts(point, 17, 0.0, r1);
    CHECK(counts[0] == 17);
    CHECK(counts[1] + counts[2] + counts[3] == 0);
}

TEST_CASE("channel input validation") {
    Matrix2cd bad = 2.0 * Matrix2cd::Identity();
    CHECK_THROWS_AS(apply_decoherence_cycle_1q(bad, 0.01, 0.0), InvalidState);
    Matrix4cd bad4 = Matrix4cd::Zero();
    bad4(0, 0) = complexd(1.5, 0.0);
    bad4(1, 1) = complexd(-0.5, 0.0);
    CHECK_THROWS_AS(apply_decoherence_cycle(bad4, 0.01, 0.0), InvalidState);
}

TEST_CASE("channel model reproduces the decay-jump closed form at small rates") {
    // Repeated-phase-gate experiment: prepare |+>, apply Z(phi) n times with
    // decoherence, measure in the Z(-s) X Z(s) basis. The jump-approximation
    // closed form p = 1/2 + e^{-n(l1+l2)} cos(n phi + s)/2 is accurate when
    // n*l1 is small; hold a 3-sigma multinomial envelope at 10^4 shots.
    const double lambda1 = 5e-4, lambda2 = 1e-3, phi = 0.3;
    const double shots = 1e4;
    Matrix2cd rho = pure_state_1q(Eigen::Vector2cd(1.0, 1.0).normalized());
    const Matrix2cd zphi = rot_z(phi);
    for (int n = 1; n <= 40; ++n) {
        apply_unitary_1q(rho, zphi);
        apply_decoherence_cycle_1q(rho, lambda1, lambda2);
        for (double s : {0.0, pi / 2}) {
            // Basis rotation H Z(s) maps the measurement onto Z.
            Matrix2cd h;
            h << 1.0, 1.0, 1.0, -1.0;
            h /= std::sqrt(2.0);
            Matrix2cd meas = rho;
            apply_unitary_1q(meas, h * rot_z(s));
            const auto p = outcome_probabilities_1q(meas);
            const double closed =
                0.5 + 0.5 * std::exp(-n * (lambda1 + lambda2)) * std::cos(n * phi + s);
            const double sigma = std::sqrt(closed * (1.0 - closed) / shots);
            CHECK(std::abs(p[0] - closed) < 3.0 * sigma);
        }
    }
}
