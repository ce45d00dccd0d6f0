#include <doctest.h>

#include <cmath>
#include <random>

#include "sl4/dirac.hpp"
#include "sl4/factorization.hpp"

using namespace sl4;

namespace {

QuatParams real_quat(double k0, double k1, double k2, double k3) {
    QuatParams q;
    q.k0 = k0;
    q.k = {Complex{k1, 0}, Complex{k2, 0}, Complex{k3, 0}};
    return q;
}

std::mt19937_64 rng(17);

QuatParams random_real_quat() {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    return real_quat(u(rng), u(rng), u(rng), u(rng));
}

QuatParams random_complex_quat() {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    QuatParams q;
    q.k0 = Complex{u(rng), u(rng)};
    for (auto& v : q.k) v = Complex{u(rng), u(rng)};
    return q;
}

}  // namespace

TEST_CASE("r_alpha / r_beta: unit element and row patterns") {
    CHECK(max_abs_diff(r_alpha(real_quat(1, 0, 0, 0)), RealMatrix4::identity()) == 0.0);
    CHECK(max_abs_diff(r_beta(real_quat(1, 0, 0, 0)), RealMatrix4::identity()) == 0.0);

    const RealMatrix4 ra = r_alpha(real_quat(0.5, 1, 2, 3));
    CHECK(ra(0, 1) == 1.0);
    CHECK(ra(1, 0) == -1.0);
    CHECK(ra(1, 2) == -3.0);
    CHECK(ra(3, 2) == 1.0);

    const RealMatrix4 rb = r_beta(real_quat(0.5, 1, 2, 3));
    CHECK(rb(1, 2) == 3.0);
    CHECK(rb(3, 2) == -1.0);

    QuatParams complex_q;
    complex_q.k0 = Complex{0.0, 1.0};
    CHECK_THROWS_AS((void)r_alpha(complex_q), std::invalid_argument);
}

TEST_CASE("compose_alpha: quaternion law") {
    const QuatParams unit = real_quat(1, 0, 0, 0);
    const QuatParams k = random_real_quat();
    const QuatParams left = compose_alpha(unit, k);
    CHECK(std::abs(left.k0 - k.k0) == 0.0);
    for (size_t i = 0; i < 3; ++i) CHECK(std::abs(left.k[i] - k.k[i]) == 0.0);

    // (0, e1) squared gives (-1, 0)
    const QuatParams e1 = real_quat(0, 1, 0, 0);
    const QuatParams sq = compose_alpha(e1, e1);
    CHECK(sq.k0 == Complex{-1.0, 0.0});
    for (const auto& v : sq.k) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("r_alpha / r_beta reproduce the compact one-parameter rotations") {
    // R(cos t, +-sin t e_i) walks the rotation subgroups; the i = 2 alpha
    // case carries the opposite orientation, consistent with the chart-sign
    // table in cone.hpp
    const std::array<SubgroupId, 3> alpha_sub = {SubgroupId::U1a, SubgroupId::U2a,
                                                 SubgroupId::U3a};
    const std::array<double, 3> alpha_sign = {+1.0, -1.0, +1.0};
    const std::array<SubgroupId, 3> beta_sub = {SubgroupId::U1b, SubgroupId::U2b,
                                                SubgroupId::U3b};
    for (double t : {0.3, -1.1, M_PI / 2}) {
        for (size_t i = 0; i < 3; ++i) {
            QuatParams qa;
            qa.k0 = std::cos(t);
            qa.k[i] = alpha_sign[i] * std::sin(t);
            CHECK(max_abs_diff(r_alpha(qa), one_param_element(alpha_sub[i], t)) <= 1e-15);

            QuatParams qb;
            qb.k0 = std::cos(t);
            qb.k[i] = std::sin(t);
            CHECK(max_abs_diff(r_beta(qb), one_param_element(beta_sub[i], t)) <= 1e-15);
        }
    }
}

TEST_CASE("r_alpha / r_beta are homomorphisms and mutually commute") {
    for (int i = 0; i < 100; ++i) {
        const QuatParams a = random_real_quat();
        const QuatParams b = random_real_quat();
        CHECK(max_abs_diff(r_alpha(a) * r_alpha(b), r_alpha(compose_alpha(a, b))) <= 1e-12);
        CHECK(max_abs_diff(r_beta(a) * r_beta(b), r_beta(compose_beta(a, b))) <= 1e-12);
        CHECK(max_abs_diff(r_alpha(a) * r_beta(b), r_beta(b) * r_alpha(a)) <= 1e-12);
    }
}

TEST_CASE("k_factor: pinned entries and Pi similarity") {
    CHECK(max_abs_diff(k_factor(real_quat(1, 0, 0, 0)), ComplexMatrix4::identity()) == 0.0);

    const QuatParams q = real_quat(0.3, 0.7, -0.4, 1.1);
    const ComplexMatrix4 k = k_factor(q);
    CHECK(k(0, 1) == Complex{0.0, 0.7});   // i k1
    CHECK(k(1, 2) == Complex{-1.1, 0.0});  // -k3

    // Pi = diag(1, i, i, i) conjugation of the real alpha-subgroup matrix
    ComplexMatrix4 pi, pi_inv;
    pi(0, 0) = pi_inv(0, 0) = 1.0;
    for (int i = 1; i < 4; ++i) {
        pi(i, i) = Complex{0.0, 1.0};
        pi_inv(i, i) = Complex{0.0, -1.0};
    }
    CHECK(max_abs_diff(k, pi_inv * complexify(r_alpha(q)) * pi) <= 1e-15);
}

TEST_CASE("lorentz_from_k: the four pinned one-parameter families") {
    const double d = 1.3, d2 = d * d;
    const double phi = 0.9, beta = 0.7;

    {
        // real (k0, k3): rotation in the (1,2) block
        const LorentzFactorization lf =
            lorentz_from_k(real_quat(d * std::cos(phi / 2), 0, 0, d * std::sin(phi / 2)));
        CHECK(lf.l_matrix(0, 0) == doctest::Approx(d2).epsilon(1e-14));
        CHECK(lf.l_matrix(1, 1) == doctest::Approx(d2 * std::cos(phi)).epsilon(1e-14));
        CHECK(lf.l_matrix(1, 2) == doctest::Approx(-d2 * std::sin(phi)).epsilon(1e-14));
        CHECK(lf.l_matrix(2, 1) == doctest::Approx(d2 * std::sin(phi)).epsilon(1e-14));
        CHECK(lf.l_matrix(3, 3) == doctest::Approx(d2).epsilon(1e-14));
        CHECK(std::fabs(lf.l_matrix(0, 3)) <= 1e-14);
        CHECK(lf.det_l == doctest::Approx(std::pow(d, 8)).epsilon(1e-12));
    }
    {
        // imaginary k3: boost mixing (0,3)
        QuatParams q;
        q.k0 = d * std::cosh(beta / 2);
        q.k[2] = Complex{0.0, d * std::sinh(beta / 2)};
        const LorentzFactorization lf = lorentz_from_k(q);
        CHECK(lf.l_matrix(0, 0) == doctest::Approx(d2 * std::cosh(beta)).epsilon(1e-14));
        CHECK(lf.l_matrix(0, 3) == doctest::Approx(-d2 * std::sinh(beta)).epsilon(1e-14));
        CHECK(lf.l_matrix(1, 1) == doctest::Approx(d2).epsilon(1e-14));
        CHECK(lf.l_matrix(2, 2) == doctest::Approx(d2).epsilon(1e-14));
    }
    {
        // real k1: rotation in the (2,3) block
        const LorentzFactorization lf =
            lorentz_from_k(real_quat(d * std::cos(phi / 2), d * std::sin(phi / 2), 0, 0));
        CHECK(lf.l_matrix(0, 0) == doctest::Approx(d2).epsilon(1e-14));
        CHECK(lf.l_matrix(1, 1) == doctest::Approx(d2).epsilon(1e-14));
        CHECK(lf.l_matrix(2, 2) == doctest::Approx(d2 * std::cos(phi)).epsilon(1e-14));
        CHECK(lf.l_matrix(2, 3) == doctest::Approx(-d2 * std::sin(phi)).epsilon(1e-14));
    }
    {
        // imaginary k1: boost mixing (0,1)
        QuatParams q;
        q.k0 = d * std::cosh(beta / 2);
        q.k[0] = Complex{0.0, d * std::sinh(beta / 2)};
        const LorentzFactorization lf = lorentz_from_k(q);
        CHECK(lf.l_matrix(0, 1) == doctest::Approx(-d2 * std::sinh(beta)).epsilon(1e-14));
        CHECK(lf.l_matrix(2, 2) == doctest::Approx(d2).epsilon(1e-14));
    }
}

TEST_CASE("lorentz_from_k: real commuting product for arbitrary complex k") {
    for (int i = 0; i < 100; ++i) {
        const LorentzFactorization lf = lorentz_from_k(random_complex_quat());
        CHECK(lf.commute_residual <= 1e-12);
        CHECK(lf.imag_residual <= 1e-12);
    }
}

TEST_CASE("two_param_factors: restriction of the full factor") {
    const auto [k2, k2c] = two_param_factors(2, Complex{1.0, 0.0}, Complex{0.0, 0.0});
    CHECK(max_abs_diff(k2, ComplexMatrix4::identity()) == 0.0);
    CHECK(max_abs_diff(k2c, ComplexMatrix4::identity()) == 0.0);

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int axis = 1; axis <= 3; ++axis) {
        const Complex k0{u(rng), u(rng)};
        const Complex ka{u(rng), u(rng)};
        const auto [k, kc] = two_param_factors(axis, k0, ka);
        CHECK(max_abs_diff(k * kc, kc * k) <= 1e-12);
        CHECK(max_abs_imag(k * kc) <= 1e-12);
    }
    CHECK_THROWS_AS((void)two_param_factors(0, {}, {}), std::invalid_argument);
}
