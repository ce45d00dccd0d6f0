#include <doctest.h>

#include <cmath>
#include <random>

#include "sl4/dirac.hpp"

using namespace sl4;

namespace {

constexpr Complex im{0.0, 1.0};

ComplexMatrix4 diag_c(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

}  // namespace

TEST_CASE("basis matrices: pinned entries") {
    CHECK(max_abs_diff(basis_matrix(BasisId::Gamma5), diag_c(-1, -1, 1, 1)) == 0.0);
    CHECK(max_abs_diff(basis_matrix(BasisId::Sigma03x2), diag_c(1, -1, -1, 1)) == 0.0);
    CHECK(max_abs_diff(basis_matrix(BasisId::Identity), ComplexMatrix4::identity()) == 0.0);
    // gamma0 swaps the two 2x2 blocks
    const ComplexMatrix4 g0 = basis_matrix(BasisId::Gamma0);
    CHECK(g0(0, 2) == Complex{1.0, 0.0});
    CHECK(g0(2, 0) == Complex{1.0, 0.0});
    CHECK(g0(0, 0) == Complex{0.0, 0.0});
}

TEST_CASE("gell_mann_check: all 15 non-identity elements qualify") {
    for (BasisId id : kAllBasisIds) {
        const GellMannReport r = gell_mann_check(basis_matrix(id));
        CHECK(r.hermitian);
        CHECK(r.involutive);
        if (id == BasisId::Identity)
            CHECK_FALSE(r.traceless);  // trace 4
        else
            CHECK(r.traceless);
    }
    // a Hermitian but non-involutive, non-traceless combination
    const ComplexMatrix4 shifted =
        basis_matrix(BasisId::Gamma0) + ComplexMatrix4::identity();
    const GellMannReport r = gell_mann_check(shifted);
    CHECK_FALSE(r.traceless);
    CHECK(r.hermitian);
    CHECK_FALSE(r.involutive);
}

TEST_CASE("generator algebra: products and named identities") {
    auto gen = [](GeneratorFamily f, int i) { return generator({f, i}); };
    using F = GeneratorFamily;

    // alpha_1 alpha_2 = i alpha_3, beta_2 beta_1 = -i beta_3
    CHECK(max_abs_diff(gen(F::Alpha, 1) * gen(F::Alpha, 2), im * gen(F::Alpha, 3)) == 0.0);
    CHECK(max_abs_diff(gen(F::Beta, 2) * gen(F::Beta, 1),
                       Complex{-1, 0} * (im * gen(F::Beta, 3))) == 0.0);

    // A1 = alpha_1 beta_1 = -gamma5 = diag-block(I, -I)
    CHECK(max_abs_diff(gen(F::A, 1), Complex{-1, 0} * basis_matrix(BasisId::Gamma5)) == 0.0);
    CHECK(max_abs_diff(gen(F::A, 1), diag_c(1, 1, -1, -1)) == 0.0);

    // the full alpha_i beta_j grid: family selected by j, index by i
    const std::array<F, 3> fam = {F::A, F::B, F::C};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(max_abs_diff(gen(F::Alpha, i) * gen(F::Beta, j),
                               gen(fam[static_cast<size_t>(j - 1)], i)) == 0.0);

    CHECK(verify_commutation_alpha_beta());
    // sanity: alphas do not commute among themselves
    CHECK(max_abs_diff(gen(F::Alpha, 1) * gen(F::Alpha, 2),
                       gen(F::Alpha, 2) * gen(F::Alpha, 1)) > 1.0);
}

TEST_CASE("one_param_element: pinned matrices") {
    CHECK(max_abs_diff(one_param_element(SubgroupId::U1a, 0.0), RealMatrix4::identity()) == 0.0);

    // U2B(ln 2) = diag(2, 1/2, 2, 1/2)
    const RealMatrix4 u2b = one_param_element(SubgroupId::U2B, std::log(2.0));
    CHECK(u2b(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(u2b(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(u2b(2, 2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(u2b(3, 3) == doctest::Approx(0.5).epsilon(1e-15));

    // U2A(0.5): cosh on the diagonal, -sinh in the (0,3)/(3,0) corners,
    // +sinh in the middle block
    const double ch = std::cosh(0.5), sh = std::sinh(0.5);
    const RealMatrix4 u2A = one_param_element(SubgroupId::U2A, 0.5);
    for (int i = 0; i < 4; ++i) CHECK(u2A(i, i) == ch);
    CHECK(u2A(0, 3) == -sh);
    CHECK(u2A(3, 0) == -sh);
    CHECK(u2A(1, 2) == sh);
    CHECK(u2A(2, 1) == sh);
    CHECK(u2A(0, 1) == 0.0);

    // U0 scales uniformly
    const RealMatrix4 u0 = one_param_element(SubgroupId::U0, 0.25);
    CHECK(u0(0, 0) == std::exp(-0.25));
    CHECK(u0(0, 1) == 0.0);
}

TEST_CASE("one-parameter group law, all 16 kinds") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (SubgroupId id : kAllSubgroups) {
        for (int i = 0; i < 10; ++i) {
            const double s = u(rng), t = u(rng);
            const RealMatrix4 lhs = one_param_element(id, s) * one_param_element(id, t);
            CHECK(max_abs_diff(lhs, one_param_element(id, s + t)) <= 1e-12);
        }
    }
}

TEST_CASE("exp_generator: base cases and hyperbolic argument") {
    const GeneratorId a1{GeneratorFamily::A, 1};
    CHECK(max_abs_diff(exp_generator(a1, Complex{0, 0}), ComplexMatrix4::identity()) == 0.0);

    // exp(i a A1) = diag(e^{ia}, e^{ia}, e^{-ia}, e^{-ia})
    const Complex a{0.7, 0.0};
    const Complex eia = std::exp(im * a);
    CHECK(max_abs_diff(exp_generator(a1, a), diag_c(eia, eia, 1.0 / eia, 1.0 / eia)) <= 1e-15);

    // squaring doubles the parameter
    const GeneratorId al1{GeneratorFamily::Alpha, 1};
    const ComplexMatrix4 once = exp_generator(al1, Complex{0.3, 0.2});
    CHECK(max_abs_diff(once * once, exp_generator(al1, Complex{0.6, 0.4})) <= 1e-12);

    // the closed real forms agree with the exponentials
    for (SubgroupId id : kAllSubgroups) {
        if (id == SubgroupId::U0) continue;
        const GeneratorId gid = *subgroup_generator(id);
        const Complex arg = (param_kind(id) == ParamKind::Angle) ? Complex{0.8, 0.0}
                                                                 : Complex{0.0, 0.8};
        const ComplexMatrix4 e = exp_generator(gid, arg);
        CHECK(max_abs_imag(e) <= 1e-13);
        CHECK(max_abs_diff(real_part(e), one_param_element(id, 0.8)) <= 1e-13);
    }
}

TEST_CASE("commuting triplets: transcribed table and its anomalies") {
    const auto triplets = commuting_triplets();
    REQUIRE(triplets.size() == 6);

    CHECK(triplets[0].name == "K");
    CHECK(triplets[0].members[0].id == GeneratorId{GeneratorFamily::A, 1});
    CHECK(triplets[0].members[1].id == GeneratorId{GeneratorFamily::B, 2});
    CHECK(triplets[0].members[2].id == GeneratorId{GeneratorFamily::C, 3});

    // product and commutation inside K
    const ComplexMatrix4 a1 = generator({GeneratorFamily::A, 1});
    const ComplexMatrix4 b2 = generator({GeneratorFamily::B, 2});
    const ComplexMatrix4 c3 = generator({GeneratorFamily::C, 3});
    CHECK(max_abs_diff(a1 * b2, Complex{-1, 0} * c3) == 0.0);
    CHECK(max_abs_diff(a1 * b2, b2 * a1) == 0.0);

    // transcription is verbatim; the primed rows K' and L' do not close
    // (their third members fail the product law), M' does
    for (const auto& t : triplets) {
        const TripletReport r = triplet_report(t);
        const bool expected = (t.name != "K'" && t.name != "L'");
        CHECK(r.products_close == expected);
        CHECK(r.pairwise_commute == expected);
    }
}

TEST_CASE("su2 catalog: 20 closing triples") {
    const auto catalog = su2_catalog();
    REQUIRE(catalog.size() == 20);
    CHECK(catalog[0].members[0] == GeneratorId{GeneratorFamily::Alpha, 1});
    CHECK(catalog[0].members[1] == GeneratorId{GeneratorFamily::Alpha, 2});
    CHECK(catalog[0].members[2] == GeneratorId{GeneratorFamily::Alpha, 3});

    bool has_b1_B2_C2 = false;
    for (const auto& t : catalog) {
        CHECK(t.closes);
        for (int s : t.signs) CHECK(std::abs(s) == 1);
        if (t.members[0] == GeneratorId{GeneratorFamily::Beta, 1} &&
            t.members[1] == GeneratorId{GeneratorFamily::B, 2} &&
            t.members[2] == GeneratorId{GeneratorFamily::C, 2})
            has_b1_B2_C2 = true;
    }
    CHECK(has_b1_B2_C2);
}

TEST_CASE("name tables round-trip") {
    for (SubgroupId id : kAllSubgroups) CHECK(parse_subgroup(subgroup_name(id)) == id);
    for (BasisId id : kAllBasisIds) CHECK(parse_basis(basis_name(id)) == id);
    for (GeneratorId id : all_generators()) {
        const auto back = parse_generator(generator_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(parse_subgroup("U9z").has_value());
    CHECK_FALSE(parse_generator("Q7").has_value());
}
