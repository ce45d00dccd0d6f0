#include "sl4/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "sl4/cone.hpp"
#include "sl4/depolarization.hpp"
#include "sl4/factorization.hpp"
#include "sl4/lorentz.hpp"

namespace sl4::verify {

namespace {

std::string fmt_residual(double v, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max residual %.3g (tol %.3g)", v, tol);
    return buf;
}

CheckResult make_result(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

CheckResult residual_result(std::string name, double residual, double tol) {
    return make_result(std::move(name), residual <= tol, fmt_residual(residual, tol));
}

constexpr std::array<SubgroupId, 6> kRotationVariants = {
    SubgroupId::U1a, SubgroupId::U2a, SubgroupId::U3a,
    SubgroupId::U1b, SubgroupId::U2b, SubgroupId::U3b,
};

constexpr std::array<SubgroupId, 6> kBoostVariants = {
    SubgroupId::U2A, SubgroupId::U3A, SubgroupId::U1B,
    SubgroupId::U3B, SubgroupId::U1C, SubgroupId::U2C,
};

constexpr std::array<SubgroupId, 4> kDiagonalVariants = {
    SubgroupId::U0, SubgroupId::U1A, SubgroupId::U2B, SubgroupId::U3C,
};

}  // namespace

// ---------------------------------------------------------------------------
// Sampler
// ---------------------------------------------------------------------------

double Sampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Vector3 Sampler::unit_vector() {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector3 v;
    double n = 0.0;
    do {
        v = {g(rng_), g(rng_), g(rng_)};
        n = norm(v);
    } while (n < 1e-6);
    return {v[0] / n, v[1] / n, v[2] / n};
}

PolarizationState Sampler::state(double boundary_prob) {
    PolarizationState ps;
    ps.intensity = uniform(0.1, 10.0);
    const Vector3 dir = unit_vector();
    const bool boundary = uniform(0.0, 1.0) < boundary_prob;
    const double mag = boundary ? 1.0 : uniform(0.0, 0.999);
    for (size_t i = 0; i < 3; ++i) ps.p[i] = mag * dir[i];
    return ps;
}

StokesVector Sampler::stokes(double boundary_prob) { return stokes_from_state(state(boundary_prob)); }

RealMatrix4 Sampler::matrix(double bound) {
    RealMatrix4 m;
    for (auto& v : m.m) v = uniform(-bound, bound);
    return m;
}

// ---------------------------------------------------------------------------
// Closed-form D oracle (per-variant fractions, pattern-consistent)
// ---------------------------------------------------------------------------

double d_oracle(SubgroupId variant, const PolarizationState& ps, double chart_param) {
    const double p2 = dot(ps.p, ps.p);
    switch (variant_chart(variant)) {
        case ChartVar::TanPhi: {
            const double a = ps.p[static_cast<size_t>(rotation_active_index(variant))];
            const double x = chart_param;
            const double denom = 1.0 + a * x;
            if (std::fabs(denom) < 1e-12)
                throw std::domain_error("d_oracle: pole");
            const double passive2 = p2 - a * a;
            return ((a - x) * (a - x) + passive2 * (1.0 + x * x)) / (denom * denom) - p2;
        }
        case ChartVar::TanhBeta: {
            const BoostTraits tr = boost_traits(variant);
            const double f = ps.p[static_cast<size_t>(tr.f)];
            const double g = ps.p[static_cast<size_t>(tr.g)];
            const double h = tr.h_sign * ps.p[static_cast<size_t>(tr.h)];
            const double y = chart_param;
            const double denom = 1.0 + h * y;
            if (std::fabs(denom) < 1e-12)
                throw std::domain_error("d_oracle: pole");
            const double num = (f - g * y) * (f - g * y) + (g - f * y) * (g - f * y) +
                               (y + h) * (y + h);
            return num / (denom * denom) - p2;
        }
        case ChartVar::Lambda:
            throw std::invalid_argument("d_oracle: diagonal variants not covered");
    }
    throw std::invalid_argument("d_oracle: unknown variant");
}

// ---------------------------------------------------------------------------
// Heavy parametric checks
// ---------------------------------------------------------------------------

CheckResult check_range_closed_vs_oracle(int states_per_variant, int steps, uint64_t seed) {
    double worst_steps = 0.0;
    for (SubgroupId variant : kRotationVariants) {
        Sampler smp(seed ^ (0x100 + static_cast<uint64_t>(variant)));
        const auto [wlo, whi] = default_window(variant);
        const double res = (whi - wlo) / steps;
        for (int i = 0; i < states_per_variant; ++i) {
            const PolarizationState ps = smp.state(0.3);
            const VariantRange vr = rotation_variant_range(variant, ps);
            const ParamInterval expect = chart_to_param(vr).clipped(wlo, whi);
            const BruteForceResult bf =
                brute_force_range(variant, stokes_from_state(ps), wlo, whi, steps);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.lo - bf.interval.lo) / res);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.hi - bf.interval.hi) / res);
        }
    }
    for (SubgroupId variant : kBoostVariants) {
        Sampler smp(seed ^ (0x200 + static_cast<uint64_t>(variant)));
        const auto [wlo, whi] = default_window(variant);
        const double res = (whi - wlo) / steps;
        for (int i = 0; i < states_per_variant; ++i) {
            const PolarizationState ps = smp.state(0.3);
            const VariantRange vr = boost_variant_range(variant, ps);
            const ParamInterval expect = chart_to_param(vr).clipped(wlo, whi);
            const BruteForceResult bf =
                brute_force_range(variant, stokes_from_state(ps), wlo, whi, steps);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.lo - bf.interval.lo) / res);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.hi - bf.interval.hi) / res);
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "12 variants x %d states: worst endpoint deviation %.2f grid steps (tol 2)",
                  states_per_variant, worst_steps);
    return make_result("cone/range_vs_oracle", worst_steps <= 2.0 + 1e-9, buf);
}

CheckResult check_diagonal_vs_oracle(int states, int steps, uint64_t seed) {
    double worst_steps = 0.0;
    for (SubgroupId variant : kDiagonalVariants) {
        Sampler smp(seed ^ (0x300 + static_cast<uint64_t>(variant)));
        const auto [wlo, whi] = default_window(variant);
        const double res = (whi - wlo) / steps;
        for (int i = 0; i < states; ++i) {
            const StokesVector s = smp.stokes(0.3);
            const VariantRange vr = diagonal_variant_range(variant, s);
            const ParamInterval expect = vr.interval.clipped(wlo, whi);
            const BruteForceResult bf = brute_force_range(variant, s, wlo, whi, steps);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.lo - bf.interval.lo) / res);
            worst_steps = std::max(worst_steps,
                                   std::fabs(expect.hi - bf.interval.hi) / res);
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "4 variants x %d states: worst endpoint deviation %.2f grid steps (tol 2)",
                  states, worst_steps);
    return make_result("cone/diagonal_vs_oracle", worst_steps <= 2.0 + 1e-9, buf);
}

CheckResult check_boost_root_bounds(int samples, uint64_t seed) {
    Sampler smp(seed);
    bool ok = true;
    for (int i = 0; i < samples && ok; ++i) {
        const SubgroupId variant = kBoostVariants[static_cast<size_t>(i % 6)];
        const VariantRange vr = boost_variant_range(variant, smp.state(0.3));
        const double y1 = vr.interval.lo;
        const double y2 = vr.interval.hi;
        ok = (-1.0 <= y1) && (y1 <= 0.0) && (0.0 <= y2) && (y2 <= 1.0);
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "-1 <= y1 <= 0 <= y2 <= +1 on %d random states", samples);
    return make_result("cone/boost_root_bounds", ok, buf);
}

CheckResult check_subgroup_laws(int pairs_per_subgroup, double tol, uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (SubgroupId id : kAllSubgroups) {
        for (int i = 0; i < pairs_per_subgroup; ++i) {
            const double s = smp.uniform(-2.5, 2.5);
            const double t = smp.uniform(-2.5, 2.5);
            const RealMatrix4 lhs = one_param_element(id, s) * one_param_element(id, t);
            worst = std::max(worst, max_abs_diff(lhs, one_param_element(id, s + t)));
            const double d = det(one_param_element(id, t));
            if (id == SubgroupId::U0)
                worst = std::max(worst, std::fabs(d - std::exp(-4.0 * t)) * std::exp(4.0 * t));
            else
                worst = std::max(worst, std::fabs(d - 1.0));
        }
    }
    return residual_result("dirac/subgroup_group_law", worst, tol);
}

CheckResult check_d_oracle_agreement(int samples, uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    const std::array<SubgroupId, 12> variants = {
        SubgroupId::U1a, SubgroupId::U2a, SubgroupId::U3a, SubgroupId::U1b,
        SubgroupId::U2b, SubgroupId::U3b, SubgroupId::U2A, SubgroupId::U3A,
        SubgroupId::U1B, SubgroupId::U3B, SubgroupId::U1C, SubgroupId::U2C,
    };
    for (int i = 0; i < samples; ++i) {
        const SubgroupId variant = variants[static_cast<size_t>(i % 12)];
        const PolarizationState ps = smp.state(0.25);
        const VariantRange vr = variant_range(variant, ps);
        double lo = vr.interval.lo, hi = vr.interval.hi;
        if (vr.chart == ChartVar::TanhBeta) {
            lo = std::max(lo, -0.95);
            hi = std::min(hi, 0.95);
        } else {
            lo = std::max(lo, -50.0);
            hi = std::min(hi, 50.0);
        }
        const double param = smp.uniform(lo, hi);
        worst = std::max(worst,
                         std::fabs(d_entity(variant, ps, param).d_value -
                                   d_oracle(variant, ps, param)));
    }
    return residual_result("depol/oracle_agreement", worst, 1e-10);
}

CheckResult check_invariant_conservation(int samples, uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const PolarizationState ps = smp.state(0.2);
        const BoostSpec b{smp.uniform(-3.0, 3.0), smp.unit_vector()};
        const PolarizationState out = act_partial(b, ps);
        const double scale = std::max(1.0, ps.intensity * ps.intensity);
        worst = std::max(worst, std::fabs(invariant(out) - invariant(ps)) / scale);
    }
    return residual_result("lorentz/invariant_conservation", worst, 1e-10);
}

CheckResult check_full_polarization_preserved(int samples, uint64_t seed) {
    Sampler smp(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Vector3 n = smp.unit_vector();
        const BoostSpec b{smp.uniform(-3.0, 3.0), smp.unit_vector()};
        const FullyPolarizedResult out = act_full(b, n, smp.uniform(0.1, 10.0));
        worst = std::max(worst, std::fabs(norm(out.n) - 1.0));
    }
    return residual_result("lorentz/full_light_unit_norm", worst, 1e-12);
}

// ---------------------------------------------------------------------------
// The remaining registered checks
// ---------------------------------------------------------------------------

namespace {

CheckResult check_mat_mul_associative() {
    Sampler smp(11);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const RealMatrix4 a = smp.matrix(1e3);
        const RealMatrix4 b = smp.matrix(1e3);
        const RealMatrix4 c = smp.matrix(1e3);
        const RealMatrix4 lhs = (a * b) * c;
        const RealMatrix4 rhs = a * (b * c);
        double scale = 1.0;
        for (double v : lhs.m) scale = std::max(scale, std::fabs(v));
        worst = std::max(worst, max_abs_diff(lhs, rhs) / scale);
    }
    // 1e-12 relative to the product magnitude; an absolute bound cannot hold
    // for entries up to 1e3 in double precision
    return residual_result("core/mat_mul_associative", worst, 1e-12);
}

CheckResult check_mat_inverse() {
    Sampler smp(12);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const RealMatrix4 a = smp.matrix(2.0);
        if (std::fabs(det(a)) < 1e-3) continue;
        worst = std::max(worst, max_abs_diff(a * inverse(a), RealMatrix4::identity()));
    }
    return residual_result("core/mat_inverse_roundtrip", worst, 1e-12);
}

CheckResult check_state_roundtrip() {
    Sampler smp(13);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PolarizationState ps = smp.state(0.25);
        const StokesVector s = stokes_from_state(ps);
        const PolarizationState back = state_from_stokes(s);
        worst = std::max(worst, std::fabs(back.intensity - ps.intensity) / ps.intensity);
        for (size_t k = 0; k < 3; ++k)
            worst = std::max(worst, std::fabs(back.p[k] - ps.p[k]) /
                                        std::max(1.0, std::fabs(ps.p[k])));
    }
    return residual_result("core/state_roundtrip", worst, 1e-14);
}

CheckResult check_minkowski_identity() {
    Sampler smp(14);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PolarizationState ps = smp.state(0.25);
        const double lhs = minkowski_norm(stokes_from_state(ps));
        const double rhs = ps.intensity * ps.intensity * (1.0 - dot(ps.p, ps.p));
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, ps.intensity * ps.intensity));
    }
    return residual_result("core/minkowski_identity", worst, 1e-13);
}

CheckResult check_gell_mann_basis() {
    bool ok = true;
    for (BasisId id : kAllBasisIds) {
        const GellMannReport r = gell_mann_check(basis_matrix(id));
        if (id == BasisId::Identity)
            ok = ok && !r.traceless && r.hermitian && r.involutive;
        else
            ok = ok && r.traceless && r.hermitian && r.involutive;
    }
    return make_result("dirac/gell_mann_basis",
                       ok, "15 traceless Hermitian involutions plus the identity");
}

CheckResult check_generator_products() {
    using F = GeneratorFamily;
    constexpr Complex im{0.0, 1.0};
    const double eps = algebra_eps();
    double worst = 0.0;
    auto gen = [](F f, int i) { return generator({f, i}); };

    for (F f : {F::Alpha, F::Beta}) {
        for (int i = 1; i <= 3; ++i)
            worst = std::max(worst, max_abs_diff(gen(f, i) * gen(f, i),
                                                 ComplexMatrix4::identity()));
        worst = std::max(worst, max_abs_diff(gen(f, 1) * gen(f, 2), im * gen(f, 3)));
        worst = std::max(worst,
                         max_abs_diff(gen(f, 2) * gen(f, 1), Complex{-1, 0} * (im * gen(f, 3))));
    }
    // the nine products alpha_i beta_j: family by j, index by i
    const std::array<F, 3> prod_family = {F::A, F::B, F::C};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            worst = std::max(worst,
                             max_abs_diff(gen(F::Alpha, i) * gen(F::Beta, j),
                                          gen(prod_family[static_cast<size_t>(j - 1)], i)));
    // spot identities against the matrix basis
    worst = std::max(worst, max_abs_diff(gen(F::A, 1),
                                         Complex{-1, 0} * basis_matrix(BasisId::Gamma5)));
    worst = std::max(worst, max_abs_diff(gen(F::A, 2),
                                         Complex{-1, 0} * basis_matrix(BasisId::IGamma2)));
    worst = std::max(worst, max_abs_diff(gen(F::A, 3), basis_matrix(BasisId::Gamma0)));
    worst = std::max(worst, max_abs_diff(gen(F::B, 1), basis_matrix(BasisId::Gamma5Gamma1)));
    return residual_result("dirac/generator_products", worst, eps);
}

CheckResult check_alpha_beta_commutation() {
    bool ok = verify_commutation_alpha_beta();
    // sanity: alpha_1 and alpha_2 must NOT commute
    const ComplexMatrix4 a1 = generator({GeneratorFamily::Alpha, 1});
    const ComplexMatrix4 a2 = generator({GeneratorFamily::Alpha, 2});
    ok = ok && max_abs_diff(a1 * a2, a2 * a1) > 1.0;
    // abelian 2-parameter subgroups at the exponential level
    Sampler smp(15);
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const Complex a{smp.uniform(-2.0, 2.0), 0.0};
            const Complex b{smp.uniform(-2.0, 2.0), 0.0};
            const ComplexMatrix4 ua = exp_generator({GeneratorFamily::Alpha, i}, a);
            const ComplexMatrix4 ub = exp_generator({GeneratorFamily::Beta, j}, b);
            worst = std::max(worst, max_abs_diff(ua * ub, ub * ua));
        }
    }
    return make_result("dirac/alpha_beta_commutation", ok && worst <= algebra_eps(),
                       fmt_residual(worst, algebra_eps()));
}

CheckResult check_subgroup_det_range() {
    double worst = 0.0;
    for (SubgroupId id : kAllSubgroups) {
        if (id == SubgroupId::U0) continue;
        for (int k = 0; k <= 40; ++k) {
            const double t = -5.0 + 0.25 * k;
            worst = std::max(worst, std::fabs(det(one_param_element(id, t)) - 1.0));
        }
    }
    return residual_result("dirac/subgroup_det_range", worst, 1e-10);
}

CheckResult check_closed_form_vs_exp() {
    Sampler smp(16);
    double worst = 0.0;
    for (SubgroupId id : kAllSubgroups) {
        for (int i = 0; i < 10; ++i) {
            const double t = smp.uniform(-3.0, 3.0);
            const RealMatrix4 closed = one_param_element(id, t);
            RealMatrix4 via_exp;
            double imag = 0.0;
            if (id == SubgroupId::U0) {
                via_exp = std::exp(-t) * RealMatrix4::identity();
            } else {
                const GeneratorId gid = *subgroup_generator(id);
                const Complex a = (param_kind(id) == ParamKind::Angle) ? Complex{t, 0.0}
                                                                       : Complex{0.0, t};
                const ComplexMatrix4 u = exp_generator(gid, a);
                via_exp = real_part(u);
                imag = max_abs_imag(u);
            }
            double scale = 1.0;
            for (double v : closed.m) scale = std::max(scale, std::fabs(v));
            worst = std::max(worst, (max_abs_diff(closed, via_exp) + imag) / scale);
        }
    }
    return residual_result("dirac/closed_form_vs_exp", worst, 1e-13);
}

CheckResult check_commuting_triplets() {
    // Frozen expectation: K, L, M and M' close and commute; the printed K'
    // and L' do not (their third members look transcribed wrong at the
    // source), and are reported, not corrected.
    const auto triplets = commuting_triplets();
    std::string detail;
    bool ok = true;
    for (const auto& t : triplets) {
        const TripletReport r = triplet_report(t);
        const bool good = r.products_close && r.pairwise_commute;
        const bool expected_good = (t.name == "K" || t.name == "L" || t.name == "M" ||
                                    t.name == "M'");
        if (!detail.empty()) detail += ", ";
        detail += t.name + (good ? ": closes" : ": FAILS");
        ok = ok && (good == expected_good);
    }
    return make_result("dirac/commuting_triplets", ok, detail);
}

CheckResult check_su2_catalog() {
    const auto catalog = su2_catalog();
    bool ok = catalog.size() == 20;
    int closed = 0;
    for (const auto& t : catalog)
        if (t.closes) ++closed;
    ok = ok && closed == 20;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d/20 triples close with recorded signs", closed);
    return make_result("dirac/su2_catalog", ok, buf);
}

CheckResult check_zero_in_every_range() {
    Sampler smp(17);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        const PolarizationState ps = smp.state(0.3);
        for (SubgroupId id : kAllSubgroups) {
            const VariantRange vr = variant_range(id, ps);
            ok = ok && !vr.interval.empty && vr.interval.contains(0.0);
            if (!ok) break;
        }
    }
    return make_result("cone/zero_in_every_range", ok,
                       "t = 0 (identity) admissible in all 16 variants x 100 states");
}

CheckResult check_fully_polarized_rotation_exact() {
    Sampler smp(18);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const SubgroupId variant = kRotationVariants[static_cast<size_t>(i % 6)];
        const int ai = rotation_active_index(variant);
        // fully polarized state with a controlled active coordinate
        const double a = smp.uniform(-0.95, 0.95);
        const double phase = smp.uniform(0.0, 2.0 * M_PI);
        const double rest = std::sqrt(1.0 - a * a);
        PolarizationState ps;
        ps.intensity = smp.uniform(0.5, 2.0);
        ps.p[static_cast<size_t>(ai)] = a;
        ps.p[static_cast<size_t>((ai + 1) % 3)] = rest * std::cos(phase);
        ps.p[static_cast<size_t>((ai + 2) % 3)] = rest * std::sin(phase);
        const VariantRange vr = rotation_variant_range(variant, ps);
        const double edge = 2.0 * a / (1.0 - a * a);
        const double lo_expect = std::min(0.0, edge);
        const double hi_expect = std::max(0.0, edge);
        worst = std::max(worst, std::fabs(vr.interval.lo - lo_expect));
        worst = std::max(worst, std::fabs(vr.interval.hi - hi_expect));
    }
    return residual_result("cone/fully_polarized_rotation_exact", worst, 1e-10);
}

CheckResult check_transform_linear() {
    Sampler smp(19);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const RealMatrix4 m = smp.matrix(3.0);
        const StokesVector s = smp.stokes(0.2);
        const StokesVector w = smp.stokes(0.2);
        const double al = smp.uniform(-2.0, 2.0);
        const double be = smp.uniform(-2.0, 2.0);
        const StokesVector mix{al * s.s0 + be * w.s0, al * s.s1 + be * w.s1,
                               al * s.s2 + be * w.s2, al * s.s3 + be * w.s3};
        const StokesVector lhs = transform(m, mix);
        const StokesVector a = transform(m, s);
        const StokesVector b = transform(m, w);
        const StokesVector rhs{al * a.s0 + be * b.s0, al * a.s1 + be * b.s1,
                               al * a.s2 + be * b.s2, al * a.s3 + be * b.s3};
        const double scale = std::max({1.0, std::fabs(lhs.s0), std::fabs(lhs.s1),
                                       std::fabs(lhs.s2), std::fabs(lhs.s3)});
        worst = std::max({worst, std::fabs(lhs.s0 - rhs.s0) / scale,
                          std::fabs(lhs.s1 - rhs.s1) / scale,
                          std::fabs(lhs.s2 - rhs.s2) / scale,
                          std::fabs(lhs.s3 - rhs.s3) / scale});
    }
    return residual_result("cone/transform_linear", worst, 1e-12);
}

CheckResult check_identity_admissibility() {
    Sampler smp(20);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
        const StokesVector s = smp.stokes(0.3);
        const AdmissibilityReport r = check_on_state(RealMatrix4::identity(), s);
        ok = r.first_ok && (r.second_ok == (minkowski_norm(s) >= -kConeEps));
    }
    return make_result("cone/identity_admissibility", ok,
                       "identity maps reports to the input cone test");
}

CheckResult check_elementary_deformations() {
    Sampler smp(21);
    double worst = 0.0;
    bool flags_ok = elementary_deformation_display_consistent(0) &&
                    elementary_deformation_display_consistent(1) &&
                    !elementary_deformation_display_consistent(2) &&
                    elementary_deformation_display_consistent(3);
    for (int i = 0; i < 25; ++i) {
        const double lam = smp.uniform(-1.5, 1.5);
        const double e = std::exp(lam);
        const StokesVector s = smp.stokes(0.2);
        {
            const StokesVector out = transform(elementary_deformation(0, lam), s);
            worst = std::max({worst, std::fabs(out.s0 - e * s.s0), std::fabs(out.s1 - s.s1),
                              std::fabs(out.s2 - s.s2), std::fabs(out.s3 - s.s3)});
        }
        {
            const StokesVector out = transform(elementary_deformation(1, lam), s);
            worst = std::max({worst, std::fabs(out.s0 - s.s0), std::fabs(out.s1 - e * s.s1),
                              std::fabs(out.s2 - s.s2), std::fabs(out.s3 - s.s3)});
        }
        {
            // displayed E2: intensity e^-l, p1/p2 gain e^{2l}, p3 fixed
            const double en = std::exp(-lam);
            const StokesVector out = transform(elementary_deformation(2, lam), s);
            worst = std::max({worst, std::fabs(out.s0 - en * s.s0), std::fabs(out.s1 - e * s.s1),
                              std::fabs(out.s2 - e * s.s2), std::fabs(out.s3 - en * s.s3)});
        }
        {
            const StokesVector out = transform(elementary_deformation(3, lam), s);
            worst = std::max({worst, std::fabs(out.s0 - s.s0), std::fabs(out.s1 - s.s1),
                              std::fabs(out.s2 - s.s2), std::fabs(out.s3 - e * s.s3)});
        }
    }
    return make_result("cone/elementary_deformations", flags_ok && worst == 0.0,
                       "diagonal actions exact; E2 display mismatch flagged");
}

CheckResult check_boost_inverse() {
    Sampler smp(22);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const BoostSpec b{smp.uniform(-2.5, 2.5), smp.unit_vector()};
        const BoostSpec binv{-b.rapidity, b.axis};
        worst = std::max(worst, max_abs_diff(boost_matrix(b) * boost_matrix(binv),
                                             RealMatrix4::identity()));
    }
    return residual_result("lorentz/boost_inverse", worst, algebra_eps());
}

CheckResult check_boost_preserves_norm() {
    Sampler smp(23);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const BoostSpec b{smp.uniform(-3.0, 3.0), smp.unit_vector()};
        const RealMatrix4 m = boost_matrix(b);
        const StokesVector s = smp.stokes(0.3);
        const double scale = std::max(1.0, s.s0 * s.s0);
        worst = std::max(worst,
                         std::fabs(minkowski_norm(transform(m, s)) - minkowski_norm(s)) / scale);
        worst = std::max(worst, std::fabs(det(m) - 1.0));
    }
    return residual_result("lorentz/boost_norm_det", worst, 1e-10);
}

CheckResult check_collinear_monotonicity() {
    Sampler smp(24);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
        const Vector3 e = smp.unit_vector();
        const double p = smp.uniform(0.05, 0.95);
        PolarizationState ps;
        ps.intensity = smp.uniform(0.5, 5.0);
        for (size_t k = 0; k < 3; ++k) ps.p[k] = p * e[k];
        const double beta = smp.uniform(0.05, 2.0);
        // the signed collinear component tanh(atanh p - beta) is strictly
        // monotone in -beta; its magnitude is not once the direction flips
        const double p_fwd = dot(act_partial({beta, e}, ps).p, e);
        const double p_bwd = dot(act_partial({-beta, e}, ps).p, e);
        ok = (p_fwd < p) && (p_bwd > p);
    }
    return make_result("lorentz/collinear_monotonicity", ok,
                       "p = +p e: signed degree falls for beta > 0, grows for beta < 0");
}

CheckResult check_act_matches_matrix() {
    Sampler smp(25);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PolarizationState ps = smp.state(0.25);
        const BoostSpec b{smp.uniform(-2.5, 2.5), smp.unit_vector()};
        const PolarizationState direct = act_partial(b, ps);
        const PolarizationState via =
            state_from_stokes(transform(boost_matrix(b), stokes_from_state(ps)));
        worst = std::max(worst,
                         std::fabs(direct.intensity - via.intensity) / via.intensity);
        for (size_t k = 0; k < 3; ++k)
            worst = std::max(worst, std::fabs(direct.p[k] - via.p[k]) /
                                        std::max(1.0, std::fabs(via.p[k])));
    }
    return residual_result("lorentz/act_matches_matrix", worst, 1e-12);
}

CheckResult check_rest_frame() {
    double worst = 0.0;
    // the pinned case p = 0.6: beta0 = atanh(0.6), I' = 0.8 I
    PolarizationState ps{2.0, {0.0, 0.0, 0.6}};
    const RestFrame rf = rest_frame(ps);
    worst = std::max(worst, std::fabs(rf.beta0 - std::atanh(0.6)));
    worst = std::max(worst, std::fabs(rf.i_rest - 1.6));
    // applying the boost along p must produce natural light at that intensity
    Sampler smp(26);
    for (int i = 0; i < 50; ++i) {
        PolarizationState st;
        st.intensity = smp.uniform(0.5, 5.0);
        const Vector3 e = smp.unit_vector();
        const double p = smp.uniform(0.05, 0.99);
        for (size_t k = 0; k < 3; ++k) st.p[k] = p * e[k];
        const RestFrame r = rest_frame(st);
        const PolarizationState out = act_partial({r.beta0, e}, st);
        worst = std::max(worst, norm(out.p));
        worst = std::max(worst, std::fabs(out.intensity - r.i_rest) / r.i_rest);
    }
    return residual_result("lorentz/rest_frame", worst, 1e-12);
}

CheckResult check_full_fixed_points() {
    Sampler smp(27);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Vector3 n = smp.unit_vector();
        const double beta = smp.uniform(-2.5, 2.5);
        const double intensity = smp.uniform(0.1, 10.0);
        const FullyPolarizedResult along = act_full({beta, n}, n, intensity);
        const Vector3 anti{-n[0], -n[1], -n[2]};
        const FullyPolarizedResult against = act_full({beta, anti}, n, intensity);
        for (size_t k = 0; k < 3; ++k) {
            worst = std::max(worst, std::fabs(along.n[k] - n[k]));
            worst = std::max(worst, std::fabs(against.n[k] - n[k]));
        }
        worst = std::max(worst,
                         std::fabs(along.intensity - intensity * std::exp(-beta)) / intensity);
        worst = std::max(worst,
                         std::fabs(against.intensity - intensity * std::exp(beta)) / intensity);
    }
    return residual_result("lorentz/full_fixed_points", worst, 1e-12);
}

CheckResult check_dop_transform_formula() {
    Sampler smp(28);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double beta = smp.uniform(-2.0, 2.0);
        const Vector3 dir = smp.unit_vector();
        const double p = smp.uniform(0.0, 0.99);
        PolarizationState ps;
        ps.intensity = 1.0;
        for (size_t k = 0; k < 3; ++k) ps.p[k] = p * dir[k];
        const double ch = std::cosh(beta), sh = std::sinh(beta);
        const double denom = ch - ps.p[2] * sh;
        // componentwise axis-aligned maps
        const double p3p = transform_p3(beta, ps.p[2]);
        const double p1p = ps.p[0] / denom;
        const double p2p = ps.p[1] / denom;
        const double lhs = p1p * p1p + p2p * p2p + p3p * p3p;
        const double rhs = 1.0 - (1.0 - p * p) / (denom * denom);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return residual_result("lorentz/dop_transform_formula", worst, 1e-12);
}

CheckResult check_ellipsoid() {
    double worst = 0.0;
    bool axial_ok = true;
    // pinned configuration: p = 0.7, beta = 1.2, 1000 sphere points
    const double p = 0.7, beta = 1.2;
    const EllipsoidSpec e = ellipsoid_image(beta, p);
    const double ch = std::cosh(beta), sh = std::sinh(beta);
    for (int i = 0; i < 1000; ++i) {
        const double z = -1.0 + 2.0 * (i + 0.5) / 1000.0;
        const double phi = 2.39996322972865332 * i;  // golden-angle spread
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Vector3 pv{p * r * std::cos(phi), p * r * std::sin(phi), p * z};
        const double denom = ch - pv[2] * sh;
        const double q1 = pv[0] / denom;
        const double q2 = pv[1] / denom;
        const double q3 = (ch * pv[2] - sh) / denom;
        const double lhs = q1 * q1 + q2 * q2 + e.a_axial * (q3 + e.gamma) * (q3 + e.gamma);
        worst = std::max(worst, std::fabs(lhs - e.rhs));
    }
    for (int k = 0; k <= 100; ++k) {
        const double b = -5.0 + 0.1 * k;
        axial_ok = axial_ok && ellipsoid_image(b, p).a_axial > 0.0;
    }
    // natural light maps to the single point (0, 0, -gamma)
    const EllipsoidSpec e0 = ellipsoid_image(beta, 0.0);
    worst = std::max(worst, std::fabs(e0.rhs));
    worst = std::max(worst, std::fabs(e0.gamma - std::tanh(beta)));
    return make_result("lorentz/ellipsoid", axial_ok && worst <= 1e-9,
                       fmt_residual(worst, 1e-9));
}

CheckResult check_general_axis_scalar() {
    Sampler smp(29);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PolarizationState ps = smp.state(0.0);
        const BoostSpec b{smp.uniform(-2.0, 2.0), smp.unit_vector()};
        const PolarizationState out = act_partial(b, ps);
        const double ch = std::cosh(b.rapidity), sh = std::sinh(b.rapidity);
        const double lhs = 1.0 - dot(out.p, out.p);
        const double factor = ch + sh * dot(b.axis, out.p);
        const double rhs = (1.0 - dot(ps.p, ps.p)) * factor * factor;
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return residual_result("lorentz/general_axis_scalar_oracle", worst, 1e-10);
}

CheckResult check_factor_homomorphisms() {
    Sampler smp(30);
    double worst = 0.0;
    auto random_real_quat = [&smp] {
        QuatParams q;
        q.k0 = Complex{smp.uniform(-1.5, 1.5), 0.0};
        for (auto& v : q.k) v = Complex{smp.uniform(-1.5, 1.5), 0.0};
        return q;
    };
    for (int i = 0; i < 100; ++i) {
        const QuatParams k1 = random_real_quat();
        const QuatParams k2 = random_real_quat();
        worst = std::max(worst, max_abs_diff(r_alpha(k1) * r_alpha(k2),
                                             r_alpha(compose_alpha(k1, k2))));
        worst = std::max(worst, max_abs_diff(r_beta(k1) * r_beta(k2),
                                             r_beta(compose_beta(k1, k2))));
        worst = std::max(worst, max_abs_diff(r_alpha(k1) * r_beta(k2),
                                             r_beta(k2) * r_alpha(k1)));
    }
    return residual_result("factorization/homomorphisms", worst, 1e-12);
}

CheckResult check_kk_real_commuting() {
    Sampler smp(31);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        QuatParams q;
        q.k0 = Complex{smp.uniform(-1.0, 1.0), smp.uniform(-1.0, 1.0)};
        for (auto& v : q.k) v = Complex{smp.uniform(-1.0, 1.0), smp.uniform(-1.0, 1.0)};
        const LorentzFactorization lf = lorentz_from_k(q);
        worst = std::max({worst, lf.commute_residual, lf.imag_residual});
    }
    return residual_result("factorization/kk_real_commuting", worst, 1e-12);
}

CheckResult check_factor_special_cases() {
    Sampler smp(32);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double d = smp.uniform(0.3, 1.7);
        const double d2 = d * d;
        const double phi = smp.uniform(-3.0, 3.0);
        const double beta = smp.uniform(-2.0, 2.0);
        const double cp = std::cos(0.5 * phi), sp = std::sin(0.5 * phi);
        const double chb = std::cosh(0.5 * beta), shb = std::sinh(0.5 * beta);

        {  // rotation in the (1,2) block from real k0, k3
            QuatParams q;
            q.k0 = d * cp;
            q.k[2] = d * sp;
            const RealMatrix4 expect = d2 * RealMatrix4::from_rows(
                {1, 0, 0, 0,
                 0, std::cos(phi), -std::sin(phi), 0,
                 0, std::sin(phi), std::cos(phi), 0,
                 0, 0, 0, 1});
            worst = std::max(worst, max_abs_diff(lorentz_from_k(q).l_matrix, expect));
        }
        {  // boost mixing (0,3) from imaginary k3
            QuatParams q;
            q.k0 = d * chb;
            q.k[2] = Complex{0.0, d * shb};
            const RealMatrix4 expect = d2 * RealMatrix4::from_rows(
                {std::cosh(beta), 0, 0, -std::sinh(beta),
                 0, 1, 0, 0,
                 0, 0, 1, 0,
                 -std::sinh(beta), 0, 0, std::cosh(beta)});
            worst = std::max(worst, max_abs_diff(lorentz_from_k(q).l_matrix, expect));
        }
        {  // rotation in the (2,3) block from real k1
            QuatParams q;
            q.k0 = d * cp;
            q.k[0] = d * sp;
            const RealMatrix4 expect = d2 * RealMatrix4::from_rows(
                {1, 0, 0, 0,
                 0, 1, 0, 0,
                 0, 0, std::cos(phi), -std::sin(phi),
                 0, 0, std::sin(phi), std::cos(phi)});
            worst = std::max(worst, max_abs_diff(lorentz_from_k(q).l_matrix, expect));
        }
        {  // boost mixing (0,1) from imaginary k1
            QuatParams q;
            q.k0 = d * chb;
            q.k[0] = Complex{0.0, d * shb};
            const RealMatrix4 expect = d2 * RealMatrix4::from_rows(
                {std::cosh(beta), -std::sinh(beta), 0, 0,
                 -std::sinh(beta), std::cosh(beta), 0, 0,
                 0, 0, 1, 0,
                 0, 0, 0, 1});
            worst = std::max(worst, max_abs_diff(lorentz_from_k(q).l_matrix, expect));
        }
        // det L = D^8 on these normalized families
        QuatParams q;
        q.k0 = d * cp;
        q.k[2] = d * sp;
        worst = std::max(worst, std::fabs(lorentz_from_k(q).det_l - std::pow(d, 8.0)) /
                                    std::pow(d, 8.0));
    }
    return residual_result("factorization/special_cases", worst, 1e-12);
}

CheckResult check_pi_similarity() {
    Sampler smp(33);
    double worst = 0.0;
    ComplexMatrix4 pi;
    pi(0, 0) = 1.0;
    for (int i = 1; i < 4; ++i) pi(i, i) = Complex{0.0, 1.0};
    ComplexMatrix4 pi_inv;
    pi_inv(0, 0) = 1.0;
    for (int i = 1; i < 4; ++i) pi_inv(i, i) = Complex{0.0, -1.0};
    for (int i = 0; i < 50; ++i) {
        QuatParams q;
        q.k0 = Complex{smp.uniform(-1.5, 1.5), 0.0};
        for (auto& v : q.k) v = Complex{smp.uniform(-1.5, 1.5), 0.0};
        const ComplexMatrix4 via_pi = pi_inv * complexify(r_alpha(q)) * pi;
        worst = std::max(worst, max_abs_diff(k_factor(q), via_pi));
    }
    for (int axis = 1; axis <= 3; ++axis) {
        const Complex k0{smp.uniform(-1.0, 1.0), smp.uniform(-1.0, 1.0)};
        const Complex ka{smp.uniform(-1.0, 1.0), smp.uniform(-1.0, 1.0)};
        const auto [k, kc] = two_param_factors(axis, k0, ka);
        worst = std::max(worst, max_abs_diff(k * kc, kc * k));
        worst = std::max(worst, max_abs_imag(k * kc));
    }
    return residual_result("factorization/pi_similarity", worst, 1e-12);
}

CheckResult check_unit_quat_rotation() {
    Sampler smp(34);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        // random unit real quaternion
        Vector3 axis = smp.unit_vector();
        const double half = smp.uniform(-3.0, 3.0);
        QuatParams q;
        q.k0 = std::cos(half);
        for (size_t k = 0; k < 3; ++k) q.k[k] = std::sin(half) * axis[k];
        const RealMatrix4 l = lorentz_from_k(q).l_matrix;
        worst = std::max(worst, std::fabs(l(0, 0) - 1.0));
        for (int j = 1; j < 4; ++j) {
            worst = std::max(worst, std::fabs(l(0, j)));
            worst = std::max(worst, std::fabs(l(j, 0)));
        }
        worst = std::max(worst, std::fabs(det(l) - 1.0));
        // spatial block orthogonality
        for (int r = 1; r < 4; ++r) {
            for (int c = 1; c < 4; ++c) {
                double dotp = 0.0;
                for (int k = 1; k < 4; ++k) dotp += l(k, r) * l(k, c);
                worst = std::max(worst, std::fabs(dotp - (r == c ? 1.0 : 0.0)));
            }
        }
    }
    return residual_result("factorization/unit_quat_rotation", worst, 1e-12);
}

CheckResult check_d_zero_at_identity() {
    Sampler smp(35);
    double worst = 0.0;
    bool neutral = true;
    const std::array<SubgroupId, 12> variants = {
        SubgroupId::U1a, SubgroupId::U2a, SubgroupId::U3a, SubgroupId::U1b,
        SubgroupId::U2b, SubgroupId::U3b, SubgroupId::U2A, SubgroupId::U3A,
        SubgroupId::U1B, SubgroupId::U3B, SubgroupId::U1C, SubgroupId::U2C,
    };
    for (SubgroupId v : variants) {
        for (int i = 0; i < 10; ++i) {
            const DReport r = d_entity(v, smp.state(0.25), 0.0);
            worst = std::max(worst, std::fabs(r.d_value));
            neutral = neutral && r.sign == DSign::Neutral;
        }
    }
    return make_result("depol/zero_at_identity", neutral && worst <= kDSignEps,
                       fmt_residual(worst, kDSignEps));
}

CheckResult check_d_sign_regions() {
    Sampler smp(36);
    bool ok = true;
    const std::array<SubgroupId, 12> variants = {
        SubgroupId::U1a, SubgroupId::U2a, SubgroupId::U3a, SubgroupId::U1b,
        SubgroupId::U2b, SubgroupId::U3b, SubgroupId::U2A, SubgroupId::U3A,
        SubgroupId::U1B, SubgroupId::U3B, SubgroupId::U1C, SubgroupId::U2C,
    };
    for (int i = 0; i < 120 && ok; ++i) {
        const SubgroupId variant = variants[static_cast<size_t>(i % 12)];
        const PolarizationState ps = smp.state(0.0);
        const DSignBoundaries b = d_sign_boundaries(variant, ps);
        if (b.degenerate || b.neutral_points.size() != 2) continue;
        double lo = b.neutral_points[0], hi = b.neutral_points[1];
        if (hi - lo < 1e-6) continue;
        if (variant_chart(variant) == ChartVar::TanhBeta) {
            // keep probes inside the chart and clear of the pole
            if (lo < -0.99 || hi > 0.99) continue;
        }
        const double inside = 0.5 * (lo + hi);
        if (inside != 0.0)
            ok = ok && d_entity(variant, ps, inside).d_value < kDSignEps;
        // outside probes, modestly beyond each boundary
        const double span = hi - lo;
        const double left = lo - 0.1 * span;
        const double right = hi + 0.1 * span;
        const bool left_valid = variant_chart(variant) != ChartVar::TanhBeta || left > -0.999;
        const bool right_valid = variant_chart(variant) != ChartVar::TanhBeta || right < 0.999;
        if (left_valid) ok = ok && d_entity(variant, ps, left).d_value > -kDSignEps;
        if (right_valid) ok = ok && d_entity(variant, ps, right).d_value > -kDSignEps;
    }
    return make_result("depol/sign_regions", ok,
                       "D < 0 between the neutral points, D >= 0 outside");
}

CheckResult check_full_boost_boundary() {
    Sampler smp(37);
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        const SubgroupId variant = kBoostVariants[static_cast<size_t>(i % 6)];
        PolarizationState ps = smp.state(1.0);  // fully polarized
        const VariantRange vr = boost_variant_range(variant, ps);
        if (vr.degenerate || !vr.roots) continue;
        for (double y : {vr.roots->first, vr.roots->second}) {
            if (std::fabs(y) >= 1.0 - 1e-9) continue;
            worst = std::max(worst, std::fabs(d_entity(variant, ps, y).d_value));
        }
    }
    return residual_result("depol/full_boost_boundary", worst, 1e-9);
}

CheckResult check_neutral_curve() {
    std::vector<double> grid;
    for (int i = 0; i < 99; ++i) grid.push_back(-0.9 + 1.8 * i / 98.0);
    double worst = 0.0;
    const NeutralCurve curve = neutral_curve(SubgroupId::U1a, grid);
    for (const auto& [a, x] : curve.samples)
        worst = std::max(worst, std::fabs(x - 2.0 * a / (1.0 - a * a)));
    // oddness of the closed form
    const NeutralCurve fwd = neutral_curve(SubgroupId::U3b, {0.4});
    const NeutralCurve bwd = neutral_curve(SubgroupId::U3b, {-0.4});
    worst = std::max(worst, std::fabs(fwd.samples[0].second + bwd.samples[0].second));
    return residual_result("depol/neutral_curve", worst, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_all(std::string_view filter) {
    const uint64_t kSeed = 0x51DE5;
    using Entry = std::pair<std::string_view, std::function<CheckResult()>>;
    const std::vector<Entry> checks = {
        {"core/mat_mul_associative", check_mat_mul_associative},
        {"core/mat_inverse_roundtrip", check_mat_inverse},
        {"core/state_roundtrip", check_state_roundtrip},
        {"core/minkowski_identity", check_minkowski_identity},
        {"dirac/gell_mann_basis", check_gell_mann_basis},
        {"dirac/generator_products", check_generator_products},
        {"dirac/alpha_beta_commutation", check_alpha_beta_commutation},
        {"dirac/subgroup_group_law",
         [&] { return check_subgroup_laws(50, algebra_eps(), kSeed + 1); }},
        {"dirac/subgroup_det_range", check_subgroup_det_range},
        {"dirac/closed_form_vs_exp", check_closed_form_vs_exp},
        {"dirac/commuting_triplets", check_commuting_triplets},
        {"dirac/su2_catalog", check_su2_catalog},
        {"cone/range_vs_oracle",
         [&] { return check_range_closed_vs_oracle(200, 100000, kSeed + 2); }},
        {"cone/diagonal_vs_oracle",
         [&] { return check_diagonal_vs_oracle(200, 100000, kSeed + 3); }},
        {"cone/zero_in_every_range", check_zero_in_every_range},
        {"cone/boost_root_bounds",
         [&] { return check_boost_root_bounds(10000, kSeed + 4); }},
        {"cone/fully_polarized_rotation_exact", check_fully_polarized_rotation_exact},
        {"cone/transform_linear", check_transform_linear},
        {"cone/identity_admissibility", check_identity_admissibility},
        {"cone/elementary_deformations", check_elementary_deformations},
        {"lorentz/boost_inverse", check_boost_inverse},
        {"lorentz/boost_norm_det", check_boost_preserves_norm},
        {"lorentz/invariant_conservation",
         [&] { return check_invariant_conservation(1000, kSeed + 5); }},
        {"lorentz/collinear_monotonicity", check_collinear_monotonicity},
        {"lorentz/act_matches_matrix", check_act_matches_matrix},
        {"lorentz/rest_frame", check_rest_frame},
        {"lorentz/full_light_unit_norm",
         [&] { return check_full_polarization_preserved(1000, kSeed + 6); }},
        {"lorentz/full_fixed_points", check_full_fixed_points},
        {"lorentz/dop_transform_formula", check_dop_transform_formula},
        {"lorentz/ellipsoid", check_ellipsoid},
        {"lorentz/general_axis_scalar_oracle", check_general_axis_scalar},
        {"factorization/homomorphisms", check_factor_homomorphisms},
        {"factorization/kk_real_commuting", check_kk_real_commuting},
        {"factorization/special_cases", check_factor_special_cases},
        {"factorization/pi_similarity", check_pi_similarity},
        {"factorization/unit_quat_rotation", check_unit_quat_rotation},
        {"depol/zero_at_identity", check_d_zero_at_identity},
        {"depol/oracle_agreement",
         [&] { return check_d_oracle_agreement(200, kSeed + 7); }},
        {"depol/sign_regions", check_d_sign_regions},
        {"depol/full_boost_boundary", check_full_boost_boundary},
        {"depol/neutral_curve", check_neutral_curve},
    };

    std::vector<CheckResult> out;
    out.reserve(checks.size());
    for (const auto& [name, fn] : checks) {
        if (!filter.empty() && name.find(filter) == std::string_view::npos) continue;
        out.push_back(fn());
    }
    return out;
}

}  // namespace sl4::verify
