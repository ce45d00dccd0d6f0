#include "sl4/depolarization.hpp"

#include <cmath>
#include <stdexcept>

namespace sl4 {

namespace {

double chart_to_u(SubgroupId variant, double chart_param) {
    switch (variant_chart(variant)) {
        case ChartVar::TanPhi:
            return std::atan(chart_param);
        case ChartVar::TanhBeta:
            if (!(chart_param > -1.0 && chart_param < 1.0))
                throw std::invalid_argument("d_entity: y-chart value must lie in (-1, 1)");
            return std::atanh(chart_param);
        case ChartVar::Lambda:
            return chart_param;
    }
    throw std::invalid_argument("d_entity: unknown variant");
}

}  // namespace

DReport d_entity(SubgroupId variant, const PolarizationState& ps, double chart_param) {
    if (!std::isfinite(chart_param))
        throw std::invalid_argument("d_entity: non-finite chart parameter");
    const double u = chart_to_u(variant, chart_param);
    const StokesVector s_in = stokes_from_state(ps);
    const StokesVector s_out = transform(variant_matrix(variant, u), s_in);
    if (std::fabs(s_out.s0) <= 1e-12 * std::fabs(s_in.s0))
        throw std::domain_error("d_entity: transformed intensity vanishes at this parameter");
    const double inv = 1.0 / s_out.s0;
    const double p_out2 = (s_out.s1 * s_out.s1 + s_out.s2 * s_out.s2 + s_out.s3 * s_out.s3) *
                          inv * inv;
    DReport r;
    r.variant = variant;
    r.param = chart_param;
    r.d_value = p_out2 - dot(ps.p, ps.p);
    if (r.d_value < -kDSignEps)
        r.sign = DSign::Decreases;
    else if (r.d_value > kDSignEps)
        r.sign = DSign::Increases;
    else
        r.sign = DSign::Neutral;
    return r;
}

DSignBoundaries d_sign_boundaries(SubgroupId variant, const PolarizationState& ps) {
    if (dot(ps.p, ps.p) > 1.0 + algebra_eps())
        throw NonPhysicalState("d_sign_boundaries: |p| > 1");

    DSignBoundaries out;
    switch (variant_chart(variant)) {
        case ChartVar::TanPhi: {
            const double a = ps.p[static_cast<size_t>(rotation_active_index(variant))];
            if (std::fabs(std::fabs(a) - 1.0) <= algebra_eps()) {
                out.degenerate = true;
                out.neutral_points = {0.0};
                return out;
            }
            const double x = 2.0 * a / (1.0 - a * a);
            if (x == 0.0)
                out.neutral_points = {0.0};
            else
                out.neutral_points = (x < 0.0) ? std::vector<double>{x, 0.0}
                                               : std::vector<double>{0.0, x};
            return out;
        }
        case ChartVar::TanhBeta: {
            const BoostTraits tr = boost_traits(variant);
            const double f = ps.p[static_cast<size_t>(tr.f)];
            const double g = ps.p[static_cast<size_t>(tr.g)];
            const double h = tr.h_sign * ps.p[static_cast<size_t>(tr.h)];
            const double p2 = dot(ps.p, ps.p);
            if (std::fabs(std::fabs(h) - 1.0) <= algebra_eps()) {
                out.degenerate = true;
                out.neutral_points = {0.0};
                return out;
            }
            const double y =
                2.0 * (2.0 * f * g - h * (1.0 - p2)) / ((1.0 - h * h) * (1.0 + p2));
            if (y == 0.0)
                out.neutral_points = {0.0};
            else
                out.neutral_points = (y < 0.0) ? std::vector<double>{y, 0.0}
                                               : std::vector<double>{0.0, y};
            return out;
        }
        case ChartVar::Lambda:
            throw std::invalid_argument("d_sign_boundaries: diagonal variants not covered");
    }
    throw std::invalid_argument("d_sign_boundaries: unknown variant");
}

namespace {

/// Bisection for the nonzero root of D along the chart, starting on the side
/// selected by `direction`. Doubles outward from x0 until D > 0, then bisects.
double locate_nonzero_root(SubgroupId variant, const PolarizationState& ps, double direction,
                           double chart_limit) {
    constexpr double kTolX = 1e-12;
    constexpr int kMaxIter = 200;

    double step = 1e-3 * direction;
    double lo = 0.0;
    double hi = step;
    int guard = 0;
    while (d_entity(variant, ps, hi).d_value < 0.0) {
        lo = hi;
        step *= 2.0;
        hi = (chart_limit > 0.0) ? std::clamp(lo + step, -chart_limit, chart_limit)
                                 : lo + step;
        if (++guard > 200 || hi == lo)
            throw std::domain_error("neutral_curve: no sign change found");
    }
    // D(lo) <= 0 <= D(hi); bisect
    for (int it = 0; it < kMaxIter && std::fabs(hi - lo) > kTolX; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (d_entity(variant, ps, mid).d_value < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

NeutralCurve neutral_curve(SubgroupId variant, const std::vector<double>& a_grid) {
    const ChartVar chart = variant_chart(variant);
    if (chart == ChartVar::Lambda)
        throw std::invalid_argument("neutral_curve: diagonal variants not covered");

    NeutralCurve out;
    out.samples.reserve(a_grid.size());
    for (double a : a_grid) {
        if (!(a > -1.0 && a < 1.0))
            throw std::invalid_argument("neutral_curve: grid values must lie in (-1, 1)");
        if (a == 0.0) {
            out.samples.emplace_back(0.0, 0.0);  // double root at the origin
            continue;
        }
        PolarizationState ps;
        ps.intensity = 1.0;
        if (chart == ChartVar::TanPhi) {
            ps.p[static_cast<size_t>(rotation_active_index(variant))] = a;
            out.samples.emplace_back(a, locate_nonzero_root(variant, ps, a > 0 ? 1.0 : -1.0, 0.0));
        } else {
            const BoostTraits tr = boost_traits(variant);
            ps.p[static_cast<size_t>(tr.f)] = a / std::sqrt(2.0);
            ps.p[static_cast<size_t>(tr.g)] = a / std::sqrt(2.0);
            // cross product a^2/2 > 0 either way: the nonzero root sits at y > 0
            out.samples.emplace_back(
                a, locate_nonzero_root(variant, ps, 1.0, 1.0 - 1e-9));
        }
    }
    return out;
}

}  // namespace sl4
