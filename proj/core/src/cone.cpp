#include "sl4/cone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sl4 {

StokesVector transform(const RealMatrix4& m, const StokesVector& s) {
    return {
        m(0, 0) * s.s0 + m(0, 1) * s.s1 + m(0, 2) * s.s2 + m(0, 3) * s.s3,
        m(1, 0) * s.s0 + m(1, 1) * s.s1 + m(1, 2) * s.s2 + m(1, 3) * s.s3,
        m(2, 0) * s.s0 + m(2, 1) * s.s1 + m(2, 2) * s.s2 + m(2, 3) * s.s3,
        m(3, 0) * s.s0 + m(3, 1) * s.s1 + m(3, 2) * s.s2 + m(3, 3) * s.s3,
    };
}

namespace {

bool admissible_output(const StokesVector& in, const StokesVector& out) {
    const double scale = std::max({1.0, std::fabs(in.s0), std::fabs(out.s0)});
    if (out.s0 < -kConeEps * scale) return false;
    return minkowski_norm(out) >= -kConeEps * scale * scale;
}

}  // namespace

AdmissibilityReport check_on_state(const RealMatrix4& m, const StokesVector& s) {
    if (!is_physical(s))
        throw NonPhysicalState("check_on_state: input Stokes vector is off the cone");
    AdmissibilityReport r;
    r.s_out = transform(m, s);
    const double scale = std::max({1.0, std::fabs(s.s0), std::fabs(r.s_out.s0)});
    r.first_ok = r.s_out.s0 >= -kConeEps * scale;
    r.second_ok = minkowski_norm(r.s_out) >= -kConeEps * scale * scale;
    return r;
}

// ---------------------------------------------------------------------------
// Variant charts
// ---------------------------------------------------------------------------

ChartVar variant_chart(SubgroupId id) {
    switch (param_kind(id)) {
        case ParamKind::Angle: return ChartVar::TanPhi;
        case ParamKind::Rapidity: return ChartVar::TanhBeta;
        case ParamKind::LogScale: return ChartVar::Lambda;
    }
    return ChartVar::Lambda;
}

double chart_sign(SubgroupId id) {
    switch (id) {
        case SubgroupId::U2a:
        case SubgroupId::U2A:
        case SubgroupId::U2C:
            return -1.0;
        default:
            return +1.0;
    }
}

RealMatrix4 variant_matrix(SubgroupId id, double u) {
    return one_param_element(id, chart_sign(id) * u);
}

int rotation_active_index(SubgroupId id) {
    switch (id) {
        case SubgroupId::U1a:
        case SubgroupId::U1b:
            return 0;
        case SubgroupId::U2a:
        case SubgroupId::U2b:
            return 1;
        case SubgroupId::U3a:
        case SubgroupId::U3b:
            return 2;
        default:
            throw std::invalid_argument("rotation_active_index: not a rotation variant");
    }
}

BoostTraits boost_traits(SubgroupId id) {
    switch (id) {
        case SubgroupId::U2A: return {0, 1, 2, +1.0};
        case SubgroupId::U1B: return {0, 1, 2, -1.0};
        case SubgroupId::U3A: return {0, 2, 1, -1.0};
        case SubgroupId::U1C: return {0, 2, 1, +1.0};
        case SubgroupId::U3B: return {1, 2, 0, +1.0};
        case SubgroupId::U2C: return {1, 2, 0, -1.0};
        default:
            throw std::invalid_argument("boost_traits: not a boost variant");
    }
}

// ---------------------------------------------------------------------------
// Closed-form ranges
// ---------------------------------------------------------------------------

namespace {

void require_polarization(const PolarizationState& ps) {
    if (!(ps.intensity > 0.0))
        throw std::invalid_argument("variant range: intensity must be > 0");
    if (dot(ps.p, ps.p) > 1.0 + algebra_eps())
        throw NonPhysicalState("variant range: |p| > 1");
}

/// Sum of squares with the fully-polarized boundary snapped exactly to 1.
double snapped_p2(const Vector3& p) {
    double p2 = dot(p, p);
    if (std::fabs(p2 - 1.0) <= algebra_eps()) p2 = 1.0;
    return std::min(p2, 1.0);
}

}  // namespace

VariantRange rotation_variant_range(SubgroupId variant, const PolarizationState& ps) {
    require_polarization(ps);
    const int ai = rotation_active_index(variant);
    const double a = ps.p[static_cast<size_t>(ai)];
    const double p2 = snapped_p2(ps.p);
    const double passive2 = std::max(0.0, p2 - a * a);

    VariantRange out;
    out.variant = variant;
    out.chart = ChartVar::TanPhi;

    const double den = passive2 + 1.0 - a * a;
    if (den <= algebra_eps()) {
        // only reachable at a = +-1: the quadratic degenerates to 4 a x >= 0
        out.degenerate = true;
        out.interval = (a > 0.0) ? ParamInterval::at_least(0.0) : ParamInterval::at_most(0.0);
        return out;
    }

    const double disc = std::max(0.0, 4.0 * a * a + (1.0 - p2) * den);
    const double sq = std::sqrt(disc);
    double x1 = (2.0 * a - sq) / den;
    double x2 = (2.0 * a + sq) / den;
    x1 = std::min(x1, 0.0);
    x2 = std::max(x2, 0.0);
    out.roots = {x1, x2};
    out.interval = ParamInterval::closed(x1, x2);
    return out;
}

VariantRange boost_variant_range(SubgroupId variant, const PolarizationState& ps) {
    require_polarization(ps);
    const BoostTraits tr = boost_traits(variant);
    const double f = ps.p[static_cast<size_t>(tr.f)];
    const double g = ps.p[static_cast<size_t>(tr.g)];
    const double h = ps.p[static_cast<size_t>(tr.h)];
    const double p2 = snapped_p2(ps.p);
    const double q = f * g;

    VariantRange out;
    out.variant = variant;
    out.chart = ChartVar::TanhBeta;

    const double den = f * f + g * g + 1.0 - h * h;
    if (den <= algebra_eps()) {
        // fully polarized along the third axis: every rapidity is admissible
        out.degenerate = true;
        out.interval = ParamInterval::closed(-1.0, 1.0);
        return out;
    }

    const double disc = std::max(0.0, 4.0 * q * q + (1.0 - p2) * den);
    const double sq = std::sqrt(disc);
    double y1 = (2.0 * q - sq) / den;
    double y2 = (2.0 * q + sq) / den;
    y1 = std::clamp(y1, -1.0, 0.0);
    y2 = std::clamp(y2, 0.0, 1.0);
    out.roots = {y1, y2};
    out.interval = ParamInterval::closed(y1, y2);
    return out;
}

VariantRange diagonal_variant_range(SubgroupId variant, const StokesVector& s) {
    if (!is_physical(s))
        throw NonPhysicalState("diagonal_variant_range: input off the cone");

    VariantRange out;
    out.variant = variant;
    out.chart = ChartVar::Lambda;

    // Each bound is 1/4 ln(num/den); a vanishing numerator or denominator
    // degenerates to the whole line (physicality ties the two together).
    // Physical input keeps the U2B bound <= 0 and the U1A/U3C bounds >= 0;
    // rounding of the ratio may cross zero by an ulp, which would evict the
    // identity from its own range, so the bounds are clamped to that side.
    auto quarter_log = [](double num, double den) { return 0.25 * std::log(num / den); };

    switch (variant) {
        case SubgroupId::U0:
            out.interval = ParamInterval::all_reals();
            return out;
        case SubgroupId::U2B: {
            const double num = s.s1 * s.s1 + s.s3 * s.s3;
            const double den = s.s0 * s.s0 - s.s2 * s.s2;
            out.interval = (num <= 0.0 || den <= 0.0)
                               ? ParamInterval::all_reals()
                               : ParamInterval::at_least(std::min(0.0, quarter_log(num, den)));
            return out;
        }
        case SubgroupId::U1A: {
            const double num = s.s0 * s.s0 - s.s1 * s.s1;
            const double den = s.s2 * s.s2 + s.s3 * s.s3;
            out.interval = (den <= 0.0 || num <= 0.0)
                               ? ParamInterval::all_reals()
                               : ParamInterval::at_most(std::max(0.0, quarter_log(num, den)));
            return out;
        }
        case SubgroupId::U3C: {
            const double num = s.s0 * s.s0 - s.s3 * s.s3;
            const double den = s.s1 * s.s1 + s.s2 * s.s2;
            out.interval = (den <= 0.0 || num <= 0.0)
                               ? ParamInterval::all_reals()
                               : ParamInterval::at_most(std::max(0.0, quarter_log(num, den)));
            return out;
        }
        default:
            throw std::invalid_argument("diagonal_variant_range: not a diagonal variant");
    }
}

VariantRange variant_range(SubgroupId variant, const PolarizationState& ps) {
    switch (variant_chart(variant)) {
        case ChartVar::TanPhi: return rotation_variant_range(variant, ps);
        case ChartVar::TanhBeta: return boost_variant_range(variant, ps);
        case ChartVar::Lambda: return diagonal_variant_range(variant, stokes_from_state(ps));
    }
    throw std::invalid_argument("variant_range: unknown variant");
}

ParamInterval chart_to_param(const VariantRange& r) {
    if (r.interval.empty) return r.interval;
    auto map_lo = [&](double v) -> std::pair<double, bool> {
        switch (r.chart) {
            case ChartVar::TanPhi:
                return {std::isfinite(v) ? std::atan(v) : -0.5 * M_PI, true};
            case ChartVar::TanhBeta:
                if (v <= -1.0) return {-kInf, false};
                return {std::atanh(v), true};
            case ChartVar::Lambda:
                return {v, r.interval.lo_closed};
        }
        return {v, true};
    };
    auto map_hi = [&](double v) -> std::pair<double, bool> {
        switch (r.chart) {
            case ChartVar::TanPhi:
                return {std::isfinite(v) ? std::atan(v) : 0.5 * M_PI, true};
            case ChartVar::TanhBeta:
                if (v >= 1.0) return {kInf, false};
                return {std::atanh(v), true};
            case ChartVar::Lambda:
                return {v, r.interval.hi_closed};
        }
        return {v, true};
    };

    ParamInterval out;
    const auto [lo, lo_closed] = map_lo(r.interval.lo);
    const auto [hi, hi_closed] = map_hi(r.interval.hi);
    out.lo = lo;
    out.hi = hi;
    out.lo_closed = std::isfinite(lo) && lo_closed;
    out.hi_closed = std::isfinite(hi) && hi_closed;
    // boost roots at +-1 sit at beta = +-infinity; rotation half-lines reach
    // phi = +-pi/2, where the limiting element is still admissible
    return out;
}

std::pair<double, double> default_window(SubgroupId id) {
    switch (variant_chart(id)) {
        case ChartVar::TanPhi: return {-1.5, 1.5};
        case ChartVar::TanhBeta: return {-6.0, 6.0};
        case ChartVar::Lambda: return {-6.0, 6.0};
    }
    return {-1.0, 1.0};
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

BruteForceResult brute_force_range(SubgroupId variant, const StokesVector& s,
                                   double t_lo, double t_hi, int steps) {
    if (steps < 2) throw std::invalid_argument("brute_force_range: steps must be >= 2");
    if (!(t_lo < t_hi)) throw std::invalid_argument("brute_force_range: empty window");
    if (t_lo > 0.0 || t_hi < 0.0)
        throw std::invalid_argument("brute_force_range: window must contain t = 0");
    if (!is_physical(s))
        throw NonPhysicalState("brute_force_range: input off the cone");

    const int n = steps + 1;
    const double res = (t_hi - t_lo) / steps;
    std::vector<unsigned char> ok(static_cast<size_t>(n), 0);

    auto eval_chunk = [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            const double u = t_lo + res * k;
            const StokesVector out = transform(variant_matrix(variant, u), s);
            ok[static_cast<size_t>(k)] = admissible_output(s, out) ? 1 : 0;
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int nthreads = (n >= 20000) ? static_cast<int>(std::min(hw, 8u)) : 1;
    if (nthreads <= 1) {
        eval_chunk(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        const int chunk = (n + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(eval_chunk, t * chunk, std::min(n, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    // The run containing u = 0 (t = 0 itself is the identity, always
    // admissible even when no grid sample is): expand left from the last
    // sample <= 0 and right from the first sample >= 0, as far as samples
    // stay admissible.
    const auto grid = [&](int k) { return t_lo + res * k; };
    int k_left = static_cast<int>(std::floor((0.0 - t_lo) / res));
    k_left = std::clamp(k_left, 0, n - 1);
    const int k_right = (grid(k_left) == 0.0) ? k_left : std::min(k_left + 1, n - 1);

    int lo_idx = -1, hi_idx = -1;
    if (ok[static_cast<size_t>(k_left)]) {
        int l = k_left;
        while (l > 0 && ok[static_cast<size_t>(l - 1)]) --l;
        lo_idx = l;
        hi_idx = k_left;
    }
    if (ok[static_cast<size_t>(k_right)]) {
        int r = k_right;
        while (r < n - 1 && ok[static_cast<size_t>(r + 1)]) ++r;
        hi_idx = r;
        if (lo_idx < 0) lo_idx = k_right;
    }

    const double lo = std::min(0.0, lo_idx >= 0 ? grid(lo_idx) : 0.0);
    const double hi = std::max(0.0, hi_idx >= 0 ? grid(hi_idx) : 0.0);

    BruteForceResult out;
    out.interval = ParamInterval::closed(lo, hi);
    for (int k = 0; k < n; ++k) {
        if (ok[static_cast<size_t>(k)] && (lo_idx < 0 || k < lo_idx || k > hi_idx)) {
            out.multi_component = true;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elementary deformations
// ---------------------------------------------------------------------------

RealMatrix4 elementary_deformation(int i, double lambda) {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("elementary_deformation: non-finite lambda");
    const double e = std::exp(lambda);
    const double en = std::exp(-lambda);
    switch (i) {
        case 0: return RealMatrix4::diagonal(e, 1.0, 1.0, 1.0);
        case 1: return RealMatrix4::diagonal(1.0, e, 1.0, 1.0);
        case 2: return RealMatrix4::diagonal(en, e, e, en);
        case 3: return RealMatrix4::diagonal(1.0, 1.0, 1.0, e);
        default:
            throw std::invalid_argument("elementary_deformation: index must be 0..3");
    }
}

bool elementary_deformation_display_consistent(int i) {
    if (i < 0 || i > 3) throw std::invalid_argument("elementary_deformation: index must be 0..3");
    return i != 2;
}

}  // namespace sl4
