#pragma once

#include <vector>

#include "sl4/cone.hpp"

namespace sl4 {

/// Direction of the change of the squared polarization degree under one
/// variant at one chart parameter.
enum class DSign { Decreases, Neutral, Increases };

inline constexpr double kDSignEps = 1e-12;

struct DReport {
    SubgroupId variant = SubgroupId::U1a;
    double param = 0.0;    // x- or y-chart value
    double d_value = 0.0;  // |p_out|^2 - |p_in|^2
    DSign sign = DSign::Neutral;
};

/// Computes D by actually applying the variant's matrix (chart-oriented) and
/// converting back; the closed-form fractions are reserved for tests. Throws
/// on the intensity-zero pole of the chart parameter.
DReport d_entity(SubgroupId variant, const PolarizationState& ps, double chart_param);

struct DSignBoundaries {
    std::vector<double> neutral_points;  // ascending
    bool degenerate = false;             // active coordinate at +-1
};

/// Chart values where D changes sign: {0, 2a/(1-a^2)} for rotation variants
/// (a the active coordinate), {0, 2[2fg - h(1-p^2)]/((1-h^2)(1+p^2))} for
/// boost variants (signed third coordinate h). D < 0 between the two points,
/// D > 0 outside.
DSignBoundaries d_sign_boundaries(SubgroupId variant, const PolarizationState& ps);

struct NeutralCurve {
    /// (a, x) samples of the D = 0 locus, a the active polarization
    /// coordinate, x the nonzero neutral chart value.
    std::vector<std::pair<double, double>> samples;
};

/// Locates the nonzero root of D(a, .) by bisection on d_entity for each a in
/// the grid. Rotation variants use the state p = a * active axis (closed form
/// 2a/(1-a^2)); boost variants split a evenly over the active pair.
NeutralCurve neutral_curve(SubgroupId variant, const std::vector<double>& a_grid);

}  // namespace sl4
