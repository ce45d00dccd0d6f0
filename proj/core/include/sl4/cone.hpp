#pragma once

#include <optional>
#include <utility>

#include "sl4/dirac.hpp"
#include "sl4/types.hpp"

namespace sl4 {

/// S' = M S.
StokesVector transform(const RealMatrix4& m, const StokesVector& s);

/// Result of testing a transformed Stokes vector against the two cone
/// inequalities (S0' >= 0 and S'^2 >= 0), with the boundary slack kConeEps.
struct AdmissibilityReport {
    bool first_ok = false;
    bool second_ok = false;
    StokesVector s_out;

    bool admissible() const { return first_ok && second_ok; }
};

/// Applies m to a physical s and reports both inequalities. Throws
/// NonPhysicalState if s itself is off the cone.
AdmissibilityReport check_on_state(const RealMatrix4& m, const StokesVector& s);

// ---------------------------------------------------------------------------
// Admissible parameter ranges for the 16 one-parameter variants
// ---------------------------------------------------------------------------
//
// Each variant is analysed in a fixed chart: x = tan(phi) for the six
// rotation variants, y = tanh(beta) for the six boost variants, lambda
// itself for the four diagonal ones. The chart follows the variant's
// standard analysis-block orientation; for U2a, U2A and U2C that block is
// the inverse element, so the chart parameter is the NEGATIVE of the
// one_param_element parameter (see chart_sign / variant_matrix).

enum class ChartVar { TanPhi, TanhBeta, Lambda };

ChartVar variant_chart(SubgroupId id);

/// +1 or -1: variant_matrix(id, u) == one_param_element(id, chart_sign(id) * u).
double chart_sign(SubgroupId id);

/// The group element oriented the way the range charts expect.
RealMatrix4 variant_matrix(SubgroupId id, double u);

/// Index (0..2) of the polarization coordinate coupled to the intensity row
/// for a rotation variant.
int rotation_active_index(SubgroupId id);

/// Boost variants couple an (f,g) pair in the quadratic cross term; the third
/// coordinate h enters the intensity row with sign h_sign.
struct BoostTraits {
    int f = 0;
    int g = 1;
    int h = 2;
    double h_sign = 1.0;
};

BoostTraits boost_traits(SubgroupId id);

/// Exact admissible range of one variant for one input state, in the
/// variant's chart.
struct VariantRange {
    SubgroupId variant = SubgroupId::U0;
    ChartVar chart = ChartVar::Lambda;
    ParamInterval interval;
    std::optional<std::pair<double, double>> roots;
    /// Set for the boundary special cases: an axis-aligned fully polarized
    /// input that kills the quadratic coefficient.
    bool degenerate = false;
};

/// Quadratic-root range for U1a/U2a/U3a/U1b/U2b/U3b. |p| <= 1 required.
VariantRange rotation_variant_range(SubgroupId variant, const PolarizationState& ps);

/// Root range for U2A/U3A/U1B/U3B/U1C/U2C; always within [-1, +1].
VariantRange boost_variant_range(SubgroupId variant, const PolarizationState& ps);

/// Log-scale bounds for U0/U1A/U2B/U3C; s must be physical.
VariantRange diagonal_variant_range(SubgroupId variant, const StokesVector& s);

/// Dispatcher over the three kinds above.
VariantRange variant_range(SubgroupId variant, const PolarizationState& ps);

/// Maps a chart interval back to the chart parameter u (angle, rapidity or
/// lambda): atan / atanh endpoint-wise, identity for diagonal variants.
ParamInterval chart_to_param(const VariantRange& r);

/// Default scan window of the chart parameter per variant kind, used by the
/// oracle and the CLI.
std::pair<double, double> default_window(SubgroupId id);

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

struct BruteForceResult {
    ParamInterval interval;        // hull of the admissible run containing u = 0
    bool multi_component = false;  // admissible samples seen outside that run
};

/// Samples the chart parameter uniformly over [t_lo, t_hi] (steps + 1 points,
/// resolution (t_hi - t_lo)/steps), evaluates admissibility of
/// variant_matrix(variant, u) on s at each sample and returns the hull of the
/// maximal contiguous admissible run containing u = 0. Grid evaluation is
/// chunked across threads; the result does not depend on thread count.
BruteForceResult brute_force_range(SubgroupId variant, const StokesVector& s,
                                   double t_lo, double t_hi, int steps);

// ---------------------------------------------------------------------------
// Elementary deformations
// ---------------------------------------------------------------------------

/// The four diagonal deformations E0..E3, exactly as displayed in the source
/// table. The displayed E2 is diag(e^-l, e^l, e^l, e^-l), which does NOT
/// realize the single-coordinate action stated next to it (that would be
/// diag(1, 1, e^l, 1)); the matrix wins here and
/// elementary_deformation_display_consistent(2) reports the mismatch.
RealMatrix4 elementary_deformation(int i, double lambda);

/// False for i = 2 (displayed matrix contradicts its stated action).
bool elementary_deformation_display_consistent(int i);

}  // namespace sl4
