#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sl4/types.hpp"
#include "sl4/dirac.hpp"

namespace sl4::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Deterministic generator of random physical light states.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    Vector3 unit_vector();
    /// Intensity in [0.1, 10); |p| < 1, or exactly 1 with the given probability.
    PolarizationState state(double boundary_prob = 0.25);
    StokesVector stokes(double boundary_prob = 0.25);
    RealMatrix4 matrix(double bound);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Closed-form |p'|^2 - |p|^2 in the variant chart, assembled from the
/// pattern-consistent per-variant fractions. This is the oracle the matrix
/// path is tested against, not a production path.
double d_oracle(SubgroupId variant, const PolarizationState& ps, double chart_param);

// Parametric heavy checks, shared with the acceptance suite -----------------

/// Rotation/boost closed forms vs the brute-force oracle.
CheckResult check_range_closed_vs_oracle(int states_per_variant, int steps, uint64_t seed);
/// Diagonal lambda bounds vs the brute-force oracle; U0 admissible everywhere.
CheckResult check_diagonal_vs_oracle(int states, int steps, uint64_t seed);
/// -1 <= y1 <= 0 <= y2 <= +1 on random states.
CheckResult check_boost_root_bounds(int samples, uint64_t seed);
/// U(s)U(t) = U(s+t) and det U(t) = 1 for all 16 subgroups.
CheckResult check_subgroup_laws(int pairs_per_subgroup, double tol, uint64_t seed);
/// Matrix-action D vs the closed-form fractions inside the admissible range.
CheckResult check_d_oracle_agreement(int samples, uint64_t seed);
/// Invariant conservation under random boosts.
CheckResult check_invariant_conservation(int samples, uint64_t seed);
/// |n_out| = 1 under random boosts of completely polarized light.
CheckResult check_full_polarization_preserved(int samples, uint64_t seed);

/// Every registered invariant check whose name contains `filter`
/// (empty = all), in a fixed order.
std::vector<CheckResult> run_all(std::string_view filter = {});

}  // namespace sl4::verify
