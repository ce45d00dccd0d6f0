#pragma once

#include "sl4/types.hpp"

namespace sl4 {

/// Pure boost acting on Stokes 4-vectors: rapidity plus unit axis.
struct BoostSpec {
    double rapidity = 0.0;
    Vector3 axis{0.0, 0.0, 1.0};
};

/// Symmetric Lorentz boost: M00 = cosh b, M0i = Mi0 = -e_i sinh b,
/// Mij = delta_ij + (cosh b - 1) e_i e_j. Unit determinant, preserves the
/// Minkowski norm. Rejects a non-unit axis.
RealMatrix4 boost_matrix(const BoostSpec& b);

/// Action on partially polarized light:
///   I' = I (cosh b - sinh b e.p),
///   p' = (p - e sinh b + (cosh b - 1) e (e.p)) / (cosh b - sinh b e.p).
PolarizationState act_partial(const BoostSpec& b, const PolarizationState& ps);

struct RestFrame {
    double beta0 = 0.0;   // atanh(|p|)
    double i_rest = 0.0;  // I * sqrt(1 - p^2)
};

/// The boost along p/|p| that turns a partially polarized state into natural
/// light. Requires 0 < |p| < 1; |p| = 0 is already natural and |p| = 1 has no
/// rest frame.
RestFrame rest_frame(const PolarizationState& ps);

struct FullyPolarizedResult {
    double intensity = 0.0;
    Vector3 n{0.0, 0.0, 1.0};
};

/// Action on completely polarized light (I, I n), |n| = 1. The degree of
/// polarization stays exactly 1; for e = +-n the direction is fixed and the
/// intensity scales by e^{-+b}.
FullyPolarizedResult act_full(const BoostSpec& b, const Vector3& n, double intensity);

/// I^2 (1 - |p|^2); conserved by every boost.
double invariant(const PolarizationState& ps);

/// Image of the |p| = const sphere under a boost: an ellipsoid of revolution
/// about the boost axis,
///   q1^2 + q2^2 + a_axial (q3 + gamma)^2 = rhs
/// in coordinates with the axis third.
struct EllipsoidSpec {
    double a_perp = 1.0;
    double a_axial = 1.0;   // cosh^2 b - p^2 sinh^2 b, always > 0
    double gamma = 0.0;     // center offset along the axis
    double rhs = 0.0;       // p^2 / a_axial
    Vector3 axis{0.0, 0.0, 1.0};
};

/// Requires 0 <= p < 1. The default axis is (0,0,1); a general axis only
/// rotates the figure, the coefficients do not change.
EllipsoidSpec ellipsoid_image(double beta, double p);
EllipsoidSpec ellipsoid_image(double beta, double p, const Vector3& axis);

/// Axial-component map for the axis-aligned boost:
/// p3' = (cosh b p3 - sinh b) / (cosh b - p3 sinh b).
double transform_p3(double beta, double p3);

/// Inverse of transform_p3 (same map with the rapidity negated).
double transform_p3_inverse(double beta, double p3_out);

}  // namespace sl4
