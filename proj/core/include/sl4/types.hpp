#pragma once

#include <array>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace sl4 {

using Complex = std::complex<double>;
using Vector3 = std::array<double, 3>;

/// Input violates the Stokes cone (S0 >= 0, S0^2 - S1^2 - S2^2 - S3^2 >= 0).
struct NonPhysicalState : std::domain_error {
    explicit NonPhysicalState(const std::string& what) : std::domain_error(what) {}
};

/// Zero-intensity Stokes vector: physical, but carries no polarization direction.
struct DegenerateState : std::domain_error {
    explicit DegenerateState(const std::string& what) : std::domain_error(what) {}
};

/// Absolute tolerance used for algebraic identity checks (products of exact
/// matrices, group laws, commutators). Defaults to 1e-12; the environment
/// variable STOKES_SL4_EPS overrides it at process start.
double algebra_eps();

/// Override the algebraic tolerance for the current process.
void set_algebra_eps(double eps);

/// Relative cone-inequality slack: admissibility checks accept
/// minkowski_norm(s') >= -kConeEps * scale^2 so that boundary (fully
/// polarized) outputs pass.
inline constexpr double kConeEps = 1e-9;

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// 4x4 real matrix, row-major. Carrier of all Mueller/Lorentz transformations.
struct RealMatrix4 {
    std::array<double, 16> m{};

    double& operator()(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    double operator()(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }

    static RealMatrix4 identity();
    static RealMatrix4 diagonal(double d0, double d1, double d2, double d3);
    static RealMatrix4 from_rows(const std::array<double, 16>& rows);

    bool all_finite() const;
};

/// 4x4 complex matrix, row-major. Carrier of the Dirac basis and the unitary
/// one-parameter blocks.
struct ComplexMatrix4 {
    std::array<Complex, 16> m{};

    Complex& operator()(int r, int c) { return m[static_cast<size_t>(4 * r + c)]; }
    Complex operator()(int r, int c) const { return m[static_cast<size_t>(4 * r + c)]; }

    static ComplexMatrix4 identity();
    static ComplexMatrix4 from_rows(const std::array<Complex, 16>& rows);

    bool all_finite() const;
};

RealMatrix4 mat_mul(const RealMatrix4& a, const RealMatrix4& b);
ComplexMatrix4 mat_mul(const ComplexMatrix4& a, const ComplexMatrix4& b);

inline RealMatrix4 operator*(const RealMatrix4& a, const RealMatrix4& b) { return mat_mul(a, b); }
inline ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) { return mat_mul(a, b); }

RealMatrix4 operator+(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 operator-(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 operator*(double s, const RealMatrix4& a);
ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& a);

RealMatrix4 transpose(const RealMatrix4& a);
ComplexMatrix4 adjoint(const ComplexMatrix4& a);
Complex trace(const ComplexMatrix4& a);
double trace(const RealMatrix4& a);

/// Determinant via LU with partial pivoting (stable for hyperbolic entries).
double det(const RealMatrix4& a);

/// Gauss-Jordan inverse with partial pivoting; throws std::invalid_argument
/// on a numerically singular matrix.
RealMatrix4 inverse(const RealMatrix4& a);

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b);
double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
double max_abs_imag(const ComplexMatrix4& a);
RealMatrix4 real_part(const ComplexMatrix4& a);
ComplexMatrix4 complexify(const RealMatrix4& a);

// ---------------------------------------------------------------------------
// Light states
// ---------------------------------------------------------------------------

/// Stokes 4-vector (s0, s1, s2, s3); physical iff s0 >= 0 and
/// s0^2 - s1^2 - s2^2 - s3^2 >= 0.
struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

/// Intensity I > 0 plus polarization vector p, |p| <= 1.
struct PolarizationState {
    double intensity = 1.0;
    Vector3 p{0.0, 0.0, 0.0};
};

/// s0^2 - s1^2 - s2^2 - s3^2.
double minkowski_norm(const StokesVector& s);

/// Cone membership with the kConeEps slack.
bool is_physical(const StokesVector& s);

/// (I, p) -> (I, I p1, I p2, I p3). Rejects intensity <= 0 and |p| > 1.
StokesVector stokes_from_state(const PolarizationState& ps);

/// Inverse of stokes_from_state. Throws NonPhysicalState off the cone and
/// DegenerateState for s0 = 0 (no polarization direction exists).
PolarizationState state_from_stokes(const StokesVector& s);

double dot(const Vector3& a, const Vector3& b);
double norm(const Vector3& a);

// ---------------------------------------------------------------------------
// Parameter intervals
// ---------------------------------------------------------------------------

/// Closed/half-open real interval, possibly unbounded, possibly empty.
/// Infinite endpoints are always open.
struct ParamInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
    bool empty = false;

    static ParamInterval all_reals();
    static ParamInterval make_empty();
    static ParamInterval closed(double lo, double hi);
    static ParamInterval point(double x);
    static ParamInterval at_least(double lo);   // [lo, +inf)
    static ParamInterval at_most(double hi);    // (-inf, hi]

    bool contains(double x) const;
    bool bounded_below() const { return std::isfinite(lo); }
    bool bounded_above() const { return std::isfinite(hi); }

    /// Intersect with [lo, hi]; used to clip unbounded ranges to scan windows.
    ParamInterval clipped(double window_lo, double window_hi) const;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace sl4
