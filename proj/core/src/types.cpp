#include "sl4/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace sl4 {

namespace {

double initial_algebra_eps() {
    if (const char* env = std::getenv("STOKES_SL4_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v > 0.0) return v;
    }
    return 1e-12;
}

double g_algebra_eps = initial_algebra_eps();

}  // namespace

double algebra_eps() { return g_algebra_eps; }
void set_algebra_eps(double eps) { g_algebra_eps = eps; }

// ---------------------------------------------------------------------------
// RealMatrix4 / ComplexMatrix4
// ---------------------------------------------------------------------------

RealMatrix4 RealMatrix4::identity() {
    RealMatrix4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

RealMatrix4 RealMatrix4::diagonal(double d0, double d1, double d2, double d3) {
    RealMatrix4 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    r(2, 2) = d2;
    r(3, 3) = d3;
    return r;
}

RealMatrix4 RealMatrix4::from_rows(const std::array<double, 16>& rows) {
    RealMatrix4 r;
    r.m = rows;
    return r;
}

bool RealMatrix4::all_finite() const {
    return std::all_of(m.begin(), m.end(), [](double v) { return std::isfinite(v); });
}

ComplexMatrix4 ComplexMatrix4::identity() {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
}

ComplexMatrix4 ComplexMatrix4::from_rows(const std::array<Complex, 16>& rows) {
    ComplexMatrix4 r;
    r.m = rows;
    return r;
}

bool ComplexMatrix4::all_finite() const {
    return std::all_of(m.begin(), m.end(), [](const Complex& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

RealMatrix4 mat_mul(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix4 mat_mul(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Complex aik = a(i, k);
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

RealMatrix4 operator+(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

RealMatrix4 operator-(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

RealMatrix4 operator*(double s, const RealMatrix4& a) {
    RealMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
}

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

ComplexMatrix4 operator*(Complex s, const ComplexMatrix4& a) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
}

RealMatrix4 transpose(const RealMatrix4& a) {
    RealMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(j, i);
    return r;
}

ComplexMatrix4 adjoint(const ComplexMatrix4& a) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

Complex trace(const ComplexMatrix4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }
double trace(const RealMatrix4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

double det(const RealMatrix4& a) {
    // LU with partial pivoting; cofactor expansion loses too many digits on
    // cosh/sinh-filled matrices.
    std::array<double, 16> u = a.m;
    auto at = [&u](int r, int c) -> double& { return u[static_cast<size_t>(4 * r + c)]; };
    double d = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(at(r, col)) > std::fabs(at(pivot, col))) pivot = r;
        if (at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < 4; ++c) std::swap(at(pivot, c), at(col, c));
            d = -d;
        }
        d *= at(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const double f = at(r, col) / at(col, col);
            for (int c = col; c < 4; ++c) at(r, c) -= f * at(col, c);
        }
    }
    return d;
}

RealMatrix4 inverse(const RealMatrix4& a) {
    std::array<double, 32> w{};  // [A | I] augmented, row-major 4x8
    auto at = [&w](int r, int c) -> double& { return w[static_cast<size_t>(8 * r + c)]; };
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) at(i, j) = a(i, j);
        at(i, i + 4) = 1.0;
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(at(r, col)) > std::fabs(at(pivot, col))) pivot = r;
        if (std::fabs(at(pivot, col)) < 1e-300)
            throw std::invalid_argument("inverse: singular matrix");
        if (pivot != col)
            for (int c = 0; c < 8; ++c) std::swap(at(pivot, c), at(col, c));
        const double inv_p = 1.0 / at(col, col);
        for (int c = 0; c < 8; ++c) at(col, c) *= inv_p;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = at(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < 8; ++c) at(r, c) -= f * at(col, c);
        }
    }
    RealMatrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = at(i, j + 4);
    return out;
}

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b) {
    double m = 0.0;
    for (size_t i = 0; i < 16; ++i) m = std::max(m, std::fabs(a.m[i] - b.m[i]));
    return m;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    double m = 0.0;
    for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

double max_abs_imag(const ComplexMatrix4& a) {
    double m = 0.0;
    for (const auto& v : a.m) m = std::max(m, std::fabs(v.imag()));
    return m;
}

RealMatrix4 real_part(const ComplexMatrix4& a) {
    RealMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i].real();
    return r;
}

ComplexMatrix4 complexify(const RealMatrix4& a) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.m[i] = a.m[i];
    return r;
}

// ---------------------------------------------------------------------------
// Light states
// ---------------------------------------------------------------------------

double minkowski_norm(const StokesVector& s) {
    return s.s0 * s.s0 - s.s1 * s.s1 - s.s2 * s.s2 - s.s3 * s.s3;
}

bool is_physical(const StokesVector& s) {
    const double scale = std::max(1.0, std::fabs(s.s0));
    if (s.s0 < -kConeEps * scale) return false;
    return minkowski_norm(s) >= -kConeEps * scale * scale;
}

double dot(const Vector3& a, const Vector3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vector3& a) { return std::sqrt(dot(a, a)); }

StokesVector stokes_from_state(const PolarizationState& ps) {
    if (!(ps.intensity > 0.0))
        throw std::invalid_argument("stokes_from_state: intensity must be > 0");
    const double p2 = dot(ps.p, ps.p);
    if (p2 > 1.0 + algebra_eps())
        throw NonPhysicalState("stokes_from_state: |p| > 1");
    return {ps.intensity, ps.intensity * ps.p[0], ps.intensity * ps.p[1],
            ps.intensity * ps.p[2]};
}

PolarizationState state_from_stokes(const StokesVector& s) {
    if (!is_physical(s))
        throw NonPhysicalState("state_from_stokes: Stokes vector is off the cone");
    if (s.s0 == 0.0)
        throw DegenerateState("state_from_stokes: s0 = 0 carries no polarization direction");
    const double inv = 1.0 / s.s0;
    return {s.s0, {s.s1 * inv, s.s2 * inv, s.s3 * inv}};
}

// ---------------------------------------------------------------------------
// ParamInterval
// ---------------------------------------------------------------------------

ParamInterval ParamInterval::all_reals() { return {-kInf, kInf, false, false, false}; }

ParamInterval ParamInterval::make_empty() {
    ParamInterval r;
    r.empty = true;
    r.lo = 0.0;
    r.hi = 0.0;
    r.lo_closed = false;
    r.hi_closed = false;
    return r;
}

ParamInterval ParamInterval::closed(double lo, double hi) { return {lo, hi, true, true, false}; }

ParamInterval ParamInterval::point(double x) { return {x, x, true, true, false}; }

ParamInterval ParamInterval::at_least(double lo) { return {lo, kInf, true, false, false}; }

ParamInterval ParamInterval::at_most(double hi) { return {-kInf, hi, false, true, false}; }

bool ParamInterval::contains(double x) const {
    if (empty) return false;
    if (x < lo || (x == lo && !lo_closed)) return false;
    if (x > hi || (x == hi && !hi_closed)) return false;
    return true;
}

ParamInterval ParamInterval::clipped(double window_lo, double window_hi) const {
    if (empty) return *this;
    ParamInterval r = *this;
    if (r.lo < window_lo) {
        r.lo = window_lo;
        r.lo_closed = true;
    }
    if (r.hi > window_hi) {
        r.hi = window_hi;
        r.hi_closed = true;
    }
    if (r.lo > r.hi) return make_empty();
    return r;
}

}  // namespace sl4
