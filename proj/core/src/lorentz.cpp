#include "sl4/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace sl4 {

namespace {

void require_unit(const Vector3& e, const char* what) {
    if (std::fabs(norm(e) - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + ": axis must be a unit vector");
}

}  // namespace

RealMatrix4 boost_matrix(const BoostSpec& b) {
    require_unit(b.axis, "boost_matrix");
    const double ch = std::cosh(b.rapidity);
    const double sh = std::sinh(b.rapidity);
    RealMatrix4 m;
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        const double ei = b.axis[static_cast<size_t>(i)];
        m(0, i + 1) = -ei * sh;
        m(i + 1, 0) = -ei * sh;
        for (int j = 0; j < 3; ++j) {
            const double ej = b.axis[static_cast<size_t>(j)];
            m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * ei * ej;
        }
    }
    return m;
}

PolarizationState act_partial(const BoostSpec& b, const PolarizationState& ps) {
    require_unit(b.axis, "act_partial");
    if (!(ps.intensity > 0.0))
        throw std::invalid_argument("act_partial: intensity must be > 0");
    const double ch = std::cosh(b.rapidity);
    const double sh = std::sinh(b.rapidity);
    const double ep = dot(b.axis, ps.p);
    const double denom = ch - sh * ep;  // > 0 since |e.p| <= 1
    PolarizationState out;
    out.intensity = ps.intensity * denom;
    for (int i = 0; i < 3; ++i) {
        const double num = ps.p[static_cast<size_t>(i)] -
                           b.axis[static_cast<size_t>(i)] * sh +
                           (ch - 1.0) * b.axis[static_cast<size_t>(i)] * ep;
        out.p[static_cast<size_t>(i)] = num / denom;
    }
    return out;
}

RestFrame rest_frame(const PolarizationState& ps) {
    if (!(ps.intensity > 0.0))
        throw std::invalid_argument("rest_frame: intensity must be > 0");
    const double p = norm(ps.p);
    if (p == 0.0)
        throw std::invalid_argument("rest_frame: already natural light");
    if (p >= 1.0)
        throw std::invalid_argument(
            "rest_frame: no rest frame exists for completely polarized light");
    RestFrame r;
    r.beta0 = std::atanh(p);
    r.i_rest = ps.intensity * std::sqrt(1.0 - p * p);
    return r;
}

FullyPolarizedResult act_full(const BoostSpec& b, const Vector3& n, double intensity) {
    require_unit(b.axis, "act_full");
    require_unit(n, "act_full(n)");
    if (!(intensity > 0.0))
        throw std::invalid_argument("act_full: intensity must be > 0");
    const double ch = std::cosh(b.rapidity);
    const double sh = std::sinh(b.rapidity);
    const double en = dot(b.axis, n);
    const double denom = ch - sh * en;
    FullyPolarizedResult out;
    out.intensity = intensity * denom;
    for (int i = 0; i < 3; ++i) {
        out.n[static_cast<size_t>(i)] =
            (n[static_cast<size_t>(i)] - b.axis[static_cast<size_t>(i)] * sh +
             (ch - 1.0) * b.axis[static_cast<size_t>(i)] * en) /
            denom;
    }
    return out;
}

double invariant(const PolarizationState& ps) {
    return ps.intensity * ps.intensity * (1.0 - dot(ps.p, ps.p));
}

EllipsoidSpec ellipsoid_image(double beta, double p) {
    return ellipsoid_image(beta, p, Vector3{0.0, 0.0, 1.0});
}

EllipsoidSpec ellipsoid_image(double beta, double p, const Vector3& axis) {
    require_unit(axis, "ellipsoid_image");
    if (!(p >= 0.0) || p >= 1.0)
        throw std::invalid_argument("ellipsoid_image: requires 0 <= p < 1");
    const double ch = std::cosh(beta);
    const double sh = std::sinh(beta);
    EllipsoidSpec e;
    e.a_perp = 1.0;
    e.a_axial = ch * ch - p * p * sh * sh;  // = cosh^2 b (1 - p^2) + p^2 > 0
    e.gamma = (1.0 - p * p) * sh * ch / e.a_axial;
    e.rhs = p * p / e.a_axial;
    e.axis = axis;
    return e;
}

double transform_p3(double beta, double p3) {
    const double ch = std::cosh(beta);
    const double sh = std::sinh(beta);
    const double denom = ch - p3 * sh;
    if (denom == 0.0)
        throw std::invalid_argument("transform_p3: pole (requires |p3| <= 1)");
    return (ch * p3 - sh) / denom;
}

double transform_p3_inverse(double beta, double p3_out) {
    return transform_p3(-beta, p3_out);
}

}  // namespace sl4
