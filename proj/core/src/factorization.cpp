#include "sl4/factorization.hpp"

#include <cmath>
#include <stdexcept>

namespace sl4 {

namespace {

constexpr Complex im{0.0, 1.0};

void require_real(const QuatParams& q, const char* what) {
    if (!q.is_real(algebra_eps()))
        throw std::invalid_argument(std::string(what) + ": parameters must be real");
}

}  // namespace

bool QuatParams::is_real(double eps) const {
    if (std::fabs(k0.imag()) > eps) return false;
    for (const auto& v : k)
        if (std::fabs(v.imag()) > eps) return false;
    return true;
}

RealMatrix4 r_alpha(const QuatParams& q) {
    require_real(q, "r_alpha");
    const double k0 = q.k0.real();
    const double k1 = q.k[0].real(), k2 = q.k[1].real(), k3 = q.k[2].real();
    return RealMatrix4::from_rows({
        k0,  k1,  k2,  k3,
        -k1, k0,  -k3, k2,
        -k2, k3,  k0,  -k1,
        -k3, -k2, k1,  k0,
    });
}

RealMatrix4 r_beta(const QuatParams& q) {
    require_real(q, "r_beta");
    const double m0 = q.k0.real();
    const double m1 = q.k[0].real(), m2 = q.k[1].real(), m3 = q.k[2].real();
    return RealMatrix4::from_rows({
        m0,  m1,  m2,  m3,
        -m1, m0,  m3,  -m2,
        -m2, -m3, m0,  m1,
        -m3, m2,  -m1, m0,
    });
}

namespace {

QuatParams compose(const QuatParams& lhs, const QuatParams& rhs, double eps_sign) {
    QuatParams out;
    out.k0 = lhs.k0 * rhs.k0 - (lhs.k[0] * rhs.k[0] + lhs.k[1] * rhs.k[1] + lhs.k[2] * rhs.k[2]);
    for (int n = 0; n < 3; ++n) {
        const int i = (n + 1) % 3, j = (n + 2) % 3;
        out.k[static_cast<size_t>(n)] =
            lhs.k0 * rhs.k[static_cast<size_t>(n)] + lhs.k[static_cast<size_t>(n)] * rhs.k0 +
            eps_sign * (lhs.k[static_cast<size_t>(i)] * rhs.k[static_cast<size_t>(j)] -
                        lhs.k[static_cast<size_t>(j)] * rhs.k[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace

QuatParams compose_alpha(const QuatParams& lhs, const QuatParams& rhs) {
    return compose(lhs, rhs, +1.0);
}

QuatParams compose_beta(const QuatParams& lhs, const QuatParams& rhs) {
    return compose(lhs, rhs, -1.0);
}

ComplexMatrix4 k_factor(const QuatParams& q) {
    const Complex k0 = q.k0;
    const Complex k1 = q.k[0], k2 = q.k[1], k3 = q.k[2];
    return ComplexMatrix4::from_rows({
        k0,      im * k1, im * k2, im * k3,
        im * k1, k0,      -k3,     k2,
        im * k2, k3,      k0,      -k1,
        im * k3, -k2,     k1,      k0,
    });
}

ComplexMatrix4 k_conj_factor(const QuatParams& q) {
    const Complex c0 = std::conj(q.k0);
    const Complex c1 = std::conj(q.k[0]), c2 = std::conj(q.k[1]), c3 = std::conj(q.k[2]);
    return ComplexMatrix4::from_rows({
        c0,       -im * c1, -im * c2, -im * c3,
        -im * c1, c0,       -c3,      c2,
        -im * c2, c3,       c0,       -c1,
        -im * c3, -c2,      c1,       c0,
    });
}

LorentzFactorization lorentz_from_k(const QuatParams& q) {
    LorentzFactorization out;
    out.k = q;
    out.k_factor = sl4::k_factor(q);
    out.k_conj_factor = sl4::k_conj_factor(q);
    const ComplexMatrix4 kk = mat_mul(out.k_factor, out.k_conj_factor);
    const ComplexMatrix4 kk_rev = mat_mul(out.k_conj_factor, out.k_factor);
    out.commute_residual = max_abs_diff(kk, kk_rev);
    out.imag_residual = max_abs_imag(kk);
    out.l_matrix = real_part(kk);
    out.det_l = det(out.l_matrix);
    return out;
}

std::pair<ComplexMatrix4, ComplexMatrix4> two_param_factors(int axis, Complex k0, Complex ka) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("two_param_factors: axis must be 1..3");
    QuatParams q;
    q.k0 = k0;
    q.k[static_cast<size_t>(axis - 1)] = ka;
    return {k_factor(q), k_conj_factor(q)};
}

}  // namespace sl4
