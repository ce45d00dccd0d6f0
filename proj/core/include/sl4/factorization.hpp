#pragma once

#include "sl4/types.hpp"

namespace sl4 {

/// Quaternion-style parameters (k0, k1, k2, k3); complex in general, real for
/// the pure polarization-rotation slice.
struct QuatParams {
    Complex k0{1.0, 0.0};
    std::array<Complex, 3> k{};

    bool is_real(double eps) const;
};

/// R_alpha(k0, k_i) = k0 I + k_i alpha^i. Entries must be real.
RealMatrix4 r_alpha(const QuatParams& q);

/// R_beta(m0, m_i) = m0 I + m_i beta^i. Entries must be real.
RealMatrix4 r_beta(const QuatParams& q);

/// Composition law of the alpha subgroup (quaternion product with +epsilon):
/// k0'' = k0' k0 - k' . k, k_n'' = k0' k_n + k_n' k0 + eps_ijn k_i' k_j.
QuatParams compose_alpha(const QuatParams& lhs, const QuatParams& rhs);

/// Composition law of the beta subgroup (the -epsilon twin).
QuatParams compose_beta(const QuatParams& lhs, const QuatParams& rhs);

/// K = Pi^-1 R_alpha(k) Pi with Pi = diag(1, i, i, i): an i k_j border around
/// the +-k spatial block.
ComplexMatrix4 k_factor(const QuatParams& q);

/// K* = Pi^-1 R_beta(k0*, -k_j*) Pi, the commuting conjugate factor.
ComplexMatrix4 k_conj_factor(const QuatParams& q);

/// L = K K* = K* K. For any complex k the product is real and the two factors
/// commute; lorentz_from_k reports the numerical residuals of both facts.
struct LorentzFactorization {
    QuatParams k;
    RealMatrix4 l_matrix;
    ComplexMatrix4 k_factor;
    ComplexMatrix4 k_conj_factor;
    double commute_residual = 0.0;
    double imag_residual = 0.0;
    double det_l = 0.0;
};

LorentzFactorization lorentz_from_k(const QuatParams& q);

/// The three 2-parameter commuting pairs (K_axis, K_axis*), axis in 1..3:
/// k_factor restricted to a single spatial slot.
std::pair<ComplexMatrix4, ComplexMatrix4> two_param_factors(int axis, Complex k0, Complex ka);

}  // namespace sl4
