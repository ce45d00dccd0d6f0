#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sl4/types.hpp"

namespace sl4 {

// ---------------------------------------------------------------------------
// The 16-element matrix basis (Weyl representation)
// ---------------------------------------------------------------------------

/// The identity plus the 15 traceless Hermitian involutions spanning the
/// 4x4 complex matrices. ASCII names (CLI-facing) in basis_name().
enum class BasisId {
    Identity,     // I
    Gamma5,       // g5
    Gamma0,       // g0
    IGamma5Gamma0,// ig5g0
    IGamma1,      // ig1
    Gamma5Gamma1, // g5g1
    IGamma2,      // ig2
    Gamma5Gamma2, // g5g2
    IGamma3,      // ig3
    Gamma5Gamma3, // g5g3
    Sigma01x2,    // 2s01
    Sigma02x2,    // 2s02
    Sigma03x2,    // 2s03
    ISigma12x2,   // 2is12
    ISigma23x2,   // 2is23
    ISigma31x2,   // 2is31
};

inline constexpr std::array<BasisId, 16> kAllBasisIds = {
    BasisId::Identity,      BasisId::Gamma5,       BasisId::Gamma0,
    BasisId::IGamma5Gamma0, BasisId::IGamma1,      BasisId::Gamma5Gamma1,
    BasisId::IGamma2,       BasisId::Gamma5Gamma2, BasisId::IGamma3,
    BasisId::Gamma5Gamma3,  BasisId::Sigma01x2,    BasisId::Sigma02x2,
    BasisId::Sigma03x2,     BasisId::ISigma12x2,   BasisId::ISigma23x2,
    BasisId::ISigma31x2,
};

/// Exact basis matrix; entries are in {0, +-1, +-i}.
ComplexMatrix4 basis_matrix(BasisId id);

std::string_view basis_name(BasisId id);
std::optional<BasisId> parse_basis(std::string_view name);

struct GellMannReport {
    bool traceless = false;
    bool hermitian = false;
    bool involutive = false;
};

/// Tests trace(m) = 0, m = m^dagger, m^2 = I, each within algebra_eps().
GellMannReport gell_mann_check(const ComplexMatrix4& m);

// ---------------------------------------------------------------------------
// The 15 named generators: alpha_i, beta_i and their products A/B/C
// ---------------------------------------------------------------------------

enum class GeneratorFamily { Alpha, Beta, A, B, C };

struct GeneratorId {
    GeneratorFamily family = GeneratorFamily::Alpha;
    int index = 1;  // 1..3

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

inline constexpr int kGeneratorCount = 15;

/// All 15 generators in family-major order: a1..a3, b1..b3, A1..A3, B1..B3, C1..C3.
std::array<GeneratorId, 15> all_generators();

/// The generator matrix in the Weyl representation.
ComplexMatrix4 generator(GeneratorId id);

std::string generator_name(GeneratorId id);       // "a1".."a3", "b1".."b3", "A1".."C3"
std::optional<GeneratorId> parse_generator(std::string_view name);

/// cos(a) I + i sin(a) Lambda. Real a gives a unitary element, a = i*lambda a
/// hyperbolic one.
ComplexMatrix4 exp_generator(GeneratorId id, Complex a);

// ---------------------------------------------------------------------------
// The 16 elementary one-parameter subgroups of SL(4,R)
// ---------------------------------------------------------------------------

enum class SubgroupId {
    U0,
    U1a, U2a, U3a,
    U1b, U2b, U3b,
    U1A, U2A, U3A,
    U1B, U2B, U3B,
    U1C, U2C, U3C,
};

inline constexpr std::array<SubgroupId, 16> kAllSubgroups = {
    SubgroupId::U0,  SubgroupId::U1a, SubgroupId::U2a, SubgroupId::U3a,
    SubgroupId::U1b, SubgroupId::U2b, SubgroupId::U3b, SubgroupId::U1A,
    SubgroupId::U2A, SubgroupId::U3A, SubgroupId::U1B, SubgroupId::U2B,
    SubgroupId::U3B, SubgroupId::U1C, SubgroupId::U2C, SubgroupId::U3C,
};

/// Parameter semantics of a subgroup: compact rotations take an angle,
/// boost-like elements a rapidity, diagonal elements a log-scale.
enum class ParamKind { Angle, Rapidity, LogScale };

ParamKind param_kind(SubgroupId id);

std::string_view subgroup_name(SubgroupId id);    // "U0", "U1a", ..., "U3C"
std::optional<SubgroupId> parse_subgroup(std::string_view name);

/// The real group element with one normalized parameter t: angle kinds get
/// phi = t, boost kinds beta = t, diagonal kinds lambda = t. Closed forms are
/// hard-coded; no complex arithmetic on this path. det = 1 for all kinds
/// except U0, where U0(t) = e^{-t} I.
RealMatrix4 one_param_element(SubgroupId id, double t);

/// Generator whose exponential reproduces one_param_element; U0 has none.
std::optional<GeneratorId> subgroup_generator(SubgroupId id);

// ---------------------------------------------------------------------------
// Commuting triplets and su(2) triples
// ---------------------------------------------------------------------------

struct SignedGenerator {
    GeneratorId id;
    int sign = +1;  // the triple entries may be negated generators
};

struct GeneratorTriplet {
    std::string name;  // "K", "L", "M", "K'", "L'", "M'"
    std::array<SignedGenerator, 3> members;
};

/// The six commuting triplets, transcribed verbatim from the source table.
/// Two of the primed triples do not actually close; see triplet_report.
std::vector<GeneratorTriplet> commuting_triplets();

struct TripletReport {
    bool products_close = false;   // G1 G2 = -G3 and cyclic permutations
    bool pairwise_commute = false;
    double max_residual = 0.0;
};

TripletReport triplet_report(const GeneratorTriplet& t);

struct Su2Triple {
    std::array<GeneratorId, 3> members;
    /// X1 X2 = signs[2] * i * X3, X2 X3 = signs[0] * i * X1,
    /// X3 X1 = signs[1] * i * X2; computed once from generator products.
    std::array<int, 3> signs{0, 0, 0};
    bool closes = false;
};

/// The catalog of 20 su(2)-type triples with computed structure-constant signs.
std::vector<Su2Triple> su2_catalog();

/// True iff all nine alpha_j beta_k commutators vanish within algebra_eps().
bool verify_commutation_alpha_beta();

}  // namespace sl4
