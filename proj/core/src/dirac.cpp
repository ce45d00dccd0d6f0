#include "sl4/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace sl4 {

namespace {

constexpr Complex im{0.0, 1.0};

ComplexMatrix4 cm(std::initializer_list<Complex> vals) {
    ComplexMatrix4 r;
    size_t i = 0;
    for (const Complex& v : vals) r.m[i++] = v;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Basis
// ---------------------------------------------------------------------------

ComplexMatrix4 basis_matrix(BasisId id) {
    switch (id) {
        case BasisId::Identity:
            return ComplexMatrix4::identity();
        case BasisId::Gamma5:
            return cm({-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
        case BasisId::Gamma0:
            return cm({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
        case BasisId::IGamma5Gamma0:
            return cm({0, 0, -im, 0, 0, 0, 0, -im, im, 0, 0, 0, 0, im, 0, 0});
        case BasisId::IGamma1:
            return cm({0, 0, 0, -im, 0, 0, -im, 0, 0, im, 0, 0, im, 0, 0, 0});
        case BasisId::Gamma5Gamma1:
            return cm({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
        case BasisId::IGamma2:
            return cm({0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0});
        case BasisId::Gamma5Gamma2:
            return cm({0, 0, 0, -im, 0, 0, im, 0, 0, -im, 0, 0, im, 0, 0, 0});
        case BasisId::IGamma3:
            return cm({0, 0, -im, 0, 0, 0, 0, im, im, 0, 0, 0, 0, -im, 0, 0});
        case BasisId::Gamma5Gamma3:
            return cm({0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0});
        case BasisId::Sigma01x2:
            return cm({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0});
        case BasisId::Sigma02x2:
            return cm({0, -im, 0, 0, im, 0, 0, 0, 0, 0, 0, im, 0, 0, -im, 0});
        case BasisId::Sigma03x2:
            return cm({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
        case BasisId::ISigma12x2:
            return cm({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        case BasisId::ISigma23x2:
            return cm({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
        case BasisId::ISigma31x2:
            return cm({0, -im, 0, 0, im, 0, 0, 0, 0, 0, 0, -im, 0, 0, im, 0});
    }
    throw std::invalid_argument("basis_matrix: unknown id");
}

namespace {

constexpr std::array<std::string_view, 16> kBasisNames = {
    "I",    "g5",   "g0",   "ig5g0", "ig1",   "g5g1",  "ig2",   "g5g2",
    "ig3",  "g5g3", "2s01", "2s02",  "2s03",  "2is12", "2is23", "2is31",
};

}  // namespace

std::string_view basis_name(BasisId id) { return kBasisNames[static_cast<size_t>(id)]; }

std::optional<BasisId> parse_basis(std::string_view name) {
    for (size_t i = 0; i < kBasisNames.size(); ++i)
        if (kBasisNames[i] == name) return kAllBasisIds[i];
    return std::nullopt;
}

GellMannReport gell_mann_check(const ComplexMatrix4& m) {
    const double eps = algebra_eps();
    GellMannReport r;
    r.traceless = std::abs(trace(m)) <= eps;
    r.hermitian = max_abs_diff(m, adjoint(m)) <= eps;
    r.involutive = max_abs_diff(mat_mul(m, m), ComplexMatrix4::identity()) <= eps;
    return r;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

std::array<GeneratorId, 15> all_generators() {
    std::array<GeneratorId, 15> out;
    int k = 0;
    for (GeneratorFamily f : {GeneratorFamily::Alpha, GeneratorFamily::Beta,
                              GeneratorFamily::A, GeneratorFamily::B, GeneratorFamily::C})
        for (int i = 1; i <= 3; ++i) out[static_cast<size_t>(k++)] = {f, i};
    return out;
}

ComplexMatrix4 generator(GeneratorId id) {
    if (id.index < 1 || id.index > 3)
        throw std::invalid_argument("generator: index must be 1..3");
    switch (id.family) {
        case GeneratorFamily::Alpha:
            switch (id.index) {
                case 1:  // sigma2 (+) / -sigma2 diagonal blocks
                    return cm({0, -im, 0, 0, im, 0, 0, 0, 0, 0, 0, im, 0, 0, -im, 0});
                case 2:  // off-diagonal +-i I blocks
                    return cm({0, 0, im, 0, 0, 0, 0, im, -im, 0, 0, 0, 0, -im, 0, 0});
                default: // off-diagonal sigma2 blocks
                    return cm({0, 0, 0, -im, 0, 0, im, 0, 0, -im, 0, 0, im, 0, 0, 0});
            }
        case GeneratorFamily::Beta:
            switch (id.index) {
                case 1:
                    return cm({0, -im, 0, 0, im, 0, 0, 0, 0, 0, 0, -im, 0, 0, im, 0});
                case 2:
                    return cm({0, 0, -im, 0, 0, 0, 0, im, im, 0, 0, 0, 0, -im, 0, 0});
                default:
                    return cm({0, 0, 0, -im, 0, 0, -im, 0, 0, im, 0, 0, im, 0, 0, 0});
            }
        case GeneratorFamily::A:
            switch (id.index) {
                case 1:
                    return cm({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
                case 2:
                    return cm({0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0});
                default:
                    return cm({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
            }
        case GeneratorFamily::B:
            switch (id.index) {
                case 1:
                    return cm({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
                case 2:
                    return cm({-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
                default:
                    return cm({0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
            }
        case GeneratorFamily::C:
            switch (id.index) {
                case 1:
                    return cm({0, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1, 0, 0});
                case 2:
                    return cm({0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0});
                default:
                    return cm({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
            }
    }
    throw std::invalid_argument("generator: unknown family");
}

std::string generator_name(GeneratorId id) {
    const char* fam = nullptr;
    switch (id.family) {
        case GeneratorFamily::Alpha: fam = "a"; break;
        case GeneratorFamily::Beta:  fam = "b"; break;
        case GeneratorFamily::A:     fam = "A"; break;
        case GeneratorFamily::B:     fam = "B"; break;
        case GeneratorFamily::C:     fam = "C"; break;
    }
    return std::string(fam) + std::to_string(id.index);
}

std::optional<GeneratorId> parse_generator(std::string_view name) {
    if (name.size() != 2) return std::nullopt;
    GeneratorFamily f;
    switch (name[0]) {
        case 'a': f = GeneratorFamily::Alpha; break;
        case 'b': f = GeneratorFamily::Beta; break;
        case 'A': f = GeneratorFamily::A; break;
        case 'B': f = GeneratorFamily::B; break;
        case 'C': f = GeneratorFamily::C; break;
        default: return std::nullopt;
    }
    if (name[1] < '1' || name[1] > '3') return std::nullopt;
    return GeneratorId{f, name[1] - '0'};
}

ComplexMatrix4 exp_generator(GeneratorId id, Complex a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw std::invalid_argument("exp_generator: non-finite argument");
    const Complex c = std::cos(a);
    const Complex s = std::sin(a);
    const ComplexMatrix4 lambda = generator(id);
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = (i == j ? c : Complex{}) + im * s * lambda(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// One-parameter subgroups
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 16> kSubgroupNames = {
    "U0",  "U1a", "U2a", "U3a", "U1b", "U2b", "U3b", "U1A",
    "U2A", "U3A", "U1B", "U2B", "U3B", "U1C", "U2C", "U3C",
};

RealMatrix4 rm(std::initializer_list<double> vals) {
    RealMatrix4 r;
    size_t i = 0;
    for (double v : vals) r.m[i++] = v;
    return r;
}

}  // namespace

ParamKind param_kind(SubgroupId id) {
    switch (id) {
        case SubgroupId::U1a: case SubgroupId::U2a: case SubgroupId::U3a:
        case SubgroupId::U1b: case SubgroupId::U2b: case SubgroupId::U3b:
            return ParamKind::Angle;
        case SubgroupId::U0:  case SubgroupId::U1A:
        case SubgroupId::U2B: case SubgroupId::U3C:
            return ParamKind::LogScale;
        default:
            return ParamKind::Rapidity;
    }
}

std::string_view subgroup_name(SubgroupId id) { return kSubgroupNames[static_cast<size_t>(id)]; }

std::optional<SubgroupId> parse_subgroup(std::string_view name) {
    for (size_t i = 0; i < kSubgroupNames.size(); ++i)
        if (kSubgroupNames[i] == name) return kAllSubgroups[i];
    return std::nullopt;
}

namespace {

struct HyperbolicPair {
    double ch, sh;
};

// one exp instead of cosh+sinh; the oracle grid scans call this hot
inline HyperbolicPair hyp(double t) {
    const double e = std::exp(t);
    const double inv = 1.0 / e;
    return {0.5 * (e + inv), 0.5 * (e - inv)};
}

}  // namespace

RealMatrix4 one_param_element(SubgroupId id, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("one_param_element: non-finite parameter");
    switch (id) {
        case SubgroupId::U0: {
            const double en = std::exp(-t);
            return RealMatrix4::diagonal(en, en, en, en);
        }
        case SubgroupId::U1a: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, s, 0, 0, -s, c, 0, 0, 0, 0, c, -s, 0, 0, s, c});
        }
        case SubgroupId::U2a: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, 0, -s, 0, 0, c, 0, -s, s, 0, c, 0, 0, s, 0, c});
        }
        case SubgroupId::U3a: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, 0, 0, s, 0, c, -s, 0, 0, s, c, 0, -s, 0, 0, c});
        }
        case SubgroupId::U1b: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, s, 0, 0, -s, c, 0, 0, 0, 0, c, s, 0, 0, -s, c});
        }
        case SubgroupId::U2b: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, 0, s, 0, 0, c, 0, -s, -s, 0, c, 0, 0, s, 0, c});
        }
        case SubgroupId::U3b: {
            const double c = std::cos(t), s = std::sin(t);
            return rm({c, 0, 0, s, 0, c, s, 0, 0, -s, c, 0, -s, 0, 0, c});
        }
        case SubgroupId::U1A: {
            const double ep = std::exp(t), en = 1.0 / ep;
            return RealMatrix4::diagonal(en, en, ep, ep);
        }
        case SubgroupId::U2A: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, 0, 0, -sh, 0, ch, sh, 0, 0, sh, ch, 0, -sh, 0, 0, ch});
        }
        case SubgroupId::U3A: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, 0, -sh, 0, 0, ch, 0, -sh, -sh, 0, ch, 0, 0, -sh, 0, ch});
        }
        case SubgroupId::U1B: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, 0, 0, -sh, 0, ch, -sh, 0, 0, -sh, ch, 0, -sh, 0, 0, ch});
        }
        case SubgroupId::U2B: {
            const double ep = std::exp(t), en = 1.0 / ep;
            return RealMatrix4::diagonal(ep, en, ep, en);
        }
        case SubgroupId::U3B: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, sh, 0, 0, sh, ch, 0, 0, 0, 0, ch, -sh, 0, 0, -sh, ch});
        }
        case SubgroupId::U1C: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, 0, sh, 0, 0, ch, 0, -sh, sh, 0, ch, 0, 0, -sh, 0, ch});
        }
        case SubgroupId::U2C: {
            const auto [ch, sh] = hyp(t);
            return rm({ch, sh, 0, 0, sh, ch, 0, 0, 0, 0, ch, sh, 0, 0, sh, ch});
        }
        case SubgroupId::U3C: {
            const double ep = std::exp(t), en = 1.0 / ep;
            return RealMatrix4::diagonal(en, ep, ep, en);
        }
    }
    throw std::invalid_argument("one_param_element: unknown id");
}

std::optional<GeneratorId> subgroup_generator(SubgroupId id) {
    switch (id) {
        case SubgroupId::U0: return std::nullopt;
        case SubgroupId::U1a: return GeneratorId{GeneratorFamily::Alpha, 1};
        case SubgroupId::U2a: return GeneratorId{GeneratorFamily::Alpha, 2};
        case SubgroupId::U3a: return GeneratorId{GeneratorFamily::Alpha, 3};
        case SubgroupId::U1b: return GeneratorId{GeneratorFamily::Beta, 1};
        case SubgroupId::U2b: return GeneratorId{GeneratorFamily::Beta, 2};
        case SubgroupId::U3b: return GeneratorId{GeneratorFamily::Beta, 3};
        case SubgroupId::U1A: return GeneratorId{GeneratorFamily::A, 1};
        case SubgroupId::U2A: return GeneratorId{GeneratorFamily::A, 2};
        case SubgroupId::U3A: return GeneratorId{GeneratorFamily::A, 3};
        case SubgroupId::U1B: return GeneratorId{GeneratorFamily::B, 1};
        case SubgroupId::U2B: return GeneratorId{GeneratorFamily::B, 2};
        case SubgroupId::U3B: return GeneratorId{GeneratorFamily::B, 3};
        case SubgroupId::U1C: return GeneratorId{GeneratorFamily::C, 1};
        case SubgroupId::U2C: return GeneratorId{GeneratorFamily::C, 2};
        case SubgroupId::U3C: return GeneratorId{GeneratorFamily::C, 3};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Triplets and su(2) catalog
// ---------------------------------------------------------------------------

namespace {

SignedGenerator sg(GeneratorFamily f, int i, int sign = +1) { return {{f, i}, sign}; }

ComplexMatrix4 signed_matrix(const SignedGenerator& g) {
    ComplexMatrix4 m = generator(g.id);
    if (g.sign < 0) m = Complex{-1.0, 0.0} * m;
    return m;
}

}  // namespace

std::vector<GeneratorTriplet> commuting_triplets() {
    using F = GeneratorFamily;
    return {
        {"K", {sg(F::A, 1), sg(F::B, 2), sg(F::C, 3)}},
        {"L", {sg(F::C, 1), sg(F::A, 2), sg(F::B, 3)}},
        {"M", {sg(F::B, 1), sg(F::C, 2), sg(F::A, 3)}},
        {"K'", {sg(F::C, 1, -1), sg(F::B, 2, -1), sg(F::C, 3, -1)}},
        {"L'", {sg(F::B, 1, -1), sg(F::A, 2, -1), sg(F::B, 3, -1)}},
        {"M'", {sg(F::A, 1, -1), sg(F::C, 2, -1), sg(F::B, 3, -1)}},
    };
}

TripletReport triplet_report(const GeneratorTriplet& t) {
    const double eps = algebra_eps();
    const ComplexMatrix4 g0 = signed_matrix(t.members[0]);
    const ComplexMatrix4 g1 = signed_matrix(t.members[1]);
    const ComplexMatrix4 g2 = signed_matrix(t.members[2]);
    const std::array<const ComplexMatrix4*, 3> g = {&g0, &g1, &g2};

    TripletReport r;
    double prod_res = 0.0, comm_res = 0.0;
    for (int k = 0; k < 3; ++k) {
        const ComplexMatrix4& x = *g[static_cast<size_t>(k)];
        const ComplexMatrix4& y = *g[static_cast<size_t>((k + 1) % 3)];
        const ComplexMatrix4& z = *g[static_cast<size_t>((k + 2) % 3)];
        const ComplexMatrix4 minus_z = Complex{-1.0, 0.0} * z;
        prod_res = std::max(prod_res, max_abs_diff(mat_mul(x, y), minus_z));
        prod_res = std::max(prod_res, max_abs_diff(mat_mul(y, x), minus_z));
        comm_res = std::max(comm_res, max_abs_diff(mat_mul(x, y), mat_mul(y, x)));
    }
    r.products_close = prod_res <= eps;
    r.pairwise_commute = comm_res <= eps;
    r.max_residual = std::max(prod_res, comm_res);
    return r;
}

std::vector<Su2Triple> su2_catalog() {
    using F = GeneratorFamily;
    auto g = [](F f, int i) { return GeneratorId{f, i}; };
    const std::vector<std::array<GeneratorId, 3>> raw = {
        {g(F::Alpha, 1), g(F::Alpha, 2), g(F::Alpha, 3)},
        {g(F::Beta, 1), g(F::Beta, 2), g(F::Beta, 3)},
        {g(F::Alpha, 1), g(F::A, 2), g(F::A, 3)},
        {g(F::A, 1), g(F::Alpha, 2), g(F::A, 3)},
        {g(F::A, 1), g(F::A, 2), g(F::Alpha, 3)},
        {g(F::Alpha, 1), g(F::B, 2), g(F::B, 3)},
        {g(F::B, 1), g(F::Alpha, 2), g(F::B, 3)},
        {g(F::B, 1), g(F::B, 2), g(F::Alpha, 3)},
        {g(F::Alpha, 1), g(F::C, 2), g(F::C, 3)},
        {g(F::C, 1), g(F::Alpha, 2), g(F::C, 3)},
        {g(F::C, 1), g(F::C, 2), g(F::Alpha, 3)},
        {g(F::Beta, 1), g(F::B, 1), g(F::C, 1)},
        {g(F::Beta, 1), g(F::B, 2), g(F::C, 2)},
        {g(F::Beta, 1), g(F::B, 3), g(F::C, 3)},
        {g(F::A, 1), g(F::Beta, 2), g(F::C, 1)},
        {g(F::A, 2), g(F::Beta, 2), g(F::C, 2)},
        {g(F::A, 3), g(F::Beta, 2), g(F::C, 3)},
        {g(F::A, 1), g(F::B, 1), g(F::Beta, 3)},
        {g(F::A, 2), g(F::B, 2), g(F::Beta, 3)},
        {g(F::A, 3), g(F::B, 3), g(F::Beta, 3)},
    };

    const double eps = algebra_eps();
    std::vector<Su2Triple> out;
    out.reserve(raw.size());
    for (const auto& members : raw) {
        Su2Triple triple;
        triple.members = members;
        triple.closes = true;
        const ComplexMatrix4 m0 = generator(members[0]);
        const ComplexMatrix4 m1 = generator(members[1]);
        const ComplexMatrix4 m2 = generator(members[2]);
        const std::array<const ComplexMatrix4*, 3> m = {&m0, &m1, &m2};
        for (int k = 0; k < 3; ++k) {
            // product of the two members other than k, in cyclic order
            const ComplexMatrix4& x = *m[static_cast<size_t>((k + 1) % 3)];
            const ComplexMatrix4& y = *m[static_cast<size_t>((k + 2) % 3)];
            const ComplexMatrix4 prod = mat_mul(x, y);
            const ComplexMatrix4 i_z = im * (*m[static_cast<size_t>(k)]);
            if (max_abs_diff(prod, i_z) <= eps) {
                triple.signs[static_cast<size_t>(k)] = +1;
            } else if (max_abs_diff(prod, Complex{-1.0, 0.0} * i_z) <= eps) {
                triple.signs[static_cast<size_t>(k)] = -1;
            } else {
                triple.signs[static_cast<size_t>(k)] = 0;
                triple.closes = false;
            }
        }
        out.push_back(triple);
    }
    return out;
}

bool verify_commutation_alpha_beta() {
    const double eps = algebra_eps();
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const ComplexMatrix4 a = generator({GeneratorFamily::Alpha, i});
            const ComplexMatrix4 b = generator({GeneratorFamily::Beta, j});
            if (max_abs_diff(mat_mul(a, b), mat_mul(b, a)) > eps) return false;
        }
    }
    return true;
}

}  // namespace sl4
