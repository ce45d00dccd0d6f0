// Command-line front end: every library operation behind one verb each,
// emitting JSON/CSV/SVG. Output is byte-deterministic for fixed inputs.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl4/cone.hpp"
#include "sl4/depolarization.hpp"
#include "sl4/dirac.hpp"
#include "sl4/factorization.hpp"
#include "sl4/json_io.hpp"
#include "sl4/lorentz.hpp"
#include "sl4/svg.hpp"
#include "sl4/verify.hpp"

namespace {

using sl4::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline JSON, @path, or a bare path to an existing file.
Json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return Json::parse(slurp(arg.substr(1)));
    try {
        return Json::parse(arg);
    } catch (const nlohmann::json::exception&) {
        if (std::ifstream probe(arg); probe.good()) return Json::parse(slurp(arg));
        throw;
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

sl4::SubgroupId parse_subgroup_or_throw(const std::string& name) {
    const auto id = sl4::parse_subgroup(name);
    if (!id) throw std::invalid_argument("unknown subgroup \"" + name + "\"");
    return *id;
}

const char* d_sign_word(sl4::DSign s) {
    switch (s) {
        case sl4::DSign::Decreases: return "decreases";
        case sl4::DSign::Neutral: return "neutral";
        case sl4::DSign::Increases: return "increases";
    }
    return "neutral";
}

/// Rebuilds a state as completely polarized while keeping the variant's
/// active coordinate(s); the quadratic range depends on nothing else once
/// |p| = 1.
sl4::PolarizationState polarize_for_variant(sl4::SubgroupId variant,
                                            const sl4::PolarizationState& ps) {
    sl4::PolarizationState out = ps;
    switch (sl4::variant_chart(variant)) {
        case sl4::ChartVar::TanPhi: {
            const size_t ai = static_cast<size_t>(sl4::rotation_active_index(variant));
            const double a = ps.p[ai];
            if (std::fabs(a) > 1.0)
                throw std::invalid_argument("--polarized: active |p| component > 1");
            const size_t b1 = (ai + 1) % 3, b2 = (ai + 2) % 3;
            const double rest = std::sqrt(std::max(0.0, 1.0 - a * a));
            const double pnorm = std::hypot(ps.p[b1], ps.p[b2]);
            if (pnorm > 1e-15) {
                out.p[b1] = ps.p[b1] / pnorm * rest;
                out.p[b2] = ps.p[b2] / pnorm * rest;
            } else {
                out.p[b1] = rest;
                out.p[b2] = 0.0;
            }
            return out;
        }
        case sl4::ChartVar::TanhBeta: {
            const sl4::BoostTraits tr = sl4::boost_traits(variant);
            const double f = ps.p[static_cast<size_t>(tr.f)];
            const double g = ps.p[static_cast<size_t>(tr.g)];
            if (f * f + g * g > 1.0 + 1e-12)
                throw std::invalid_argument("--polarized: active pair exceeds the unit sphere");
            const double h = std::sqrt(std::max(0.0, 1.0 - f * f - g * g));
            const double sign = ps.p[static_cast<size_t>(tr.h)] < 0.0 ? -1.0 : 1.0;
            out.p[static_cast<size_t>(tr.h)] = sign * h;
            return out;
        }
        case sl4::ChartVar::Lambda:
            throw std::invalid_argument("--polarized does not apply to diagonal variants");
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Elementary SL(4,R) subgroups acting on Stokes vectors: construction,\n"
                 "Mueller admissibility ranges, Lorentz-type actions and diagnostics.\n"
                 "JSON arguments may be passed inline or as @file. The environment\n"
                 "variable STOKES_SL4_EPS overrides the algebraic tolerance (1e-12)."};
    app.require_subcommand(1);

    // basis ------------------------------------------------------------
    auto* cmd_basis = app.add_subcommand("basis", "Print one of the 16 basis matrices as JSON");
    std::string basis_id;
    cmd_basis->add_option("--id", basis_id,
                          "I, g5, g0, ig5g0, ig1, g5g1, ig2, g5g2, ig3, g5g3, "
                          "2s01, 2s02, 2s03, 2is12, 2is23, 2is31")->required();

    // generator ----------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("generator", "Print a Lie algebra generator as JSON");
    std::string gen_id;
    cmd_gen->add_option("--id", gen_id, "a1..a3, b1..b3, A1..A3, B1..B3, C1..C3")->required();

    // subgroup -----------------------------------------------------------
    auto* cmd_sub = app.add_subcommand("subgroup", "Print a one-parameter group element");
    std::string sub_id;
    double sub_param = 0.0;
    cmd_sub->add_option("--id", sub_id, "U0, U1a..U3b, U1A..U3C")->required();
    cmd_sub->add_option("--param", sub_param, "group parameter t")->required();

    // transform ----------------------------------------------------------
    auto* cmd_transform = app.add_subcommand("transform", "Apply a 4x4 matrix to a Stokes vector");
    std::string tr_matrix, tr_stokes;
    cmd_transform->add_option("--matrix", tr_matrix, "JSON array of 16 numbers or @file")
        ->required();
    cmd_transform->add_option("--stokes", tr_stokes, "JSON array of 4 numbers or @file")
        ->required();

    // check ----------------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "Admissibility of M S for a physical S");
    std::string ck_matrix, ck_stokes;
    cmd_check->add_option("--matrix", ck_matrix, "JSON array of 16 numbers or @file")->required();
    cmd_check->add_option("--stokes", ck_stokes, "JSON array of 4 numbers or @file")->required();

    // range -----------------------------------------------------------------
    auto* cmd_range = app.add_subcommand(
        "range", "Admissible parameter range of a one-parameter variant for a state");
    std::string rg_variant, rg_state;
    bool rg_polarized = false, rg_oracle = false;
    int rg_steps = 100000;
    std::vector<double> rg_window;
    cmd_range->add_option("--variant", rg_variant, "subgroup name")->required();
    cmd_range->add_option("--state", rg_state, "PolarizationState JSON or @file")->required();
    cmd_range->add_flag("--polarized", rg_polarized,
                        "treat the state as completely polarized (active components kept)");
    cmd_range->add_flag("--oracle", rg_oracle, "also run the brute-force grid scan");
    cmd_range->add_option("--steps", rg_steps, "oracle grid steps (default 100000)");
    cmd_range->add_option("--window", rg_window, "oracle window lo,hi")
        ->delimiter(',')->expected(2);

    // boost -----------------------------------------------------------------
    auto* cmd_boost = app.add_subcommand("boost", "Apply a Lorentz boost to a state");
    double bo_beta = 0.0;
    std::vector<double> bo_axis{0.0, 0.0, 1.0};
    std::string bo_state;
    cmd_boost->add_option("--beta", bo_beta, "rapidity")->required();
    cmd_boost->add_option("--axis", bo_axis, "unit axis x,y,z")->delimiter(',')->expected(3);
    cmd_boost->add_option("--state", bo_state, "PolarizationState JSON or @file")->required();

    // restframe ---------------------------------------------------------------
    auto* cmd_rest = app.add_subcommand("restframe",
                                        "Boost parameters that turn a state into natural light");
    std::string rf_state;
    cmd_rest->add_option("--state", rf_state, "PolarizationState JSON or @file")->required();

    // ellipsoid ----------------------------------------------------------------
    auto* cmd_ell = app.add_subcommand("ellipsoid",
                                       "Image of the |p| = const sphere under a boost");
    double el_beta = 0.0, el_p = 0.0;
    std::string el_svg;
    cmd_ell->add_option("--beta", el_beta, "rapidity")->required();
    cmd_ell->add_option("--p", el_p, "degree of polarization in [0,1)")->required();
    cmd_ell->add_option("--svg", el_svg, "write a cross-section polyline SVG to this file");

    // factorize -------------------------------------------------------------
    auto* cmd_fact = app.add_subcommand("factorize",
                                        "Commuting-factor product L = K K* from parameters k");
    std::vector<double> fc_k;
    cmd_fact->add_option("--k", fc_k, "re0,im0,re1,im1,re2,im2,re3,im3")
        ->delimiter(',')->expected(8)->required();

    // depol ------------------------------------------------------------------
    auto* cmd_depol = app.add_subcommand(
        "depol", "Degree-of-polarization change along one variant (CSV)");
    std::string dp_variant, dp_state, dp_svg;
    std::vector<double> dp_grid;
    cmd_depol->add_option("--variant", dp_variant, "subgroup name")->required();
    cmd_depol->add_option("--state", dp_state, "PolarizationState JSON or @file")->required();
    cmd_depol->add_option("--grid", dp_grid, "lo,hi,n chart grid")->delimiter(',')->expected(3);
    cmd_depol->add_option("--svg", dp_svg, "write the neutral-curve SVG to this file");

    // verify ----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "Run the full invariant suite");
    std::string vf_filter;
    cmd_verify->add_option("--filter", vf_filter, "only checks whose name contains this string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    if (cmd_basis->parsed()) {
        const auto id = sl4::parse_basis(basis_id);
        if (!id) throw std::invalid_argument("unknown basis element \"" + basis_id + "\"");
        std::cout << sl4::to_json(sl4::basis_matrix(*id)).dump(2) << "\n";
        return 0;
    }

    if (cmd_gen->parsed()) {
        const auto id = sl4::parse_generator(gen_id);
        if (!id) throw std::invalid_argument("unknown generator \"" + gen_id + "\"");
        std::cout << sl4::to_json(sl4::generator(*id)).dump(2) << "\n";
        return 0;
    }

    if (cmd_sub->parsed()) {
        const auto id = parse_subgroup_or_throw(sub_id);
        std::cout << sl4::to_json(sl4::one_param_element(id, sub_param)).dump(2) << "\n";
        return 0;
    }

    if (cmd_transform->parsed()) {
        const auto m = sl4::real_matrix_from_json(parse_json_arg(tr_matrix));
        const auto s = sl4::stokes_vector_from_json(parse_json_arg(tr_stokes));
        std::cout << sl4::to_json(sl4::transform(m, s)).dump(2) << "\n";
        return 0;
    }

    if (cmd_check->parsed()) {
        const auto m = sl4::real_matrix_from_json(parse_json_arg(ck_matrix));
        const auto s = sl4::stokes_vector_from_json(parse_json_arg(ck_stokes));
        std::cout << sl4::to_json(sl4::check_on_state(m, s)).dump(2) << "\n";
        return 0;
    }

    if (cmd_range->parsed()) {
        const auto variant = parse_subgroup_or_throw(rg_variant);
        sl4::PolarizationState ps =
            sl4::polarization_state_from_json(parse_json_arg(rg_state));
        if (rg_polarized) ps = polarize_for_variant(variant, ps);
        const sl4::VariantRange vr = sl4::variant_range(variant, ps);
        Json out = sl4::to_json(vr);
        if (rg_oracle) {
            double wlo, whi;
            if (rg_window.size() == 2) {
                wlo = rg_window[0];
                whi = rg_window[1];
            } else {
                std::tie(wlo, whi) = sl4::default_window(variant);
            }
            const sl4::BruteForceResult bf = sl4::brute_force_range(
                variant, sl4::stokes_from_state(ps), wlo, whi, rg_steps);
            Json oracle;
            oracle["param_interval"] = sl4::to_json(bf.interval);
            oracle["multi_component"] = bf.multi_component;
            oracle["steps"] = rg_steps;
            oracle["window"] = Json::array({wlo, whi});
            out["oracle"] = oracle;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (cmd_boost->parsed()) {
        const auto ps = sl4::polarization_state_from_json(parse_json_arg(bo_state));
        const sl4::BoostSpec spec{bo_beta, {bo_axis[0], bo_axis[1], bo_axis[2]}};
        const sl4::PolarizationState out = sl4::act_partial(spec, ps);
        Json j;
        j["state"] = sl4::to_json(out);
        j["invariant"] = sl4::invariant(out);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (cmd_rest->parsed()) {
        const auto ps = sl4::polarization_state_from_json(parse_json_arg(rf_state));
        const sl4::RestFrame rf = sl4::rest_frame(ps);
        Json j;
        j["beta0"] = rf.beta0;
        j["i_rest"] = rf.i_rest;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (cmd_ell->parsed()) {
        const sl4::EllipsoidSpec e = sl4::ellipsoid_image(el_beta, el_p);
        if (!el_svg.empty()) {
            std::vector<std::pair<double, double>> pts;
            pts.reserve(256);
            const double r1 = std::sqrt(e.rhs);
            const double r3 = std::sqrt(e.rhs / e.a_axial);
            for (int i = 0; i < 256; ++i) {
                const double phi = 2.0 * M_PI * i / 256.0;
                pts.emplace_back(r1 * std::cos(phi), -e.gamma + r3 * std::sin(phi));
            }
            write_file(el_svg, sl4::emit_svg_curve(pts, {"p1'", "p3'"}));
        }
        std::cout << sl4::to_json(e).dump(2) << "\n";
        return 0;
    }

    if (cmd_fact->parsed()) {
        sl4::QuatParams q;
        q.k0 = sl4::Complex{fc_k[0], fc_k[1]};
        for (size_t i = 0; i < 3; ++i)
            q.k[i] = sl4::Complex{fc_k[2 + 2 * i], fc_k[3 + 2 * i]};
        const sl4::LorentzFactorization lf = sl4::lorentz_from_k(q);
        Json j;
        j["L"] = sl4::to_json(lf.l_matrix);
        j["commute_residual"] = lf.commute_residual;
        j["imag_residual"] = lf.imag_residual;
        j["det"] = lf.det_l;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (cmd_depol->parsed()) {
        const auto variant = parse_subgroup_or_throw(dp_variant);
        const auto ps = sl4::polarization_state_from_json(parse_json_arg(dp_state));
        double lo, hi;
        int n;
        if (dp_grid.size() == 3) {
            lo = dp_grid[0];
            hi = dp_grid[1];
            n = static_cast<int>(dp_grid[2]);
        } else if (sl4::variant_chart(variant) == sl4::ChartVar::TanhBeta) {
            lo = -0.9;
            hi = 0.9;
            n = 81;
        } else {
            lo = -2.0;
            hi = 2.0;
            n = 81;
        }
        if (n < 2) throw std::invalid_argument("depol: grid needs at least 2 points");
        std::cout << "variant,param,d_value,sign\n";
        for (int i = 0; i < n; ++i) {
            const double x = lo + (hi - lo) * i / (n - 1);
            try {
                const sl4::DReport r = sl4::d_entity(variant, ps, x);
                std::cout << sl4::subgroup_name(variant) << "," << fmt17(x) << ","
                          << fmt17(r.d_value) << "," << d_sign_word(r.sign) << "\n";
            } catch (const std::domain_error&) {
                // pole of the chart parameter: no row
            }
        }
        if (!dp_svg.empty()) {
            std::vector<double> grid;
            for (int i = 0; i < 199; ++i) grid.push_back(-0.99 + 1.98 * i / 198.0);
            const sl4::NeutralCurve curve = sl4::neutral_curve(variant, grid);
            std::vector<std::pair<double, double>> pts;
            pts.reserve(curve.samples.size());
            for (const auto& [a, x] : curve.samples)
                pts.emplace_back(a, std::clamp(x, -10.0, 10.0));
            write_file(dp_svg, sl4::emit_svg_curve(pts, {"a", "x"}));
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        const auto results = sl4::verify::run_all(vf_filter);
        int passed = 0;
        for (const auto& r : results) {
            if (r.passed) ++passed;
            std::printf("[%s] %-40s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
        }
        std::printf("%d/%zu checks passed\n", passed, results.size());
        return passed == static_cast<int>(results.size()) ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
