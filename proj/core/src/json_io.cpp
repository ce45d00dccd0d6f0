#include "sl4/json_io.hpp"

#include <cmath>

namespace sl4 {

Json to_json(const RealMatrix4& m) {
    Json a = Json::array();
    for (double v : m.m) a.push_back(v);
    return a;
}

RealMatrix4 real_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 16)
        throw std::invalid_argument("RealMatrix4: expected an array of 16 numbers");
    RealMatrix4 m;
    for (size_t i = 0; i < 16; ++i) m.m[i] = j[i].get<double>();
    if (!m.all_finite()) throw std::invalid_argument("RealMatrix4: non-finite entry");
    return m;
}

Json to_json(const ComplexMatrix4& m) {
    Json a = Json::array();
    for (const Complex& v : m.m) a.push_back(Json::array({v.real(), v.imag()}));
    return a;
}

ComplexMatrix4 complex_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 16)
        throw std::invalid_argument("ComplexMatrix4: expected an array of 16 [re, im] pairs");
    ComplexMatrix4 m;
    for (size_t i = 0; i < 16; ++i) {
        const Json& e = j[i];
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("ComplexMatrix4: entries must be [re, im] pairs");
        m.m[i] = Complex{e[0].get<double>(), e[1].get<double>()};
    }
    if (!m.all_finite()) throw std::invalid_argument("ComplexMatrix4: non-finite entry");
    return m;
}

Json to_json(const StokesVector& s) { return Json::array({s.s0, s.s1, s.s2, s.s3}); }

StokesVector stokes_vector_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("StokesVector: expected an array of 4 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json to_json(const PolarizationState& ps) {
    Json j;
    j["intensity"] = ps.intensity;
    j["p"] = Json::array({ps.p[0], ps.p[1], ps.p[2]});
    return j;
}

PolarizationState polarization_state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("intensity") || !j.contains("p"))
        throw std::invalid_argument("PolarizationState: expected {\"intensity\", \"p\"}");
    const Json& p = j["p"];
    if (!p.is_array() || p.size() != 3)
        throw std::invalid_argument("PolarizationState: p must be an array of 3 numbers");
    return {j["intensity"].get<double>(),
            {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()}};
}

namespace {

Json endpoint_to_json(double v) {
    if (v == kInf) return "+inf";
    if (v == -kInf) return "-inf";
    return v;
}

double endpoint_from_json(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "+inf" || s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        throw std::invalid_argument("ParamInterval: bad endpoint string \"" + s + "\"");
    }
    return j.get<double>();
}

}  // namespace

Json to_json(const ParamInterval& iv) {
    Json j;
    j["lo"] = endpoint_to_json(iv.lo);
    j["hi"] = endpoint_to_json(iv.hi);
    j["lo_closed"] = iv.lo_closed;
    j["hi_closed"] = iv.hi_closed;
    j["empty"] = iv.empty;
    return j;
}

ParamInterval param_interval_from_json(const Json& j) {
    ParamInterval iv;
    iv.lo = endpoint_from_json(j.at("lo"));
    iv.hi = endpoint_from_json(j.at("hi"));
    iv.lo_closed = j.at("lo_closed").get<bool>();
    iv.hi_closed = j.at("hi_closed").get<bool>();
    iv.empty = j.at("empty").get<bool>();
    if (!iv.empty && !(iv.lo <= iv.hi))
        throw std::invalid_argument("ParamInterval: lo > hi");
    return iv;
}

Json to_json(const VariantRange& r) {
    Json j;
    j["variant"] = std::string(subgroup_name(r.variant));
    switch (r.chart) {
        case ChartVar::TanPhi: j["chart"] = "x"; break;
        case ChartVar::TanhBeta: j["chart"] = "y"; break;
        case ChartVar::Lambda: j["chart"] = "lambda"; break;
    }
    j["interval"] = to_json(r.interval);
    if (r.roots) j["roots"] = Json::array({r.roots->first, r.roots->second});
    if (r.degenerate) j["degenerate"] = true;
    if (r.chart == ChartVar::TanPhi) {
        const ParamInterval phi = chart_to_param(r);
        j["phi_intervals"] = Json::array({Json::array(
            {endpoint_to_json(phi.lo), endpoint_to_json(phi.hi)})});
    }
    return j;
}

Json to_json(const EllipsoidSpec& e) {
    Json j;
    j["a_perp"] = e.a_perp;
    j["a_axial"] = e.a_axial;
    j["gamma"] = e.gamma;
    j["rhs"] = e.rhs;
    j["axis"] = Json::array({e.axis[0], e.axis[1], e.axis[2]});
    return j;
}

Json to_json(const AdmissibilityReport& r) {
    Json j;
    j["first_ok"] = r.first_ok;
    j["second_ok"] = r.second_ok;
    j["s_out"] = to_json(r.s_out);
    return j;
}

}  // namespace sl4
