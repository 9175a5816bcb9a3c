#include "threshcert/io.hpp"

#include "threshcert/errors.hpp"

namespace threshcert {

Json poly_to_json(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            a.push_back(c.get_si());
        else
            a.push_back(c.get_str());
    }
    return a;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("polynomial must be a JSON array");
    std::vector<Integer> c;
    for (const auto& v : j) {
        if (v.is_number_integer())
            c.emplace_back(v.get<long>());
        else if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else
            throw InvalidArgument("polynomial coefficient must be an integer or decimal string");
    }
    return IntPoly(std::move(c));
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InvalidArgument("rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Json interval_to_json(const RationalInterval& iv) {
    return Json{{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}};
}

RationalInterval interval_from_json(const Json& j) {
    return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi"))};
}

Json algebraic_to_json(const AlgebraicReal& a) {
    return Json{{"defpoly", poly_to_json(a.defpoly())}, {"lo", rational_to_json(a.lo())}, {"hi", rational_to_json(a.hi())}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
    return AlgebraicReal(poly_from_json(j.at("defpoly")), rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

Json steps_to_json(const StepSequence& s) { return Json(s.vec()); }

StepSequence steps_from_json(const Json& j) { return StepSequence(j.get<std::vector<int>>()); }

namespace {

template <class T, class F>
Json opt_json(const std::optional<T>& v, F f) {
    return v ? f(*v) : Json(nullptr);
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["e"] = c.e;
    j["steps"] = steps_to_json(c.steps);
    j["d_branch"] = to_string(c.d_branch);
    j["v_branch"] = to_string(c.v_branch);
    j["n_U"] = opt_json(c.n_U, interval_to_json);
    j["n_L"] = opt_json(c.n_L, interval_to_json);
    j["coverage"] = to_string(c.coverage);
    j["wall_ms"] = c.wall_ms ? Json(*c.wall_ms) : Json(nullptr);
    j["rho_QD"] = opt_json(c.rho_qd, algebraic_to_json);
    j["rho_QV"] = opt_json(c.rho_qv, algebraic_to_json);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.e = j.at("e").get<int>();
    c.steps = steps_from_json(j.at("steps"));
    c.d_branch = parse_dbranch(j.at("d_branch").get<std::string>());
    c.v_branch = parse_vbranch(j.at("v_branch").get<std::string>());
    if (!j.at("n_U").is_null()) c.n_U = interval_from_json(j.at("n_U"));
    if (!j.at("n_L").is_null()) c.n_L = interval_from_json(j.at("n_L"));
    c.coverage = parse_coverage(j.at("coverage").get<std::string>());
    if (j.contains("wall_ms") && !j.at("wall_ms").is_null()) c.wall_ms = j.at("wall_ms").get<double>();
    if (j.contains("rho_QD") && !j.at("rho_QD").is_null()) c.rho_qd = algebraic_from_json(j.at("rho_QD"));
    if (j.contains("rho_QV") && !j.at("rho_QV").is_null()) c.rho_qv = algebraic_from_json(j.at("rho_QV"));
    return c;
}

Json brute_to_json(const BruteResult& r) {
    Json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["max_rho"] = r.max_rho;
    j["argmax_iso_class"] = r.argmax_graph6;
    j["is_D"] = r.is_D;
    j["is_V"] = r.is_V;
    j["maximizer_classes"] = r.maximizer_classes;
    j["subsets"] = r.subsets;
    j["connected"] = r.connected;
    j["evaluated"] = r.evaluated;
    return j;
}

}  // namespace threshcert
