#include "threshcert/certify.hpp"
#include "threshcert/compare.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/io.hpp"
#include "threshcert/oracle.hpp"
#include "threshcert/tsubenum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace threshcert;

namespace {

py::object to_py(const Integer& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(r.get_num()), to_py(r.get_den()));
}

Rational from_py(const py::handle& h) {
    return parse_rational(py::str(py::module_::import("fractions").attr("Fraction")(h)).cast<std::string>());
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json py_to_json(const py::handle& h) { return Json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>()); }

py::tuple interval_to_py(const RationalInterval& iv) { return py::make_tuple(to_py(iv.lo), to_py(iv.hi)); }

StepSequence steps_from_py(const std::vector<int>& v) { return StepSequence(v); }

py::tuple steps_to_py(const StepSequence& s) { return py::cast(s.vec()); }

}  // namespace

PYBIND11_MODULE(_threshcert, m) {
    m.doc() = "Exact certification of spectral radius maximizers among connected graphs with n - 1 + e edges";

    static py::exception<Error> base(m, "ThreshcertError");
    static py::exception<VerificationFailed> vf(m, "VerificationFailed", base.ptr());
    static py::exception<InvalidArgument> ia(m, "InvalidArgument", base.ptr());
    static py::exception<OutOfProvenRange> oor(m, "OutOfProvenRange", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const VerificationFailed& ex) {
            vf(ex.what());
        } catch (const InvalidArgument& ex) {
            ia(ex.what());
        } catch (const OutOfProvenRange& ex) {
            oor(ex.what());
        } catch (const Error& ex) {
            base(ex.what());
        }
    });

    m.def("edge_params", [](int e) {
        const auto p = edge_params(e);
        py::dict d;
        d["e"] = p.e;
        d["k"] = p.k;
        d["t"] = p.t;
        d["b"] = p.b;
        return d;
    }, py::arg("e"));
    m.def("d_steps", [](int e) { return steps_to_py(d_steps(e)); }, py::arg("e"));
    m.def("v_steps", [](int e) { return steps_to_py(v_steps(e)); }, py::arg("e"));
    m.def("build_D", [](int n, int e) { return to_graph6(adjacency(build_D(n, e))); }, py::arg("n"), py::arg("e"),
          "graph6 of D(n,e)");
    m.def("build_V", [](int n, int e) { return to_graph6(adjacency(build_V(n, e))); }, py::arg("n"), py::arg("e"),
          "graph6 of V(n,e)");
    m.def("threshold_graph", [](const std::vector<int>& steps, int n) {
        return to_graph6(adjacency(threshold_from_tsub(steps_from_py(steps), n)));
    }, py::arg("steps"), py::arg("n"));
    m.def("charpoly", [](const std::string& graph6) { return poly_to_py(threshold_charpoly(from_graph6(graph6))); },
          py::arg("graph6"), "ascending integer coefficients of det(xI - A)");

    m.def("enumerate_S", [](int e) {
        py::list out;
        for (const auto& s : enumerate_S(e)) out.append(steps_to_py(s));
        return out;
    }, py::arg("e"));
    m.def("enumerate_S_star", [](int e) {
        py::list out;
        for (const auto& s : enumerate_S_star(e)) out.append(steps_to_py(s));
        return out;
    }, py::arg("e"));
    m.def("count_S", &count_S, py::arg("e"));

    m.def("certify_candidate", [](int e, const std::vector<int>& steps) {
        return json_to_py(certificate_to_json(certify_candidate(e, steps_from_py(steps))));
    }, py::arg("e"), py::arg("steps"));
    m.def("certify_all", [](int e, int jobs) {
        CertifyAllOptions opt;
        opt.jobs = jobs;
        std::vector<Certificate> certs;
        {
            py::gil_scoped_release release;
            certs = certify_all(e, opt);
        }
        py::list out;
        for (const auto& c : certs) out.append(json_to_py(certificate_to_json(c)));
        return out;
    }, py::arg("e"), py::arg("jobs") = 1);
    m.def("recheck", [](const py::object& cert) { return recheck_certificate(certificate_from_json(py_to_json(cert))); },
          py::arg("certificate"), "empty string when the certificate verifies");

    m.def("psi_poly", [](int e) { return poly_to_py(psi_poly(e)); }, py::arg("e"));
    m.def("psi_value", [](int e, const py::object& eps) {
        const Rational width = from_py(eps);
        if (width <= 0) throw InvalidArgument("eps must be positive");
        const auto r = psi_value(e).rationalized();
        if (r.is_exact()) return py::object(to_py(r.lo()));
        return py::object(interval_to_py(r.refined(width).interval()));
    }, py::arg("e"), py::arg("eps") = py::module_::import("fractions").attr("Fraction")(1, 1000000000000LL),
       "Fraction when rational, else an isolating interval of width <= eps");
    m.def("omega_value", [](int e) {
        const auto w = omega_value(e);
        if (w.exact) return py::object(to_py(*w.exact));
        return py::object(interval_to_py(w.enclosure));
    }, py::arg("e"), "Fraction when rational, else an enclosure of width <= 1e-6");
    m.def("classify", [](int n, int e, bool allow_extrapolation) {
        return to_string(classify(n, e, allow_extrapolation).verdict);
    }, py::arg("n"), py::arg("e"), py::arg("allow_extrapolation") = false);
    m.def("bell_f", [](const py::object& x) { return to_py(bell_f(from_py(x))); }, py::arg("x"));
    m.def("ell_bound", [](int e) {
        const auto b = ell_bound(e);
        return py::make_tuple(to_py(b.ell), to_py(b.bound));
    }, py::arg("e"));
    m.def("corollary_range_check", [](int lo, int hi) {
        const auto rep = corollary_range_check(lo, hi);
        py::list failed;
        for (const auto& ent : rep.entries)
            if (ent.status == RangeCheckEntry::Status::Fail) failed.append(ent.e);
        py::dict d;
        d["passed"] = rep.passed;
        d["failed"] = failed;
        d["skipped"] = rep.skipped;
        return d;
    }, py::arg("e_lo"), py::arg("e_hi"));

    m.def("spectral_radius", [](const std::string& graph6) { return spectral_radius(from_graph6(graph6)).rho; },
          py::arg("graph6"));
    m.def("brute_force_max", [](int n, int e, int jobs) {
        BruteOptions opt;
        opt.jobs = jobs;
        BruteResult r;
        {
            py::gil_scoped_release release;
            r = brute_force_max(n, e, opt);
        }
        return json_to_py(brute_to_json(r));
    }, py::arg("n"), py::arg("e"), py::arg("jobs") = 1);
}
