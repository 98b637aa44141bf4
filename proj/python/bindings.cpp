#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>

#include "r2quad/chain_seq.hpp"
#include "r2quad/coeff_maps.hpp"
#include "r2quad/errors.hpp"
#include "r2quad/families.hpp"
#include "r2quad/io.hpp"
#include "r2quad/poly.hpp"
#include "r2quad/quadrature.hpp"
#include "r2quad/root_finder.hpp"

namespace py = pybind11;
using namespace r2quad;

namespace {

// Families built from Python data keep plain vectors, so worker threads never
// call back into the interpreter.
CoefficientFamily family_from_arrays(std::vector<double> c, std::vector<double> d_next, std::optional<double> m1,
                                     std::string name) {
    if (c.size() != d_next.size()) throw InvalidParameter("c and d_next must have the same length");
    if (c.empty()) throw InvalidParameter("no coefficients given");
    auto cs = std::make_shared<std::vector<double>>(std::move(c));
    auto ds = std::make_shared<std::vector<double>>(std::move(d_next));
    const std::size_t n = cs->size();
    auto fam = custom_family(
        std::move(name),
        [cs](std::size_t k) {
            if (k < 1 || k > cs->size()) throw IndexBeyondData(k);
            return (*cs)[k - 1];
        },
        [ds](std::size_t k) {
            if (k < 2 || k > ds->size() + 1) throw IndexBeyondData(k);
            return (*ds)[k - 2];
        },
        n);
    if (m1) fam.set_m1(*m1);
    return fam;
}

RootFindConfig make_config(double tol, const std::string& method, double delta, unsigned threads) {
    RootFindConfig cfg;
    cfg.tol = tol;
    cfg.method = method_from_string(method);
    cfg.delta = delta;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
}

template <class E>
void bind_error(py::module_& m, const char* name, py::handle base) {
    py::register_exception<E>(m, name, base);
}

}  // namespace

PYBIND11_MODULE(_r2quad, m) {
    m.doc() = "Quadrature rules from R_II recurrence coefficients and positive chain sequences.";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    bind_error<ChainSequenceViolation>(m, "ChainSequenceViolation", base);
    bind_error<NotConverged>(m, "NotConverged", base);
    bind_error<DegenerateTail>(m, "DegenerateTail", base);
    bind_error<MaxIterExceeded>(m, "MaxIterExceeded", base);
    bind_error<NegativeDiscriminant>(m, "NegativeDiscriminant", base);
    bind_error<RootCountMismatch>(m, "RootCountMismatch", base);
    bind_error<SingularPivot>(m, "SingularPivot", base);
    bind_error<DivergentSeries>(m, "DivergentSeries", base);
    bind_error<DegenerateInput>(m, "DegenerateInput", base);
    bind_error<InvalidTauSeed>(m, "InvalidTauSeed", base);
    bind_error<OracleFailure>(m, "OracleFailure", base);
    bind_error<NormalizationError>(m, "NormalizationError", base);
    bind_error<InvalidParameter>(m, "InvalidParameter", base);
    bind_error<ParseError>(m, "ParseError", base);
    bind_error<IndexBeyondData>(m, "IndexBeyondData", base);

    py::class_<CoefficientFamily>(m, "Family")
        .def("c", &CoefficientFamily::c, py::arg("k"))
        .def("d", &CoefficientFamily::d, py::arg("k"))
        .def_property_readonly("name", &CoefficientFamily::name)
        .def_property_readonly("params", &CoefficientFamily::params)
        .def_property_readonly("max_index", &CoefficientFamily::max_index)
        .def("chain_params", &CoefficientFamily::chain_params, py::arg("n"))
        .def("__repr__", [](const CoefficientFamily& f) { return "<Family " + f.name() + ">"; });

    py::class_<ChainParams>(m, "ChainParams")
        .def_readonly("n", &ChainParams::n)
        .def_readonly("ell", &ChainParams::ell)
        .def_readonly("maxp", &ChainParams::maxp)
        .def_readonly("series_S", &ChainParams::series_S)
        .def_readonly("series_converged", &ChainParams::series_converged)
        .def_readonly("m1", &ChainParams::m1);

    m.def("lebesgue_family", &lebesgue_family);
    m.def("crr_family", &crr_family, py::arg("lam"), py::arg("eta"));
    m.def("file_family", [](const std::filesystem::path& p) { return custom_family(p); }, py::arg("path"));
    m.def("custom_family", &family_from_arrays, py::arg("c"), py::arg("d_next"), py::arg("m1") = py::none(),
          py::arg("name") = "custom",
          "Family from c_1..c_m and d_2..d_{m+1}. Without m1 the weights need a convergent series, which finite data cannot give.");

    py::class_<RealRule>(m, "RealRule")
        .def_readonly("n", &RealRule::n)
        .def_readonly("nodes", &RealRule::nodes)
        .def_readonly("weights", &RealRule::weights)
        .def_readonly("family", &RealRule::family)
        .def("to_json", [](const RealRule& r) { return to_json(r).dump(); });

    py::enum_<CircleKind>(m, "CircleKind").value("mu", CircleKind::mu_rule).value("nu", CircleKind::nu_rule);

    py::class_<CircleRule>(m, "CircleRule")
        .def_readonly("n_points", &CircleRule::n_points)
        .def_property_readonly("nodes",
                               [](const CircleRule& r) {
                                   std::vector<std::complex<double>> z;
                                   for (const auto& node : r.nodes) z.push_back(node.z());
                                   return z;
                               })
        .def_property_readonly("angles",
                               [](const CircleRule& r) {
                                   std::vector<double> t;
                                   for (const auto& node : r.nodes) t.push_back(node.theta);
                                   return t;
                               })
        .def_readonly("weights", &CircleRule::weights)
        .def_readonly("mass_at_one", &CircleRule::mass_at_one)
        .def_readonly("kind", &CircleRule::kind)
        .def_readonly("epsilon", &CircleRule::epsilon)
        .def("to_json", [](const CircleRule& r) { return to_json(r).dump(); });

    m.def(
        "real_rule",
        [](const CoefficientFamily& fam, std::size_t n, double tol, const std::string& method, double delta,
           unsigned threads) {
            const auto cfg = make_config(tol, method, delta, threads);
            py::gil_scoped_release release;
            return real_rule(fam, n, cfg);
        },
        py::arg("family"), py::arg("n"), py::arg("tol") = 1e-10, py::arg("method") = "lrf", py::arg("delta") = 1.0,
        py::arg("threads") = 1);

    m.def(
        "circle_rule",
        [](const CoefficientFamily& fam, std::size_t n, const std::string& kind, double epsilon, double tol) {
            RootFindConfig cfg;
            cfg.tol = tol;
            cfg.validate();
            if (kind == "mu") {
                if (epsilon != 0.0) throw InvalidParameter("epsilon applies to the nu rule only");
                return circle_rule_mu(fam, n, cfg);
            }
            if (kind == "nu") return circle_rule_nu(fam, n, epsilon, cfg);
            throw InvalidParameter("kind must be 'mu' or 'nu'");
        },
        py::arg("family"), py::arg("n"), py::arg("kind") = "mu", py::arg("epsilon") = 0.0, py::arg("tol") = 1e-10);

    m.def("integrate_real", &integrate_real, py::arg("rule"), py::arg("f"));
    m.def("integrate_circle", &integrate_circle, py::arg("rule"), py::arg("F"));

    m.def(
        "find_all_zeros",
        [](const CoefficientFamily& fam, std::size_t n, double tol, const std::string& method) {
            return find_all_zeros(fam, n, make_config(tol, method, 1.0, 1));
        },
        py::arg("family"), py::arg("n"), py::arg("tol") = 1e-10, py::arg("method") = "lrf");

    m.def(
        "lrf_find_zero",
        [](const CoefficientFamily& fam, std::size_t n, double y0, const std::string& direction, double tol) {
            RootFindConfig cfg;
            cfg.tol = tol;
            if (direction != "plus" && direction != "minus") throw InvalidParameter("direction must be plus or minus");
            const auto r = lrf_find_zero(fam, n, y0, direction == "plus" ? Direction::plus : Direction::minus, cfg);
            return py::make_tuple(r.zero, r.iterations);
        },
        py::arg("family"), py::arg("n"), py::arg("y0"), py::arg("direction") = "plus", py::arg("tol") = 1e-10,
        "Returns (zero, iterations).");

    m.def(
        "ip_refine",
        [](const CoefficientFamily& fam, std::size_t n, double p, double tol) {
            RootFindConfig cfg;
            cfg.tol = tol;
            const auto r = ip_refine(fam, n, p, cfg);
            return py::make_tuple(r.zero, r.weight, r.iterations);
        },
        py::arg("family"), py::arg("n"), py::arg("p"), py::arg("tol") = 1e-10, "Returns (zero, weight, iterations).");

    m.def(
        "sturm_counts",
        [](const CoefficientFamily& fam, std::size_t n, double t) {
            const auto s = sturm_counts(fam, n, t);
            return py::make_tuple(s.neg, s.at, s.pos);
        },
        py::arg("family"), py::arg("n"), py::arg("t"), "Returns (below, at, above).");

    m.def("eval_p", &eval_raw, py::arg("family"), py::arg("n"), py::arg("x"), "P_0(x)..P_n(x).");
    m.def("eval_q", &eval_Q, py::arg("family"), py::arg("m1"), py::arg("n"), py::arg("x"));
    m.def("eval_r", &eval_R, py::arg("family"), py::arg("n"), py::arg("z"));
    m.def("leading_coefficient", &leading_coefficient, py::arg("family"), py::arg("n"));

    m.def(
        "minimal_parameters", [](const std::vector<double>& d) { return minimal_parameters(d); }, py::arg("d"),
        "l_1..l_{m+1} from d_2..d_{m+1}.");

    py::class_<VerblunskySeq>(m, "VerblunskySeq")
        .def_readonly("alpha", &VerblunskySeq::alpha)
        .def_readonly("tau", &VerblunskySeq::tau)
        .def_readonly("tau1", &VerblunskySeq::tau1_seed);
    py::class_<MuInverse>(m, "MuInverse")
        .def_readonly("c", &MuInverse::c)
        .def_readonly("ell", &MuInverse::ell)
        .def_readonly("tau", &MuInverse::tau);
    py::class_<NuInverse>(m, "NuInverse")
        .def_readonly("c", &NuInverse::c)
        .def_readonly("g", &NuInverse::g)
        .def_readonly("d", &NuInverse::d)
        .def_readonly("tau", &NuInverse::tau);

    m.def("verblunsky_from_coeffs", &verblunsky_from_coeffs, py::arg("family"), py::arg("n"));
    m.def("verblunsky_nu0_from_coeffs", &verblunsky_nu0_from_coeffs, py::arg("family"), py::arg("n"));
    m.def(
        "coeffs_from_verblunsky_mu",
        [](const std::vector<cplx>& alpha, cplx tau1, std::size_t n) { return coeffs_from_verblunsky_mu(alpha, tau1, n); },
        py::arg("alpha"), py::arg("tau1"), py::arg("n"));
    m.def(
        "coeffs_from_verblunsky_nu",
        [](const std::vector<cplx>& alpha, std::size_t n) { return coeffs_from_verblunsky_nu(alpha, n); },
        py::arg("alpha"), py::arg("n"));
    m.def("tau1_from_integral", &tau1_from_integral, py::arg("I"));
    m.def(
        "coeffs_from_density",
        [](const std::function<double(double)>& density, std::size_t n, double quad_tol) {
            // forwards to the family integrator machinery with a user density
            auto fam = custom_family("density", [](std::size_t) { return 0.0; }, [](std::size_t) { return 0.25; });
            fam.density = density;
            const auto r = coeffs_from_measure(family_integrator(fam), n, quad_tol);
            return py::make_tuple(r.c, r.d);
        },
        py::arg("density"), py::arg("n"), py::arg("quad_tol") = 1e-10,
        "(c_1..c_{n+1}, d_2..d_{n+1}) of the probability measure with the given density on the real line.");

    m.def("crr_tau", &crr_tau, py::arg("lam"), py::arg("eta"));
    m.def("lebesgue_node", &lebesgue::node, py::arg("n"), py::arg("k"));
}
