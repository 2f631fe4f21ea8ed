#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "revolve/catalog.hpp"
#include "revolve/cli.hpp"
#include "revolve/curvature.hpp"
#include "revolve/error.hpp"
#include "revolve/expression.hpp"
#include "revolve/mesh.hpp"
#include "revolve/momentum.hpp"
#include "revolve/reconstruct.hpp"

namespace py = pybind11;
using namespace revolve;

namespace {

Interval to_interval(const std::pair<double, double>& d) { return {d.first, d.second}; }

Momentum prescribe(const std::string& kind, const std::string& expr, std::pair<double, double> domain,
                   double constant, int sign, std::optional<double> anchor,
                   const std::map<std::string, double>& params)
{
    const auto parsed_kind = parse_prescription_kind(kind);
    if (!parsed_kind)
        throw Error(ErrorKind::InvalidArgument, "unknown prescription kind '" + kind + "'");
    Expression::Params bound(params.begin(), params.end());
    Prescription p;
    p.kind = *parsed_kind;
    p.func = Expression::parse(expr, bound).as_function();
    p.constant = constant;
    p.sign = sign;
    p.domain = to_interval(domain);
    p.anchor = anchor;
    return momentum_from(p);
}

py::array_t<double> profile_array(const Profile& profile)
{
    py::array_t<double> out({py::ssize_t(profile.samples.size()), py::ssize_t(5)});
    auto a = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const auto& q = profile.samples[i];
        a(i, 0) = q.s;
        a(i, 1) = q.x;
        a(i, 2) = q.z;
        a(i, 3) = q.tx;
        a(i, 4) = q.tz;
    }
    return out;
}

Profile profile_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> a)
{
    if (a.ndim() != 2 || a.shape(1) != 5)
        throw Error(ErrorKind::InvalidArgument, "profile array must have shape (n, 5)");
    Profile p;
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < r.shape(0); ++i)
        p.samples.push_back({r(i, 0), r(i, 1), r(i, 2), r(i, 3), r(i, 4)});
    return p;
}

}  // namespace

PYBIND11_MODULE(_revolve, m)
{
    m.doc() = "Rotational surfaces from prescribed curvatures.";

    static py::exception<Error> error_type(m, "RevolveError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::class_<Momentum>(m, "Momentum")
        .def("__call__", &Momentum::eval, py::arg("x"))
        .def("deriv", &Momentum::deriv, py::arg("x"))
        .def_property_readonly("domain", [](const Momentum& k) { return std::pair(k.domain().lo, k.domain().hi); })
        .def("negated", &Momentum::negated)
        .def("admissible_intervals", [](const Momentum& k) {
            std::vector<std::pair<double, double>> out;
            for (const auto& i : admissible_intervals(k))
                out.emplace_back(i.lo, i.hi);
            return out;
        });

    m.def("prescribe", &prescribe, py::arg("kind"), py::arg("expr"), py::arg("domain"), py::arg("const") = 0.0,
          py::arg("sign") = 1, py::arg("anchor") = py::none(), py::arg("params") = std::map<std::string, double>{});

    m.def("curvatures", [](const Momentum& k, double x) {
        const auto c = curvature_sample(k, x);
        return py::dict(py::arg("k_m") = c.k_m, py::arg("k_p") = c.k_p, py::arg("H") = c.H, py::arg("K_G") = c.K_G);
    }, py::arg("momentum"), py::arg("x"));

    m.def("gauss_monomial", &gauss_monomial, py::arg("mu"), py::arg("n"), py::arg("gamma"), py::arg("x"));

    m.def("integrate_profile", [](const Momentum& k, double start, int direction, double s_max, int samples) {
        ProfileOptions opt;
        opt.s_max = s_max;
        opt.samples_per_branch = samples;
        return profile_array(integrate_profile(k, start, direction, opt));
    }, py::arg("momentum"), py::arg("start"), py::arg("direction") = 1, py::arg("s_max") = 1.0,
       py::arg("samples_per_branch") = 512);

    m.def("catalog_names", &catalog::names);
    m.def("catalog_profile", [](const std::string& name, const std::map<std::string, double>& params, int n) {
        const auto entry = catalog::build(name, params);
        if (!entry.closed_profile)
            throw Error(ErrorKind::InvalidArgument, "catalog entry '" + name + "' has no closed profile");
        return profile_array(catalog::sample_closed_profile(*entry.closed_profile, n));
    }, py::arg("name"), py::arg("params") = std::map<std::string, double>{}, py::arg("samples") = 513);
    m.def("catalog_momentum", [](const std::string& name, const std::map<std::string, double>& params) {
        auto entry = catalog::build(name, params);
        if (!entry.momentum)
            throw Error(ErrorKind::InvalidArgument, "catalog entry '" + name + "' has no momentum");
        return *entry.momentum;
    }, py::arg("name"), py::arg("params") = std::map<std::string, double>{});

    m.def("mesh_obj", [](py::array_t<double> profile, int n_theta) {
        std::ostringstream out;
        write_obj(out, revolve_profile(profile_from_array(profile), n_theta));
        return out.str();
    }, py::arg("profile"), py::arg("n_theta") = 64);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
