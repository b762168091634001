#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2bs/cli.hpp"
#include "l2bs/error.hpp"
#include "l2bs/json_io.hpp"

namespace py = pybind11;
using namespace l2bs;

namespace {

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Json index_json(const py::object& index) {
    if (py::isinstance<py::str>(index)) return read_json_file(index.cast<std::string>());
    return from_py(index);
}

}  // namespace

PYBIND11_MODULE(_l2bs, m) {
    m.doc() = "L2-invariants of locally symmetric spaces: root data, parabolics, bounds, torsion, densities";
    m.attr("__version__") = kToolVersion;

    static py::exception<Error> base(m, "Error");
    static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
    static py::exception<Unsupported> unsupported(m, "Unsupported", base.ptr());
    static py::exception<PreconditionFailed> precondition(m, "PreconditionFailed", base.ptr());
    static py::exception<CertificateFailure> certificate(m, "CertificateFailure", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const CertificateFailure& e) {
            py::object exc = certificate;
            py::object inst = exc(e.what());
            inst.attr("code") = e.code();
            inst.attr("module") = e.module();
            PyErr_SetObject(certificate.ptr(), inst.ptr());
        } catch (const InvalidInput& e) {
            invalid(e.what());
        } catch (const Unsupported& e) {
            unsupported(e.what());
        } catch (const PreconditionFailed& e) {
            precondition(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });

    m.def("describe_group", [](const std::string& form) {
        auto g = parse_real_form(form);
        Json j = to_json(g);
        j["q"] = middle_dimension(g);
        return to_py(j);
    }, py::arg("form"), "Dimension, ranks and deficiency of a real form such as 'SO,3,3'.");

    m.def("olbrich_profile", [](int n, int m_) { return to_py(to_json(olbrich_profile(n, m_))); }, py::arg("n"),
          py::arg("m"));

    m.def("restrict", [](const py::object& index) {
        auto idx = tits_index_from_json(index_json(index));
        Json kernel = Json::array();
        for (const auto& c : anisotropic_kernel(idx)) kernel.push_back(c.type);
        Json j = to_json(restrict_index(idx));
        j["anisotropic_kernel"] = kernel;
        return to_py(j);
    }, py::arg("index"), "Restricted root system of a Tits index (dict or path to JSON).");

    m.def("parabolics", [](const py::object& index) {
        auto idx = tits_index_from_json(index_json(index));
        Json out = Json::array();
        for (const auto& p : enumerate_parabolics(restrict_index(idx))) out.push_back(to_json(p, &idx));
        return to_py(out);
    }, py::arg("index"));

    m.def("ns_bound", [](const py::object& index, const std::string& levi, const std::string& group, bool boundary) {
        Json raw = index_json(index);
        auto idx = tits_index_from_json(raw);
        std::string gtext = group.empty() ? raw.value("real_form", std::string{}) : group;
        std::string ltext = levi.empty() ? raw.value("levi", std::string{}) : levi;
        if (gtext.empty()) throw InvalidInput("python", "real form of G missing");
        auto g = parse_real_form(gtext);
        auto rrs = restrict_index(idx);
        auto p = standard_parabolic(rrs, {});
        if (!ltext.empty()) p.levi_annotation = parse_real_form(ltext);
        auto r = boundary ? boundary_component_bound(g, rrs, p) : theorem1_bound(g, rrs, p);
        Json j = to_json(r);
        j["certificate"] = to_json(r.certificate);
        return to_py(j);
    }, py::arg("index"), py::arg("levi") = "", py::arg("group") = "", py::arg("boundary_component") = false);

    m.def("torsion_verdict", [](const std::string& form) { return to_py(to_json(torsion_verdict(parse_real_form(form)))); },
          py::arg("form"));

    m.def("corner_strata", [](int l) {
        Json out = Json::array();
        for (const auto& s : corner_strata(l)) out.push_back(to_json(s));
        return to_py(out);
    }, py::arg("l"));

    m.def("estimate_density",
          [](const std::string& complex, int degree, std::uint64_t samples, std::uint64_t seed, int workers,
             double grid_min, double grid_max, int per_decade) {
              AbelianCWComplex c;
              if (complex == "builtin:circle") c = circle_complex();
              else if (complex == "builtin:z2") c = square_tiling_complex();
              else if (complex == "builtin:flat") c = flat_complex();
              else if (complex == "builtin:gapped") c = gapped_complex();
              else c = complex_from_json(read_json_file(complex));
              auto grid = log_grid({grid_min, grid_max, per_decade}, operator_norm_bound(c, degree));
              DensityEstimate e;
              {
                  py::gil_scoped_release release;
                  e = estimate_density(c, degree, grid, samples, seed, workers);
              }
              Json j = {{"estimate", to_json(e)}};
              try {
                  j["novikov_shubin"] = to_json(estimate_ns(e));
              } catch (const PreconditionFailed& ex) {
                  j["novikov_shubin"] = {{"error", ex.what()}};
              }
              return to_py(j);
          },
          py::arg("complex"), py::arg("degree"), py::arg("samples") = 100000, py::arg("seed") = kDefaultSeed,
          py::arg("workers") = 1, py::arg("grid_min") = 1e-6, py::arg("grid_max") = 0.0, py::arg("points_per_decade") = 20);

    m.def("isotropy", [](const std::string& coeffs, int height) {
        return to_py(to_json(isotropy_search(DiagonalForm::parse(coeffs), height)));
    }, py::arg("coeffs"), py::arg("height") = 10);

    m.def("pipeline", [](std::int64_t p, int search_height) { return to_py(to_json(example46_pipeline(p, search_height))); },
          py::arg("p"), py::arg("search_height") = 30);

    m.def("run_cli", [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs a command line; returns (exit_code, stdout, stderr).");
}
