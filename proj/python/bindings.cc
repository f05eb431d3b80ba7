#include <sppp/appendix.hh>
#include <sppp/cases.hh>
#include <sppp/construct.hh>
#include <sppp/errors.hh>
#include <sppp/feasibility.hh>
#include <sppp/isomorphism.hh>
#include <sppp/plane_io.hh>
#include <sppp/search.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace sppp;

namespace
{
    auto make_plane(int n, const std::vector<std::vector<Point>> & lines) -> PartialPlane
    {
        std::vector<Line> out;
        for (const auto & l : lines)
            out.emplace_back(l);
        return PartialPlane{Order{n}, std::move(out)};
    }

    auto plane_lines(const PartialPlane & p) -> std::vector<std::vector<Point>>
    {
        std::vector<std::vector<Point>> out;
        for (const auto & l : p.lines())
            out.push_back(l.points());
        return out;
    }

    auto solve(int order, int size_min, std::optional<int> size_max, const std::map<int, long> & fixed,
        const std::vector<std::string> & constraints, bool total_points, bool assume_saturated) -> py::list
    {
        FeasibilityProblem f;
        f.order = order;
        f.size_min = size_min;
        f.size_max = size_max.value_or(size_min);
        f.fixed = fixed;
        f.total_points = total_points;
        f.assume_saturated = assume_saturated;
        for (const auto & c : constraints)
            f.constraints.push_back(parse_linear_constraint(c));
        auto result = feasibility_solve(f);
        py::list out;
        for (const auto & s : result.sizes) {
            py::list profiles;
            for (const auto & p : result.profiles)
                if (p.size == s.size)
                    profiles.append(p.a);
            py::dict d;
            d["size"] = s.size;
            d["profiles"] = profiles;
            d["reason"] = s.reason;
            out.append(d);
        }
        return out;
    }
}

PYBIND11_MODULE(_core, m)
{
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);

    py::class_<PartialPlane>(m, "PartialPlane")
        .def(py::init(&make_plane), py::arg("order"), py::arg("lines") = std::vector<std::vector<Point>>{})
        .def_property_readonly("order", &PartialPlane::n)
        .def_property_readonly("lines", &plane_lines)
        .def("__len__", &PartialPlane::size)
        .def("__eq__", [](const PartialPlane & a, const PartialPlane & b) { return a == b; })
        .def("sorted", &PartialPlane::sorted)
        .def("is_pure", &is_pure_partial_plane)
        .def("is_saturated", &is_saturated)
        .def("appearance_counts", [](const PartialPlane & p) { return appearance_profile(p).counts; })
        .def("histogram", [](const PartialPlane & p) { return appearance_profile(p).histogram; })
        .def("certificate", [](const PartialPlane & p) { return plane_certificate(p).hex(); })
        .def("__repr__", [](const PartialPlane & p) {
            return "PartialPlane(order=" + std::to_string(p.n()) + ", size=" + std::to_string(p.size()) + ")";
        });

    m.def("isomorphic", [](const PartialPlane & a, const PartialPlane & b) { return planes_isomorphic(a, b); });
    m.def("dedupe", [](const std::vector<PartialPlane> & planes) { return dedupe(planes); });
    m.def("appendix_planes", &appendix_planes);
    m.def("construct_odd_order", &construct_odd_order_sppp, py::arg("n"));
    m.def("exhaustive_small_order",
        [](int n, bool lexicographic) { return exhaustive_small_order(n, lexicographic); }, py::arg("n"),
        py::arg("lexicographic") = true);

    m.def("case_ids", [] {
        std::vector<std::string> out;
        for (auto id : all_cases)
            out.push_back(to_string(id));
        return out;
    });
    m.def("seed", [](const std::string & id) { return seed_configuration(parse_case_id(id)).planes; });
    m.def(
        "run_case",
        [](const std::string & id, int phase, const std::vector<PartialPlane> & inputs, unsigned workers) {
            RunOptions options;
            options.workers = workers;
            py::gil_scoped_release release;
            return run_case(parse_case_id(id), phase, inputs, options);
        },
        py::arg("case"), py::arg("phase"), py::arg("inputs"), py::arg("workers") = 1);

    m.def("read_planes", [](const std::filesystem::path & path) { return read_planes(path).planes; });
    m.def("write_planes", [](const std::filesystem::path & path, int order, const std::vector<PartialPlane> & planes) {
        write_planes(path, Order{order}, planes);
    });

    m.def("feasibility", &solve, py::arg("order") = 6, py::arg("size"), py::arg("size_max") = std::nullopt,
        py::arg("fixed") = std::map<int, long>{}, py::arg("constraints") = std::vector<std::string>{},
        py::arg("total_points") = false, py::arg("assume_saturated") = true);
}
