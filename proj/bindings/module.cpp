#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nervecheck/cli.hpp"
#include "nervecheck/dowker.hpp"
#include "nervecheck/generator.hpp"
#include "nervecheck/io.hpp"
#include "nervecheck/metric.hpp"
#include "nervecheck/nerve_theorem.hpp"
#include "nervecheck/snf.hpp"

namespace py = pybind11;
using namespace nervecheck;

namespace {

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix");
        for (int j = 0; j < c; ++j)
            m.set(i, j, Int(rows[i][j]));
    }
    return m;
}

std::vector<std::vector<std::string>> simplex_lists(const std::vector<Simplex>& simplices)
{
    std::vector<std::vector<std::string>> out;
    out.reserve(simplices.size());
    for (const Simplex& s : simplices)
        out.push_back(s.labels());
    return out;
}

Cover make_cover(const SimplicialComplex& base,
                 const std::map<std::string, std::vector<std::vector<std::string>>>& parts)
{
    std::map<std::string, SimplicialComplex, LabelLess> built;
    for (const auto& [label, simplices] : parts)
        built.emplace(label, SimplicialComplex::closure(simplices));
    return Cover(base, std::move(built));
}

std::vector<std::vector<Rat>> parse_rows(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const auto& cell : row)
            r.push_back(io::parse_rational(cell));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact simplicial homology, covers, nerves, and homological "
              "nerve-theorem checks";

    py::register_exception<CoverError>(m, "CoverError", PyExc_ValueError);
    py::register_exception<TheoremFalsified>(m, "TheoremFalsified", PyExc_RuntimeError);
    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("closure", &SimplicialComplex::closure, py::arg("simplices"),
                    "Downward closure of the given simplices (lists of vertex labels).")
        .def("dim", &SimplicialComplex::dim)
        .def("size", &SimplicialComplex::size)
        .def("contains",
             [](const SimplicialComplex& k, const std::vector<std::string>& labels) {
                 return k.contains(Simplex::of_labels(labels));
             })
        .def("simplices",
             [](const SimplicialComplex& k) {
                 return simplex_lists({k.simplices().begin(), k.simplices().end()});
             })
        .def("simplices_of_dim",
             [](const SimplicialComplex& k, int q) {
                 return simplex_lists(k.simplices_of_dim(q));
             })
        .def("maximal_simplices",
             [](const SimplicialComplex& k) { return simplex_lists(k.maximal_simplices()); })
        .def("vertices",
             [](const SimplicialComplex& k) {
                 std::vector<std::string> out;
                 for (const VertexId& v : k.vertices())
                     out.push_back(v.label);
                 return out;
             })
        .def("skeleton", &SimplicialComplex::skeleton, py::arg("n"))
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__len__", &SimplicialComplex::size)
        .def("__repr__", [](const SimplicialComplex& k) {
            return "<SimplicialComplex dim=" + std::to_string(k.dim()) + " size=" +
                   std::to_string(k.size()) + ">";
        });

    py::class_<Cover>(m, "Cover")
        .def(py::init(&make_cover), py::arg("base"), py::arg("parts"),
             "Cover of `base` by the closures of the listed simplices; the "
             "union condition is validated.")
        .def("labels", &Cover::labels)
        .def("base", &Cover::base)
        .def("part", &Cover::part, py::arg("label"))
        .def("__len__", &Cover::size);

    py::class_<FiniteMetricSpace>(m, "MetricSpace")
        .def("size", &FiniteMetricSpace::size)
        .def("labels", &FiniteMetricSpace::labels);

    m.def("snf",
          [](const std::vector<std::vector<long long>>& rows) {
              std::vector<std::string> out;
              for (const Int& f : snf(matrix_from_rows(rows)).factors)
                  out.push_back(f.str());
              return out;
          },
          py::arg("matrix"),
          "Invariant factors of an integer matrix, as decimal strings.");

    m.def("rank",
          [](const std::vector<std::vector<long long>>& rows, const std::string& coeff) {
              return rank(matrix_from_rows(rows), cli::parse_coeff(coeff));
          },
          py::arg("matrix"), py::arg("coeff"));

    m.def("homology_json",
          [](const SimplicialComplex& k, const std::string& coeff, bool reduced) {
              return io::homology_to_json(homology(k, cli::parse_coeff(coeff), reduced))
                  .dump();
          },
          py::arg("complex"), py::arg("coeff") = "z", py::arg("reduced") = false);

    m.def("nerve",
          [](const Cover& cover, std::optional<int> max_dim) { return nerve(cover, max_dim); },
          py::arg("cover"), py::arg("max_dim") = std::nullopt);

    m.def("intersection",
          [](const Cover& cover, const std::vector<std::string>& sigma) {
              return intersection(cover, sigma);
          },
          py::arg("cover"), py::arg("sigma"));

    m.def("check_hypotheses_json",
          [](const Cover& cover, int k) {
              return io::hypothesis_to_json(check_hypotheses(cover, k)).dump();
          },
          py::arg("cover"), py::arg("k"));

    m.def("check_theorem_json",
          [](const Cover& cover, int k, bool trace) {
              return io::theorem_to_json(check_theorem(cover, k, trace)).dump();
          },
          py::arg("cover"), py::arg("k"), py::arg("trace") = false);

    m.def("g_chain_map",
          [](const Cover& cover, int m_max) { return check_g_chain_map(cover, m_max); },
          py::arg("cover"), py::arg("m_max"));

    m.def("metric_from_coordinates",
          [](const std::vector<std::vector<std::string>>& points) {
              return FiniteMetricSpace::from_coordinates(parse_rows(points));
          },
          py::arg("points"), "Points with exact rational coordinates, given as strings.");

    m.def("metric_from_distances",
          [](const std::vector<std::vector<std::string>>& dist,
             const std::vector<std::string>& labels) {
              return FiniteMetricSpace::from_distances(parse_rows(dist), labels);
          },
          py::arg("distances"), py::arg("labels") = std::vector<std::string>{});

    m.def("vietoris_rips",
          [](const FiniteMetricSpace& space, const std::string& r, int max_dim) {
              return vietoris_rips(space, io::parse_rational(r), max_dim);
          },
          py::arg("space"), py::arg("r"), py::arg("max_dim"),
          "Simplices are point sets of diameter strictly less than r (exact).");

    m.def("dowker_pair",
          [](const std::vector<std::string>& rows, const std::vector<std::string>& cols,
             const std::vector<std::pair<std::string, std::string>>& pairs,
             std::optional<int> max_dim) {
              DowkerRelation rel;
              rel.row_labels = rows;
              rel.col_labels = cols;
              rel.pairs.insert(pairs.begin(), pairs.end());
              rel.validate();
              return dowker_pair(rel, max_dim);
          },
          py::arg("rows"), py::arg("cols"), py::arg("pairs"),
          py::arg("max_dim") = std::nullopt);

    m.def("facet_cover", &facet_cover, py::arg("base"),
          "Cover by closures of the maximal simplices; good at every level.");
    m.def("star_cover", &star_cover, py::arg("base"));
}
