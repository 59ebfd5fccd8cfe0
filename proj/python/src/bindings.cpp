#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "equidist/equidist.hpp"

namespace py = pybind11;
using namespace equidist;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

py::int_ to_py(const BigInt& v) {
    const std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py_int(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(boost::multiprecision::numerator(r)), to_py(boost::multiprecision::denominator(r)));
}

Rational from_py_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(from_py_int(h));
    py::object num = h.attr("numerator");
    py::object den = h.attr("denominator");
    return Rational(from_py_int(num), from_py_int(den));
}

ExactMatrix matrix_from_rows(const std::vector<std::vector<py::int_>>& rows) {
    if (rows.empty()) throw InvalidInput("matrix must have at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<BigInt> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) throw InvalidInput("ragged matrix");
        for (const auto& e : row) entries.push_back(from_py_int(e));
    }
    return ExactMatrix(rows.size(), cols, std::move(entries));
}

py::list matrix_to_rows(const ExactMatrix& a) {
    py::list rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < a.cols(); ++c) row.append(to_py(a(r, c)));
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification, bounds, Hadamard constructions and exhaustive search for equidistant codes";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<Underdetermined>(m, "Underdetermined", base.ptr());
    py::register_exception<UnsupportedAlphabet>(m, "UnsupportedAlphabet", base.ptr());
    py::register_exception<OutOfRegime>(m, "OutOfRegime", base.ptr());
    py::register_exception<NotEquidistant>(m, "NotEquidistant", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

    // core
    m.def("hamming_distance",
          [](const Word& u, const Word& v, int q) { return hamming_distance(u, v, q); },
          py::arg("u"), py::arg("v"), py::arg("q"));

    py::class_<Family>(m, "Family")
        .def(py::init<int, int, std::vector<Word>>(), py::arg("n"), py::arg("q"), py::arg("members") = std::vector<Word>{})
        .def_property_readonly("n", &Family::n)
        .def_property_readonly("q", &Family::q)
        .def_property_readonly("members", &Family::members)
        .def("distance", &Family::distance, py::arg("i"), py::arg("j"))
        .def("__len__", &Family::size)
        .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
        .def("to_text", &serialize_family)
        .def_static("from_text", [](const std::string& text) { return parse_family(text); }, py::arg("text"))
        .def("__repr__", [](const Family& f) {
            std::ostringstream os;
            os << "Family(n=" << f.n() << ", q=" << f.q() << ", m=" << f.size() << ")";
            return os.str();
        });

    py::class_<EquidistanceCertificate>(m, "EquidistanceCertificate")
        .def_readonly("lambda_", &EquidistanceCertificate::lambda)
        .def_readonly("pair_count", &EquidistanceCertificate::pair_count)
        .def("__bool__", [](const EquidistanceCertificate&) { return true; });

    py::class_<EquidistanceViolation>(m, "EquidistanceViolation")
        .def_readonly("reference_i", &EquidistanceViolation::reference_i)
        .def_readonly("reference_j", &EquidistanceViolation::reference_j)
        .def_readonly("reference_distance", &EquidistanceViolation::reference_distance)
        .def_readonly("i", &EquidistanceViolation::i)
        .def_readonly("j", &EquidistanceViolation::j)
        .def_readonly("distance", &EquidistanceViolation::distance)
        .def("__bool__", [](const EquidistanceViolation&) { return false; });

    m.def("check_equidistant", &check_equidistant, py::arg("family"));

    py::class_<Isometry>(m, "Isometry")
        .def(py::init<>())
        .def_readwrite("coordinate_permutation", &Isometry::coordinate_permutation)
        .def_readwrite("symbol_permutations", &Isometry::symbol_permutations)
        .def_static("identity", &Isometry::identity, py::arg("n"), py::arg("q"))
        .def_static("random", [](int n, int q, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return Isometry::random(n, q, rng);
        }, py::arg("n"), py::arg("q"), py::arg("seed"));
    m.def("apply_isometry", &apply_isometry, py::arg("isometry"), py::arg("family"));

    // exact linear algebra
    m.def("det_exact", [](const std::vector<std::vector<py::int_>>& rows) { return to_py(det_exact(matrix_from_rows(rows))); },
          py::arg("rows"));
    m.def("rank_exact", [](const std::vector<std::vector<py::int_>>& rows) { return rank_exact(matrix_from_rows(rows)); },
          py::arg("rows"));
    m.def("structured_det", [](std::int64_t theta, std::int64_t gamma, std::size_t m) {
        return to_py(structured_det({theta, gamma, m}));
    }, py::arg("theta"), py::arg("gamma"), py::arg("m"));
    m.def("is_positive_definite_structured", [](std::int64_t theta, std::int64_t gamma, std::size_t m) {
        return is_positive_definite_structured({theta, gamma, m});
    }, py::arg("theta"), py::arg("gamma"), py::arg("m"));

    // bounds and certificates
    py::class_<BoundReport>(m, "BoundReport")
        .def_property_readonly("bound", [](const BoundReport& r) { return to_py(r.bound); })
        .def_property_readonly("source", [](const BoundReport& r) { return std::string(to_string(r.source)); })
        .def_readonly("exceptional", &BoundReport::exceptional)
        .def_property_readonly("excluded_value", [](const BoundReport& r) -> py::object {
            return r.excluded_value ? to_py(*r.excluded_value) : py::none();
        })
        .def_readonly("conjectural", &BoundReport::conjectural)
        .def("to_json", [](const BoundReport& r) { return to_json(r).dump(); });

    m.def("bound_delsarte", [](int n, int q, int s) { return to_py(bound_delsarte(n, q, s)); },
          py::arg("n"), py::arg("q"), py::arg("s"));
    m.def("bound_single_distance", &bound_single_distance, py::arg("n"), py::arg("lambda_"));
    m.def("conjecture_bound", &conjecture_bound, py::arg("n"), py::arg("q"), py::arg("lambda_"));

    py::class_<GramCertificate>(m, "GramCertificate")
        .def_readonly("m", &GramCertificate::m)
        .def_readonly("n", &GramCertificate::n)
        .def_readonly("lambda_", &GramCertificate::lambda)
        .def_property_readonly("det_value", [](const GramCertificate& c) { return to_py(c.det_value); })
        .def_readonly("rank_value", &GramCertificate::rank_value)
        .def_readonly("pd", &GramCertificate::pd)
        .def_readonly("gram_matches_structure", &GramCertificate::gram_matches_structure)
        .def_property_readonly("conclusion", [](const GramCertificate& c) { return std::string(to_string(c.conclusion)); })
        .def("to_json", [](const GramCertificate& c) { return to_json(c).dump(); });

    m.def("signed_incidence_matrix", [](const Family& f) { return matrix_to_rows(signed_incidence_matrix(f)); },
          py::arg("family"));
    m.def("gram_certificate", &gram_certificate, py::arg("family"));
    m.def("quadratic_form_value", [](const Family& f, const py::sequence& mu) {
        std::vector<Rational> coeffs;
        for (const auto& x : mu) coeffs.push_back(from_py_rational(x));
        return to_py(quadratic_form_value(f, coeffs));
    }, py::arg("family"), py::arg("mu"));

    // constructions
    py::class_<HadamardMatrix>(m, "HadamardMatrix")
        .def_property_readonly("order", &HadamardMatrix::order)
        .def("rows", [](const HadamardMatrix& h) {
            std::vector<std::vector<int>> rows(h.order());
            for (std::size_t r = 0; r < h.order(); ++r)
                for (auto e : h.row(r)) rows[r].push_back(e);
            return rows;
        });
    m.def("hadamard_sylvester", [](unsigned k) { return hadamard_sylvester(k); }, py::arg("k"));
    m.def("hadamard_paley", [](std::uint64_t p) { return hadamard_paley(p); }, py::arg("p"));
    m.def("hadamard_kronecker", [](const HadamardMatrix& a, const HadamardMatrix& b) { return hadamard_kronecker(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("hadamard_of_order", [](std::size_t order) { return hadamard_of_order(order); }, py::arg("order"));
    m.def("hadamard_to_family", &hadamard_to_family, py::arg("h"));

    // search
    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("max_size", &SearchResult::max_size)
        .def_readonly("witness", &SearchResult::witness)
        .def_readonly("nodes_explored", &SearchResult::nodes_explored)
        .def_readonly("complete", &SearchResult::complete)
        .def_readonly("bound_comparison", &SearchResult::bound_comparison)
        .def("to_json", [](const SearchResult& r) { return to_json(r).dump(); });

    m.def("max_equidistant",
          [](int n, int q, int lambda, std::optional<std::uint64_t> node_budget, unsigned threads,
             bool symmetry_reduction, std::uint64_t max_vertices) {
              SearchProblem p;
              p.n = n;
              p.q = q;
              p.lambda = lambda;
              p.node_budget = node_budget;
              p.thread_count = threads;
              p.symmetry_reduction = symmetry_reduction;
              p.max_vertices = max_vertices;
              py::gil_scoped_release release;
              return max_equidistant(p);
          },
          py::arg("n"), py::arg("q"), py::arg("lambda_"), py::arg("node_budget") = py::none(), py::arg("threads") = 1,
          py::arg("symmetry_reduction") = true, py::arg("max_vertices") = kDefaultMaxVertices);
    m.def("enumerate_extremal", &enumerate_extremal, py::arg("n"), py::arg("lambda_"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n", &SweepRow::n)
        .def_readonly("q", &SweepRow::q)
        .def_readonly("lambda_", &SweepRow::lambda)
        .def_readonly("max_size", &SweepRow::max_size)
        .def_property_readonly("bound", [](const SweepRow& r) { return to_py(r.bound); })
        .def_readonly("exceptional", &SweepRow::exceptional)
        .def_readonly("complete", &SweepRow::complete)
        .def_readonly("nodes", &SweepRow::nodes);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("rows", &SweepReport::rows)
        .def_readonly("counterexample_flag", &SweepReport::counterexample_flag)
        .def("to_csv", &to_csv)
        .def("to_json", [](const SweepReport& r) { return to_json(r).dump(); });

    m.def("sweep_theorem", [](int max_n, unsigned threads) {
        SweepOptions o;
        o.thread_count = threads;
        py::gil_scoped_release release;
        return sweep_theorem(max_n, o);
    }, py::arg("max_n"), py::arg("threads") = 1);
    m.def("sweep_conjecture", [](int q, int max_n, unsigned threads) {
        SweepOptions o;
        o.thread_count = threads;
        py::gil_scoped_release release;
        return sweep_conjecture(q, max_n, o);
    }, py::arg("q"), py::arg("max_n"), py::arg("threads") = 1);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
