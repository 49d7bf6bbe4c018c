// Python bindings for the matorder core: matrices over Q / GF(p) / C, order
// decisions, generalized inverses, preserver analysis, and the finite-ring
// oracle. Exact scalars cross the boundary as strings ("3/4"), complex ones
// as python complex numbers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matorder/io.hpp"
#include "matorder/preservers.hpp"
#include "matorder/ringlab.hpp"

namespace py = pybind11;
using namespace matorder;

namespace {

struct PyMatrix {
    AnyMat m;

    int rows() const { return any_rows(m); }
    int cols() const { return any_cols(m); }
    std::string field() const { return field_label(m); }
    std::string text() const { return write_matrix(m); }
    std::string entry(int i, int j) const {
        return std::visit([&](const auto& x) { return x.field().str(x(i, j)); }, m);
    }
};

PyMatrix make_rationals(const std::vector<std::vector<std::string>>& rows) {
    RationalField f;
    std::vector<std::vector<Rational>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (const auto& s : r) conv.back().push_back(f.parse(s));
    }
    return {AnyMat{MatQ::from_rows(f, conv)}};
}

PyMatrix make_gf(std::uint64_t p, const std::vector<std::vector<long long>>& rows) {
    PrimeField f(p);
    std::vector<std::vector<PrimeField::Elem>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (long long v : r) conv.back().push_back(f.from_int(v));
    }
    return {AnyMat{MatGF::from_rows(f, conv)}};
}

PyMatrix make_complex(const std::vector<std::vector<Complex>>& rows, double tol) {
    return {AnyMat{MatC::from_rows(ComplexField(tol), rows)}};
}

py::dict order_report_to_dict(const PyMatrix&, Relation, const auto& rep) {
    py::dict d;
    d["relation"] = relation_name(rep.relation);
    d["holds"] = rep.holds;
    d["ill_conditioned"] = rep.ill_conditioned;
    py::dict methods;
    for (const auto& [name, verdict] : rep.methods) methods[py::str(name)] = verdict;
    d["methods"] = methods;
    if (rep.witness) {
        py::dict w;
        w["p"] = PyMatrix{AnyMat{rep.witness->p}};
        w["q"] = PyMatrix{AnyMat{rep.witness->q}};
        w["a_inner"] = PyMatrix{AnyMat{rep.witness->a_inner}};
        w["b_inner"] = PyMatrix{AnyMat{rep.witness->b_inner}};
        d["witness"] = w;
    }
    return d;
}

py::dict check_order(const PyMatrix& a, const PyMatrix& b, const std::string& relation) {
    return visit_same(
        [&](const auto& x, const auto& y) {
            using F = typename std::decay_t<decltype(x)>::Fld;
            OrderReport<F> rep;
            if (relation == "minus") rep = minus_leq(x, y);
            else if (relation == "space") rep = space_leq(x, y);
            else if (relation == "star") rep = star_leq(x, y);
            else throw std::invalid_argument("relation must be minus, space, or star");
            return order_report_to_dict(a, rep.relation, rep);
        },
        a.m, b.m);
}

PyMatrix unary_matrix_op(const PyMatrix& a, auto&& op) {
    return {std::visit([&](const auto& x) { return AnyMat{op(x)}; }, a.m)};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matrix partial orders, generalized inverses, and finite-ring verification";

    py::class_<PyMatrix>(m, "Matrix")
        .def_static("rationals", &make_rationals, py::arg("rows"),
                    "matrix over Q from string entries like '3' or '-1/2'")
        .def_static("gf", &make_gf, py::arg("p"), py::arg("rows"), "matrix over GF(p) from integers")
        .def_static("complex", &make_complex, py::arg("rows"), py::arg("tol") = 1e-10,
                    "matrix over C with a comparison tolerance")
        .def_static("parse", [](const std::string& text) { return PyMatrix{read_matrix_string(text)}; },
                    "parse the matrix text format")
        .def_property_readonly("rows", &PyMatrix::rows)
        .def_property_readonly("cols", &PyMatrix::cols)
        .def_property_readonly("field", &PyMatrix::field)
        .def("entry", &PyMatrix::entry, py::arg("i"), py::arg("j"))
        .def("__str__", &PyMatrix::text)
        .def("__repr__", [](const PyMatrix& a) { return "Matrix(" + a.field() + ", " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")"; })
        .def("__eq__", [](const PyMatrix& a, const PyMatrix& b) {
            return visit_same([](const auto& x, const auto& y) { return matrices_equal(x, y); }, a.m, b.m);
        })
        .def("__add__", [](const PyMatrix& a, const PyMatrix& b) {
            return PyMatrix{visit_same([](const auto& x, const auto& y) { return AnyMat{x + y}; }, a.m, b.m)};
        })
        .def("__sub__", [](const PyMatrix& a, const PyMatrix& b) {
            return PyMatrix{visit_same([](const auto& x, const auto& y) { return AnyMat{x - y}; }, a.m, b.m)};
        })
        .def("__matmul__", [](const PyMatrix& a, const PyMatrix& b) {
            return PyMatrix{visit_same([](const auto& x, const auto& y) { return AnyMat{x * y}; }, a.m, b.m)};
        })
        .def("transpose", [](const PyMatrix& a) { return unary_matrix_op(a, [](const auto& x) { return x.transpose(); }); })
        .def("adjoint", [](const PyMatrix& a) { return unary_matrix_op(a, [](const auto& x) { return x.adjoint(); }); });

    m.def("identity", [](const PyMatrix& like, int n) {
        return PyMatrix{std::visit([&](const auto& x) { return AnyMat{std::decay_t<decltype(x)>::identity(x.field(), n)}; }, like.m)};
    }, py::arg("like"), py::arg("n"), "identity matrix over the same field as `like`");

    m.def("rank", [](const PyMatrix& a) { return std::visit([](const auto& x) { return rank(x); }, a.m); });
    m.def("moore_penrose", [](const PyMatrix& a) { return unary_matrix_op(a, [](const auto& x) { return moore_penrose(x); }); });
    m.def("inner_inverse", [](const PyMatrix& a) { return unary_matrix_op(a, [](const auto& x) { return inner_inverse(x); }); });
    m.def("reflexive_inverse", [](const PyMatrix& a, const PyMatrix& g) {
        return PyMatrix{visit_same([](const auto& x, const auto& y) { return AnyMat{reflexive_inverse(x, y)}; }, a.m, g.m)};
    });
    m.def("rank_factorization", [](const PyMatrix& a) {
        return std::visit([](const auto& x) {
            auto [f, g] = rank_factorization(x);
            return py::make_tuple(PyMatrix{AnyMat{f}}, PyMatrix{AnyMat{g}});
        }, a.m);
    });
    m.def("null_space_basis", [](const PyMatrix& a) {
        return std::visit([](const auto& x) {
            std::vector<PyMatrix> out;
            for (auto& v : null_space_basis(x)) out.push_back(PyMatrix{AnyMat{v}});
            return out;
        }, a.m);
    });
    m.def("d1_basis", [](const PyMatrix& a) {
        return std::visit([](const auto& x) {
            std::vector<PyMatrix> out;
            for (auto& v : d1_basis(x)) out.push_back(PyMatrix{AnyMat{v}});
            return out;
        }, a.m);
    });
    m.def("g1_contains", [](const PyMatrix& a, const PyMatrix& x) {
        return visit_same([](const auto& u, const auto& v) { return g1_contains(u, v); }, a.m, x.m);
    });
    m.def("g1b_check", [](const PyMatrix& a, const PyMatrix& b, const PyMatrix& x) {
        if (a.m.index() != x.m.index()) throw std::invalid_argument("mixed-field operation");
        return visit_same([&](const auto& u, const auto& v) {
            return g1b_check(u, v, std::get<std::decay_t<decltype(u)>>(x.m));
        }, a.m, b.m);
    });
    m.def("g1b_member", [](const PyMatrix& a, const PyMatrix& b, const PyMatrix& binner) {
        if (a.m.index() != binner.m.index()) throw std::invalid_argument("mixed-field operation");
        return PyMatrix{visit_same([&](const auto& u, const auto& v) {
            return AnyMat{g1b_member(u, v, std::get<std::decay_t<decltype(u)>>(binner.m))};
        }, a.m, b.m)};
    });

    m.def("check_order", &check_order, py::arg("a"), py::arg("b"), py::arg("relation"),
          "decide minus / space / star; returns a dict with verdict and witnesses");
    m.def("combo_inverse", [](const PyMatrix& a, const PyMatrix& b, const std::string& c1, const std::string& c2) {
        return PyMatrix{visit_same([&](const auto& x, const auto& y) {
            return AnyMat{combo_inverse(x, y, x.field().parse(c1), x.field().parse(c2))};
        }, a.m, b.m)};
    }, py::arg("a"), py::arg("b"), py::arg("c1"), py::arg("c2"));
    m.def("generate_minus_pair", [](const PyMatrix& like, int n, int rank_a, int rank_c, std::uint64_t seed) {
        return std::visit([&](const auto& x) {
            auto [a, b] = generate_minus_pair(x.field(), n, rank_a, rank_c, seed);
            return py::make_tuple(PyMatrix{AnyMat{a}}, PyMatrix{AnyMat{b}});
        }, like.m);
    }, py::arg("like"), py::arg("n"), py::arg("rank_a"), py::arg("rank_c"), py::arg("seed"),
       "comparable pair over the same field as `like`");

    m.def("minimal_below", [](const PyMatrix& a) {
        return std::visit([](const auto& x) {
            auto u = minimal_below(x);
            py::dict d;
            d["value"] = PyMatrix{AnyMat{u.value}};
            d["tau"] = x.field().str(u.tau);
            d["left_factor"] = PyMatrix{AnyMat{u.left_factor}};
            d["right_factor"] = PyMatrix{AnyMat{u.right_factor}};
            return d;
        }, a.m);
    });
    m.def("is_minimal", [](const PyMatrix& a) { return std::visit([](const auto& x) { return is_minimal(x); }, a.m); });
    m.def("is_maximal", [](const PyMatrix& a) {
        return std::visit([](const auto& x) {
            auto r = is_maximal(x);
            py::dict d;
            d["maximal"] = r.maximal;
            if (r.extension) d["extension"] = PyMatrix{AnyMat{*r.extension}};
            return d;
        }, a.m);
    });

    m.def("apply_map", [](const PyMatrix& coeffs, const PyMatrix& x) {
        if (coeffs.m.index() != x.m.index()) throw std::invalid_argument("mixed-field operation");
        return PyMatrix{visit_same([](const auto& c, const auto& v) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            return AnyMat{MatrixLinearMap<F>(c).apply(v)};
        }, coeffs.m, x.m)};
    }, py::arg("coeffs"), py::arg("x"), "apply an n^2 x n^2 vectorized linear map to an n x n matrix");
    m.def("jordan_check", [](const PyMatrix& coeffs) {
        return std::visit([](const auto& c) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            return jordan_check(MatrixLinearMap<F>(c));
        }, coeffs.m);
    });
    m.def("jordan_triple_check", [](const PyMatrix& coeffs) {
        return std::visit([](const auto& c) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            return static_cast<bool>(jordan_triple_check(MatrixLinearMap<F>(c)));
        }, coeffs.m);
    });
    m.def("preserves_minus_sampled", [](const PyMatrix& coeffs, long long trials, std::uint64_t seed) {
        return std::visit([&](const auto& c) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            auto v = preserves_minus_sampled(MatrixLinearMap<F>(c), trials, seed);
            py::dict d;
            d["passed"] = v.passed;
            d["trials"] = v.trials;
            if (v.counterexample) {
                d["counterexample_a"] = PyMatrix{AnyMat{v.counterexample->first}};
                d["counterexample_b"] = PyMatrix{AnyMat{v.counterexample->second}};
            }
            return d;
        }, coeffs.m);
    }, py::arg("coeffs"), py::arg("trials") = 200, py::arg("seed") = 1);
    m.def("decompose_preserver", [](const PyMatrix& coeffs, long long trials, std::uint64_t seed) {
        return std::visit([&](const auto& c) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            auto out = decompose_preserver(MatrixLinearMap<F>(c), trials, seed);
            py::dict d;
            if (out.ok()) {
                d["kind"] = out.form->kind == CanonicalPreserverForm<F>::Kind::Isomorphism
                                ? "isomorphism-type" : "anti-isomorphism-type";
                d["T"] = PyMatrix{AnyMat{out.form->t}};
                d["S"] = PyMatrix{AnyMat{out.form->s}};
            } else {
                d["error"] = out.error;
            }
            return d;
        }, coeffs.m);
    }, py::arg("coeffs"), py::arg("trials") = 60, py::arg("seed") = 1);
    m.def("sandwich_map", [](const PyMatrix& t, const PyMatrix& s, bool transpose_inside) {
        return PyMatrix{visit_same([&](const auto& x, const auto& y) {
            using F = typename std::decay_t<decltype(x)>::Fld;
            auto map = transpose_inside ? MatrixLinearMap<F>::sandwich_transpose(x, y)
                                        : MatrixLinearMap<F>::sandwich(x, y);
            return AnyMat{map.coeffs()};
        }, t.m, s.m)};
    }, py::arg("t"), py::arg("s"), py::arg("transpose_inside") = false,
       "coefficients of X -> T X S (or T X^T S)");

    m.def("oracle_run", [](const std::string& ring_spec, const std::string& prop) {
        ringlab::FiniteRing ring = ringlab::FiniteRing::parse(ring_spec);
        std::vector<ringlab::VerifyReport> reports;
        if (prop == "all") reports = ringlab::verify_all(ring);
        else reports.push_back(ringlab::verify(prop, ring));
        py::list out;
        for (const auto& r : reports) {
            py::dict d;
            d["prop"] = r.prop_id;
            d["ring"] = r.ring;
            d["status"] = ringlab::to_string(r.status);
            d["detail"] = r.detail;
            if (!r.notes.empty()) d["notes"] = r.notes;
            out.append(std::move(d));
        }
        return out;
    }, py::arg("ring"), py::arg("prop") = "all");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
