#include <sstream>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dup23/cli.hpp"
#include "dup23/diophantine.hpp"
#include "dup23/powersum.hpp"
#include "dup23/valuation.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

// Python int <-> mpz_class through base-16 text.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        const bool negative = PyObject_RichCompareBool(src.ptr(), py::int_(0).ptr(), Py_LT) == 1;
        auto text = py::str(py::module_::import("builtins").attr("hex")(negative ? -py::reinterpret_borrow<py::int_>(src) : src))
                        .cast<std::string>();
        if (value.set_str(text.substr(2), 16) != 0) return false;
        if (negative) value = -value;
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
    }
};
}  // namespace pybind11::detail

namespace {

py::tuple rep_tuple(const dup23::Representation& r) { return py::make_tuple(r.x, r.y); }

py::tuple pair_tuple(const dup23::DuplicatePair& p) {
    return py::make_tuple(p.value, rep_tuple(p.first), rep_tuple(p.second));
}

py::list pairs_list(const std::vector<dup23::DuplicatePair>& pairs) {
    py::list out;
    for (const auto& p : pairs) out.append(pair_tuple(p));
    return out;
}

py::list collisions_list(const std::vector<dup23::DifferenceCollision>& rows) {
    py::list out;
    for (const auto& row : rows) {
        py::list w;
        for (const auto& e : row.witnesses) w.append(py::make_tuple(e.x, e.b));
        out.append(py::make_tuple(row.c, w));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace dup23;
    m.doc() = "Sums and differences of powers of 2 and 3";

    m.def("vp", py::overload_cast<unsigned, const mpz_class&>(&vp), py::arg("p"), py::arg("n"),
          "Largest k with p^k dividing n.");
    m.def("v2_pow3_minus1", &v2_pow3_minus1, py::arg("n"));
    m.def("v3_pow2_minus1", &v3_pow2_minus1, py::arg("n"));

    m.def(
        "enumerate_sums",
        [](const mpz_class& cap) {
            py::list out;
            for (const auto& g : enumerate_sums(SearchBounds::up_to(cap))) {
                py::list reps;
                for (const auto& r : g.reps) reps.append(rep_tuple(r));
                out.append(py::make_tuple(g.value, reps));
            }
            return out;
        },
        py::arg("cap"), "[(value, [(x, y), ...]), ...] for values <= cap, ascending.");
    m.def(
        "find_duplicates", [](const mpz_class& cap) { return pairs_list(find_duplicates(SearchBounds::up_to(cap))); },
        py::arg("cap"), "[(value, (x, y), (a, b)), ...] with x > a.");
    m.def("known_duplicates", [] { return pairs_list(known_duplicates()); });

    m.def("signed_diff_collisions", [](Exponent maxX, Exponent maxB) {
        return collisions_list(signed_diff_collisions(maxX, maxB));
    }, py::arg("max_x"), py::arg("max_b"));
    m.def("abs_diff_collisions", [](Exponent maxExp) { return collisions_list(abs_diff_collisions(maxExp)); },
          py::arg("max_exp"));

    m.def("solve_y_positive", [] { return pairs_list(solve_y_positive()); });
    m.def(
        "solve_y_zero",
        [](Exponent maxCheck) {
            const auto r = solve_y_zero(maxCheck);
            const auto& t = r.trace;
            py::dict trace;
            trace["z"] = t.z;
            trace["c"] = t.oddCofactorC;
            trace["s"] = t.s;
            trace["t"] = t.t;
            trace["a"] = t.a;
            trace["b"] = t.b;
            trace["x"] = t.x;
            trace["divisor_split"] = py::make_tuple(t.divisorSplit.first, t.divisorSplit.second);
            trace["steps"] = t.steps;
            return py::make_tuple(pairs_list(r.duplicates), trace);
        },
        py::arg("max_check") = 100);
    m.def(
        "derive_a_from_b",
        [](std::uint64_t b) {
            const auto br = derive_a_from_b(b);
            return py::make_tuple(br.a ? py::object(py::int_(*br.a)) : py::object(py::none()), br.reason);
        },
        py::arg("b"), "(a, reason); a is None when the branch is excluded.");
    m.def(
        "rn_solutions",
        [](Exponent maxM) {
            py::list out;
            for (const auto& r : rn_solutions(maxM)) out.append(py::make_tuple(r.m, r.w));
            return out;
        },
        py::arg("max_m"));
    m.def(
        "guided_search",
        [](Exponent maxS, Exponent maxD, unsigned threads) {
            std::vector<GuidedSolution> sols;
            {
                py::gil_scoped_release release;
                sols = guided_search(maxS, maxD, threads);
            }
            py::list out;
            for (const auto& g : sols) {
                py::dict d;
                d["x"] = g.x;
                d["y"] = g.y;
                d["a"] = g.a;
                d["b"] = g.b;
                d["s"] = g.s;
                d["d"] = g.d;
                d["value"] = g.value();
                out.append(d);
            }
            return out;
        },
        py::arg("max_s"), py::arg("max_d"), py::arg("threads") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit_code, stdout, stderr)");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
