#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circa/circulant.hpp"
#include "circa/conditions.hpp"
#include "circa/errors.hpp"
#include "circa/families.hpp"
#include "circa/numtheory.hpp"
#include "circa/ramanujan.hpp"
#include "circa/report.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as strings ("a" or "a/b"); the Python layer
// wraps them in fractions.Fraction.
circa::FirstRow to_row(const py::sequence& seq) {
    std::vector<circa::Rational> entries;
    entries.reserve(seq.size());
    for (const auto& item : seq) entries.push_back(circa::parse_rational(py::str(item).cast<std::string>()));
    return circa::FirstRow(std::move(entries));
}

py::object from_json(const circa::Json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

py::object big(const circa::BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.get_str());
}

}  // namespace

PYBIND11_MODULE(_circa, m) {
    m.doc() = "Exact invertibility of rational circulant matrices";

    py::register_exception<circa::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<circa::InternalInconsistency>(m, "InternalInconsistency",
                                                         PyExc_RuntimeError);

    m.def("factorize", [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (const auto& pp : circa::factorize(n).prime_powers) out.emplace_back(pp.prime, pp.exponent);
        return out;
    });
    m.def("totient", &circa::totient);
    m.def("divisors", &circa::divisors);
    m.def("unit_group", &circa::unit_group);
    m.def("is_prime", &circa::is_prime);
    m.def("primitive_elements",
          [](std::uint64_t p) { return circa::primitive_elements(circa::PrimeField(p)); });

    m.def("cyclotomic", [](std::uint64_t d) {
        py::list out;
        for (const auto& c : circa::cyclotomic(d).coefficients()) out.append(big(c));
        return out;
    }, "Coefficients of Phi_d, lowest degree first");
    m.def("ramanujan_sum", &circa::ramanujan_sum, py::arg("d"), py::arg("n"));
    m.def("ramanujan_sum_oracle", &circa::ramanujan_sum_oracle, py::arg("d"), py::arg("n"));

    m.def("det_bareiss", [](const py::sequence& row) {
        return circa::format_rational(circa::det_bareiss(to_row(row)));
    });
    m.def("det_resultant", [](const py::sequence& row) {
        return circa::format_rational(circa::det_resultant(to_row(row)));
    });
    m.def("is_singular_exact", [](const py::sequence& row) {
        const auto r = circa::is_singular_exact(to_row(row));
        return py::make_tuple(r.singular, r.witness ? py::cast(*r.witness) : py::none());
    });
    m.def("decide", [](const py::sequence& row, bool with_determinant) {
        return from_json(circa::to_json(circa::decide(to_row(row), with_determinant)));
    }, py::arg("row"), py::arg("with_determinant") = true);
    m.def("conditions", [](std::uint64_t n, bool templates) {
        return from_json(circa::conditions_to_json(n, circa::generate_conditions(n), templates));
    }, py::arg("n"), py::arg("templates") = false);
    m.def("templates_match_generic", [](std::uint64_t n) {
        const auto rep = circa::templates_match_generic(n);
        py::dict d;
        d["matches"] = rep.matches;
        d["mismatches"] = rep.mismatches;
        d["printed_discrepancies"] = rep.printed_discrepancies;
        return d;
    });
    m.def("classify_prime", [](const py::sequence& row) {
        return circa::to_string(circa::classify_prime(to_row(row)));
    });

    m.def("build_G", [](std::uint64_t p, unsigned mexp, std::uint64_t h) {
        const auto spec = h == 0 ? circa::MailletSpec(p, mexp) : circa::MailletSpec(p, mexp, h);
        const circa::FirstRow row = circa::build_G(spec);
        py::list out;
        for (const auto& v : row.entries()) out.append(big(v.get_num()));
        return out;
    }, py::arg("p"), py::arg("m"), py::arg("h") = 0);
    m.def("verify_permutation_similarity", [](std::uint64_t p, unsigned mexp) {
        return circa::verify_permutation_similarity(circa::MailletSpec(p, mexp)).ok;
    });
    m.def("table1", [](std::uint64_t pmax, unsigned mmax) {
        return from_json(circa::to_json(circa::table1(pmax, mmax)));
    });
    m.def("quarter_prime_pairs", [](std::uint64_t qmax) {
        return from_json(circa::to_json(circa::quarter_prime_pairs(qmax)));
    }, py::arg("qmax") = 200);
    m.def("zeroone_scan", [](std::uint64_t n, std::uint64_t ones, std::uint64_t samples,
                             std::uint64_t seed) {
        circa::ZeroOneScanOptions opts;
        opts.exhaustive = samples == 0;
        opts.samples = samples;
        opts.seed = seed;
        py::gil_scoped_release release;
        const auto report = circa::zeroone_scan(n, ones, opts);
        py::gil_scoped_acquire acquire;
        return from_json(circa::to_json(report));
    }, py::arg("n"), py::arg("ones"), py::arg("samples") = 0,
       py::arg("seed") = circa::ZeroOneScanOptions{}.seed);
}
