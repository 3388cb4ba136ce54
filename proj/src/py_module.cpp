#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "denum/combinatorics.hpp"
#include "denum/findiff.hpp"
#include "denum/partition.hpp"
#include "denum/waves.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> table_strings(const denum::DenumerantTable& t) {
    std::vector<std::string> out;
    out.reserve(t.values.size());
    for (const denum::Int& v : t.values) out.push_back(v.get_str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact restricted-partition counts and Sylvester wave decompositions";

    m.def(
        "count",
        [](const denum::Components& components, long max_l) {
            return table_strings(denum::denumerant_bruteforce(max_l, components));
        },
        py::arg("components"), py::arg("max_l"),
        "Denumerant values for l = 0..max_l by convolution, as decimal strings.");

    m.def(
        "count_series",
        [](const denum::Components& components, long max_l) {
            return table_strings(denum::denumerant_series(max_l, components));
        },
        py::arg("components"), py::arg("max_l"),
        "Same table via exact series inversion; an independent code path.");

    m.def(
        "quasipolynomial_json",
        [](const denum::Components& components) {
            return denum::quasipolynomial_to_json(denum::quasipolynomial(components));
        },
        py::arg("components"), "Wave decomposition serialized to JSON.");

    m.def(
        "evaluate_quasipolynomial",
        [](const std::string& qp_json, long l) {
            return evaluate(denum::quasipolynomial_from_json(qp_json), l).to_string();
        },
        py::arg("qp_json"), py::arg("l"), "Evaluate a serialized decomposition, as a rational string.");

    m.def(
        "wave_residues",
        [](const denum::Components& components, long q) {
            denum::Wave w = denum::wave(q, components);
            std::vector<std::vector<std::string>> out;
            for (const denum::Polynomial& p : w.residue_polys) {
                std::vector<std::string> coeffs;
                for (const denum::Rational& r : p.coeffs()) coeffs.push_back(r.to_string());
                out.push_back(std::move(coeffs));
            }
            return out;
        },
        py::arg("components"), py::arg("q"),
        "Residue polynomials of one wave, coefficient strings ascending in l-bar.");

    m.def(
        "fourier_dedekind",
        [](long l, const denum::Components& betas, long q) {
            return denum::fourier_dedekind(denum::DedekindSumSpec{l, betas, q}).to_string();
        },
        py::arg("l"), py::arg("betas"), py::arg("q"), "Fourier-Dedekind sum s_l(betas; q).");

    m.def(
        "verify",
        [](const denum::Components& components, long max_l) {
            denum::DenumerantTable brute = denum::denumerant_bruteforce(max_l, components);
            denum::DenumerantTable series = denum::denumerant_series(max_l, components);
            denum::QuasiPolynomial qp = denum::quasipolynomial(components);
            for (long l = 0; l <= max_l; ++l) {
                const denum::Int& b = brute.values[static_cast<std::size_t>(l)];
                if (series.values[static_cast<std::size_t>(l)] != b) return false;
                if (evaluate(qp, l) != denum::Rational(b)) return false;
            }
            return true;
        },
        py::arg("components"), py::arg("max_l"),
        "True when convolution, series and wave paths agree on l = 0..max_l.");

    m.def(
        "stirling2",
        [](unsigned long m_, unsigned long n) { return denum::stirling2(m_, n).get_str(); },
        py::arg("m"), py::arg("n"));

    m.def(
        "delta_power_zero",
        [](unsigned long n, unsigned long m_) { return denum::delta_power_zero(n, m_).get_str(); },
        py::arg("n"), py::arg("m"));

    m.def(
        "euler_h",
        [](unsigned long n, const std::string& lam) {
            return denum::euler_h(n, denum::Rational::from_string(lam)).to_string();
        },
        py::arg("n"), py::arg("lam"), "H_n(lambda) with lambda as a rational string.");
}
