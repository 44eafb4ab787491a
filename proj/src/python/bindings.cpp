#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellrand/behavior.hpp"
#include "bellrand/randomness.hpp"
#include "bellrand/reports.hpp"
#include "bellrand/seesaw.hpp"

namespace py = pybind11;
using namespace bellrand;

namespace {

PauliString pauli_from_text(const std::string& letters) {
    PauliString p = PauliString::identity(static_cast<int>(letters.size()));
    for (std::size_t k = 0; k < letters.size(); ++k) {
        const int q = static_cast<int>(k) + 1;
        switch (letters[k]) {
            case 'I': break;
            case 'X': p = multiply(p, PauliString::sigma_x(p.qubits, q)); break;
            case 'Y': p = multiply(p, PauliString::sigma_y(p.qubits, q)); break;
            case 'Z': p = multiply(p, PauliString::sigma_z(p.qubits, q)); break;
            default: throw py::value_error("Pauli letters must be I, X, Y, or Z");
        }
    }
    return p;
}

std::string pauli_repr(const PauliString& p) {
    static const char* phases[4] = {"+", "+i", "-", "-i"};
    std::string s = phases[p.phase_exp & 3];
    for (int k = 0; k < p.qubits; ++k) {
        const bool x = (p.xmask >> k) & 1, z = (p.zmask >> k) & 1;
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bell-functional randomness certification toolkit";

    py::register_exception<InvalidSettingCount>(m, "InvalidSettingCount", PyExc_ValueError);
    py::register_exception<TooLargeForBruteForce>(m, "TooLargeForBruteForce", PyExc_ValueError);
    py::register_exception<TooLargeForDense>(m, "TooLargeForDense", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<NotAnticommuting>(m, "NotAnticommuting", PyExc_ValueError);
    py::register_exception<UnsupportedPhase>(m, "UnsupportedPhase", PyExc_ValueError);
    py::register_exception<InsufficientCopies>(m, "InsufficientCopies", PyExc_ValueError);
    py::register_exception<SchemeMismatch>(m, "SchemeMismatch", PyExc_ValueError);
    py::register_exception<IndexError>(m, "SettingIndexError", PyExc_IndexError);

    py::class_<EncodingScheme>(m, "EncodingScheme")
        .def_readonly("n", &EncodingScheme::n)
        .def_property_readonly("strings",
                               [](const EncodingScheme& s) {
                                   std::vector<std::uint32_t> bits;
                                   for (const BitString& b : s.strings) bits.push_back(b.bits);
                                   return bits;
                               })
        .def("coefficient",
             [](const EncodingScheme& s, int i, int y) { return coefficient(s, i, y); },
             py::arg("i"), py::arg("y"))
        .def("__len__", [](const EncodingScheme& s) { return s.strings.size(); });

    m.def("build_scheme", &build_scheme, py::arg("n"));
    m.def("local_bound_closed", &local_bound_closed, py::arg("n"));
    m.def("local_bound_bruteforce", &local_bound_bruteforce, py::arg("n"));

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&pauli_from_text), py::arg("letters"))
        .def_readonly("qubits", &PauliString::qubits)
        .def_readonly("xmask", &PauliString::xmask)
        .def_readonly("zmask", &PauliString::zmask)
        .def_property_readonly("phase", &PauliString::phase)
        .def("__mul__", &multiply)
        .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
        .def("__repr__", &pauli_repr)
        .def("to_dense", &to_dense);

    m.def("multiply", &multiply);
    m.def("anticommutes", py::overload_cast<const PauliString&, const PauliString&>(&anticommutes));
    m.def("transpose_sign", &transpose_sign);
    m.def("maxent_expectation",
          py::overload_cast<const PauliString&, const PauliString&>(&maxent_expectation));

    py::class_<Observable>(m, "Observable")
        .def_readonly("qubits", &Observable::qubits)
        .def("to_dense", &Observable::to_dense)
        .def_property_readonly("terms", [](const Observable& o) {
            std::vector<std::pair<double, PauliString>> t = o.terms;
            return t;
        });
    m.def("is_dichotomic", &is_dichotomic, py::arg("observable"), py::arg("tol") = 1e-12);

    py::class_<Realization>(m, "Realization")
        .def_readonly("n", &Realization::n)
        .def_readonly("copies", &Realization::copies)
        .def_readonly("alice", &Realization::alice)
        .def_readonly("bob", &Realization::bob)
        .def_property_readonly("scheme", [](const Realization& r) { return r.scheme; });

    m.def("canonical_bob_observables", &canonical_bob_observables, py::arg("n"));
    m.def("canonical_realization", &canonical_realization, py::arg("n"));
    m.def("single_copy_realization_n4", &single_copy_realization_n4);
    m.def("duplicated_realization", &duplicated_realization, py::arg("n"));
    m.def("padded_realization", &padded_realization, py::arg("n"), py::arg("m"));
    m.def("bell_value", &bell_value, py::arg("realization"));
    m.def("omega", &omega, py::arg("realization"), py::arg("i"));
    m.def("sos_certificate",
          [](const Realization& r) {
              const SosCertificate c = sos_certificate(r);
              return py::make_tuple(c.beta, c.gap,
                                    c.min_eigenvalue ? py::cast(*c.min_eigenvalue)
                                                     : py::none());
          },
          py::arg("realization"));
    m.def("max_anticommuting_set_size_pauli", &max_anticommuting_set_size_pauli,
          py::arg("qubits"));

    py::class_<Behavior>(m, "Behavior")
        .def_readonly("n", &Behavior::n)
        .def("entry", &Behavior::entry, py::arg("i"), py::arg("y"), py::arg("a"), py::arg("b"))
        .def_property_readonly("correlators", [](const Behavior& b) { return b.correlators; })
        .def("to_csv", &behavior_to_csv)
        .def("to_json", &behavior_to_json);
    m.def("compute_behavior", &compute_behavior, py::arg("realization"));
    m.def("bell_value_of", &bell_value_of, py::arg("behavior"), py::arg("scheme"));
    m.def("max_probability", [](const Behavior& b) {
        const MaxProbability mp = max_probability(b);
        std::vector<std::tuple<int, int, int, int>> witnesses;
        for (const BehaviorWitness& w : mp.witnesses)
            witnesses.emplace_back(w.i, w.y, w.a, w.b);
        return py::make_tuple(mp.p_star, witnesses);
    });
    m.def("validate", [](const Behavior& b) {
        std::vector<std::string> out;
        for (const BehaviorViolation& v : validate(b))
            out.push_back(v.kind + " at i=" + std::to_string(v.i) +
                          " y=" + std::to_string(v.y) +
                          " magnitude=" + std::to_string(v.magnitude));
        return out;
    });

    py::class_<RandomnessReport>(m, "RandomnessReport")
        .def_readonly("n", &RandomnessReport::n)
        .def_readonly("m", &RandomnessReport::m)
        .def_readonly("bell_value", &RandomnessReport::bell_value)
        .def_readonly("local_bound", &RandomnessReport::local_bound)
        .def_readonly("violated", &RandomnessReport::violated)
        .def_readonly("certified", &RandomnessReport::certified)
        .def_readonly("p_star", &RandomnessReport::p_star)
        .def_readonly("r_min", &RandomnessReport::r_min)
        .def_readonly("r_max", &RandomnessReport::r_max)
        .def("to_json", &report_to_json);
    m.def("certify", &certify, py::arg("behavior"), py::arg("scheme"), py::arg("m"));
    m.def("min_entropy", &min_entropy, py::arg("p"));
    m.def("rmin_closed_form", &rmin_closed_form, py::arg("n"));
    m.def("table1_value", &table1_value, py::arg("n"), py::arg("m"));

    py::class_<SeesawResult>(m, "SeesawResult")
        .def_readonly("best_value", &SeesawResult::best_value)
        .def_readonly("best_realization", &SeesawResult::best_realization)
        .def_readonly("iterations_used", &SeesawResult::iterations_used)
        .def_readonly("per_restart_values", &SeesawResult::per_restart_values)
        .def_readonly("converged", &SeesawResult::converged);
    m.def("seesaw_optimize",
          [](int n, int local_dim, int restarts, int max_iterations, double tol,
             std::uint64_t seed) {
              SeesawConfig cfg;
              cfg.n = n;
              cfg.local_dim = local_dim;
              cfg.restarts = restarts;
              cfg.max_iterations = max_iterations;
              cfg.convergence_tol = tol;
              cfg.seed = seed;
              return seesaw_optimize(cfg);
          },
          py::arg("n"), py::arg("local_dim"), py::arg("restarts") = 50,
          py::arg("max_iterations") = 500, py::arg("convergence_tol") = 1e-13,
          py::arg("seed") = 1);

    m.def("simulated_bits",
          [](int n, int m, int restarts, std::uint64_t seed) {
              return simulated_bits(n, m, restarts, seed);
          },
          py::arg("n"), py::arg("m"), py::arg("restarts") = 50, py::arg("seed") = 7);
}
