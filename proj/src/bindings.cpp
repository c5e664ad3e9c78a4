#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qotp/serialize.hpp"

namespace py = pybind11;
using namespace qotp;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw PreconditionError("expected a 2-D complex array");
    ComplexMatrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
    auto view = arr.unchecked<2>();
    for (py::ssize_t r = 0; r < arr.shape(0); ++r)
        for (py::ssize_t c = 0; c < arr.shape(1); ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = view(r, c);
    return m;
}

py::array_t<std::complex<double>> array_from_matrix(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m(r, c);
    return arr;
}

PureState state_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 1) throw PreconditionError("expected a 1-D amplitude array");
    std::vector<Complex> amps(static_cast<std::size_t>(arr.shape(0)));
    auto view = arr.unchecked<1>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i) amps[static_cast<std::size_t>(i)] = view(i);
    return PureState(std::move(amps));
}

py::array_t<std::complex<double>> array_from_state(const PureState& phi) {
    py::array_t<std::complex<double>> arr(phi.dim());
    auto view = arr.mutable_unchecked<1>();
    for (std::size_t i = 0; i < phi.dim(); ++i)
        view(static_cast<py::ssize_t>(i)) = phi.amplitudes()[i];
    return arr;
}

MixedUnitaryChannel channel_from_python(std::size_t n,
                                        const std::vector<std::pair<double, ComplexArray>>& terms,
                                        const std::optional<ComplexArray>& ancilla) {
    std::vector<ChannelTerm> built;
    built.reserve(terms.size());
    for (const auto& [p, u] : terms)
        built.push_back(ChannelTerm{p, matrix_from_array(u), std::nullopt});
    if (ancilla.has_value())
        return MixedUnitaryChannel(n, DensityMatrix(matrix_from_array(*ancilla)),
                                   std::move(built));
    return MixedUnitaryChannel(n, std::move(built));
}

}  // namespace

PYBIND11_MODULE(qotp, m) {
    m.doc() = "private quantum channel toolkit: quantum one-time pads, PQC verification, "
              "entropy-bound certifiers and an Alice/Bob/Eve protocol simulator";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<PureState>(m, "PureState")
        .def(py::init(&state_from_array), py::arg("amplitudes"))
        .def_static("basis", &PureState::basis, py::arg("dim"), py::arg("index"))
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly("amplitudes", &array_from_state)
        .def("overlap", &PureState::overlap, py::arg("other"));

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const ComplexArray& arr) { return DensityMatrix(matrix_from_array(arr)); }),
             py::arg("matrix"))
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def_property_readonly("matrix",
                               [](const DensityMatrix& rho) { return array_from_matrix(rho.mat()); });

    py::class_<MixedUnitaryChannel>(m, "MixedUnitaryChannel")
        .def(py::init(&channel_from_python), py::arg("n"), py::arg("terms"),
             py::arg("ancilla") = std::nullopt,
             "terms: list of (probability, unitary) pairs; optional ancilla density matrix")
        .def_static(
            "from_pauli_terms",
            [](std::size_t n, const std::vector<std::pair<double, std::string>>& terms) {
                std::vector<std::pair<double, PauliString>> built;
                built.reserve(terms.size());
                for (const auto& [p, letters] : terms)
                    built.emplace_back(p, PauliString::from_letters(letters));
                return MixedUnitaryChannel::from_pauli_terms(n, built);
            },
            py::arg("n"), py::arg("terms"), "terms: list of (probability, pauli letters) pairs")
        .def_property_readonly("input_qubits", &MixedUnitaryChannel::input_qubits)
        .def_property_readonly("total_qubits", &MixedUnitaryChannel::total_qubits)
        .def_property_readonly("probabilities", &MixedUnitaryChannel::probabilities)
        .def_property_readonly("unitaries", [](const MixedUnitaryChannel& e) {
            std::vector<py::array_t<std::complex<double>>> out;
            out.reserve(e.terms().size());
            for (const ChannelTerm& term : e.terms()) out.push_back(array_from_matrix(term.u));
            return out;
        });

    py::class_<StateSet>(m, "StateSet")
        .def_static("full_hilbert", [](std::size_t n) { return StateSet(FullHilbert{n}); })
        .def_static("real_product", [](std::size_t n) { return StateSet(RealProduct{n}); })
        .def_static("classical", [](std::size_t k) { return StateSet(ClassicalStates{k}); })
        .def_static("explicit_list", [](const std::vector<PureState>& states) {
            return StateSet(ExplicitList{states});
        });

    py::class_<PQCInstance>(m, "PQCInstance")
        .def(py::init<StateSet, MixedUnitaryChannel, DensityMatrix>(), py::arg("states"),
             py::arg("channel"), py::arg("target"))
        .def_property_readonly("channel", &PQCInstance::channel)
        .def_property_readonly("target", &PQCInstance::target);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("ok", &VerificationReport::ok)
        .def_readonly("worst_deviation", &VerificationReport::worst_deviation)
        .def_readonly("witness", &VerificationReport::witness)
        .def("__repr__", [](const VerificationReport& r) {
            return "VerificationReport(ok=" + std::string(r.ok ? "True" : "False") +
                   ", worst_deviation=" + std::to_string(r.worst_deviation) + ")";
        });

    py::class_<Theorem4Report>(m, "Theorem4Report")
        .def_readonly("max_p", &Theorem4Report::max_p)
        .def_readonly("term_count", &Theorem4Report::term_count)
        .def_readonly("ok", &Theorem4Report::ok);

    py::class_<Theorem6Report>(m, "Theorem6Report")
        .def_readonly("s_rho0", &Theorem6Report::s_rho0)
        .def_readonly("h_p", &Theorem6Report::h_p)
        .def_readonly("s_ancilla", &Theorem6Report::s_ancilla)
        .def_readonly("lower_ok", &Theorem6Report::lower_ok)
        .def_readonly("upper_ok", &Theorem6Report::upper_ok);

    py::class_<Transcript>(m, "Transcript")
        .def_readonly("key_index", &Transcript::key_index)
        .def_property_readonly("plaintext",
                               [](const Transcript& t) { return array_from_matrix(t.plaintext.mat()); })
        .def_property_readonly("ciphertext",
                               [](const Transcript& t) { return array_from_matrix(t.ciphertext.mat()); })
        .def_property_readonly("recovered",
                               [](const Transcript& t) { return array_from_matrix(t.recovered.mat()); })
        .def_readonly("round_trip_deviation", &Transcript::round_trip_deviation);

    py::enum_<BellKind>(m, "BellKind")
        .value("PHI_PLUS", BellKind::PhiPlus)
        .value("PHI_MINUS", BellKind::PhiMinus)
        .value("PSI_PLUS", BellKind::PsiPlus)
        .value("PSI_MINUS", BellKind::PsiMinus);

    // states and entropy
    m.def("density_of", &density_of, py::arg("phi"));
    m.def("completely_mixed", &completely_mixed, py::arg("dim"));
    m.def("bell_state", &bell_state, py::arg("kind"));
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
    m.def("shannon_entropy", &shannon_entropy, py::arg("p"));

    // pauli algebra
    m.def(
        "pauli_matrix",
        [](const std::string& letters) {
            return array_from_matrix(pauli_matrix(PauliString::from_letters(letters)));
        },
        py::arg("letters"));
    m.def(
        "pauli_decompose",
        [](const ComplexArray& arr) { return pauli_decompose(matrix_from_array(arr)).coeffs; },
        py::arg("matrix"), "coefficients over the Pauli basis, indexed base-4 big-endian");

    // channels
    m.def(
        "apply_channel",
        [](const MixedUnitaryChannel& e, const DensityMatrix& rho) { return apply(e, rho); },
        py::arg("channel"), py::arg("rho"));
    m.def(
        "process_matrix",
        [](const MixedUnitaryChannel& e) { return array_from_matrix(process_matrix(e).mat); },
        py::arg("channel"));
    m.def("channels_equal", &channels_equal, py::arg("a"), py::arg("b"), py::arg("tol"));

    // constructions, verification, certifiers
    m.def("build_pauli_otp", &build_pauli_otp, py::arg("n"));
    m.def("build_real_otp", &build_real_otp, py::arg("n"));
    m.def("build_example_pqc", &build_example_pqc);
    m.def("lift_to_classical", &lift_to_classical, py::arg("instance"));
    m.def("verify_pqc", &verify_pqc, py::arg("instance"), py::arg("tol") = kDefaultCertifyTol);
    m.def("key_entropy", &key_entropy, py::arg("instance"));
    m.def("certify_theorem3", &certify_theorem3, py::arg("instance"),
          py::arg("tol") = kDefaultCertifyTol);
    m.def("certify_theorem4", &certify_theorem4, py::arg("instance"),
          py::arg("tol") = kDefaultCertifyTol);
    m.def("certify_theorem6", &certify_theorem6, py::arg("instance"),
          py::arg("tol") = kDefaultCertifyTol);

    // protocol
    m.def(
        "sample_plaintext",
        [](const PQCInstance& inst, std::uint64_t seed) {
            SplitMix64 rng(seed);
            return sample_plaintext(inst, rng);
        },
        py::arg("instance"), py::arg("seed"),
        "a seeded random plaintext drawn from the instance's state set");
    m.def("encrypt", &encrypt, py::arg("instance"), py::arg("key"), py::arg("phi"));
    m.def("decrypt", &decrypt, py::arg("instance"), py::arg("key"), py::arg("cipher"));
    m.def("eve_view", &eve_view, py::arg("instance"));
    m.def(
        "estimate_eve_state",
        [](const PQCInstance& inst, const PureState& phi, std::size_t samples,
           std::uint64_t seed) {
            const EveEstimate est = estimate_eve_state(inst, phi, samples, seed);
            return py::make_tuple(array_from_matrix(est.estimate.mat()), est.distance);
        },
        py::arg("instance"), py::arg("phi"), py::arg("samples"), py::arg("seed"),
        "returns (estimate, max-entry distance to the target); samples=0 enumerates exactly");
    m.def("run_protocol", &run_protocol, py::arg("instance"), py::arg("phi"), py::arg("seed"));

    // documents
    m.def("serialize_pqc", &serialize_pqc, py::arg("instance"));
    m.def("parse_pqc", &parse_pqc, py::arg("text"));
    m.def("serialize_state", &serialize_state, py::arg("phi"));
    m.def("parse_state", &parse_state, py::arg("text"));
}
