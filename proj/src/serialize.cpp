#include "qotp/serialize.hpp"

#include <json.hpp>

#include <utility>

namespace qotp {

namespace {

using nlohmann::json;

constexpr int kVersion = 1;
constexpr int kIndent = 2;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json amplitudes_to_json(const PureState& phi) {
    json amps = json::array();
    for (const Complex& a : phi.amplitudes()) amps.push_back(complex_to_json(a));
    return amps;
}

json channel_to_json(const MixedUnitaryChannel& channel) {
    json terms = json::array();
    for (const ChannelTerm& term : channel.terms()) {
        json entry;
        entry["p"] = term.p;
        if (term.pauli_label.has_value())
            entry["pauli"] = term.pauli_label->to_letters();
        else
            entry["u"] = matrix_to_json(term.u);
        terms.push_back(std::move(entry));
    }
    json out;
    out["n"] = channel.input_qubits();
    out["m"] = channel.total_qubits();
    out["terms"] = std::move(terms);
    if (channel.has_ancilla()) out["ancilla"] = matrix_to_json(channel.ancilla().mat());
    return out;
}

json states_to_json(const StateSet& states) {
    json out;
    if (const auto* full = std::get_if<FullHilbert>(&states)) {
        out["variant"] = "full_hilbert";
        out["n"] = full->n;
    } else if (const auto* rp = std::get_if<RealProduct>(&states)) {
        out["variant"] = "real_product";
        out["n"] = rp->n;
    } else if (const auto* cls = std::get_if<ClassicalStates>(&states)) {
        out["variant"] = "classical";
        out["k"] = cls->k;
    } else {
        out["variant"] = "explicit";
        json list = json::array();
        for (const PureState& phi : std::get<ExplicitList>(states).states)
            list.push_back(amplitudes_to_json(phi));
        out["states"] = std::move(list);
    }
    return out;
}

std::string dump_document(const char* kind, json payload) {
    payload["kind"] = kind;
    payload["version"] = kVersion;
    return payload.dump(kIndent) + "\n";
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex number must be a [re, im] pair");
    Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ParseError("complex number must be finite");
    return z;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const json& row : j) {
        if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows");
        for (const json& cell : row) entries.push_back(complex_from_json(cell));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

PureState state_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("state must be a non-empty amplitude array");
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (const json& cell : j) amps.push_back(complex_from_json(cell));
    return PureState(std::move(amps));
}

json parse_document(const std::string& text, const char* kind) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("kind") || doc["kind"] != kind)
        throw ParseError(std::string("expected a document of kind \"") + kind + "\"");
    if (!doc.contains("version") || doc["version"] != kVersion)
        throw ParseError("unsupported document version");
    return doc;
}

MixedUnitaryChannel channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("terms"))
        throw ParseError("channel needs n, m and terms");
    if (!j["n"].is_number_unsigned() || !j["m"].is_number_unsigned())
        throw ParseError("channel qubit counts must be non-negative integers");
    const std::size_t n = j["n"].get<std::size_t>();
    const std::size_t m = j["m"].get<std::size_t>();
    if (m > 12) throw ParseError("channel exceeds the 12-qubit register ceiling");
    if (!j["terms"].is_array() || j["terms"].empty())
        throw ParseError("channel terms must be a non-empty array");

    std::vector<ChannelTerm> terms;
    terms.reserve(j["terms"].size());
    for (const json& entry : j["terms"]) {
        if (!entry.is_object() || !entry.contains("p") || !entry["p"].is_number())
            throw ParseError("channel term needs a numeric probability p");
        const double p = entry["p"].get<double>();
        if (entry.contains("pauli")) {
            if (!entry["pauli"].is_string()) throw ParseError("pauli term label must be a string");
            PauliString label = [&] {
                try {
                    return PauliString::from_letters(entry["pauli"].get<std::string>());
                } catch (const PreconditionError& e) {
                    throw ParseError(e.what());
                }
            }();
            if (label.n() != m) throw ParseError("pauli term label length must equal m");
            terms.push_back(ChannelTerm{p, pauli_matrix(label), std::move(label)});
        } else if (entry.contains("u")) {
            terms.push_back(ChannelTerm{p, matrix_from_json(entry["u"]), std::nullopt});
        } else {
            throw ParseError("channel term needs either a pauli label or a unitary matrix");
        }
    }

    try {
        MixedUnitaryChannel channel =
            j.contains("ancilla")
                ? MixedUnitaryChannel(n, DensityMatrix(matrix_from_json(j["ancilla"])),
                                      std::move(terms))
                : MixedUnitaryChannel(n, std::move(terms));
        if (channel.total_qubits() != m) throw ParseError("channel m does not match its terms");
        return channel;
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

StateSet states_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
        throw ParseError("state set needs a variant name");
    const std::string variant = j["variant"].get<std::string>();
    if (variant == "full_hilbert" || variant == "real_product") {
        if (!j.contains("n") || !j["n"].is_number_unsigned())
            throw ParseError("state set needs a qubit count n");
        const std::size_t n = j["n"].get<std::size_t>();
        if (variant == "full_hilbert") return FullHilbert{n};
        return RealProduct{n};
    }
    if (variant == "classical") {
        if (!j.contains("k") || !j["k"].is_number_unsigned())
            throw ParseError("classical state set needs a state count k");
        return ClassicalStates{j["k"].get<std::size_t>()};
    }
    if (variant == "explicit") {
        if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
            throw ParseError("explicit state set needs a non-empty states array");
        std::vector<PureState> list;
        list.reserve(j["states"].size());
        for (const json& entry : j["states"]) {
            try {
                list.push_back(state_from_json(entry));
            } catch (const ParseError&) {
                throw;
            } catch (const PreconditionError& e) {
                throw ParseError(e.what());
            }
        }
        return ExplicitList{std::move(list)};
    }
    throw ParseError("unknown state set variant: " + variant);
}

}  // namespace

std::string serialize_state(const PureState& phi) {
    json payload;
    payload["amplitudes"] = amplitudes_to_json(phi);
    return dump_document("state", std::move(payload));
}

std::string serialize_density(const DensityMatrix& rho) {
    json payload;
    payload["matrix"] = matrix_to_json(rho.mat());
    return dump_document("density", std::move(payload));
}

std::string serialize_channel(const MixedUnitaryChannel& channel) {
    return dump_document("channel", channel_to_json(channel));
}

std::string serialize_pqc(const PQCInstance& inst) {
    json payload;
    payload["states"] = states_to_json(inst.states());
    payload["channel"] = channel_to_json(inst.channel());
    payload["target"] = matrix_to_json(inst.target().mat());
    return dump_document("pqc", std::move(payload));
}

std::string serialize_transcript(const Transcript& transcript) {
    json payload;
    payload["key_index"] = transcript.key_index;
    payload["plaintext"] = matrix_to_json(transcript.plaintext.mat());
    payload["ciphertext"] = matrix_to_json(transcript.ciphertext.mat());
    payload["recovered"] = matrix_to_json(transcript.recovered.mat());
    payload["round_trip_deviation"] = transcript.round_trip_deviation;
    payload["kind"] = "transcript";
    payload["version"] = kVersion;
    return payload.dump(kIndent) + "\n";
}

PureState parse_state(const std::string& text) {
    const json doc = parse_document(text, "state");
    if (!doc.contains("amplitudes")) throw ParseError("state document needs amplitudes");
    try {
        return state_from_json(doc["amplitudes"]);
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

DensityMatrix parse_density(const std::string& text) {
    const json doc = parse_document(text, "density");
    if (!doc.contains("matrix")) throw ParseError("density document needs a matrix");
    try {
        return DensityMatrix(matrix_from_json(doc["matrix"]));
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

MixedUnitaryChannel parse_channel(const std::string& text) {
    return channel_from_json(parse_document(text, "channel"));
}

PQCInstance parse_pqc(const std::string& text) {
    const json doc = parse_document(text, "pqc");
    if (!doc.contains("states") || !doc.contains("channel") || !doc.contains("target"))
        throw ParseError("pqc document needs states, channel and target");
    try {
        return PQCInstance(states_from_json(doc["states"]), channel_from_json(doc["channel"]),
                           DensityMatrix(matrix_from_json(doc["target"])));
    } catch (const ParseError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace qotp
