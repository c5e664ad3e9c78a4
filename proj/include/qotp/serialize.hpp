#pragma once

#include <string>

#include "qotp/protocol.hpp"

namespace qotp {

/// Thrown for unparseable or malformed documents; exit code 2 in the CLI.
class ParseError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Canonical JSON documents, version 1. Complex numbers are [re, im] pairs,
/// matrices are row-major arrays of rows, and Pauli-string channel terms use
/// the compact {"pauli": "IXYZ...", "p": ...} form (leftmost letter acts on
/// qubit 1). Serialization is byte-deterministic: sorted keys, two-space
/// indent, shortest round-trip number formatting (<= 17 significant digits).
std::string serialize_state(const PureState& phi);
std::string serialize_density(const DensityMatrix& rho);
std::string serialize_channel(const MixedUnitaryChannel& channel);
std::string serialize_pqc(const PQCInstance& inst);
std::string serialize_transcript(const Transcript& transcript);

PureState parse_state(const std::string& text);
DensityMatrix parse_density(const std::string& text);
MixedUnitaryChannel parse_channel(const std::string& text);
PQCInstance parse_pqc(const std::string& text);

}  // namespace qotp
