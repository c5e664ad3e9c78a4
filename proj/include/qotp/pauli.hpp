#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qotp/complex_matrix.hpp"

namespace qotp {

/// One of the four single-qubit Paulis sigma_0..sigma_3 (I, X, Y, Z).
const ComplexMatrix& sigma(int k);

/// n-qubit Pauli label x in {0,1,2,3}^n; entry i names the Pauli acting on
/// qubit i+1. Indexing is base-4 big-endian: qubit 1 is the most significant
/// digit, fixed project-wide.
class PauliString {
public:
    explicit PauliString(std::vector<std::uint8_t> symbols);

    /// Inverse of pauli_index for a given qubit count.
    static PauliString from_index(std::size_t index, std::size_t n);

    /// Letters I,X,Y,Z map to 0,1,2,3; leftmost letter is qubit 1.
    static PauliString from_letters(const std::string& letters);
    std::string to_letters() const;

    std::size_t n() const { return symbols_.size(); }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    bool operator==(const PauliString& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::uint8_t> symbols_;
};

std::size_t pauli_index(const PauliString& x);

/// The 2^n x 2^n matrix sigma_{x_1} (x) ... (x) sigma_{x_n}.
ComplexMatrix pauli_matrix(const PauliString& x);

/// Coefficients of an operator in the orthonormal Pauli basis; entry at
/// pauli_index(x) is hs_inner(pauli_matrix(x), M).
struct PauliCoefficients {
    std::size_t n = 0;
    std::vector<Complex> coeffs;  // length 4^n
};

/// Requires a 2^n x 2^n input. Parseval holds: sum |coeffs|^2 == hs_norm(M)^2.
PauliCoefficients pauli_decompose(const ComplexMatrix& m);

/// sum_x coeffs[x] * pauli_matrix(x); round-trips pauli_decompose.
ComplexMatrix pauli_reconstruct(const PauliCoefficients& c);

}  // namespace qotp
