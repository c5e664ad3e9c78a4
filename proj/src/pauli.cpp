#include "qotp/pauli.hpp"

namespace qotp {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

// n with dim == 2^n, or npos for non-powers-of-two
std::size_t log2_exact(std::size_t dim) {
    std::size_t n = 0;
    std::size_t v = 1;
    while (v < dim) {
        v <<= 1;
        ++n;
    }
    return v == dim ? n : static_cast<std::size_t>(-1);
}

constexpr char kLetters[5] = "IXYZ";

}  // namespace

const ComplexMatrix& sigma(int k) {
    static const ComplexMatrix table[4] = {
        ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}),
        ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
        ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}),
        ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
    };
    require(k >= 0 && k < 4, "pauli symbol out of range");
    return table[k];
}

PauliString::PauliString(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    require(!symbols_.empty(), "pauli string needs at least one qubit");
    for (std::uint8_t s : symbols_) require(s < 4, "pauli symbol out of range");
}

PauliString PauliString::from_index(std::size_t index, std::size_t n) {
    require(n >= 1, "pauli string needs at least one qubit");
    std::vector<std::uint8_t> symbols(n);
    for (std::size_t i = n; i-- > 0;) {
        symbols[i] = static_cast<std::uint8_t>(index & 3);
        index >>= 2;
    }
    require(index == 0, "pauli index out of range for qubit count");
    return PauliString(std::move(symbols));
}

PauliString PauliString::from_letters(const std::string& letters) {
    std::vector<std::uint8_t> symbols;
    symbols.reserve(letters.size());
    for (char ch : letters) {
        std::uint8_t s = 4;
        for (std::uint8_t k = 0; k < 4; ++k)
            if (ch == kLetters[k]) s = k;
        require(s < 4, "pauli letter must be one of I, X, Y, Z");
        symbols.push_back(s);
    }
    return PauliString(std::move(symbols));
}

std::string PauliString::to_letters() const {
    std::string out;
    out.reserve(n());
    for (std::uint8_t s : symbols_) out.push_back(kLetters[s]);
    return out;
}

std::size_t pauli_index(const PauliString& x) {
    std::size_t index = 0;
    for (std::uint8_t s : x.symbols()) index = (index << 2) | s;
    return index;
}

ComplexMatrix pauli_matrix(const PauliString& x) {
    ComplexMatrix out = sigma(x.symbols()[0]);
    for (std::size_t i = 1; i < x.n(); ++i) out = tensor(out, sigma(x.symbols()[i]));
    return out;
}

PauliCoefficients pauli_decompose(const ComplexMatrix& m) {
    require(m.is_square(), "pauli_decompose requires a square matrix");
    const std::size_t n = log2_exact(m.rows());
    require(n != static_cast<std::size_t>(-1) && n >= 1,
            "pauli_decompose requires a 2^n x 2^n matrix, n >= 1");
    const std::size_t count = std::size_t{1} << (2 * n);
    PauliCoefficients out{n, std::vector<Complex>(count)};
    for (std::size_t idx = 0; idx < count; ++idx)
        out.coeffs[idx] = hs_inner(pauli_matrix(PauliString::from_index(idx, n)), m);
    return out;
}

ComplexMatrix pauli_reconstruct(const PauliCoefficients& c) {
    require(c.n >= 1, "pauli coefficients need n >= 1");
    const std::size_t count = std::size_t{1} << (2 * c.n);
    require(c.coeffs.size() == count, "pauli coefficient vector must have length 4^n");
    const std::size_t dim = std::size_t{1} << c.n;
    ComplexMatrix out(dim, dim);
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (c.coeffs[idx] == Complex(0.0, 0.0)) continue;
        out = out + (c.coeffs[idx] * pauli_matrix(PauliString::from_index(idx, c.n)));
    }
    return out;
}

}  // namespace qotp
