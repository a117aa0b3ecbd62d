#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcf {

// Measurement basis for one qubit; doubles as a non-identity Pauli letter.
enum class Basis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char to_char(Basis b);
Basis basis_from_char(char c);

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliString {
    std::vector<PauliOp> ops;

    static PauliString identity(int n);
    // e.g. "IZZY", character i addressing qubit i.
    static PauliString from_string(std::string_view s);
    static PauliString single_site(int n, int site, Basis letter);
    static PauliString two_site(int n, int i, Basis li, int j, Basis lj);

    int n() const { return static_cast<int>(ops.size()); }
    int support_size() const;
    std::string str() const;
};

PauliOp to_pauli(Basis b);

} // namespace qcf
