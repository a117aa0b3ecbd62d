#include "qcf/pauli.hpp"

#include "qcf/errors.hpp"

namespace qcf {

char to_char(Basis b) {
    switch (b) {
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::Z: return 'Z';
    }
    throw ValidationError("unknown basis");
}

Basis basis_from_char(char c) {
    switch (c) {
    case 'X': return Basis::X;
    case 'Y': return Basis::Y;
    case 'Z': return Basis::Z;
    default: throw ParseError(std::string("unknown basis character \"") + c + "\"");
    }
}

PauliOp to_pauli(Basis b) {
    switch (b) {
    case Basis::X: return PauliOp::X;
    case Basis::Y: return PauliOp::Y;
    case Basis::Z: return PauliOp::Z;
    }
    throw ValidationError("unknown basis");
}

PauliString PauliString::identity(int n) {
    if (n < 1) {
        throw ValidationError("Pauli string needs at least one site");
    }
    PauliString p;
    p.ops.assign(static_cast<std::size_t>(n), PauliOp::I);
    return p;
}

PauliString PauliString::from_string(std::string_view s) {
    PauliString p;
    p.ops.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case 'I': p.ops.push_back(PauliOp::I); break;
        case 'X': p.ops.push_back(PauliOp::X); break;
        case 'Y': p.ops.push_back(PauliOp::Y); break;
        case 'Z': p.ops.push_back(PauliOp::Z); break;
        default:
            throw ParseError(std::string("unknown Pauli letter \"") + c + "\"");
        }
    }
    if (p.ops.empty()) {
        throw ValidationError("empty Pauli string");
    }
    return p;
}

PauliString PauliString::single_site(int n, int site, Basis letter) {
    PauliString p = identity(n);
    if (site < 0 || site >= n) {
        throw ValidationError("Pauli site out of range");
    }
    p.ops[static_cast<std::size_t>(site)] = to_pauli(letter);
    return p;
}

PauliString PauliString::two_site(int n, int i, Basis li, int j, Basis lj) {
    if (i == j) {
        throw ValidationError("two-site Pauli needs distinct sites");
    }
    PauliString p = single_site(n, i, li);
    if (j < 0 || j >= n) {
        throw ValidationError("Pauli site out of range");
    }
    p.ops[static_cast<std::size_t>(j)] = to_pauli(lj);
    return p;
}

int PauliString::support_size() const {
    int count = 0;
    for (PauliOp op : ops) {
        if (op != PauliOp::I) {
            ++count;
        }
    }
    return count;
}

std::string PauliString::str() const {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(ops.size());
    for (PauliOp op : ops) {
        s.push_back(kLetters[static_cast<int>(op)]);
    }
    return s;
}

} // namespace qcf
