#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vqoa {

struct PauliTerm {
    double coeff = 0.0;
    std::string ops;  // one of I, X, Y, Z per qubit; qubit 0 first
};

/// Real-weighted sum of Pauli strings (a Hermitian operator).
struct PauliSum {
    int n = 0;
    std::vector<PauliTerm> terms;

    bool diagonal() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// One "<coefficient> <pauli string>" per line; '#' starts a comment.
PauliSum parse_pauli_text(std::string_view text);
std::string to_text(const PauliSum& h);

}  // namespace vqoa
