#include "vqoa/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace vqoa {

bool PauliSum::diagonal() const {
    return std::all_of(terms.begin(), terms.end(), [](const PauliTerm& t) {
        return t.ops.find_first_of("XY") == std::string::npos;
    });
}

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

PauliSum parse_pauli_text(std::string_view text) {
    PauliSum h;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos)
            throw ParseError(line_no, "expected '<coefficient> <pauli string>'");
        auto coeff_text = line.substr(0, split);
        if (coeff_text.size() > 1 && coeff_text[0] == '+') coeff_text.remove_prefix(1);
        const auto ops = trim(line.substr(split));

        double coeff = 0.0;
        const auto [ptr, ec] = std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
        if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size() || !std::isfinite(coeff))
            throw ParseError(line_no, "coefficient '" + std::string(coeff_text) + "' is not a finite real number");
        if (ops.empty() || ops.find_first_not_of("IXYZ") != std::string_view::npos)
            throw ParseError(line_no, "pauli string '" + std::string(ops) + "' must use only I, X, Y, Z");

        if (h.terms.empty()) {
            h.n = static_cast<int>(ops.size());
        } else if (static_cast<int>(ops.size()) != h.n) {
            throw ParseError(line_no, "pauli string has length " + std::to_string(ops.size()) +
                                          ", expected " + std::to_string(h.n));
        }
        h.terms.push_back({coeff, std::string(ops)});
    }
    if (h.terms.empty()) throw ParseError(line_no, "no terms found");
    return h;
}

std::string to_text(const PauliSum& h) {
    std::ostringstream os;
    os.precision(17);
    for (const auto& t : h.terms) os << t.coeff << ' ' << t.ops << '\n';
    return os.str();
}

}  // namespace vqoa
