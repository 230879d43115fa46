#include "vqoa/pauli.hpp"

#include <gtest/gtest.h>

using namespace vqoa;

TEST(PauliParse, basic) {
    const auto h = parse_pauli_text("# H2-like\n-1.05 II\n0.39 ZI  # comment\n+0.18 XX\n\n-0.01 YY\n");
    ASSERT_EQ(h.n, 2);
    ASSERT_EQ(h.terms.size(), 4u);
    EXPECT_EQ(h.terms[0].coeff, -1.05);
    EXPECT_EQ(h.terms[1].ops, "ZI");
    EXPECT_EQ(h.terms[2].coeff, 0.18);
    EXPECT_FALSE(h.diagonal());
}

TEST(PauliParse, diagonal_detection) {
    EXPECT_TRUE(parse_pauli_text("1 ZZI\n2 IIZ\n").diagonal());
    EXPECT_FALSE(parse_pauli_text("1 ZYI\n").diagonal());
}

TEST(PauliParse, errors_carry_line_numbers) {
    auto line_of = [](const std::string& text) {
        try {
            parse_pauli_text(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("1.0 ZZ\n0.5 Z\n"), 2);
    EXPECT_EQ(line_of("# c\n\nabc ZZ\n"), 3);
    EXPECT_EQ(line_of("1.0 ZQ\n"), 1);
    EXPECT_EQ(line_of("1.0\n"), 1);
    EXPECT_EQ(line_of("nan Z\n"), 1);
    EXPECT_NE(line_of("# nothing\n"), -1);
}

TEST(PauliParse, text_round_trip) {
    const auto h = parse_pauli_text("0.1234567890123 XYZ\n-2 IIZ\n");
    const auto back = parse_pauli_text(to_text(h));
    ASSERT_EQ(back.terms.size(), h.terms.size());
    for (std::size_t i = 0; i < h.terms.size(); ++i) {
        EXPECT_EQ(back.terms[i].coeff, h.terms[i].coeff);
        EXPECT_EQ(back.terms[i].ops, h.terms[i].ops);
    }
}
