#include <gtest/gtest.h>

#include <vector>

#include "pmspec/latin.hpp"

using namespace pmspec;

namespace {
std::vector<i64> flat(const LatinSquare& l) { return l.cells; }
} // namespace

TEST(BackCirculant, SmallGoldenValues) {
    EXPECT_EQ(flat(back_circulant(1)), (std::vector<i64>{1}));
    EXPECT_EQ(flat(back_circulant(2)), (std::vector<i64>{1, 2, 2, 1}));
    EXPECT_EQ(flat(back_circulant(3)), (std::vector<i64>{3, 1, 2, 1, 2, 3, 2, 3, 1}));
}

TEST(BackCirculant, SymmetricUpToSize64) {
    for (i64 s = 1; s <= 64; ++s) {
        const auto rep = validate(back_circulant(s));
        EXPECT_TRUE(rep.is_latin) << "s=" << s;
        EXPECT_TRUE(rep.is_symmetric) << "s=" << s;
    }
}

TEST(BackCirculant, OddOrderDiagonalHitsEverySymbolOnce) {
    for (i64 s = 1; s <= 63; s += 2) {
        const LatinSquare l = back_circulant(s);
        std::vector<int> seen(static_cast<std::size_t>(s + 1), 0);
        for (i64 i = 0; i < s; ++i) ++seen[static_cast<std::size_t>(l.at(i, i))];
        for (i64 sym = 1; sym <= s; ++sym) EXPECT_EQ(seen[static_cast<std::size_t>(sym)], 1) << "s=" << s;
    }
}

TEST(ConstDiag, GoldenSizeTwoAndFour) {
    EXPECT_EQ(flat(const_diag_symmetric(2)), (std::vector<i64>{2, 1, 1, 2}));
    EXPECT_EQ(flat(const_diag_symmetric(4)),
              (std::vector<i64>{4, 1, 2, 3, 1, 4, 3, 2, 2, 3, 4, 1, 3, 2, 1, 4}));
}

// Size-6 golden values come from evaluating the piecewise formula itself;
// validity (Latin + symmetric + constant diagonal) is the contract.
TEST(ConstDiag, GoldenSizeSix) {
    EXPECT_EQ(flat(const_diag_symmetric(6)),
              (std::vector<i64>{6, 4, 5, 1, 2, 3,
                                4, 6, 1, 2, 3, 5,
                                5, 1, 6, 3, 4, 2,
                                1, 2, 3, 6, 5, 4,
                                2, 3, 4, 5, 6, 1,
                                3, 5, 2, 4, 1, 6}));
    const auto rep = validate(const_diag_symmetric(6));
    EXPECT_TRUE(rep.is_latin);
    EXPECT_TRUE(rep.is_symmetric);
    ASSERT_TRUE(rep.diagonal_constant.has_value());
    EXPECT_EQ(*rep.diagonal_constant, 6);
}

TEST(ConstDiag, ValidForAllEvenSizesUpTo64) {
    for (i64 s = 2; s <= 64; s += 2) {
        const auto rep = validate(const_diag_symmetric(s));
        EXPECT_TRUE(rep.is_latin) << "s=" << s;
        EXPECT_TRUE(rep.is_symmetric) << "s=" << s;
        ASSERT_TRUE(rep.diagonal_constant.has_value()) << "s=" << s;
        EXPECT_EQ(*rep.diagonal_constant, s) << "s=" << s;
    }
}

TEST(ConstDiag, OddSizeImpossible) {
    EXPECT_THROW(const_diag_symmetric(3), precondition_error);
    EXPECT_THROW(const_diag_symmetric(5), precondition_error);
    EXPECT_THROW(const_diag_symmetric(1), precondition_error);
}

TEST(Validate, ReportsBrokenSquares) {
    const auto clean = validate(back_circulant(5));
    EXPECT_TRUE(clean.is_latin);
    EXPECT_TRUE(clean.is_symmetric);
    EXPECT_FALSE(clean.diagonal_constant.has_value());

    LatinSquare broken = back_circulant(4);
    std::swap(broken.at(0, 1), broken.at(0, 2));
    const auto rep = validate(broken);
    EXPECT_FALSE(rep.is_latin);
    EXPECT_FALSE(rep.failures.empty());
}

TEST(Validate, ConstDiagFourReport) {
    const auto rep = validate(const_diag_symmetric(4));
    EXPECT_TRUE(rep.is_latin);
    EXPECT_TRUE(rep.is_symmetric);
    ASSERT_TRUE(rep.diagonal_constant.has_value());
    EXPECT_EQ(*rep.diagonal_constant, 4);
}

TEST(TextDump, MatchesFormat) {
    EXPECT_EQ(to_text(back_circulant(2)), "1 2\n2 1\n");
}

TEST(Preconditions, RejectNonPositiveSize) {
    EXPECT_THROW(back_circulant(0), precondition_error);
}
