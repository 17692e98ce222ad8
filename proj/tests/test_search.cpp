#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pmspec/constructions.hpp"
#include "pmspec/search.hpp"

using namespace pmspec;

namespace {

PmOneMatrix jm2i4() {
    return PmOneMatrix(IntSymMatrix(mat_sub(IntMatrix::ones(4), mat_scale(IntMatrix::identity(4), 2))));
}

PmOneMatrix h2() { return PmOneMatrix(IntSymMatrix::from_rows({{1, 1}, {1, -1}})); }

PmOneMatrix random_pm(i64 n, std::mt19937_64& rng) {
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = i; j < n; ++j) m(i, j) = m(j, i) = (rng() & 1) ? 1 : -1;
    return PmOneMatrix(IntSymMatrix(std::move(m)));
}

std::pair<std::vector<i64>, std::vector<i64>> random_signed_perm(i64 n, std::mt19937_64& rng) {
    std::vector<i64> perm(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<i64> signs(static_cast<std::size_t>(n));
    for (auto& s : signs) s = (rng() & 1) ? 1 : -1;
    return {perm, signs};
}

} // namespace

TEST(FeasibilityFilter, OddNonSquareObstructed) {
    for (i64 n : {3, 4, 6, 9, 12}) {
        const Feasibility f = feasibility_filter(3, n);
        EXPECT_FALSE(f.feasible) << "n=" << n;
        EXPECT_NE(f.reason.find("odd"), std::string::npos);
    }
    EXPECT_FALSE(feasibility_filter(5, 10).feasible);
    EXPECT_FALSE(feasibility_filter(7, 14).feasible);
}

TEST(FeasibilityFilter, DivisibilityScreen) {
    EXPECT_FALSE(feasibility_filter(6, 8).feasible);  // 6 does not divide 64
    EXPECT_TRUE(feasibility_filter(6, 6).feasible);   // forced trace 0
    EXPECT_TRUE(feasibility_filter(6, 12).feasible);
    EXPECT_FALSE(feasibility_filter(2, 3).feasible);  // 2 does not divide 9
    EXPECT_TRUE(feasibility_filter(2, 2).feasible);
    EXPECT_FALSE(feasibility_filter(4, 2).feasible);  // order below k
}

TEST(FeasibilityFilter, ConstraintsRecorded) {
    const Feasibility sq = feasibility_filter(4, 4);
    ASSERT_TRUE(sq.feasible);
    EXPECT_NE(sq.constraints[0].find("integer"), std::string::npos);
    const Feasibility ns = feasibility_filter(6, 6);
    ASSERT_TRUE(ns.feasible);
    EXPECT_NE(ns.constraints[0].find("trace(B) = 0"), std::string::npos);
}

TEST(SearchSk, FindsHadamardOrderTwo) {
    SearchConfig cfg;
    cfg.k = 2;
    cfg.order = 2;
    cfg.budget = 1000;
    const SearchResult res = search_sk(cfg);
    ASSERT_EQ(res.status, SearchStatus::found);
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_TRUE(sk_certify(*res.witness, 2).is_member());
    // the witness is a signed-permutation representative of the order-2 Hadamard matrix
    EXPECT_EQ(canonical_form(*res.witness), canonical_form(h2()));
}

TEST(SearchSk, FindsOrderFourHadamardFast) {
    SearchConfig cfg;
    cfg.k = 4;
    cfg.order = 4;
    cfg.budget = 10'000;
    const SearchResult res = search_sk(cfg);
    ASSERT_EQ(res.status, SearchStatus::found);
    EXPECT_LE(res.nodes_expanded, 10'000);
    EXPECT_TRUE(sk_certify(*res.witness, 4).is_member());
}

TEST(SearchSk, RefusesObstructedConfigurations) {
    SearchConfig cfg;
    cfg.k = 3;
    cfg.order = 3;
    EXPECT_THROW(search_sk(cfg), precondition_error);
    cfg.order = 6;
    EXPECT_THROW(search_sk(cfg), precondition_error);
}

TEST(SearchSk, OrderSixClassSixExhausts) {
    SearchConfig cfg;
    cfg.k = 6;
    cfg.order = 6;
    cfg.budget = 10'000'000;
    const SearchResult res = search_sk(cfg);
    EXPECT_EQ(res.status, SearchStatus::exhausted);
    EXPECT_LT(res.nodes_expanded, 10'000'000);
    EXPECT_FALSE(res.obstructions_applied.empty());
}

// Reduction soundness: found/exhausted statuses agree with the reductions on
// and off on small configurations.
TEST(SearchSk, ReductionPreservesOutcome) {
    struct Case {
        i64 k, order;
        SearchStatus want;
    };
    for (const Case c : {Case{2, 2, SearchStatus::found}, Case{2, 4, SearchStatus::found},
                         Case{4, 4, SearchStatus::found}, Case{6, 6, SearchStatus::exhausted},
                         Case{1, 2, SearchStatus::found}}) {
        for (bool reduce : {true, false}) {
            SearchConfig cfg;
            cfg.k = c.k;
            cfg.order = c.order;
            cfg.budget = 30'000'000;
            cfg.symmetry_reduction = reduce;
            const SearchResult res = search_sk(cfg);
            EXPECT_EQ(res.status, c.want) << "k=" << c.k << " order=" << c.order << " reduce=" << reduce;
            if (res.witness) EXPECT_TRUE(sk_certify(*res.witness, c.k).is_member());
        }
    }
}

TEST(SearchSk, BudgetAndResumeAreDeterministic) {
    SearchConfig full;
    full.k = 4;
    full.order = 4;
    full.budget = 1'000'000;
    const SearchResult complete = search_sk(full);
    ASSERT_EQ(complete.status, SearchStatus::found);

    SearchConfig clipped = full;
    clipped.budget = 20;
    const SearchResult first = search_sk(clipped);
    ASSERT_EQ(first.status, SearchStatus::budget_exceeded);
    EXPECT_EQ(first.nodes_expanded, 20);
    ASSERT_FALSE(first.resume_token.empty());

    SearchConfig resumed = full;
    resumed.resume_token = first.resume_token;
    const SearchResult second = search_sk(resumed);
    ASSERT_EQ(second.status, SearchStatus::found);
    EXPECT_EQ(second.nodes_expanded, complete.nodes_expanded);
    EXPECT_EQ(*second.witness, *complete.witness);
}

TEST(SearchSk, ResumeTokenValidation) {
    SearchConfig cfg;
    cfg.k = 4;
    cfg.order = 4;
    cfg.resume_token = "v1 2 2 1 5 d ";
    EXPECT_THROW(search_sk(cfg), precondition_error); // mismatched configuration
    cfg.resume_token = "garbage";
    EXPECT_THROW(search_sk(cfg), precondition_error);
}

TEST(CanonicalForm, OrbitEquality) {
    const PmOneMatrix h = h2();
    const PmOneMatrix moved = signed_permute(h, {1, 0}, {-1, 1});
    EXPECT_EQ(canonical_form(h), canonical_form(moved));
}

TEST(CanonicalForm, IdempotentOnRandomMatrices) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 100; ++rep) {
        const PmOneMatrix a = random_pm(6, rng);
        const PmOneMatrix c = canonical_form(a);
        EXPECT_EQ(canonical_form(c), c);
    }
}

TEST(CanonicalForm, OrbitCollapsesToOneRepresentative) {
    std::mt19937_64 rng(67);
    const PmOneMatrix base = jm2i4();
    const PmOneMatrix want = canonical_form(base);
    for (int rep = 0; rep < 50; ++rep) {
        const auto [perm, signs] = random_signed_perm(4, rng);
        EXPECT_EQ(canonical_form(signed_permute(base, perm, signs)), want);
    }
}

TEST(CanonicalForm, OrderCap) {
    std::mt19937_64 rng(71);
    const PmOneMatrix big = random_pm(17, rng);
    EXPECT_THROW(canonical_form(big), precondition_error);
}
