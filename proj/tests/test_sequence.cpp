#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "lcsk/sequence.hpp"
#include "test_util.hpp"

using namespace lcsk;

TEST_CASE("k_match detects equal k-length windows") {
    const std::string a = "TGCGTGTG";
    const std::string b = "GTTGTGCC";
    CHECK(k_match(a, b, 3, 0, 2));  // GT at a[3..5), b[0..2)
    CHECK_FALSE(k_match(a, b, 0, 0, 2));

    const std::string x = "GATTACA";
    CHECK(k_match(x, x, 0, 0, x.size()));

    // no common 2-gram: adjacent pairs never agree
    const std::string p = "GTGGTG", q = "TCCTCC";
    for (std::size_t i = 0; i + 2 <= p.size(); ++i)
        for (std::size_t j = 0; j + 2 <= q.size(); ++j)
            CHECK_FALSE(k_match(p, q, i, j, 2));
}

TEST_CASE("k_match rejects out-of-range windows") {
    const std::string a = "ACGT", b = "AC";
    CHECK_THROWS_AS(k_match(a, b, 3, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(k_match(a, b, 0, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(k_match(a, b, 0, 0, 3), std::out_of_range);
    CHECK_THROWS_AS(k_match(a, b, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("k_match is symmetric in its sides") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::string a = testutil::random_string(rng, 16, "ACGT");
        const std::string b = testutil::random_string(rng, 16, "ACGT");
        for (std::size_t k = 1; k <= 3; ++k) {
            if (a.size() < k || b.size() < k) continue;
            for (std::size_t i = 0; i + k <= a.size(); ++i)
                for (std::size_t j = 0; j + k <= b.size(); ++j)
                    CHECK(k_match(a, b, i, j, k) == k_match(b, a, j, i, k));
        }
    }
}

TEST_CASE("dcount_cell follows the diagonal recurrence") {
    CHECK(dcount_cell(0, 'C', 'C') == 1);
    CHECK(dcount_cell(5, 'T', 'T') == 6);
    CHECK(dcount_cell(3, 'G', 'T') == 0);
}

TEST_CASE("dcount rows agree with k_match everywhere") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const std::string a = testutil::random_string(rng, 32, "AC");
        const std::string b = testutil::random_string(rng, 32, "AC");
        const std::size_t n = a.size(), m = b.size();
        // full dcount table by the row recurrence
        std::vector<std::vector<std::int32_t>> dc(
            n + 1, std::vector<std::int32_t>(m + 1, 0));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                dc[i][j] = dcount_cell(dc[i - 1][j - 1], a[i - 1], b[j - 1]);

        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                CHECK(dc[i][j] <= static_cast<std::int32_t>(std::min(i, j)));

        for (std::size_t k = 1; k <= 4; ++k) {
            if (n < k || m < k) continue;
            for (std::size_t i = 0; i + k <= n; ++i)
                for (std::size_t j = 0; j + k <= m; ++j)
                    CHECK(k_match(a, b, i, j, k) ==
                          (dc[i + k][j + k] >= static_cast<std::int32_t>(k)));
        }
    }
}

TEST_CASE("golden dcount grid for the three-pair example") {
    const std::string a = "CTGCTTTG", b = "CTTGCTTT";
    const std::int32_t want[8][8] = {
        {1, 0, 0, 0, 1, 0, 0, 0},
        {0, 2, 1, 0, 0, 2, 1, 1},
        {0, 0, 0, 2, 0, 0, 0, 0},
        {1, 0, 0, 0, 3, 0, 0, 0},
        {0, 2, 1, 0, 0, 4, 1, 1},
        {0, 1, 3, 0, 0, 1, 5, 2},
        {0, 1, 2, 0, 0, 1, 2, 6},
        {0, 0, 0, 3, 0, 0, 0, 0},
    };
    std::vector<std::vector<std::int32_t>> dc(
        a.size() + 1, std::vector<std::int32_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            dc[i][j] = dcount_cell(dc[i - 1][j - 1], a[i - 1], b[j - 1]);
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j) {
            INFO("i=" << i << " j=" << j);
            CHECK(dc[i][j] == want[i - 1][j - 1]);
        }
}

TEST_CASE("normalize folds case only when asked") {
    CHECK(normalize("acgt", {.uppercase = true}).str() == "ACGT");
    CHECK(normalize("ACGT", {.uppercase = false}).str() == "ACGT");
    CHECK(normalize("", {}).size() == 0);
    // non-letters pass through untouched
    CHECK(normalize("ac-9t\n", {.uppercase = true}).str() == "AC-9T\n");
}

TEST_CASE("sequence keeps id and bytes") {
    const Sequence s("s1", "TGCGTGTG");
    CHECK(s.id() == "s1");
    CHECK(s.size() == 8);
    CHECK(s[0] == 'T');
    const std::string_view view = s;
    CHECK(view == "TGCGTGTG");
}

TEST_CASE("params validate k") {
    CHECK(Params(3).k == 3);
    CHECK_THROWS_AS(Params(0), std::invalid_argument);
}

TEST_CASE("span_is_valid checks bounds and equality") {
    const std::string a = "TGCGTGTG", b = "GTTGTGCC";
    CHECK(span_is_valid(a, b, KMatchSpan{3, 0, 2}));
    CHECK_FALSE(span_is_valid(a, b, KMatchSpan{0, 0, 2}));
    CHECK_FALSE(span_is_valid(a, b, KMatchSpan{7, 0, 2}));
    CHECK_FALSE(span_is_valid(a, b, KMatchSpan{0, 0, 0}));
}
