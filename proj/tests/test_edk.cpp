#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "lcsk/edk.hpp"
#include "lcsk/lcsk.hpp"
#include "lcsk/oracle.hpp"
#include "test_util.hpp"

using namespace lcsk;

namespace {

// Full validity check for a traceback result against its inputs.
void require_sound(std::string_view a, std::string_view b, std::size_t k,
                   const EdkResult& r) {
    std::size_t edits = 0;
    std::vector<KMatchSpan> chain;
    for (const EditOp& op : r.script) {
        switch (op.kind) {
            case EditKind::Insert:
                REQUIRE(op.b_pos.has_value());
                REQUIRE_FALSE(op.a_pos.has_value());
                ++edits;
                break;
            case EditKind::Delete:
                REQUIRE(op.a_pos.has_value());
                REQUIRE_FALSE(op.b_pos.has_value());
                ++edits;
                break;
            case EditKind::Substitute:
                REQUIRE(op.a_pos.has_value());
                REQUIRE(op.b_pos.has_value());
                ++edits;
                break;
            case EditKind::KMatch:
                REQUIRE(op.len == k);
                chain.push_back(KMatchSpan{*op.a_pos, *op.b_pos, op.len});
                break;
        }
    }
    REQUIRE(edits == r.distance);
    REQUIRE(is_valid_chain(a, b, k, chain));
    REQUIRE(script_transforms(a, b, r.script));
}

}  // namespace

TEST_CASE("edk_score known values") {
    CHECK(edk_score("CTGCTTTG", "CTTGCTTT", 2, OpsMode::Full) == 3);
    CHECK(edk_score("TGCGTGTG", "GTTGTGCC", 2, OpsMode::Full) == 6);
    CHECK(edk_score("", "CTT", 1, OpsMode::Full) == 3);
    CHECK(edk_score("", "CTT", 4, OpsMode::Full) == 3);
    CHECK(edk_score("ABAB", "ABAB", 2, OpsMode::Full) == 0);
    CHECK(edk_score("TGCGTGTG", "GTTGTGCC", 2, OpsMode::IndelOnly) == 8);
}

TEST_CASE("golden distance table over all prefix pairs") {
    const std::string a = "CTGCTTTG", b = "CTTGCTTT";
    // full ED2 table for the pair, rows = prefixes of a, cols = prefixes of b
    const std::size_t want[9][9] = {
        {0, 1, 2, 3, 4, 5, 6, 7, 8},
        {1, 1, 2, 3, 4, 5, 6, 7, 8},
        {2, 2, 0, 1, 2, 3, 4, 5, 6},
        {3, 3, 1, 1, 2, 3, 4, 5, 6},
        {4, 4, 2, 2, 2, 1, 2, 3, 4},
        {5, 5, 3, 3, 3, 2, 2, 3, 4},
        {6, 6, 4, 4, 4, 3, 3, 1, 2},
        {7, 7, 5, 5, 5, 4, 4, 2, 2},
        {8, 8, 6, 6, 4, 5, 5, 3, 3},
    };
    for (std::size_t i = 0; i <= a.size(); ++i) {
        for (std::size_t j = 0; j <= b.size(); ++j) {
            INFO("i=" << i << " j=" << j);
            CHECK(edk_score(std::string_view(a).substr(0, i),
                            std::string_view(b).substr(0, j), 2,
                            OpsMode::Full) == want[i][j]);
        }
    }
}

TEST_CASE("edk_score validates k") {
    CHECK_THROWS_AS(edk_score("A", "A", 0, OpsMode::Full),
                    std::invalid_argument);
}

TEST_CASE("identity with lcsk in indel-only mode") {
    std::mt19937 rng(47);
    for (int t = 0; t < 400; ++t) {
        const std::string a = testutil::random_string(rng, 24, "ACGT");
        const std::string b = testutil::random_string(rng, 24, "ACGT");
        for (std::size_t k = 1; k <= 4; ++k) {
            const std::size_t l = lcsk_score(a, b, k);
            CHECK(edk_score(a, b, k, OpsMode::IndelOnly) ==
                  edk_from_lcsk_identity(a.size(), b.size(), k, l));
        }
    }
}

TEST_CASE("edk_from_lcsk_identity arithmetic") {
    CHECK(edk_from_lcsk_identity(8, 8, 2, 2) == 8);
    CHECK(edk_from_lcsk_identity(12, 12, 3, 4) == 0);
    CHECK(edk_from_lcsk_identity(5, 7, 3, 1) == 6);
    CHECK_THROWS_AS(edk_from_lcsk_identity(2, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("edk bounds and symmetry") {
    std::mt19937 rng(53);
    for (int t = 0; t < 300; ++t) {
        const std::string a = testutil::random_string(rng, 20, "ACG");
        const std::string b = testutil::random_string(rng, 20, "ACG");
        for (std::size_t k = 1; k <= 3; ++k) {
            const std::size_t full = edk_score(a, b, k, OpsMode::Full);
            const std::size_t indel = edk_score(a, b, k, OpsMode::IndelOnly);
            const std::size_t lo =
                a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
            CHECK(full >= lo);
            CHECK(full <= std::max(a.size(), b.size()));
            CHECK(full <= indel);
            CHECK(full == edk_score(b, a, k, OpsMode::Full));
            CHECK(indel == edk_score(b, a, k, OpsMode::IndelOnly));
        }
    }
}

TEST_CASE("self distance is zero exactly when k divides the length") {
    std::mt19937 rng(59);
    for (int t = 0; t < 200; ++t) {
        const std::string a = testutil::random_string(rng, 16, "ACGT");
        for (std::size_t k = 1; k <= 5; ++k) {
            const std::size_t d = edk_score(a, a, k, OpsMode::Full);
            const std::size_t residue = a.size() % k;
            CHECK((d == 0) == (residue == 0));
            CHECK(d >= residue);
            CHECK(d <= 2 * residue);
            if (a.size() <= 12)
                CHECK(d == oracle::brute_edk(a, a, k, OpsMode::Full));
        }
    }
}

TEST_CASE("k=1 reduces to the classic distances") {
    std::mt19937 rng(61);
    for (int t = 0; t < 300; ++t) {
        const std::string a = testutil::random_string(rng, 32, "ACGT");
        const std::string b = testutil::random_string(rng, 32, "ACGT");
        CHECK(edk_score(a, b, 1, OpsMode::Full) ==
              testutil::levenshtein_ref(a, b));
        CHECK(edk_score(a, b, 1, OpsMode::IndelOnly) ==
              a.size() + b.size() - 2 * oracle::classic_lcs(a, b));
    }
}

TEST_CASE("edk_score equals the brute-force reference at k=2") {
    std::mt19937 rng(67);
    for (int t = 0; t < 600; ++t) {
        const std::string a = testutil::random_string(rng, 8, "AC");
        const std::string b = testutil::random_string(rng, 8, "AC");
        INFO("a=" << a << " b=" << b);
        CHECK(edk_score(a, b, 2, OpsMode::Full) ==
              oracle::brute_edk(a, b, 2, OpsMode::Full));
        CHECK(edk_score(a, b, 2, OpsMode::IndelOnly) ==
              oracle::brute_edk(a, b, 2, OpsMode::IndelOnly));
    }
}

TEST_CASE("traceback scripts replay exactly") {
    SECTION("golden pair") {
        const EdkResult r = edk_traceback("CTGCTTTG", "CTTGCTTT", 2, OpsMode::Full);
        CHECK(r.distance == 3);
        require_sound("CTGCTTTG", "CTTGCTTT", 2, r);
    }
    SECTION("exact match is one k-match op") {
        const EdkResult r = edk_traceback("AB", "AB", 2, OpsMode::Full);
        CHECK(r.distance == 0);
        REQUIRE(r.script.size() == 1);
        CHECK(r.script[0].kind == EditKind::KMatch);
        CHECK(*r.script[0].a_pos == 0);
        CHECK(*r.script[0].b_pos == 0);
        CHECK(r.script[0].len == 2);
    }
    SECTION("swapped pair needs two edits") {
        const EdkResult r = edk_traceback("AB", "BA", 2, OpsMode::Full);
        CHECK(r.distance == 2);
        require_sound("AB", "BA", 2, r);
    }
    SECTION("empty sides") {
        const EdkResult r = edk_traceback("", "CTT", 2, OpsMode::Full);
        CHECK(r.distance == 3);
        CHECK(r.script.size() == 3);
        require_sound("", "CTT", 2, r);
        const EdkResult d = edk_traceback("CTT", "", 2, OpsMode::Full);
        CHECK(d.distance == 3);
        require_sound("CTT", "", 2, d);
    }
}

TEST_CASE("traceback distance matches the banded score everywhere") {
    std::mt19937 rng(71);
    for (int t = 0; t < 800; ++t) {
        const std::string a = testutil::random_string(rng, 18, t % 2 ? "AC" : "ACGT");
        const std::string b = testutil::random_string(rng, 18, t % 2 ? "AC" : "ACGT");
        const std::size_t k = 1 + rng() % 4;
        const OpsMode mode = rng() % 2 ? OpsMode::Full : OpsMode::IndelOnly;
        const EdkResult r = edk_traceback(a, b, k, mode);
        INFO("a=" << a << " b=" << b << " k=" << k
                  << " mode=" << (mode == OpsMode::Full ? "full" : "indel"));
        CHECK(r.distance == edk_score(a, b, k, mode));
        require_sound(a, b, k, r);
    }
}

TEST_CASE("replay rejects malformed scripts") {
    const std::vector<EditOp> bad{{EditKind::Delete, 1, std::nullopt, 1}};
    CHECK_THROWS_AS(replay_edit_script("AB", "", bad), std::invalid_argument);
    CHECK_FALSE(script_transforms("AB", "", bad));
    // script that stops short of covering A
    const std::vector<EditOp> partial{{EditKind::Delete, 0, std::nullopt, 1}};
    CHECK_FALSE(script_transforms("AB", "", partial));
}

TEST_CASE("all internal edk cell-type combinations agree") {
    std::mt19937 rng(89);
    for (int t = 0; t < 200; ++t) {
        std::string a = testutil::random_string(rng, 30, "ACG");
        std::string b = testutil::random_string(rng, 30, "ACG");
        if (a.size() < b.size()) std::swap(a, b);
        const std::size_t k = 1 + rng() % 3;
        const OpsMode mode = rng() % 2 ? OpsMode::Full : OpsMode::IndelOnly;
        const auto narrow = detail::edk_score_impl<std::uint16_t, std::uint8_t>(
            a, b, k, mode, nullptr);
        CHECK(narrow == detail::edk_score_impl<std::int32_t, std::int32_t>(
                            a, b, k, mode, nullptr));
        CHECK(narrow == detail::edk_score_impl<std::uint16_t, std::int32_t>(
                            a, b, k, mode, nullptr));
        CHECK(narrow == detail::edk_score_impl<std::int32_t, std::uint8_t>(
                            a, b, k, mode, nullptr));
        CHECK(narrow == edk_score(a, b, k, mode));
    }
}

TEST_CASE("wide k uses the wide dcount path") {
    const std::string x(900, 'G');
    CHECK(edk_score(x, x, 300, OpsMode::Full) == 0);
    CHECK(edk_score(x, x, 450, OpsMode::Full) == 0);
    CHECK(edk_score(x, x, 299, OpsMode::Full) == 900 % 299);
}

TEST_CASE("edk score-only stats stay within the banded budget") {
    DpStats stats;
    const std::string a(300, 'A');
    const std::string b(90, 'C');
    edk_score(a, b, 5, OpsMode::Full, &stats);
    CHECK(stats.cells <= (5 + 3) * (b.size() + 1));
}
