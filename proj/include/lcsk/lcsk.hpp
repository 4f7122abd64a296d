#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "lcsk/sequence.hpp"

// LCSk: the maximal number of common k-length substrings appearing in the
// same order in both inputs, no two of them overlapping within a sequence.
// Score table cell (r, c), r,c >= 1, covers the prefixes A[0 .. r+k-1) and
// B[0 .. c+k-1); the recurrence is
//
//   score(r, c) = max( score(r, c-1),
//                      score(r-1, c),
//                      score(r-k, c-k) + [k-match starts at (r-1, c-1)] )
//
// with zero boundaries. The k-match test is answered by the diagonal
// counter: a k-match ends at symbol cell (d, e) iff dcount[d][e] >= k, so
// score row r is filled as soon as dcount row d = r + k - 1 is available.

namespace lcsk {

// One table cell: the score plus at most one predecessor, the start pair
// (0-based) of the last k-match of some optimal chain for this cell.
// Retaining a single predecessor is enough: equal-length predecessors are
// interchangeable for any extension, so ties can be broken arbitrarily.
struct LcskCell {
    std::int32_t score = 0;
    std::int32_t pred_x = -1;
    std::int32_t pred_y = -1;

    bool has_pred() const { return pred_x >= 0; }
};

// Combines the three finalized source cells into the current cell.
// (cur_x, cur_y) is the 0-based start pair of the k-match that would begin
// at this cell. Sources with a strictly smaller score contribute nothing;
// among max-scoring sources the predecessor is taken in the fixed order
// diagonal k-match > left > up, which keeps tracebacks deterministic.
inline LcskCell update_pred(std::size_t cur_x, std::size_t cur_y,
                            const LcskCell& left, const LcskCell& up,
                            const LcskCell& diag_k, bool is_k_match) {
    const std::int32_t diag_score = diag_k.score + (is_k_match ? 1 : 0);
    LcskCell out;
    out.score = std::max({left.score, up.score, diag_score});
    if (out.score == 0) return out;
    if (is_k_match && diag_score == out.score) {
        out.pred_x = static_cast<std::int32_t>(cur_x);
        out.pred_y = static_cast<std::int32_t>(cur_y);
    } else if (left.score == out.score) {
        out.pred_x = left.pred_x;
        out.pred_y = left.pred_y;
    } else {
        out.pred_x = up.pred_x;
        out.pred_y = up.pred_y;
    }
    return out;
}

// Score plus the witness chain realizing it.
struct LcskResult {
    std::size_t length = 0;
    std::vector<KMatchSpan> matches;
};

// Checks the LcskResult chain invariants: every span is a real k-match and
// consecutive spans advance by at least k in both coordinates.
inline bool is_valid_chain(std::string_view a, std::string_view b,
                           std::size_t k,
                           const std::vector<KMatchSpan>& chain) {
    std::size_t next_a = 0, next_b = 0;
    for (const KMatchSpan& s : chain) {
        if (s.len != k || !span_is_valid(a, b, s)) return false;
        if (s.a_start < next_a || s.b_start < next_b) return false;
        next_a = s.a_start + k;
        next_b = s.b_start + k;
    }
    return true;
}

namespace detail {

// Score-only row sweep. Each symbol row d advances the dcount row and, once
// d >= k, fills score row r = d - k + 1 in the same pass: score column c
// needs dcount at symbol column c + k - 1, which is exactly the value just
// computed. dcount values are clamped at k (anything above k means the same
// thing: a k-match ends here), which lets Dc be a single byte for k < 256;
// Score may be 16-bit whenever floor(min_len / k) fits.
template <class Score, class Dc>
std::size_t lcsk_score_impl(std::string_view a, std::string_view b,
                            std::size_t k, DpStats* stats) {
    const std::size_t n = a.size(), m = b.size();
    const std::size_t C = m - k + 1;
    const std::size_t W = k + 1;  // ring of score rows r-k .. r
    const std::int32_t cap = static_cast<std::int32_t>(k);

    std::vector<Dc> dc_prev(m + 1, 0), dc_cur(m + 1, 0);
    std::vector<Score> win(W * (C + 1), 0);
    if (stats) {
        stats->cells = 2 * (m + 1) + W * (C + 1);
        stats->peak_bytes = 2 * (m + 1) * sizeof(Dc) + W * (C + 1) * sizeof(Score);
    }

    const auto dstep = [&](std::int32_t prev, char x, char y) -> std::int32_t {
        return x == y ? std::min(prev + 1, cap) : 0;
    };

    std::size_t last_row = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        const char ad = a[d - 1];
        const Dc* dp = dc_prev.data();
        Dc* dcur = dc_cur.data();
        if (d < k) {
            for (std::size_t j = 1; j <= m; ++j)
                dcur[j] = static_cast<Dc>(dstep(dp[j - 1], ad, b[j - 1]));
        } else {
            const std::size_t r = d - k + 1;
            Score* cur = win.data() + (r % W) * (C + 1);
            const Score* up = win.data() + ((r - 1) % W) * (C + 1);
            // row r-k lives at slot (r+1) % W; before it is first written
            // the slot still holds the zero boundary, which is exactly what
            // a row r-k <= 0 should read as
            const Score* diag = win.data() + ((r + 1) % W) * (C + 1);
            cur[0] = 0;
            for (std::size_t j = 1; j < k; ++j)
                dcur[j] = static_cast<Dc>(dstep(dp[j - 1], ad, b[j - 1]));
            for (std::size_t j = k; j <= m; ++j) {
                const std::int32_t dcv = dstep(dp[j - 1], ad, b[j - 1]);
                dcur[j] = static_cast<Dc>(dcv);
                const std::size_t c = j - k + 1;
                Score base = c >= k ? diag[c - k] : static_cast<Score>(0);
                if (dcv >= cap) ++base;  // k-match starts at (r-1, c-1)
                cur[c] = std::max({cur[c - 1], up[c], base});
            }
            last_row = r;
        }
        std::swap(dc_prev, dc_cur);
    }
    return static_cast<std::size_t>(win[(last_row % W) * (C + 1) + C]);
}

}  // namespace detail

// Score-only evaluation in O(k * min(|A|,|B|)) working memory: two rolling
// dcount rows plus a ring of the last k+1 score rows (row r needs rows r-1
// and r-k). Degenerate inputs (empty, or k longer than an input) score 0.
inline std::size_t lcsk_score(std::string_view a, std::string_view b,
                              std::size_t k, DpStats* stats = nullptr) {
    require_valid_k(k);
    if (stats) *stats = DpStats{};
    if (a.size() < b.size()) std::swap(a, b);  // rows run over the longer input
    if (b.size() < k) return 0;
    const bool byte_dc = k < 256;
    const bool short_score = b.size() / k < 65535;
    if (byte_dc && short_score)
        return detail::lcsk_score_impl<std::uint16_t, std::uint8_t>(a, b, k, stats);
    if (byte_dc)
        return detail::lcsk_score_impl<std::int32_t, std::uint8_t>(a, b, k, stats);
    if (short_score)
        return detail::lcsk_score_impl<std::uint16_t, std::int32_t>(a, b, k, stats);
    return detail::lcsk_score_impl<std::int32_t, std::int32_t>(a, b, k, stats);
}

// Full-matrix evaluation followed by the predecessor walk. From the
// bottom-right cell: a cell whose predecessor is itself starts a k-match
// there, so emit it and step back k in both coordinates; otherwise hop to
// the predecessor's cell, where (by the diagonal-first tie-break) the
// stored predecessor is that k-match itself.
inline LcskResult lcsk_traceback(std::string_view a, std::string_view b,
                                 std::size_t k) {
    require_valid_k(k);
    LcskResult result;
    const std::size_t n = a.size(), m = b.size();
    if (n < k || m < k) return result;
    const std::size_t R = n - k + 1, C = m - k + 1;
    const std::int32_t ik = static_cast<std::int32_t>(k);

    std::vector<LcskCell> cells((R + 1) * (C + 1));
    const auto at = [&](std::size_t r, std::size_t c) -> LcskCell& {
        return cells[r * (C + 1) + c];
    };
    const LcskCell zero{};

    std::vector<std::int32_t> dc(m + 1, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        const char ad = a[d - 1];
        for (std::size_t j = m; j >= 1; --j)
            dc[j] = dcount_cell(dc[j - 1], ad, b[j - 1]);
        if (d < k) continue;
        const std::size_t r = d - k + 1;
        for (std::size_t c = 1; c <= C; ++c) {
            const bool match = dc[c + k - 1] >= ik;
            const LcskCell& diag = (r >= k && c >= k) ? at(r - k, c - k) : zero;
            at(r, c) = update_pred(r - 1, c - 1, at(r, c - 1), at(r - 1, c),
                                   diag, match);
        }
    }

    std::size_t r = R, c = C;
    while (r >= 1 && c >= 1) {
        const LcskCell& cell = at(r, c);
        if (!cell.has_pred()) break;
        const std::size_t px = static_cast<std::size_t>(cell.pred_x);
        const std::size_t py = static_cast<std::size_t>(cell.pred_y);
        if (px == r - 1 && py == c - 1) {
            result.matches.push_back(KMatchSpan{px, py, k});
            if (r <= k || c <= k) break;  // next cell is on the boundary
            r -= k;
            c -= k;
        } else {
            r = px + 1;
            c = py + 1;
        }
    }
    std::reverse(result.matches.begin(), result.matches.end());
    result.length = result.matches.size();
    return result;
}

}  // namespace lcsk
