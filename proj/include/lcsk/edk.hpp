#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcsk/sequence.hpp"

// EDk: the minimal number of insertions, deletions and substitutions that
// transform A into B under the constraint that every unedited symbol
// belongs to a chain of non-overlapping, order-preserving common k-length
// substrings. Over the symbol grid, with ED[i][0] = i and ED[0][j] = j:
//
//   ED[i][j] = min( ED[i-1][j] + 1,                      -- delete a_i
//                   ED[i][j-1] + 1,                      -- insert b_j
//                   ED[i-k][j-k]      if dcount[i][j] >= k
//                   ED[i-1][j-1] + 1  otherwise )        -- substitute
//
// The diagonal branch is exclusive: when a k-match ends at (i, j) the pair
// is consumed match-first and the substitution of a_i with b_j is not
// offered; when it does not, equal symbols still cost a substitution. In
// indel-only mode the substitution branch is removed entirely.

namespace lcsk {

enum class OpsMode { Full, IndelOnly };

enum class EditKind { Insert, Delete, Substitute, KMatch };

// Insert carries b_pos only; Delete carries a_pos only; Substitute and
// KMatch carry both. len is 1 for edits and k for a KMatch.
struct EditOp {
    EditKind kind;
    std::optional<std::size_t> a_pos;
    std::optional<std::size_t> b_pos;
    std::size_t len = 1;
};

struct EdkResult {
    std::size_t distance = 0;
    std::vector<EditOp> script;
};

// Indel-only closed form: |A| + |B| - 2k * LCSk. Throws if the inputs are
// inconsistent (negative result).
inline std::size_t edk_from_lcsk_identity(std::size_t len_a,
                                          std::size_t len_b, std::size_t k,
                                          std::size_t lcsk_value) {
    require_valid_k(k);
    const long long r = static_cast<long long>(len_a) +
                        static_cast<long long>(len_b) -
                        2LL * static_cast<long long>(k) *
                            static_cast<long long>(lcsk_value);
    if (r < 0)
        throw std::invalid_argument(
            "edk_from_lcsk_identity: negative result, inconsistent inputs");
    return static_cast<std::size_t>(r);
}

namespace detail {

// Score-only row sweep: the dcount row and the score row advance together
// (here the score at (i, j) consults dcount at (i, j) itself). dcount is
// clamped at k, so Dc can be a byte for k < 256; Score may be 16-bit when
// the distance bound max(|A|,|B|) fits.
template <class Score, class Dc>
std::size_t edk_score_impl(std::string_view a, std::string_view b,
                           std::size_t k, OpsMode mode, DpStats* stats) {
    const std::size_t n = a.size(), m = b.size();
    const std::size_t W = k + 1;  // ring of score rows i-k .. i
    const std::int32_t cap = static_cast<std::int32_t>(k);

    std::vector<Dc> dc_prev(m + 1, 0), dc_cur(m + 1, 0);
    std::vector<Score> win(W * (m + 1), 0);
    if (stats) {
        stats->cells = 2 * (m + 1) + W * (m + 1);
        stats->peak_bytes =
            2 * (m + 1) * sizeof(Dc) + W * (m + 1) * sizeof(Score);
    }
    for (std::size_t j = 0; j <= m; ++j)
        win[j] = static_cast<Score>(j);  // row 0 boundary

    const bool allow_sub = mode == OpsMode::Full;
    for (std::size_t i = 1; i <= n; ++i) {
        const char ai = a[i - 1];
        const Dc* dp = dc_prev.data();
        Dc* dcur = dc_cur.data();
        Score* cur = win.data() + (i % W) * (m + 1);
        const Score* up = win.data() + ((i - 1) % W) * (m + 1);
        // row i-k lives at slot (i+1) % W; dcount >= k implies i, j >= k,
        // so the slot is never read before that row exists
        const Score* back = win.data() + ((i + 1) % W) * (m + 1);
        cur[0] = static_cast<Score>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const std::int32_t dcv =
                ai == b[j - 1] ? std::min<std::int32_t>(dp[j - 1] + 1, cap) : 0;
            dcur[j] = static_cast<Dc>(dcv);
            Score best = std::min(up[j], cur[j - 1]) + 1;
            if (dcv >= cap)
                best = std::min<Score>(best, back[j - k]);
            else if (allow_sub)
                best = std::min<Score>(best, up[j - 1] + 1);
            cur[j] = best;
        }
        std::swap(dc_prev, dc_cur);
    }
    return static_cast<std::size_t>(win[(n % W) * (m + 1) + m]);
}

}  // namespace detail

// Score-only evaluation in O(k * min(|A|,|B|)) working memory: two rolling
// dcount rows plus a ring of the last k+1 score rows.
inline std::size_t edk_score(std::string_view a, std::string_view b,
                             std::size_t k, OpsMode mode,
                             DpStats* stats = nullptr) {
    require_valid_k(k);
    if (stats) *stats = DpStats{};
    if (a.size() < b.size()) std::swap(a, b);  // ins/del swap roles; score is unchanged
    const bool byte_dc = k < 256;
    const bool short_score = a.size() < 65535;  // distance <= max length
    if (byte_dc && short_score)
        return detail::edk_score_impl<std::uint16_t, std::uint8_t>(a, b, k, mode,
                                                                   stats);
    if (byte_dc)
        return detail::edk_score_impl<std::int32_t, std::uint8_t>(a, b, k, mode,
                                                                  stats);
    if (short_score)
        return detail::edk_score_impl<std::uint16_t, std::int32_t>(a, b, k, mode,
                                                                   stats);
    return detail::edk_score_impl<std::int32_t, std::int32_t>(a, b, k, mode,
                                                              stats);
}

namespace detail {

// Traceback source codes, also the tie-break priority (lower wins).
enum : std::uint8_t {
    kSrcNone = 0,
    kSrcMatch = 1,
    kSrcSub = 2,
    kSrcDel = 3,
    kSrcIns = 4,
};

}  // namespace detail

// Full-matrix evaluation with stored sources, then a walk from (|A|, |B|)
// back to the origin emitting one op per step. Ties are broken k-match >
// substitute > delete > insert, so scripts are deterministic.
inline EdkResult edk_traceback(std::string_view a, std::string_view b,
                               std::size_t k, OpsMode mode) {
    require_valid_k(k);
    const std::size_t n = a.size(), m = b.size();
    const std::size_t cols = m + 1;
    const std::int32_t ik = static_cast<std::int32_t>(k);

    std::vector<std::int32_t> score((n + 1) * cols, 0);
    std::vector<std::uint8_t> src((n + 1) * cols, detail::kSrcNone);
    const auto idx = [cols](std::size_t i, std::size_t j) {
        return i * cols + j;
    };
    for (std::size_t j = 1; j <= m; ++j) {
        score[idx(0, j)] = static_cast<std::int32_t>(j);
        src[idx(0, j)] = detail::kSrcIns;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        score[idx(i, 0)] = static_cast<std::int32_t>(i);
        src[idx(i, 0)] = detail::kSrcDel;
    }

    std::vector<std::int32_t> dc(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const char ai = a[i - 1];
        for (std::size_t j = m; j >= 1; --j)
            dc[j] = dcount_cell(dc[j - 1], ai, b[j - 1]);
        for (std::size_t j = 1; j <= m; ++j) {
            std::int32_t best;
            std::uint8_t from;
            if (dc[j] >= ik) {
                best = score[idx(i - k, j - k)];
                from = detail::kSrcMatch;
            } else if (mode == OpsMode::Full) {
                best = score[idx(i - 1, j - 1)] + 1;
                from = detail::kSrcSub;
            } else {
                best = score[idx(i - 1, j)] + 1;
                from = detail::kSrcDel;
            }
            const std::int32_t del = score[idx(i - 1, j)] + 1;
            if (del < best) {
                best = del;
                from = detail::kSrcDel;
            }
            const std::int32_t ins = score[idx(i, j - 1)] + 1;
            if (ins < best) {
                best = ins;
                from = detail::kSrcIns;
            }
            score[idx(i, j)] = best;
            src[idx(i, j)] = from;
        }
    }

    EdkResult result;
    result.distance = static_cast<std::size_t>(score[idx(n, m)]);
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        switch (src[idx(i, j)]) {
            case detail::kSrcMatch:
                result.script.push_back(
                    EditOp{EditKind::KMatch, i - k, j - k, k});
                i -= k;
                j -= k;
                break;
            case detail::kSrcSub:
                result.script.push_back(
                    EditOp{EditKind::Substitute, i - 1, j - 1, 1});
                --i;
                --j;
                break;
            case detail::kSrcDel:
                result.script.push_back(
                    EditOp{EditKind::Delete, i - 1, std::nullopt, 1});
                --i;
                break;
            case detail::kSrcIns:
                result.script.push_back(
                    EditOp{EditKind::Insert, std::nullopt, j - 1, 1});
                --j;
                break;
            default:
                throw std::logic_error("edk_traceback: broken source chain");
        }
    }
    std::reverse(result.script.begin(), result.script.end());
    return result;
}

// Applies a script to a, returning the transformed string. Inserts and
// substitutes emit the target symbol named by b_pos, k-matches copy from
// a. Enforces the coverage invariant as it goes: ops appear in position
// order, every symbol of A is consumed by exactly one Delete/Substitute/
// KMatch and every symbol of B produced by exactly one Insert/Substitute/
// KMatch. Throws on any malformed script.
inline std::string replay_edit_script(std::string_view a, std::string_view b,
                                      const std::vector<EditOp>& script) {
    std::string out;
    std::size_t next_a = 0;
    std::size_t next_b = 0;
    const auto fail = [](const char* msg) {
        throw std::invalid_argument(std::string("replay_edit_script: ") + msg);
    };
    for (const EditOp& op : script) {
        switch (op.kind) {
            case EditKind::Delete:
                if (op.len != 1 || !op.a_pos || op.b_pos || *op.a_pos != next_a)
                    fail("malformed delete");
                next_a += 1;
                break;
            case EditKind::Insert:
                if (op.len != 1 || !op.b_pos || op.a_pos ||
                    *op.b_pos != next_b || next_b >= b.size())
                    fail("malformed insert");
                out.push_back(b[next_b]);
                next_b += 1;
                break;
            case EditKind::Substitute:
                if (op.len != 1 || !op.a_pos || !op.b_pos ||
                    *op.a_pos != next_a || *op.b_pos != next_b ||
                    next_b >= b.size())
                    fail("malformed substitute");
                out.push_back(b[next_b]);
                next_a += 1;
                next_b += 1;
                break;
            case EditKind::KMatch:
                if (!op.a_pos || !op.b_pos || *op.a_pos != next_a ||
                    *op.b_pos != next_b || op.len == 0 ||
                    next_a + op.len > a.size())
                    fail("malformed k-match");
                out.append(a.substr(next_a, op.len));
                next_a += op.len;
                next_b += op.len;
                break;
        }
    }
    if (next_a != a.size()) fail("script does not cover all of A");
    if (next_b != b.size()) fail("script does not cover all of B");
    return out;
}

// True iff the script is well formed and transforms a into b exactly.
inline bool script_transforms(std::string_view a, std::string_view b,
                              const std::vector<EditOp>& script) {
    try {
        return replay_edit_script(a, b, script) == b;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace lcsk
