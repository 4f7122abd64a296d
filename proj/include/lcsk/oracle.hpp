#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lcsk/edk.hpp"
#include "lcsk/sequence.hpp"

// Exponential-looking but memoized reference implementations for small
// instances. These enumerate chains of k-matches directly from the problem
// definition and never touch the row-DP recurrences, so they can serve as
// ground truth for the production algorithms.

namespace lcsk::oracle {

inline constexpr std::size_t kBruteLcskMaxLen = 14;
inline constexpr std::size_t kBruteEdkMaxLen = 12;

namespace detail {

// All k-match start pairs, in lexicographic order.
inline std::vector<KMatchSpan> all_k_matches(std::string_view a,
                                             std::string_view b,
                                             std::size_t k) {
    std::vector<KMatchSpan> out;
    if (k == 0 || a.size() < k || b.size() < k) return out;
    for (std::size_t i = 0; i + k <= a.size(); ++i)
        for (std::size_t j = 0; j + k <= b.size(); ++j)
            if (a.substr(i, k) == b.substr(j, k))
                out.push_back(KMatchSpan{i, j, k});
    return out;
}

inline void check_guard(std::string_view a, std::string_view b,
                        std::size_t limit, const char* what) {
    if (a.size() > limit || b.size() > limit)
        throw std::invalid_argument(std::string(what) +
                                    ": input too long for the brute-force "
                                    "reference (guard " +
                                    std::to_string(limit) + ")");
}

// Minimal edit count for one gap segment pair of lengths ga and gb where
// every symbol must be edited (no free matches inside a gap: an unedited
// symbol would have to belong to the k-match chain).
//
// Full mode: pairing min(ga, gb) symbols as substitutions and covering the
// remaining |ga - gb| with indels costs max(ga, gb); it is minimal because
// each of the max(ga, gb) symbols on the longer side needs its own edit
// (an op covers at most one symbol per side), and any schedule reaching
// that bound is order-preserving, hence legal.
//
// Indel-only mode: no pairing is possible, so every symbol costs one op.
inline std::size_t gap_cost(std::size_t ga, std::size_t gb, OpsMode mode) {
    return mode == OpsMode::Full ? std::max(ga, gb) : ga + gb;
}

}  // namespace detail

// Maximal number of non-overlapping, order-preserving common k-length
// substrings, by memoized longest-path search over the k-match pairs.
inline std::size_t brute_lcsk(std::string_view a, std::string_view b,
                              std::size_t k) {
    require_valid_k(k);
    detail::check_guard(a, b, kBruteLcskMaxLen, "brute_lcsk");
    const auto matches = detail::all_k_matches(a, b, k);
    const std::size_t n = matches.size();
    // best[p] = longest chain starting with match p
    std::vector<std::size_t> best(n, 1);
    for (std::size_t p = n; p-- > 0;) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (matches[q].a_start >= matches[p].a_start + k &&
                matches[q].b_start >= matches[p].b_start + k)
                best[p] = std::max(best[p], 1 + best[q]);
        }
    }
    std::size_t result = 0;
    for (std::size_t p = 0; p < n; ++p) result = std::max(result, best[p]);
    return result;
}

// Cost of one explicit chain: the sum of gap costs before, between and
// after its matches. Throws if the chain is not a legal k-match chain for
// the given inputs.
inline std::size_t chain_edit_cost(std::string_view a, std::string_view b,
                                   std::size_t k,
                                   const std::vector<KMatchSpan>& chain,
                                   OpsMode mode) {
    require_valid_k(k);
    std::size_t prev_a = 0, prev_b = 0;  // first index not yet consumed
    std::size_t cost = 0;
    for (const KMatchSpan& s : chain) {
        if (s.len != k || !span_is_valid(a, b, s))
            throw std::invalid_argument("chain_edit_cost: invalid span");
        if (s.a_start < prev_a || s.b_start < prev_b)
            throw std::invalid_argument(
                "chain_edit_cost: spans overlap or are out of order");
        cost += detail::gap_cost(s.a_start - prev_a, s.b_start - prev_b, mode);
        prev_a = s.a_start + k;
        prev_b = s.b_start + k;
    }
    cost += detail::gap_cost(a.size() - prev_a, b.size() - prev_b, mode);
    return cost;
}

// Minimal edit count over every legal chain (including the empty one),
// with per-gap costs as in chain_edit_cost. Memoized shortest-path over
// the k-match pairs.
inline std::size_t brute_edk(std::string_view a, std::string_view b,
                             std::size_t k, OpsMode mode) {
    require_valid_k(k);
    detail::check_guard(a, b, kBruteEdkMaxLen, "brute_edk");
    const auto matches = detail::all_k_matches(a, b, k);
    const std::size_t n = matches.size();
    // tail[p] = cheapest way to finish once match p is the latest one taken
    std::vector<std::size_t> tail(n);
    for (std::size_t p = n; p-- > 0;) {
        const std::size_t end_a = matches[p].a_start + k;
        const std::size_t end_b = matches[p].b_start + k;
        tail[p] = detail::gap_cost(a.size() - end_a, b.size() - end_b, mode);
        for (std::size_t q = p + 1; q < n; ++q) {
            if (matches[q].a_start >= end_a && matches[q].b_start >= end_b) {
                const std::size_t via =
                    detail::gap_cost(matches[q].a_start - end_a,
                                     matches[q].b_start - end_b, mode) +
                    tail[q];
                tail[p] = std::min(tail[p], via);
            }
        }
    }
    std::size_t result = detail::gap_cost(a.size(), b.size(), mode);  // empty chain
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t via =
            detail::gap_cost(matches[p].a_start, matches[p].b_start, mode) +
            tail[p];
        result = std::min(result, via);
    }
    return result;
}

// Textbook LCS length; the k = 1 reference.
inline std::size_t classic_lcs(std::string_view a, std::string_view b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                          : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace lcsk::oracle
