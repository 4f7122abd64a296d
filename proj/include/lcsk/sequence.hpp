#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

// Core sequence types and the primitives shared by the LCSk and EDk
// dynamic programs: k-length substring match detection and the diagonal
// match counter (dcount). All indices in this library are 0-based.

namespace lcsk {

// A byte string with an identifier. Symbols are raw bytes; equality is
// exact byte equality. The content is fixed after construction.
class Sequence {
public:
    Sequence() = default;
    Sequence(std::string id, std::string symbols)
        : id_(std::move(id)), symbols_(std::move(symbols)) {}

    const std::string& id() const { return id_; }
    const std::string& str() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    operator std::string_view() const { return symbols_; }

private:
    std::string id_;
    std::string symbols_;
};

struct NormalizeOptions {
    bool uppercase = false;
};

// Builds a Sequence from raw bytes. With uppercase set, ASCII letters are
// folded to uppercase; every other byte passes through unchanged.
inline Sequence normalize(std::string_view raw, NormalizeOptions options,
                          std::string id = "") {
    std::string symbols(raw);
    if (options.uppercase) {
        for (char& c : symbols)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return Sequence(std::move(id), std::move(symbols));
}

// Substring match length parameter, validated once at construction.
struct Params {
    std::size_t k;

    explicit Params(std::size_t k_) : k(k_) {
        if (k == 0)
            throw std::invalid_argument("k must be >= 1");
    }
};

inline void require_valid_k(std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("k must be >= 1");
}

// One matched k-length substring pair: A[a_start .. a_start+len) equals
// B[b_start .. b_start+len).
struct KMatchSpan {
    std::size_t a_start = 0;
    std::size_t b_start = 0;
    std::size_t len = 0;

    bool operator==(const KMatchSpan&) const = default;
};

// True iff the k symbols of a starting at i equal the k symbols of b
// starting at j. Throws on out-of-range arguments.
inline bool k_match(std::string_view a, std::string_view b, std::size_t i,
                    std::size_t j, std::size_t k) {
    require_valid_k(k);
    if (k > a.size() || i > a.size() - k)
        throw std::out_of_range("k_match: window [i, i+k) exceeds |A|");
    if (k > b.size() || j > b.size() - k)
        throw std::out_of_range("k_match: window [j, j+k) exceeds |B|");
    return a.substr(i, k) == b.substr(j, k);
}

// Checks the KMatchSpan invariants against a concrete sequence pair.
inline bool span_is_valid(std::string_view a, std::string_view b,
                          const KMatchSpan& s) {
    if (s.len == 0) return false;
    if (s.a_start > a.size() || s.len > a.size() - s.a_start) return false;
    if (s.b_start > b.size() || s.len > b.size() - s.b_start) return false;
    return a.substr(s.a_start, s.len) == b.substr(s.b_start, s.len);
}

// One step of the diagonal counter recurrence. dcount at a cell is the
// length of the longest common suffix of the two prefixes ending there;
// a k-match ends at the cell iff dcount >= k.
inline std::int32_t dcount_cell(std::int32_t prev_diag, char a_sym,
                                char b_sym) {
    return a_sym == b_sym ? prev_diag + 1 : 0;
}

// Working-memory accounting for the score-only DP paths.
struct DpStats {
    std::size_t cells = 0;       // buffer elements allocated
    std::size_t peak_bytes = 0;  // same, in bytes
};

}  // namespace lcsk
