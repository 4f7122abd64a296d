#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "lcsk/edk.hpp"
#include "lcsk/lcsk.hpp"
#include "lcsk/matrix.hpp"

// Scaling measurements for the score-only paths: median wall time per input
// size plus the exact working-set size the banded DP allocates. Successive
// time ratios expose the quadratic growth; the memory column exposes the
// k-linear window.

namespace lcsk::bench {

struct BenchConfig {
    Metric metric = Metric::Lcsk;
    std::size_t k = 2;
    OpsMode mode = OpsMode::Full;
    std::vector<std::size_t> sizes;
    unsigned repeats = 5;
    std::uint64_t seed = 1;
};

struct BenchRow {
    std::size_t n = 0;
    double seconds = 0.0;        // median over repeats
    std::size_t mem_bytes = 0;   // banded working set
    std::size_t score = 0;       // result, to keep the runs honest
};

inline std::string random_sequence(std::mt19937_64& rng, std::size_t len,
                                   std::string_view alphabet = "ACGT") {
    std::string s;
    s.reserve(len);
    std::uniform_int_distribution<std::size_t> dist(0, alphabet.size() - 1);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[dist(rng)]);
    return s;
}

inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    rows.reserve(config.sizes.size());
    for (const std::size_t n : config.sizes) {
        std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
        const std::string a = random_sequence(rng, n);
        const std::string b = random_sequence(rng, n);

        BenchRow row;
        row.n = n;
        std::vector<double> times;
        times.reserve(config.repeats);
        DpStats stats;
        for (unsigned r = 0; r < std::max(1u, config.repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            row.score = config.metric == Metric::Lcsk
                            ? lcsk_score(a, b, config.k, &stats)
                            : edk_score(a, b, config.k, config.mode, &stats);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        row.seconds = times[times.size() / 2];
        row.mem_bytes = stats.peak_bytes;
        rows.push_back(row);
    }
    return rows;
}

// Table with one row per size and the ratio of each median time to the
// previous row's.
inline void write_bench_table(const std::vector<BenchRow>& rows,
                              std::ostream& out) {
    out << "n\ttime_ms\tmem_bytes\tscore\tratio_vs_prev\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i].n << '\t' << rows[i].seconds * 1e3 << '\t'
            << rows[i].mem_bytes << '\t' << rows[i].score << '\t';
        if (i == 0 || rows[i - 1].seconds <= 0.0)
            out << "-";
        else
            out << rows[i].seconds / rows[i - 1].seconds;
        out << '\n';
    }
}

}  // namespace lcsk::bench
