#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lcsk/edk.hpp"
#include "lcsk/fasta.hpp"
#include "lcsk/lcsk.hpp"

// All-pairs score matrices over a dataset. Both metrics are symmetric, so
// only the upper triangle is computed and mirrored; pairs are partitioned
// statically across workers and written to disjoint slots, which makes the
// result identical for any job count.

namespace lcsk {

enum class Metric { Lcsk, Edk };

struct MatrixReport {
    Metric metric = Metric::Lcsk;
    std::size_t k = 1;
    OpsMode mode = OpsMode::Full;
    std::vector<std::string> ids;
    std::vector<std::vector<std::size_t>> scores;  // ids.size() x ids.size()
};

inline MatrixReport compute_matrix(const Dataset& ds, Metric metric,
                                   std::size_t k, OpsMode mode,
                                   unsigned jobs = 1) {
    require_valid_k(k);
    if (ds.records.empty())
        throw std::invalid_argument("compute_matrix: empty dataset");
    if (jobs == 0) jobs = 1;

    const std::size_t n = ds.records.size();
    MatrixReport report;
    report.metric = metric;
    report.k = k;
    report.mode = mode;
    report.ids.reserve(n);
    for (const Sequence& s : ds.records) report.ids.push_back(s.id());
    report.scores.assign(n, std::vector<std::size_t>(n, 0));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, pairs.size()));

    const auto score_pair = [&](std::size_t i, std::size_t j) {
        const std::string_view a = ds.records[i];
        const std::string_view b = ds.records[j];
        return metric == Metric::Lcsk ? lcsk_score(a, b, k)
                                      : edk_score(a, b, k, mode);
    };

    const auto worker = [&](unsigned id) {
        for (std::size_t t = id; t < pairs.size(); t += jobs) {
            const auto [i, j] = pairs[t];
            report.scores[i][j] = score_pair(i, j);
        }
    };

    if (jobs == 1 || pairs.size() == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            threads.emplace_back([&, t] {
                try {
                    worker(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (std::thread& th : threads) th.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            report.scores[i][j] = report.scores[j][i];
    return report;
}

// Tab-separated table with an id header row and column.
inline void write_matrix_tsv(const MatrixReport& report, std::ostream& out) {
    out << "id";
    for (const std::string& id : report.ids) out << '\t' << id;
    out << '\n';
    for (std::size_t i = 0; i < report.ids.size(); ++i) {
        out << report.ids[i];
        for (std::size_t j = 0; j < report.ids.size(); ++j)
            out << '\t' << report.scores[i][j];
        out << '\n';
    }
}

}  // namespace lcsk
