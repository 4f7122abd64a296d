#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lcsk/sequence.hpp"

// Sequence ingestion: FASTA parsing and plain-text loading. A plain-text
// file is one sequence (the whole file minus one trailing newline); any
// file whose first byte is '>' is treated as FASTA.

namespace lcsk {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An ordered set of named sequences with unique ids. Non-fatal findings
// (such as empty records) are collected as warnings.
struct Dataset {
    std::vector<Sequence> records;
    std::vector<std::string> warnings;
};

namespace detail {

inline bool is_blank(std::string_view line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::string strip_whitespace(std::string_view line) {
    std::string out;
    out.reserve(line.size());
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Record id: the first whitespace-delimited token after '>'.
inline std::string header_id(std::string_view line) {
    std::size_t start = 1;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
        ++start;
    std::size_t end = start;
    while (end < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[end])))
        ++end;
    return std::string(line.substr(start, end - start));
}

}  // namespace detail

inline Dataset parse_fasta(std::string_view text, NormalizeOptions options = {}) {
    Dataset ds;
    std::unordered_set<std::string> seen;
    bool in_record = false;
    std::string id;
    std::string body;

    const auto flush = [&] {
        if (!in_record) return;
        if (body.empty())
            ds.warnings.push_back("empty record: " + id);
        ds.records.push_back(normalize(body, options, id));
        body.clear();
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty() && line.front() == '>') {
            flush();
            in_record = true;
            id = detail::header_id(line);
            if (!seen.insert(id).second)
                throw ParseError("duplicate record id: " + id);
        } else if (!detail::is_blank(line)) {
            if (!in_record)
                throw ParseError("sequence data before the first '>' header");
            body += detail::strip_whitespace(line);
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush();
    return ds;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return std::move(buf).str();
}

// Loads a dataset from a file: FASTA when it starts with '>', otherwise
// one plain-text record named after the path, minus one trailing newline.
inline Dataset load_dataset(const std::string& path,
                            NormalizeOptions options = {}) {
    std::string text = read_file(path);
    if (!text.empty() && text.front() == '>') return parse_fasta(text, options);
    if (text.ends_with("\r\n"))
        text.resize(text.size() - 2);
    else if (text.ends_with('\n'))
        text.resize(text.size() - 1);
    Dataset ds;
    ds.records.push_back(normalize(text, options, path));
    return ds;
}

}  // namespace lcsk
