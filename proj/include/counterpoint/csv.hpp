#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "counterpoint/common.hpp"

namespace counterpoint::csv {

inline std::vector<std::string> split_line(const std::string& line, char sep = ',') {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;   // raw cells
    std::vector<std::size_t> line_numbers;        // 1-based source line per row
};

/// Reads a whole CSV file; enforces the expected header when given.
inline Table read_file(const std::string& path, const std::string& expected_header = "") {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    Table t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            t.header = split_line(line);
            if (!expected_header.empty()) {
                const auto expected = split_line(expected_header);
                if (t.header != expected) {
                    throw ValidationError(path + ": unexpected header '" + line +
                                          "', expected '" + expected_header + "'");
                }
            }
            continue;
        }
        if (line.empty()) continue;
        t.rows.push_back(split_line(line));
        t.line_numbers.push_back(lineno);
        if (t.rows.back().size() != t.header.size()) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": expected " +
                                  std::to_string(t.header.size()) + " fields, got " +
                                  std::to_string(t.rows.back().size()));
        }
    }
    if (t.header.empty()) throw ValidationError(path + ": empty file (missing header)");
    return t;
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw ValidationError("cannot open file for writing: " + path);
        path_ = path;
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

    void raw_line(const std::string& line) { out_ << line << '\n'; }

    void close() {
        out_.close();
        if (!out_) throw std::runtime_error("write failed: " + path_);
    }

private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace counterpoint::csv
