#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cpfact/matrix.hpp"
#include "cpfact/oracle.hpp"

namespace cpfact {

enum class ScanFormat { Csv, Jsonl };

// Grid enumeration of every DNN instance with a <= c <= max_diag and
// 0 <= b <= floor(sqrt(a*c)). The transpose pairs are implied by the a <= c
// restriction (cp-rank is invariant under swapping a and c).
struct ScanConfig {
    int64 max_diag = 1;
    bool exact = false;
    std::string output_path;
    ScanFormat format = ScanFormat::Csv;
    int parallelism = 1;
    SearchOptions oracle;  // used when exact is true
};

struct ScanRow {
    int64 a{0};
    int64 b{0};
    int64 c{0};
    int upper{0};
    std::optional<int> exact;
    std::string template_tag;
    std::optional<std::uint64_t> nodes;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

struct ScanSummary {
    std::uint64_t rows = 0;
    std::uint64_t inconclusive = 0;
    int max_rank = 0;
    std::map<int, std::uint64_t> histogram;  // over exact rank when available
    std::vector<ScanRow> witnesses;          // every argmax row
};

// Fixed schema: a,b,c,upper,exact,template,nodes (empty string for absent
// fields). The writer hard-asserts upper <= 11 and exact <= upper.
std::string format_csv_row(const ScanRow& row);
std::string format_jsonl_row(const ScanRow& row);
ScanRow parse_csv_row(const std::string& line);
ScanRow parse_jsonl_row(const std::string& line);

inline constexpr const char* kCsvHeader = "a,b,c,upper,exact,template,nodes";

// Runs the scan, writing `# key=value` metadata lines, the header, then one
// row per instance in canonical (a, c, b) order. Output is byte-identical
// for a given config regardless of worker count.
ScanSummary run_scan(const ScanConfig& cfg);

// Same, but to an already-open stream (used by tests and --output -).
ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out);

}  // namespace cpfact
