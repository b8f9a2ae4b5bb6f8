#include "cpfact/scan.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "cpfact/cp2.hpp"

namespace cpfact {

namespace {

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

void check_row(const ScanRow& row) {
    if (row.upper > 11)
        throw std::logic_error("scan row violates the 11-column bound");
    if (row.exact && *row.exact > row.upper)
        throw std::logic_error("scan row has exact rank above the upper bound");
}

ScanRow compute_row(int64 a, int64 b, int64 c, const ScanConfig& cfg,
                    const SearchOptions& opts, std::uint64_t& inconclusive) {
    ScanRow row;
    row.a = a;
    row.b = b;
    row.c = c;
    Factorization f = factor(Mat2{a, b, c});
    row.upper = static_cast<int>(f.size());
    row.template_tag = f.method;
    if (cfg.exact) {
        try {
            RankReport r = exact_cp_rank(Mat2{a, b, c}, opts);
            row.exact = r.rank;
            row.nodes = r.nodes_explored;
        } catch (const inconclusive_error& e) {
            row.nodes = e.nodes;
            ++inconclusive;
        }
    }
    return row;
}

}  // namespace

std::string format_csv_row(const ScanRow& row) {
    check_row(row);
    std::ostringstream os;
    os << row.a << ',' << row.b << ',' << row.c << ',' << row.upper << ','
       << opt_str(row.exact) << ',' << row.template_tag << ','
       << (row.nodes ? std::to_string(*row.nodes) : std::string());
    return os.str();
}

std::string format_jsonl_row(const ScanRow& row) {
    check_row(row);
    nlohmann::json j{{"a", row.a}, {"b", row.b}, {"c", row.c}, {"upper", row.upper}};
    j["exact"] = row.exact ? nlohmann::json(*row.exact) : nlohmann::json();
    j["template"] = row.template_tag;
    j["nodes"] = row.nodes ? nlohmann::json(*row.nodes) : nlohmann::json();
    return j.dump();
}

ScanRow parse_csv_row(const std::string& line) {
    auto fields = split_csv(line);
    if (fields.size() != 7)
        throw std::invalid_argument("expected 7 CSV fields, got " +
                                    std::to_string(fields.size()));
    ScanRow row;
    row.a = std::stoll(fields[0]);
    row.b = std::stoll(fields[1]);
    row.c = std::stoll(fields[2]);
    row.upper = std::stoi(fields[3]);
    if (!fields[4].empty()) row.exact = std::stoi(fields[4]);
    row.template_tag = fields[5];
    if (!fields[6].empty()) row.nodes = std::stoull(fields[6]);
    return row;
}

ScanRow parse_jsonl_row(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    ScanRow row;
    row.a = j.at("a").get<int64>();
    row.b = j.at("b").get<int64>();
    row.c = j.at("c").get<int64>();
    row.upper = j.at("upper").get<int>();
    if (!j.at("exact").is_null()) row.exact = j.at("exact").get<int>();
    row.template_tag = j.at("template").get<std::string>();
    if (!j.at("nodes").is_null()) row.nodes = j.at("nodes").get<std::uint64_t>();
    return row;
}

ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out) {
    if (cfg.max_diag < 1)
        throw std::invalid_argument("scan requires max_diag >= 1");

    SearchOptions opts = cfg.oracle;
    opts.diag_cap = std::max(opts.diag_cap, cfg.max_diag);

    struct Task {
        int64 a, c;
    };
    std::vector<Task> tasks;
    for (int64 a = 0; a <= cfg.max_diag; ++a)
        for (int64 c = a; c <= cfg.max_diag; ++c) tasks.push_back({a, c});

    std::vector<std::vector<ScanRow>> results(tasks.size());
    std::vector<std::uint64_t> inconclusive_per_task(tasks.size(), 0);

    auto work_task = [&](std::size_t i) {
        const Task& t = tasks[i];
        int64 bmax = isqrt(checked_mul(t.a, t.c));
        for (int64 b = 0; b <= bmax; ++b)
            results[i].push_back(
                compute_row(t.a, b, t.c, cfg, opts, inconclusive_per_task[i]));
    };

    int workers = std::max(1, cfg.parallelism);
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) work_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < tasks.size(); i = next++)
                        work_task(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Metadata lines carry run info; the data section below them is
    // worker-count independent.
    out << "# cpfact scan\n";
    out << "# max_diag=" << cfg.max_diag << " exact=" << (cfg.exact ? 1 : 0)
        << " format=" << (cfg.format == ScanFormat::Csv ? "csv" : "jsonl")
        << " workers=" << workers << "\n";
    if (cfg.format == ScanFormat::Csv) out << kCsvHeader << "\n";

    ScanSummary summary;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        summary.inconclusive += inconclusive_per_task[i];
        for (const ScanRow& row : results[i]) {
            out << (cfg.format == ScanFormat::Csv ? format_csv_row(row)
                                                  : format_jsonl_row(row))
                << "\n";
            ++summary.rows;
            if (cfg.exact && !row.exact) continue;  // inconclusive, kept in file
            int rank = row.exact ? *row.exact : row.upper;
            ++summary.histogram[rank];
            if (rank > summary.max_rank) {
                summary.max_rank = rank;
                summary.witnesses.clear();
            }
            if (rank == summary.max_rank) summary.witnesses.push_back(row);
        }
    }
    if (!out) throw std::ios_base::failure("scan output stream failed");
    return summary;
}

ScanSummary run_scan(const ScanConfig& cfg) {
    std::ofstream out(cfg.output_path);
    if (!out)
        throw std::ios_base::failure("cannot open scan output: " + cfg.output_path);
    ScanSummary s = run_scan(cfg, out);
    out.close();
    if (!out)
        throw std::ios_base::failure("error writing scan output: " + cfg.output_path);
    return s;
}

}  // namespace cpfact
