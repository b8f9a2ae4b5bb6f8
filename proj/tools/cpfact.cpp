#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cpfact/cp2.hpp"
#include "cpfact/oracle.hpp"
#include "cpfact/rank1.hpp"
#include "cpfact/scan.hpp"
#include "cpfact/squares.hpp"

namespace {

using namespace cpfact;
using nlohmann::json;

// Exit codes: 0 success, 1 validation error, 2 inconclusive oracle, 3 I/O.
constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kInconclusive = 2;
constexpr int kIo = 3;

json factorization_json(const Factorization& f) {
    json cols = json::array();
    for (const VecN& c : f.columns) cols.push_back(c);
    return json{{"columns", cols}, {"count", f.size()}, {"method", f.method}};
}

std::string columns_str(const Factorization& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.columns.size(); ++i) {
        if (i) os << " ";
        os << "(";
        for (std::size_t j = 0; j < f.columns[i].size(); ++j) {
            if (j) os << ",";
            os << f.columns[i][j];
        }
        os << ")";
    }
    return os.str();
}

MatN read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open matrix file: " + path);
    std::vector<std::vector<int64>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int64> row;
        int64 v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof())
            throw std::invalid_argument("malformed integer in matrix file: " + path);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("matrix file is empty: " + path);
    return MatN::from_rows(rows);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact integer cp-factorization of 2x2 doubly nonnegative matrices"};
    app.require_subcommand(1);

    // squares <x>
    int64 sq_x = 0;
    auto* sq = app.add_subcommand("squares", "Minimal sum-of-squares decomposition");
    sq->add_option("x", sq_x, "nonnegative integer")->required();

    // factor --a --b --c [--json] [--verify]
    int64 fa = 0, fb = 0, fc = 0;
    bool f_json = false, f_verify = false;
    auto* fct = app.add_subcommand("factor", "Integer cp-factorization (<= 11 columns)");
    fct->add_option("--a", fa)->required();
    fct->add_option("--b", fb)->required();
    fct->add_option("--c", fc)->required();
    fct->add_flag("--json", f_json, "machine-readable output");
    fct->add_flag("--verify", f_verify, "re-check reconstruction, nonzero exit on failure");

    // rank --a --b --c --exact [--budget N] [--cap N] [--json]
    int64 ra = 0, rb = 0, rc = 0;
    bool r_exact = false, r_json = false;
    std::uint64_t r_budget = SearchOptions{}.node_budget;
    int64 r_cap = SearchOptions{}.diag_cap;
    auto* rnk = app.add_subcommand("rank", "Integer cp-rank (exact search or template bound)");
    rnk->add_option("--a", ra)->required();
    rnk->add_option("--b", rb)->required();
    rnk->add_option("--c", rc)->required();
    rnk->add_flag("--exact", r_exact, "run the exact branch-and-bound oracle");
    rnk->add_option("--budget", r_budget, "node budget for the exact search");
    rnk->add_option("--cap", r_cap, "diagonal cap for the exact search");
    rnk->add_flag("--json", r_json);

    // rank1 --matrix <file> [--json]
    std::string r1_path;
    bool r1_json = false;
    auto* r1 = app.add_subcommand("rank1", "Factor a rank-1 n x n matrix");
    r1->add_option("--matrix", r1_path, "whitespace-separated symmetric matrix file")
        ->required();
    r1->add_flag("--json", r1_json);

    // scan --max-diag N [--exact] --output path [--format csv|jsonl] [--workers K]
    ScanConfig cfg;
    std::string sc_format = "csv";
    bool sc_json = false;
    auto* sc = app.add_subcommand("scan", "Map cp-ranks over the grid a <= c <= N");
    sc->add_option("--max-diag", cfg.max_diag, "diagonal bound N")->required();
    sc->add_flag("--exact", cfg.exact, "compute exact ranks with the oracle");
    sc->add_option("--output", cfg.output_path, "output path ('-' for stdout)")->required();
    sc->add_option("--format", sc_format)->check(CLI::IsMember({"csv", "jsonl"}));
    sc->add_option("--workers", cfg.parallelism, "worker thread count");
    sc->add_option("--budget", cfg.oracle.node_budget, "per-instance oracle budget");
    sc->add_flag("--json", sc_json, "machine-readable summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kValidation;
    }

    if (sq->parsed()) {
        SquareDecomp d = decompose(sq_x);
        std::cout << json{{"x", d.target},
                          {"count", d.parts.size()},
                          {"parts", d.parts}}
                         .dump()
                  << "\n";
        return kOk;
    }

    if (fct->parsed()) {
        Mat2 m{fa, fb, fc};
        Factorization f = factor(m);
        if (f_verify && !verify(m, f)) {
            std::cerr << "verification failed\n";
            return kValidation;
        }
        if (f_json)
            std::cout << factorization_json(f).dump() << "\n";
        else
            std::cout << f.size() << " columns via " << f.method << ": "
                      << columns_str(f) << "\n";
        return kOk;
    }

    if (rnk->parsed()) {
        Mat2 m{ra, rb, rc};
        json out;
        if (r_exact) {
            SearchOptions opts;
            opts.node_budget = r_budget;
            opts.diag_cap = r_cap;
            RankReport rep = exact_cp_rank(m, opts);
            out = json{{"rank", rep.rank},
                       {"method", "exact"},
                       {"nodes", rep.nodes_explored},
                       {"certificate", factorization_json(rep.certificate)}};
        } else {
            Factorization f = factor(m);
            out = json{{"rank", f.size()},
                       {"method", "upper-bound"},
                       {"certificate", factorization_json(f)}};
        }
        if (r_json)
            std::cout << out.dump() << "\n";
        else
            std::cout << out["method"].get<std::string>() << " rank "
                      << out["rank"].get<int>() << "\n";
        return kOk;
    }

    if (r1->parsed()) {
        MatN m = read_matrix_file(r1_path);
        Factorization f = factor_rank1(m);
        if (r1_json)
            std::cout << factorization_json(f).dump() << "\n";
        else
            std::cout << f.size() << " columns: " << columns_str(f) << "\n";
        return kOk;
    }

    if (sc->parsed()) {
        cfg.format = sc_format == "csv" ? ScanFormat::Csv : ScanFormat::Jsonl;
        ScanSummary s =
            cfg.output_path == "-" ? run_scan(cfg, std::cout) : run_scan(cfg);
        json hist = json::object();
        for (auto& [rank, count] : s.histogram) hist[std::to_string(rank)] = count;
        json witnesses = json::array();
        for (const ScanRow& w : s.witnesses)
            witnesses.push_back(json{{"a", w.a}, {"b", w.b}, {"c", w.c}});
        json out{{"rows", s.rows},
                 {"inconclusive", s.inconclusive},
                 {"max_rank", s.max_rank},
                 {"histogram", hist},
                 {"witnesses", witnesses}};
        std::ostream& msg = cfg.output_path == "-" ? std::cerr : std::cout;
        if (sc_json)
            msg << out.dump() << "\n";
        else
            msg << "rows=" << s.rows << " max_rank=" << s.max_rank
                << " witnesses=" << witnesses.size()
                << " inconclusive=" << s.inconclusive << "\n";
        return s.inconclusive > 0 ? kInconclusive : kOk;
    }

    return kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cpfact::inconclusive_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kValidation;
    }
}
