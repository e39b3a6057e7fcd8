/*
 * descmat: count tables, identity verification, and single-matrix
 * application of the pairing map.
 *
 * Exit codes: 0 success (all verifications passed), 1 a verification
 * failed (reports are still emitted), 2 usage or input error.
 *
 * Matrix input is read from a file or standard input in either
 * interchange format; the entry sum of the matrix determines n. For the
 * plain format, `phi` writes the image matrix to standard output and
 * the trace (label, m, x, inner) to standard error, so output can be
 * piped straight back in.
 */

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descmat/descmat.hpp"

namespace {

using nlohmann::json;

struct global_options {
    int bound = descmat::default_enumeration_bound;
    bool use_cache = false;
    std::string cache_dir;

    std::string effective_cache_dir() const {
        if (!cache_dir.empty()) return cache_dir;
        if (const char* env = std::getenv("DM_CACHE_DIR"); env && *env) return env;
        return ".descmat-cache";
    }
};

// Count rows keyed by family letter and n, optionally backed by JSON
// cache files <dir>/<family>_<n>.json. A cache entry is used only if it
// round-trips its key and shape; anything else is recomputed and
// rewritten, so cached and uncached runs print identical output.
class count_source {
public:
    explicit count_source(const global_options& opts) : opts_(opts) {}

    std::vector<std::int64_t> row(char family, int n) const {
        descmat::require_within_bound(n, opts_.bound, "count_source");
        if (!opts_.use_cache) return compute(family, n);
        if (auto cached = read_cache(family, n)) return *cached;
        auto fresh = compute(family, n);
        write_cache(family, n, fresh);
        return fresh;
    }

    descmat::count_provider provider() const {
        descmat::count_provider p;
        p.bound = opts_.bound;
        if (opts_.use_cache) {
            p.involution_row_hook = [this](int n) { return row('I', n); };
            p.matrix_row_hook = [this](int n) { return row('T', n); };
            p.zero_diagonal_row_hook = [this](int n) { return row('W', n); };
        }
        return p;
    }

private:
    std::vector<std::int64_t> compute(char family, int n) const {
        switch (family) {
            case 'I': return descmat::involution_descent_table(n, opts_.bound);
            case 'T': return descmat::count_table(n, false, opts_.bound);
            case 'W': return descmat::count_table(n, true, opts_.bound);
        }
        throw std::logic_error("count_source: bad family");
    }

    std::string path_for(char family, int n) const {
        return opts_.effective_cache_dir() + "/" + family + std::string("_") +
               std::to_string(n) + ".json";
    }

    std::optional<std::vector<std::int64_t>> read_cache(char family, int n) const {
        std::ifstream in(path_for(family, n));
        if (!in) return std::nullopt;
        json doc;
        try {
            in >> doc;
        } catch (const json::parse_error&) {
            return std::nullopt;
        }
        if (!doc.is_object() || doc.value("family", "") != std::string(1, family) ||
            doc.value("n", -1) != n || !doc.contains("counts") ||
            !doc["counts"].is_array() ||
            doc["counts"].size() != static_cast<std::size_t>(n))
            return std::nullopt;
        std::vector<std::int64_t> counts;
        for (const auto& c : doc["counts"]) {
            if (!c.is_number_integer() || c.get<std::int64_t>() < 0) return std::nullopt;
            counts.push_back(c.get<std::int64_t>());
        }
        return counts;
    }

    void write_cache(char family, int n, const std::vector<std::int64_t>& counts) const {
        std::error_code ec;
        std::filesystem::create_directories(opts_.effective_cache_dir(), ec);
        if (ec) return; // caching is best effort
        json doc{{"family", std::string(1, family)}, {"n", n}, {"counts", counts}};
        std::ofstream out(path_for(family, n));
        out << doc.dump() << "\n";
    }

    const global_options& opts_;
};

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

descmat::sym_matrix read_member_matrix(const std::string& input_path) {
    const descmat::sym_matrix x = descmat::parse_matrix(read_input(input_path));
    if (!descmat::is_family_member(x))
        throw std::invalid_argument(
            "matrix is not in any family: it has an all-zero row or column");
    return x;
}

std::string join_counts(const std::vector<std::int64_t>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(row[i]);
    }
    return out;
}

json trace_json(const descmat::phi_result& r) {
    json j;
    j["label"] = to_string(r.label);
    j["m"] = r.m;
    j["x"] = r.x;
    j["inner"] = r.inner ? json(to_string(*r.inner)) : json(nullptr);
    j["fixed"] = r.fixed();
    return j;
}

void print_trace_plain(std::ostream& out, const descmat::classification& c) {
    out << "label: " << to_string(c.label) << "\n";
    out << "m: " << c.m << "\n";
    out << "x: " << c.x << "\n";
    if (c.inner) out << "inner: " << to_string(*c.inner) << "\n";
}

int cmd_tables(const count_source& counts, int max_n, const std::string& family,
               const std::string& format) {
    const char fam = family[0];
    if (format == "json") {
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n)
            rows.push_back(json{{"n", n}, {"counts", counts.row(fam, n)}});
        json doc{{"family", family}, {"max_n", max_n}, {"rows", rows}};
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "family,n,k,count\n";
        const int k_base = (fam == 'I') ? 0 : 1;
        for (int n = 1; n <= max_n; ++n) {
            const auto row = counts.row(fam, n);
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << family << "," << n << "," << (k_base + static_cast<int>(i))
                          << "," << row[i] << "\n";
        }
        return 0;
    }
    for (int n = 1; n <= max_n; ++n)
        std::cout << "n=" << n << ": " << join_counts(counts.row(fam, n)) << "\n";
    return 0;
}

int cmd_verify(const count_source& counts, int n, const std::string& identity,
               const std::string& format) {
    const descmat::count_provider provider = counts.provider();
    std::vector<descmat::verification_report> reports;
    if (identity == "main1" || identity == "all")
        reports.push_back(
            descmat::verify_main_theorem(n, descmat::theorem_form::first, provider));
    if (identity == "main2" || identity == "all")
        reports.push_back(
            descmat::verify_main_theorem(n, descmat::theorem_form::second, provider));
    if (identity == "alt-sum" || identity == "all") {
        reports.push_back(
            descmat::verify_alternating_sum(n, descmat::alt_sum_mode::by_counts, provider));
        reports.push_back(descmat::verify_alternating_sum(
            n, descmat::alt_sum_mode::by_pairing, provider));
    }
    if (identity == "corollary" || (identity == "all" && n % 2 == 0))
        reports.push_back(descmat::verify_corollary(n, provider));

    bool all_passed = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(descmat::report_to_json(r));
            all_passed = all_passed && r.passed;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.identity << " n=" << r.n
                      << " lhs=" << descmat::to_string(r.lhs)
                      << " rhs=" << descmat::to_string(r.rhs);
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? 0 : 1;
}

int cmd_phi(const std::string& input_path, const std::string& format) {
    const descmat::sym_matrix x = read_member_matrix(input_path);
    const descmat::phi_result r = descmat::phi(x);
    if (format == "json") {
        json j = trace_json(r);
        j["image"] = descmat::matrix_entries_json(r.image);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << descmat::render_matrix(r.image);
    const descmat::classification c{r.label, r.m, r.x, r.inner};
    print_trace_plain(std::cerr, c);
    return 0;
}

int cmd_classify(const std::string& input_path, const std::string& format) {
    const descmat::sym_matrix x = read_member_matrix(input_path);
    const descmat::classification c = descmat::classify(x);
    if (format == "json") {
        json j;
        j["label"] = to_string(c.label);
        j["m"] = c.m;
        j["x"] = c.x;
        j["inner"] = c.inner ? json(to_string(*c.inner)) : json(nullptr);
        std::cout << j.dump() << "\n";
        return 0;
    }
    print_trace_plain(std::cout, c);
    return 0;
}

int cmd_pair(int n, int bound) {
    descmat::pair_all(
        n,
        [&](const descmat::sym_matrix& x, const descmat::phi_result& r) {
            json j = trace_json(r);
            j["n"] = n;
            j["k"] = x.dim();
            j["matrix"] = descmat::matrix_entries_json(x);
            j["image"] = descmat::matrix_entries_json(r.image);
            std::cout << j.dump() << "\n";
        },
        bound);
    return 0;
}

int cmd_oracle(const count_source& counts, int n, const std::string& format) {
    const auto derived = descmat::oracle_matrix_counts(n, counts.provider());
    const auto direct = counts.row('T', n);
    const bool match = derived == direct;
    if (format == "json") {
        json doc{{"n", n},
                 {"involution_derived", derived},
                 {"matrix_enumerated", direct},
                 {"match", match}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "involution-derived: " << join_counts(derived) << "\n";
        std::cout << "matrix-enumerated: " << join_counts(direct) << "\n";
        std::cout << "match: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_shapes(int max_n, int bound, const std::string& format) {
    const descmat::shape_report report = descmat::shape_checks(max_n, bound);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back(json{{"n", r.n},
                                {"symmetric", r.symmetric},
                                {"unimodal", r.unimodal},
                                {"log_concave", r.log_concave}});
        json doc{{"max_n", max_n},
                 {"rows", rows},
                 {"first_log_concavity_failure",
                  report.first_log_concavity_failure
                      ? json(*report.first_log_concavity_failure)
                      : json(nullptr)}};
        std::cout << doc.dump() << "\n";
        return 0;
    }
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& r : report.rows)
        std::cout << "n=" << r.n << ": symmetric=" << yn(r.symmetric)
                  << " unimodal=" << yn(r.unimodal)
                  << " log-concave=" << yn(r.log_concave) << "\n";
    if (report.first_log_concavity_failure)
        std::cout << "first log-concavity failure: n="
                  << *report.first_log_concavity_failure << "\n";
    else
        std::cout << "first log-concavity failure: none (n <= " << max_n << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"involution descent counts, symmetric-matrix families, and the "
                 "identities connecting them"};
    app.require_subcommand(1);

    global_options opts;
    app.add_option("--bound", opts.bound, "enumeration bound on n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--cache", opts.use_cache, "read and write the count cache");
    app.add_option("--cache-dir", opts.cache_dir,
                   "cache directory (default: $DM_CACHE_DIR or .descmat-cache)");

    int max_n = 1, n = 1;
    std::string family = "T";
    std::string format = "plain";
    std::string identity = "all";
    std::string input_path;

    auto* tables = app.add_subcommand("tables", "count triangles for n = 1..N");
    tables->add_option("--max-n", max_n, "largest n")->required()
        ->check(CLI::PositiveNumber);
    tables->add_option("--family", family, "T, W, or I")->required()
        ->check(CLI::IsMember({"T", "W", "I"}));
    tables->add_option("--format", format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "verify the identities at one n");
    verify->add_option("--n", n, "entry sum n")->required()->check(CLI::PositiveNumber);
    verify->add_option("--identity", identity, "main1, main2, alt-sum, corollary, or all")
        ->check(CLI::IsMember({"main1", "main2", "alt-sum", "corollary", "all"}));
    verify->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto* phi_cmd = app.add_subcommand(
        "phi", "apply the pairing map to one matrix (n is its entry sum)");
    phi_cmd->add_option("--input", input_path, "matrix file (default: stdin)");
    phi_cmd->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "case label and pivot of one matrix");
    classify_cmd->add_option("--input", input_path, "matrix file (default: stdin)");
    classify_cmd->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto* pair_cmd =
        app.add_subcommand("pair", "JSON trace of the full pairing of the signed set");
    pair_cmd->add_option("--n", n, "entry sum n")->required()->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "matrix counts from involution data vs direct enumeration");
    oracle_cmd->add_option("--n", n, "entry sum n")->required()
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    auto* shapes_cmd = app.add_subcommand(
        "shapes", "symmetry / unimodality / log-concavity of the descent rows");
    shapes_cmd->add_option("--max-n", max_n, "largest n")->required()
        ->check(CLI::PositiveNumber);
    shapes_cmd->add_option("--format", format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    // the global flags (--bound, --cache, --cache-dir) may also follow
    // the subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const count_source counts(opts);
    try {
        if (*tables) return cmd_tables(counts, max_n, family, format);
        if (*verify) return cmd_verify(counts, n, identity, format);
        if (*phi_cmd) return cmd_phi(input_path, format);
        if (*classify_cmd) return cmd_classify(input_path, format);
        if (*pair_cmd) return cmd_pair(n, opts.bound);
        if (*oracle_cmd) return cmd_oracle(counts, n, format);
        if (*shapes_cmd) return cmd_shapes(max_n, opts.bound, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // a failed internal postcondition, not an input problem
        std::cerr << "internal defect: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
