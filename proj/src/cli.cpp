#include "ringcode/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringcode/io.hpp"

namespace ringcode {

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::string output;
};

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<WeightFunction> resolve_weights(const Ring& ring, const std::string& names, const std::string& file) {
    std::vector<WeightFunction> out;
    for (const auto& name : split_list(names)) out.push_back(builtin_wf(ring, name));
    if (!file.empty()) {
        WeightFunction custom = weight_function_from_json(read_json_file(file));
        if (!(custom.ring() == ring)) throw std::invalid_argument("weight file is over " + custom.ring().name() + ", not " + ring.name());
        out.push_back(std::move(custom));
    }
    if (out.empty()) throw std::invalid_argument("no weight function selected");
    return out;
}

std::optional<GrayMap> resolve_map(const Ring& ring, const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty()) throw std::invalid_argument("--map and --map-file are exclusive");
    if (!name.empty()) return builtin_gray(ring, name);
    if (!file.empty()) {
        GrayMap gm = gray_map_from_json(read_json_file(file));
        if (!(gm.domain() == ring)) throw std::invalid_argument("map file is over " + gm.domain().name() + ", not " + ring.name());
        return gm;
    }
    return std::nullopt;
}

void print_vector(std::ostream& out, const FieldVector& v) {
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << static_cast<unsigned>(v[i]);
    out << ")";
}

int cmd_weights(std::ostream& out, const GlobalOptions& global, const Ring& ring, const WeightFunction& wf) {
    if (global.format == "json") {
        nlohmann::json j = to_json(wf);
        j["A"] = to_string(wf.max_coeff());
        j["symmetric"] = wf.is_symmetric();
        out << j.dump(2) << "\n";
    } else if (global.format == "csv") {
        out << "element,code,a_r\n";
        for (Element r : ring.elements()) out << ring.format(r) << "," << unsigned(r) << "," << to_string(wf.coeff(r)) << "\n";
    } else {
        out << "ring: " << ring.name() << "\nweight: " << wf.name() << "\n";
        out << std::left << std::setw(10) << "element" << "a_r\n";
        for (Element r : ring.elements()) out << std::setw(10) << ring.format(r) << to_string(wf.coeff(r)) << "\n";
        out << "A = " << to_string(wf.max_coeff()) << "\n";
        out << "symmetric: " << (wf.is_symmetric() ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

void render_map(std::ostream& out, const GlobalOptions& global, const GrayMap& gm) {
    const Ring& ring = gm.domain();
    if (global.format == "json") {
        out << to_json(gm).dump(2) << "\n";
        return;
    }
    if (global.format == "csv") {
        out << "element,code,image\n";
        for (Element r : ring.elements()) {
            out << ring.format(r) << "," << unsigned(r) << ",";
            for (auto c : gm.image(r)) out << unsigned(c);
            out << "\n";
        }
        return;
    }
    out << "map: " << ring.name() << " -> F" << gm.prime() << "^" << gm.length() << "\n";
    for (Element r : ring.elements()) {
        out << std::left << std::setw(10) << ring.format(r);
        print_vector(out, gm.image(r));
        out << "\n";
    }
    const GrayFlags& f = gm.flags();
    out << "weight function: " << f.weight_function << "\n"
        << "weight-preserving: " << to_string(f.weight_preserving) << "\n"
        << "isometric: " << to_string(f.isometric) << "\n"
        << "bijective: " << to_string(f.bijective) << "\n";
}

int cmd_gray(std::ostream& out, const GlobalOptions& global, const Ring& ring, const WeightFunction& wf,
             const std::optional<GrayMap>& map, std::optional<unsigned> search_prime, std::uint64_t node_budget) {
    if (search_prime) {
        const GraySearchResult result = find_isometric_gray(ring, wf, *search_prime, node_budget);
        if (result.outcome == SearchOutcome::Found) {
            render_map(out, global, *result.map);
        } else {
            const std::string status =
                result.outcome == SearchOutcome::NoneExists ? "none exists" : "search budget exhausted";
            if (global.format == "json") {
                out << nlohmann::json{{"status", status},
                                      {"ring", ring.name()},
                                      {"weight_function", wf.name()},
                                      {"p", *search_prime},
                                      {"search_space", result.search_space.str()},
                                      {"nodes_visited", result.nodes_visited}}
                           .dump(2)
                    << "\n";
            } else {
                out << "isometric Gray map " << ring.name() << " -> F" << *search_prime << "^"
                    << wf.max_coeff().numerator() << " for " << wf.name() << ": " << status << "\n"
                    << "search space: " << result.search_space.str() << "\n"
                    << "nodes visited: " << result.nodes_visited << "\n";
            }
        }
        return kExitOk;
    }
    if (!map) throw std::invalid_argument("gray needs --map, --map-file or --search");
    GrayMap gm = *map;
    verify_weight_preserving(gm, wf);
    verify_isometric(gm, wf);
    verify_bijective(gm);
    render_map(out, global, gm);
    return kExitOk;
}

std::string describe(const Witness& w) {
    return w.left.str() + " <= " + w.right.str() + " (size^" + std::to_string(w.size_exponent) + " vs base^" +
           std::to_string(w.base_exponent) + ")";
}

int cmd_code_info(std::ostream& out, const GlobalOptions& global, const GeneratorMatrix& g,
                  const std::vector<WeightFunction>& weights, const std::optional<GrayMap>& map) {
    const LinearCode code = span(g);
    const CodeEvaluator evaluator(g.ring, weights, map);
    const CodeRecord record = evaluator.evaluate(code, g);
    bool violated = !record.crosscheck_failures.empty();
    for (const auto& r : record.reports) violated = violated || !r.report.holds;

    if (global.format == "json") {
        nlohmann::json j;
        j["ring"] = g.ring.name();
        j["n"] = g.length;
        j["generator"] = format_rows_inline(g);
        j["size"] = record.size;
        nlohmann::json d = nlohmann::json::object();
        for (std::size_t i = 0; i < weights.size(); ++i)
            d[weights[i].name()] = record.min_weights[i] ? nlohmann::json(to_string(*record.min_weights[i])) : nlohmann::json(nullptr);
        j["min_weight"] = d;
        if (map) {
            j["image_size"] = *record.image_size;
            j["image_min_hamming"] = record.image_min_hamming ? nlohmann::json(*record.image_min_hamming) : nlohmann::json(nullptr);
        }
        nlohmann::json reports = nlohmann::json::object();
        for (const auto& [label, report] : record.reports) reports[label] = to_json(report);
        j["reports"] = reports;
        j["crosscheck_failures"] = record.crosscheck_failures;
        out << j.dump(2) << "\n";
    } else if (global.format == "csv") {
        ScanResult result;
        result.records.push_back(record);
        write_scan_csv(out, result, evaluator);
    } else {
        out << "ring: " << g.ring.name() << "\nn: " << g.length << "\nsize: " << record.size << "\n";
        if (code.is_zero()) out << "zero code: minimum weight undefined, bounds vacuous\n";
        for (std::size_t i = 0; i < weights.size(); ++i)
            out << "d(" << weights[i].name() << ") = "
                << (record.min_weights[i] ? to_string(*record.min_weights[i]) : std::string("undefined")) << "\n";
        if (map)
            out << "Gray image: size " << *record.image_size << ", min Hamming distance "
                << (record.image_min_hamming ? std::to_string(*record.image_min_hamming) : std::string("undefined"))
                << "\n";
        for (const auto& [label, report] : record.reports) {
            out << std::left << std::setw(28) << label << std::setw(10) << verdict_text(report);
            if (report.applicable)
                out << (report.tight ? "tight  " : "       ") << describe(report.witness);
            else
                out << report.reason;
            out << "\n";
        }
        for (const auto& failure : record.crosscheck_failures) out << "cross-check failed: " << failure << "\n";
    }
    return violated ? kExitViolation : kExitOk;
}

int cmd_scan(std::ostream& out, const GlobalOptions& global, const ScanConfig& config) {
    const ScanResult result = run_scan(config);
    const ScanSummary& s = result.summary;
    if (global.format == "json") {
        out << to_json(s).dump(2) << "\n";
    } else if (global.format == "csv") {
        const CodeEvaluator evaluator(config.ring, config.weights, config.gray);
        write_scan_csv(out, result, evaluator);
    } else {
        out << "ring: " << s.ring << "  n: " << s.n << "  max rows: " << s.max_rows << "\n"
            << "codes examined: " << s.codes_examined << " (zero codes: " << s.zero_codes << ")\n";
        out << std::left << std::setw(28) << "bound" << std::right << std::setw(10) << "evaluated" << std::setw(10)
            << "n/a" << std::setw(10) << "holds" << std::setw(12) << "violations" << std::setw(8) << "tight" << "\n";
        for (const auto& [label, t] : s.tallies)
            out << std::left << std::setw(28) << label << std::right << std::setw(10) << t.evaluated << std::setw(10)
                << t.not_applicable << std::setw(10) << t.holds << std::setw(12) << t.violations << std::setw(8)
                << t.tight << "\n";
        for (const auto& v : s.violations) out << "violation: " << v.label << " on [" << format_rows_inline(v.generator) << "]\n";
        out << "cross-check failures: " << s.crosscheck_failures << "\n";
        out << "runtime: " << std::fixed << std::setprecision(3) << s.runtime_seconds << " s\n";
    }
    return (s.total_violations() > 0 || s.crosscheck_failures > 0) ? kExitViolation : kExitOk;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RINGCODE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("RINGCODE_BUDGET is not an integer: ") + env);
        }
    }
    return kDefaultBudget;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear codes over small finite rings: weights, Gray maps and Singleton bounds", "ringcode"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--output", global.output, "Write output to PATH instead of stdout");

    std::string ring_name, wf_names, table_wf_names, wf_file, map_name, map_file, matrix_file;
    unsigned search_prime = 0;
    std::size_t n = 1, max_rows = 0;
    unsigned threads = 1;
    std::uint64_t budget = 0, node_budget = 100'000'000;

    auto* weights = app.add_subcommand("weights", "Print a weight table and its maximum A");
    weights->add_option("--ring", ring_name, "Z<l>, F<p>, F2U or F2UV")->required();
    weights->add_option("--wf", table_wf_names, "hamming, lee or euclidean");
    weights->add_option("--wf-file", wf_file, "Custom weight function JSON");

    auto* gray = app.add_subcommand("gray", "Print and verify a Gray map, or search for an isometric one");
    gray->add_option("--ring", ring_name)->required();
    gray->add_option("--wf", wf_names, "Weight the map is verified against")->default_val("lee");
    gray->add_option("--wf-file", wf_file);
    gray->add_option("--map", map_name, "Built-in map (standard)");
    gray->add_option("--map-file", map_file, "Gray map JSON");
    auto* search = gray->add_option("--search", search_prime, "Search for an isometric map into F_p^A");
    gray->add_option("--node-budget", node_budget, "Backtracking node limit");

    auto* info = app.add_subcommand("code-info", "Span a generator matrix file and check every bound");
    info->add_option("file", matrix_file, "Generator matrix file")->required();
    auto* info_wf = info->add_option("--wf", wf_names, "Comma-separated weight functions")->default_val("lee");
    info->add_option("--wf-file", wf_file);
    info->add_option("--map", map_name);
    info->add_option("--map-file", map_file);

    auto* scan = app.add_subcommand("scan", "Enumerate all codes up to a size and check every bound");
    scan->add_option("--ring", ring_name)->required();
    scan->add_option("--n", n, "Code length")->check(CLI::PositiveNumber);
    scan->add_option("--max-rows", max_rows, "Generator rows (default n)");
    auto* scan_wf = scan->add_option("--wf", wf_names, "Comma-separated weight functions")->default_val("lee");
    scan->add_option("--wf-file", wf_file);
    scan->add_option("--map", map_name);
    scan->add_option("--map-file", map_file);
    scan->add_option("--threads", threads)->check(CLI::PositiveNumber);
    scan->add_option("--budget", budget, "Generator matrix budget (default RINGCODE_BUDGET or 10^7)");

    // A weight file replaces the default --wf unless --wf was given too.
    auto explicit_names = [&](const CLI::Option* opt) { return opt->count() > 0 || wf_file.empty() ? wf_names : std::string(); };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ringcode: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ofstream file_out;
    if (!global.output.empty()) {
        file_out.open(global.output);
        if (!file_out) {
            err << "ringcode: cannot write " << global.output << "\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = global.output.empty() ? out : file_out;

    try {
        if (*weights) {
            const Ring ring = Ring::parse(ring_name);
            if (table_wf_names.empty() && wf_file.empty()) throw std::invalid_argument("weights needs --wf or --wf-file");
            const auto wfs = resolve_weights(ring, table_wf_names, wf_file);
            int status = kExitOk;
            for (const auto& wf : wfs) status = std::max(status, cmd_weights(sink, global, ring, wf));
            return status;
        }
        if (*gray) {
            const Ring ring = Ring::parse(ring_name);
            const auto wfs = resolve_weights(ring, wf_file.empty() ? wf_names : "", wf_file);
            std::optional<unsigned> prime;
            if (search->count() > 0) prime = search_prime;
            return cmd_gray(sink, global, ring, wfs.front(), resolve_map(ring, map_name, map_file), prime, node_budget);
        }
        if (*info) {
            std::ifstream in(matrix_file);
            if (!in) throw std::runtime_error("cannot open " + matrix_file);
            const GeneratorMatrix g = parse_matrix(in);
            return cmd_code_info(sink, global, g, resolve_weights(g.ring, explicit_names(info_wf), wf_file),
                                 resolve_map(g.ring, map_name, map_file));
        }
        if (*scan) {
            const Ring ring = Ring::parse(ring_name);
            ScanConfig config{ring, n, max_rows == 0 ? n : max_rows, resolve_weights(ring, explicit_names(scan_wf), wf_file),
                              resolve_map(ring, map_name, map_file), budget == 0 ? default_budget() : budget, threads};
            return cmd_scan(sink, global, config);
        }
    } catch (const ParseError& e) {
        err << "ringcode: " << matrix_file << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "ringcode: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ringcode
