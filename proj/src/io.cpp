#include "ringcode/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ringcode {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// "key: value" -> value, or nullopt when the key differs.
std::optional<std::string> header_value(const std::string& line, const std::string& key) {
    if (line.rfind(key + ":", 0) != 0) return std::nullopt;
    return trim(line.substr(key.size() + 1));
}

}  // namespace

GeneratorMatrix parse_matrix(std::istream& in) {
    std::optional<Ring> ring;
    std::optional<std::size_t> n;
    bool in_rows = false;
    std::vector<std::vector<Element>> rows;
    std::string raw;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        last_line = line_no;
        if (!ring) {
            const auto value = header_value(line, "ring");
            if (!value) throw ParseError(line_no, "expected 'ring: <name>'");
            try {
                ring = Ring::parse(*value);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (!n) {
            const auto value = header_value(line, "n");
            if (!value) throw ParseError(line_no, "expected 'n: <length>'");
            try {
                std::size_t used = 0;
                const long parsed = std::stol(*value, &used);
                if (used != value->size() || parsed < 1) throw std::invalid_argument("");
                n = static_cast<std::size_t>(parsed);
            } catch (const std::exception&) {
                throw ParseError(line_no, "length must be a positive integer, got '" + *value + "'");
            }
        } else if (!in_rows) {
            if (line != "rows:") throw ParseError(line_no, "expected 'rows:'");
            in_rows = true;
        } else {
            std::istringstream tokens(line);
            std::vector<Element> row;
            std::string token;
            while (tokens >> token) {
                try {
                    row.push_back(ring->parse_element(token));
                } catch (const std::exception& e) {
                    throw ParseError(line_no, e.what());
                }
            }
            if (row.size() != *n)
                throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n));
            rows.push_back(std::move(row));
        }
    }
    if (!ring) throw ParseError(line_no + 1, "missing 'ring:' header");
    if (!n) throw ParseError(line_no + 1, "missing 'n:' header");
    if (!in_rows) throw ParseError(line_no + 1, "missing 'rows:' section");
    if (rows.empty()) throw ParseError(last_line, "no rows given");
    return GeneratorMatrix(*ring, *n, std::move(rows));
}

GeneratorMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string format_matrix(const GeneratorMatrix& g) {
    std::ostringstream out;
    out << "ring: " << g.ring.name() << "\n"
        << "n: " << g.length << "\n"
        << "rows:\n";
    for (const auto& row : g.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << g.ring.format(row[j]);
        out << "\n";
    }
    return out.str();
}

std::string format_rows_inline(const GeneratorMatrix& g) {
    std::string out;
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < g.rows[i].size(); ++j) {
            if (j) out += ' ';
            out += g.ring.format(g.rows[i][j]);
        }
    }
    return out;
}

nlohmann::json to_json(const WeightFunction& wf) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : wf.coeffs()) coeffs.push_back(to_string(a));
    return {{"ring", wf.ring().name()}, {"name", wf.name()}, {"coeffs", coeffs}};
}

WeightFunction weight_function_from_json(const nlohmann::json& j) {
    const Ring ring = Ring::parse(j.at("ring").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return {ring, j.at("name").get<std::string>(), std::move(coeffs)};
}

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "true") return Verdict::True;
    if (s == "false") return Verdict::False;
    if (s == "unverified") return Verdict::Unverified;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const GrayMap& gm) {
    const GrayFlags& f = gm.flags();
    return {{"domain", gm.domain().name()},
            {"p", gm.prime()},
            {"L", gm.length()},
            {"table", gm.table()},
            {"flags",
             {{"weight_preserving", to_string(f.weight_preserving)},
              {"isometric", to_string(f.isometric)},
              {"bijective", to_string(f.bijective)},
              {"weight_function", f.weight_function}}}};
}

GrayMap gray_map_from_json(const nlohmann::json& j) {
    GrayFlags flags;
    if (j.contains("flags")) {
        const auto& f = j.at("flags");
        flags.weight_preserving = verdict_from_string(f.value("weight_preserving", "unverified"));
        flags.isometric = verdict_from_string(f.value("isometric", "unverified"));
        flags.bijective = verdict_from_string(f.value("bijective", "unverified"));
        flags.weight_function = f.value("weight_function", "");
    }
    std::vector<FieldVector> table;
    for (const auto& row : j.at("table")) {
        FieldVector v;
        for (const auto& c : row) {
            const int value = c.get<int>();
            if (value < 0 || value > 255) throw std::invalid_argument("Gray table entry out of range");
            v.push_back(static_cast<std::uint8_t>(value));
        }
        table.push_back(std::move(v));
    }
    return {Ring::parse(j.at("domain").get<std::string>()), j.at("p").get<unsigned>(), j.at("L").get<std::size_t>(),
            std::move(table), std::move(flags)};
}

nlohmann::json to_json(const BoundReport& report) {
    const BoundInputs& in = report.inputs;
    nlohmann::json inputs = {{"n", in.n}, {"size", in.size}, {"base", in.base}};
    if (in.d) inputs["d"] = to_string(*in.d);
    if (in.max_coeff) inputs["A"] = to_string(*in.max_coeff);
    if (in.modulus) {
        const unsigned l1 = *in.modulus / 2;
        inputs["l"] = *in.modulus;
        inputs["l1"] = l1;
        inputs["l2"] = l1 * l1;
    }
    return {{"bound_id", to_string(report.id)},
            {"applicable", report.applicable},
            {"reason", report.reason},
            {"holds", report.holds},
            {"tight", report.tight},
            {"witness",
             {{"left", report.witness.left.str()},
              {"right", report.witness.right.str()},
              {"size_exponent", report.witness.size_exponent},
              {"base_exponent", report.witness.base_exponent}}},
            {"inputs", inputs}};
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
    BoundReport report;
    report.id = parse_bound_id(j.at("bound_id").get<std::string>());
    report.applicable = j.at("applicable").get<bool>();
    report.reason = j.at("reason").get<std::string>();
    report.holds = j.at("holds").get<bool>();
    report.tight = j.at("tight").get<bool>();
    const auto& w = j.at("witness");
    report.witness.left = BigInt(w.at("left").get<std::string>());
    report.witness.right = BigInt(w.at("right").get<std::string>());
    report.witness.size_exponent = w.at("size_exponent").get<std::int64_t>();
    report.witness.base_exponent = w.at("base_exponent").get<std::int64_t>();
    const auto& in = j.at("inputs");
    report.inputs.n = in.at("n").get<std::size_t>();
    report.inputs.size = in.at("size").get<std::uint64_t>();
    report.inputs.base = in.at("base").get<unsigned>();
    if (in.contains("d")) report.inputs.d = parse_rational(in.at("d").get<std::string>());
    if (in.contains("A")) report.inputs.max_coeff = parse_rational(in.at("A").get<std::string>());
    if (in.contains("l")) report.inputs.modulus = in.at("l").get<unsigned>();
    return report;
}

nlohmann::json to_json(const ScanSummary& summary, bool include_runtime) {
    nlohmann::json tallies = nlohmann::json::object();
    for (const auto& [label, t] : summary.tallies)
        tallies[label] = {{"evaluated", t.evaluated},
                          {"not_applicable", t.not_applicable},
                          {"holds", t.holds},
                          {"violations", t.violations},
                          {"tight", t.tight}};
    auto findings = [](const std::vector<Finding>& list) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : list) out.push_back({{"bound", f.label}, {"generator", format_rows_inline(f.generator)}});
        return out;
    };
    nlohmann::json j = {{"ring", summary.ring},
                        {"n", summary.n},
                        {"max_rows", summary.max_rows},
                        {"weights", summary.weights},
                        {"gray", summary.gray ? nlohmann::json(*summary.gray) : nlohmann::json(nullptr)},
                        {"codes_examined", summary.codes_examined},
                        {"zero_codes", summary.zero_codes},
                        {"tallies", tallies},
                        {"violations", findings(summary.violations)},
                        {"tight_codes", findings(summary.tight_codes)},
                        {"crosscheck_failures", summary.crosscheck_failures}};
    if (include_runtime) j["runtime_seconds"] = summary.runtime_seconds;
    return j;
}

std::string verdict_text(const BoundReport& report) {
    if (!report.applicable) return "n/a";
    return report.holds ? "holds" : "VIOLATED";
}

void write_scan_csv(std::ostream& out, const ScanResult& result, const CodeEvaluator& evaluator) {
    out << "ring,n,size,generator";
    for (const auto& wf : evaluator.weights()) out << ",d:" << wf.name();
    if (evaluator.gray()) out << ",image_size,image_min_hamming";
    for (const auto& label : evaluator.labels()) out << "," << label << ".verdict," << label << ".tight";
    out << "\n";
    for (const auto& record : result.records) {
        out << record.generator.ring.name() << "," << record.generator.length << "," << record.size << ","
            << format_rows_inline(record.generator);
        for (const auto& d : record.min_weights) out << "," << (d ? to_string(*d) : "undefined");
        if (evaluator.gray())
            out << "," << record.image_size.value_or(0) << ","
                << (record.image_min_hamming ? std::to_string(*record.image_min_hamming) : "undefined");
        for (const auto& [label, report] : record.reports)
            out << "," << verdict_text(report) << "," << (report.tight ? "1" : "0");
        out << "\n";
    }
}

}  // namespace ringcode
