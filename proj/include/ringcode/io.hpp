#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ringcode/bounds.hpp"
#include "ringcode/code.hpp"
#include "ringcode/gray.hpp"
#include "ringcode/scan.hpp"
#include "ringcode/weights.hpp"

namespace ringcode {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Reads the generator-matrix text format:
///
///     ring: Z4
///     n: 2
///     rows:
///     1 1
///     0 2
///
/// `#` starts a comment, blank lines are ignored.
GeneratorMatrix parse_matrix(std::istream& in);
GeneratorMatrix parse_matrix(const std::string& text);
std::string format_matrix(const GeneratorMatrix& g);
/// Rows separated by `;`, entries by spaces.
std::string format_rows_inline(const GeneratorMatrix& g);

nlohmann::json to_json(const WeightFunction& wf);
WeightFunction weight_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GrayMap& gm);
GrayMap gray_map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const nlohmann::json& j);

/// Runtime is omitted unless requested so identical scans serialize identically.
nlohmann::json to_json(const ScanSummary& summary, bool include_runtime = false);

/// One row per code; columns: ring, n, size, generator, d:<wf>..., [image_size,
/// image_min_hamming,] then <label>.verdict and <label>.tight per report label.
void write_scan_csv(std::ostream& out, const ScanResult& result, const CodeEvaluator& evaluator);

/// "holds", "VIOLATED" or "n/a".
std::string verdict_text(const BoundReport& report);

}  // namespace ringcode
