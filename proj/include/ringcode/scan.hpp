#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringcode/bounds.hpp"
#include "ringcode/code.hpp"
#include "ringcode/gray.hpp"
#include "ringcode/weights.hpp"

namespace ringcode {

struct ScanConfig {
    Ring ring;
    std::size_t n = 1;
    std::size_t max_rows = 1;
    std::vector<WeightFunction> weights;
    std::optional<GrayMap> gray;
    /// Upper limit on M^(max_rows * n) generator matrices.
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

struct ScannedCode {
    LinearCode code;
    /// First generator matrix found for the code; a single zero row for {0}.
    GeneratorMatrix generator;
};

/// Every distinct submodule of R^n generated by at most max_rows vectors,
/// once each, in canonical order (size, then codeword list).
std::vector<ScannedCode> enumerate_codes(const Ring& ring, std::size_t n, std::size_t max_rows,
                                         std::uint64_t budget = kDefaultBudget);

/// A bound verdict tagged with where it came from, e.g. `GraySingleton:lee`
/// or `FieldSingleton:image`.
struct LabeledReport {
    std::string label;
    BoundReport report;
};

struct CodeRecord {
    GeneratorMatrix generator;
    std::uint64_t size = 0;
    /// Minimum weight per configured weight function, in config order.
    std::vector<std::optional<Rational>> min_weights;
    std::optional<std::size_t> image_size;
    std::optional<std::size_t> image_min_hamming;
    std::vector<LabeledReport> reports;
    std::vector<std::string> crosscheck_failures;
};

struct BoundTally {
    std::uint64_t evaluated = 0;
    std::uint64_t not_applicable = 0;
    std::uint64_t holds = 0;
    std::uint64_t violations = 0;
    std::uint64_t tight = 0;
    bool operator==(const BoundTally&) const = default;
};

struct Finding {
    GeneratorMatrix generator;
    std::string label;
};

struct ScanSummary {
    std::string ring;
    std::size_t n = 0;
    std::size_t max_rows = 0;
    std::vector<std::string> weights;
    std::optional<std::string> gray;
    std::uint64_t codes_examined = 0;
    std::uint64_t zero_codes = 0;
    std::map<std::string, BoundTally> tallies;
    std::vector<Finding> violations;
    std::vector<Finding> tight_codes;
    std::uint64_t crosscheck_failures = 0;
    double runtime_seconds = 0.0;

    std::uint64_t total_violations() const;
    /// Sum of violations over every label whose bound is `id`.
    std::uint64_t violations_for(BoundId id) const;
};

struct ScanResult {
    ScanSummary summary;
    std::vector<CodeRecord> records;
};

/// Weight functions and Gray map prepared for evaluating one code at a time.
class CodeEvaluator {
  public:
    CodeEvaluator(Ring ring, std::vector<WeightFunction> weights, std::optional<GrayMap> gray);

    CodeRecord evaluate(const LinearCode& code, const GeneratorMatrix& generator) const;

    /// Report labels in the order evaluate() emits them.
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<WeightFunction>& weights() const { return weights_; }
    const std::optional<GrayMap>& gray() const { return gray_; }

  private:
    Ring ring_;
    std::vector<WeightFunction> weights_;
    std::optional<GrayMap> gray_;
    /// The Gray map's flags verified against each weight function.
    std::vector<GrayFlags> evidence_;
    /// For Z_l: which corollary slot (0 Hamming, 1 Lee, 2 Euclidean) each weight fills.
    std::vector<std::optional<int>> zl_slot_;
    std::vector<std::string> labels_;
};

ScanResult run_scan(const ScanConfig& config);

}  // namespace ringcode
