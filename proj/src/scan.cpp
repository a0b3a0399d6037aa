#include "ringcode/scan.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace ringcode {

std::uint64_t ScanSummary::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& [label, tally] : tallies) total += tally.violations;
    return total;
}

std::uint64_t ScanSummary::violations_for(BoundId id) const {
    const std::string prefix = to_string(id) + ":";
    std::uint64_t total = 0;
    for (const auto& [label, tally] : tallies)
        if (label.rfind(prefix, 0) == 0) total += tally.violations;
    return total;
}

std::vector<ScannedCode> enumerate_codes(const Ring& ring, std::size_t n, std::size_t max_rows,
                                         std::uint64_t budget) {
    if (max_rows == 0) throw std::invalid_argument("max_rows must be at least 1");
    if (n == 0) throw std::invalid_argument("code length must be at least 1");
    BigInt matrices = 1;
    for (std::size_t i = 0; i < max_rows * n; ++i) matrices *= ring.cardinality();
    if (matrices > budget)
        throw BudgetExceeded(ring.name() + " with n=" + std::to_string(n) + ", max_rows=" + std::to_string(max_rows) +
                             " has " + matrices.str() + " generator matrices, budget is " + std::to_string(budget));

    // all of R^n, lexicographic
    std::vector<std::vector<Element>> vectors;
    std::vector<Element> v(n, 0);
    const unsigned m = ring.cardinality();
    while (true) {
        vectors.push_back(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == m - 1) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
    }

    // Breadth-first over generator count: a code first reached at depth j
    // needs exactly j generators, so expanding it once suffices.
    std::map<LinearCode, std::vector<std::vector<Element>>> found;
    const LinearCode zero(ring, n);
    found.emplace(zero, std::vector<std::vector<Element>>{});
    std::vector<LinearCode> frontier{zero};
    for (std::size_t depth = 1; depth <= max_rows && !frontier.empty(); ++depth) {
        std::vector<LinearCode> next;
        for (const auto& code : frontier) {
            const auto rows = found.at(code);
            for (const auto& row : vectors) {
                if (code.contains(row)) continue;
                LinearCode bigger = code.extended(row);
                if (found.contains(bigger)) continue;
                auto generator = rows;
                generator.push_back(row);
                found.emplace(bigger, std::move(generator));
                next.push_back(std::move(bigger));
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    std::vector<ScannedCode> out;
    out.reserve(found.size());
    for (auto& [code, rows] : found) {
        if (rows.empty()) rows.emplace_back(n, 0);
        out.push_back({code, GeneratorMatrix(ring, n, rows)});
    }
    return out;
}

namespace {

std::optional<int> zl_slot(const Ring& ring, const WeightFunction& wf) {
    if (ring.family() != Family::ZMod) return std::nullopt;
    static constexpr const char* kNames[] = {"hamming", "lee", "euclidean"};
    for (int slot = 0; slot < 3; ++slot)
        if (wf.name() == kNames[slot] && builtin_wf(ring, kNames[slot]) == wf) return slot;
    return std::nullopt;
}

bool is_direct_field_hamming(const Ring& ring, const WeightFunction& wf) {
    return ring.family() == Family::PrimeField && wf == hamming_wf(ring);
}

constexpr BoundId kZlIds[] = {BoundId::ZlHamming, BoundId::ZlLee, BoundId::ZlEuclidean};

}  // namespace

CodeEvaluator::CodeEvaluator(Ring ring, std::vector<WeightFunction> weights, std::optional<GrayMap> gray)
    : ring_(std::move(ring)), weights_(std::move(weights)), gray_(std::move(gray)) {
    if (weights_.empty()) throw std::invalid_argument("at least one weight function is required");
    for (const auto& wf : weights_) {
        if (!(wf.ring() == ring_)) throw std::invalid_argument("weight function '" + wf.name() + "' is not over " + ring_.name());
        GrayFlags flags;
        if (gray_) {
            if (!(gray_->domain() == ring_)) throw std::invalid_argument("Gray map is not over " + ring_.name());
            GrayMap copy = *gray_;
            verify_weight_preserving(copy, wf);
            verify_isometric(copy, wf);
            verify_bijective(copy);
            flags = copy.flags();
        }
        evidence_.push_back(flags);
        zl_slot_.push_back(zl_slot(ring_, wf));

        labels_.push_back(to_string(BoundId::ShiromotoFloor) + ":" + wf.name());
        labels_.push_back(to_string(BoundId::GraySingleton) + ":" + wf.name());
        labels_.push_back(to_string(BoundId::StrongSingleton) + ":" + wf.name());
        if (zl_slot_.back()) labels_.push_back(to_string(kZlIds[*zl_slot_.back()]) + ":" + wf.name());
        if (is_direct_field_hamming(ring_, wf)) labels_.push_back(to_string(BoundId::FieldSingleton) + ":" + wf.name());
    }
    if (gray_) labels_.push_back(to_string(BoundId::FieldSingleton) + ":image");
}

CodeRecord CodeEvaluator::evaluate(const LinearCode& code, const GeneratorMatrix& generator) const {
    CodeRecord record{generator, code.size(), {}, {}, {}, {}, {}};
    const std::size_t n = code.length();
    const unsigned m = ring_.cardinality();
    const unsigned p = ring_.min_prime();
    auto label_it = labels_.begin();
    auto push = [&](BoundReport report) {
        if (!report.applicable && code.is_zero()) report.inputs.d.reset();
        record.reports.push_back({*label_it++, std::move(report)});
    };

    if (gray_) {
        record.image_size = image_size(code, *gray_);
        record.image_min_hamming = gray_image_min_hamming(code, *gray_);
    }

    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const auto& wf = weights_[i];
        const auto d = min_weight(code, wf);
        record.min_weights.push_back(d);
        const Rational dd = d.value_or(Rational(1));
        const Rational& a = wf.max_coeff();

        const BoundReport floor_report = shiromoto_floor_check(n, m, record.size, dd, a);
        const BoundReport gray_report = gray_singleton_check(n, p, record.size, dd, a);
        const BoundReport strong_report = strong_singleton_check(n, m, record.size, dd, a, evidence_[i]);
        push(floor_report);
        push(gray_report);
        push(strong_report);
        if (const auto slot = zl_slot_[i]) {
            ZlDistances zd;
            std::optional<Rational>* targets[] = {&zd.hamming, &zd.lee, &zd.euclidean};
            *targets[*slot] = d;
            push(corollary_zl_check(m, n, record.size, zd)[*slot]);
        }
        if (is_direct_field_hamming(ring_, wf)) {
            if (d) {
                push(field_singleton_check(n, m, record.size, static_cast<std::size_t>(d->numerator())));
            } else {
                BoundReport na;
                na.id = BoundId::FieldSingleton;
                na.reason = "code has no nonzero codeword";
                na.inputs = {n, record.size, m, std::nullopt, std::nullopt, std::nullopt};
                push(na);
            }
        }

        if (strong_report.applicable && strong_report.holds && !floor_report.holds)
            record.crosscheck_failures.push_back("StrongSingleton holds but ShiromotoFloor fails for " + wf.name());
        if (gray_ && evidence_[i].isometric == Verdict::True && d) {
            const Rational image_d(static_cast<std::int64_t>(record.image_min_hamming.value_or(0)));
            if (image_d != *d)
                record.crosscheck_failures.push_back("Gray image distance differs from minimum " + wf.name() + " weight");
            if (*record.image_size != record.size)
                record.crosscheck_failures.push_back("isometric Gray map collapsed codewords");
        }
    }

    if (gray_) {
        const std::size_t image_length = gray_->length() * n;
        BoundReport report;
        if (record.image_min_hamming) {
            report = field_singleton_check(image_length, gray_->prime(), *record.image_size, *record.image_min_hamming);
        } else {
            report.id = BoundId::FieldSingleton;
            report.reason = "Gray image has fewer than two points";
            report.inputs = {image_length, *record.image_size, gray_->prime(), std::nullopt, std::nullopt, std::nullopt};
        }
        // On an isometric map with L = A the two routes compare the same integers.
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (evidence_[i].isometric != Verdict::True || !record.image_min_hamming) continue;
            if (weights_[i].max_coeff() != Rational(static_cast<std::int64_t>(gray_->length()))) continue;
            const auto it = std::find_if(record.reports.begin(), record.reports.end(), [&](const LabeledReport& r) {
                return r.label == to_string(BoundId::GraySingleton) + ":" + weights_[i].name();
            });
            if (it->report.holds != report.holds || it->report.tight != report.tight ||
                it->report.witness.left != report.witness.left || it->report.witness.right != report.witness.right)
                record.crosscheck_failures.push_back("FieldSingleton on the image disagrees with GraySingleton for " +
                                                     weights_[i].name());
        }
        push(std::move(report));
    }
    return record;
}

ScanResult run_scan(const ScanConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const CodeEvaluator evaluator(config.ring, config.weights, config.gray);
    const auto codes = enumerate_codes(config.ring, config.n, config.max_rows, config.budget);

    ScanResult result;
    result.records.resize(codes.size(), CodeRecord{codes.front().generator, 0, {}, {}, {}, {}, {}});
    const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(codes.size())));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < codes.size(); i += workers)
            result.records[i] = evaluator.evaluate(codes[i].code, codes[i].generator);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    ScanSummary& summary = result.summary;
    summary.ring = config.ring.name();
    summary.n = config.n;
    summary.max_rows = config.max_rows;
    for (const auto& wf : config.weights) summary.weights.push_back(wf.name());
    if (config.gray) summary.gray = config.gray->domain().name() + "->F" + std::to_string(config.gray->prime()) + "^" +
                                    std::to_string(config.gray->length());
    for (const auto& label : evaluator.labels()) summary.tallies[label];
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const CodeRecord& record = result.records[i];
        ++summary.codes_examined;
        if (codes[i].code.is_zero()) ++summary.zero_codes;
        summary.crosscheck_failures += record.crosscheck_failures.size();
        for (const auto& [label, report] : record.reports) {
            BoundTally& tally = summary.tallies[label];
            if (!report.applicable) {
                ++tally.not_applicable;
                continue;
            }
            ++tally.evaluated;
            if (report.holds) {
                ++tally.holds;
            } else {
                ++tally.violations;
                summary.violations.push_back({record.generator, label});
            }
            if (report.tight) {
                ++tally.tight;
                summary.tight_codes.push_back({record.generator, label});
            }
        }
    }
    summary.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace ringcode
