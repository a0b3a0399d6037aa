#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringcode/gray.hpp"
#include "ringcode/rational.hpp"
#include "ringcode/ring.hpp"
#include "ringcode/weights.hpp"

namespace ringcode {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GeneratorMatrix {
    Ring ring;
    std::size_t length;
    std::vector<std::vector<Element>> rows;

    /// Throws on an empty row list, ragged rows, or codes outside the ring.
    GeneratorMatrix(Ring r, std::vector<std::vector<Element>> rs);
    GeneratorMatrix(Ring r, std::size_t n, std::vector<std::vector<Element>> rs);

    bool operator==(const GeneratorMatrix& other) const = default;
};

/// An R-submodule of R^n stored as its sorted, deduplicated codeword set.
class LinearCode {
  public:
    /// The zero code {0} of length n.
    LinearCode(Ring ring, std::size_t length);

    const Ring& ring() const { return ring_; }
    std::size_t length() const { return length_; }
    std::size_t size() const { return length_ == 0 ? 1 : words_.size() / length_; }
    bool is_zero() const { return size() == 1; }

    std::span<const Element> codeword(std::size_t i) const {
        return std::span<const Element>(words_).subspan(i * length_, length_);
    }
    /// Codewords concatenated in lexicographic order.
    const std::vector<Element>& flat() const { return words_; }
    bool contains(std::span<const Element> word) const;

    /// C + R*row.
    LinearCode extended(std::span<const Element> row) const;

    bool operator==(const LinearCode& other) const { return ring_ == other.ring_ && length_ == other.length_ && words_ == other.words_; }
    /// Canonical order: by size, then by codeword list.
    bool operator<(const LinearCode& other) const;

  private:
    LinearCode(Ring ring, std::size_t length, std::vector<std::vector<Element>> words);

    Ring ring_;
    std::size_t length_;
    std::vector<Element> words_;
};

/// { sum lambda_i row_i : lambda_i in R }. Requires M^k <= budget for k rows.
LinearCode span(const GeneratorMatrix& g, std::uint64_t budget = kDefaultBudget);

/// Minimum general weight over nonzero codewords; empty for the zero code.
std::optional<Rational> min_weight(const LinearCode& code, const WeightFunction& wf);

/// Minimum Hamming distance between distinct Gray images; empty when fewer than two images exist.
std::optional<std::size_t> gray_image_min_hamming(const LinearCode& code, const GrayMap& gm);

/// Number of distinct Gray images.
std::size_t image_size(const LinearCode& code, const GrayMap& gm);

}  // namespace ringcode
