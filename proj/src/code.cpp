#include "ringcode/code.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ringcode {

namespace {

void validate(const GeneratorMatrix& g) {
    const auto& ring = g.ring;
    const auto& rows = g.rows;
    const std::size_t length = g.length;
    if (rows.empty()) throw std::invalid_argument("generator matrix needs at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != length)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has length " + std::to_string(rows[i].size()) +
                                        ", expected " + std::to_string(length));
        for (Element x : rows[i])
            if (!ring.contains(x)) throw std::out_of_range("element code " + std::to_string(x) + " is not in " + ring.name());
    }
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(Ring r, std::vector<std::vector<Element>> rs)
    : ring(std::move(r)), length(rs.empty() ? 0 : rs.front().size()), rows(std::move(rs)) {
    validate(*this);
}

GeneratorMatrix::GeneratorMatrix(Ring r, std::size_t n, std::vector<std::vector<Element>> rs)
    : ring(std::move(r)), length(n), rows(std::move(rs)) {
    validate(*this);
}

LinearCode::LinearCode(Ring ring, std::size_t length)
    : ring_(std::move(ring)), length_(length), words_(length, 0) {}

LinearCode::LinearCode(Ring ring, std::size_t length, std::vector<std::vector<Element>> words)
    : ring_(std::move(ring)), length_(length) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_.reserve(words.size() * length_);
    for (const auto& w : words) words_.insert(words_.end(), w.begin(), w.end());
}

bool LinearCode::contains(std::span<const Element> word) const {
    if (word.size() != length_) return false;
    if (length_ == 0) return true;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto c = codeword(mid);
        if (std::lexicographical_compare(c.begin(), c.end(), word.begin(), word.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && std::equal(word.begin(), word.end(), codeword(lo).begin());
}

LinearCode LinearCode::extended(std::span<const Element> row) const {
    if (row.size() != length_) throw std::invalid_argument("row length does not match code length");
    std::vector<std::vector<Element>> multiples;
    for (Element lambda : ring_.elements()) {
        std::vector<Element> m(length_);
        for (std::size_t j = 0; j < length_; ++j) m[j] = ring_.mul_unchecked(lambda, row[j]);
        multiples.push_back(std::move(m));
    }
    std::sort(multiples.begin(), multiples.end());
    multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());

    std::vector<std::vector<Element>> words;
    words.reserve(size() * multiples.size());
    for (std::size_t i = 0; i < size(); ++i) {
        const auto c = codeword(i);
        for (const auto& m : multiples) {
            std::vector<Element> w(length_);
            for (std::size_t j = 0; j < length_; ++j) w[j] = ring_.add_unchecked(c[j], m[j]);
            words.push_back(std::move(w));
        }
    }
    return LinearCode(ring_, length_, std::move(words));
}

bool LinearCode::operator<(const LinearCode& other) const {
    if (size() != other.size()) return size() < other.size();
    return words_ < other.words_;
}

LinearCode span(const GeneratorMatrix& g, std::uint64_t budget) {
    BigInt combinations = 1;
    for (std::size_t i = 0; i < g.rows.size(); ++i) combinations *= g.ring.cardinality();
    if (combinations > budget)
        throw BudgetExceeded("span of " + std::to_string(g.rows.size()) + " rows over " + g.ring.name() + " needs " +
                             combinations.str() + " combinations, budget is " + std::to_string(budget));
    LinearCode code(g.ring, g.length);
    for (const auto& row : g.rows) code = code.extended(row);
    return code;
}

std::optional<Rational> min_weight(const LinearCode& code, const WeightFunction& wf) {
    if (!(wf.ring() == code.ring())) throw std::invalid_argument("weight function and code are over different rings");
    std::optional<Rational> best;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto c = code.codeword(i);
        if (std::all_of(c.begin(), c.end(), [](Element x) { return x == 0; })) continue;
        const Rational w = wf.weight(c);
        if (!best || w < *best) best = w;
    }
    return best;
}

namespace {

std::vector<FieldVector> distinct_images(const LinearCode& code, const GrayMap& gm) {
    if (!(gm.domain() == code.ring())) throw std::invalid_argument("Gray map and code are over different rings");
    std::vector<FieldVector> images;
    images.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) images.push_back(apply(gm, code.codeword(i)));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

}  // namespace

std::optional<std::size_t> gray_image_min_hamming(const LinearCode& code, const GrayMap& gm) {
    // the image need not be linear, so every pair is compared
    const auto images = distinct_images(code, gm);
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            const std::size_t d = hamming_distance(images[i], images[j]);
            if (!best || d < *best) best = d;
        }
    return best;
}

std::size_t image_size(const LinearCode& code, const GrayMap& gm) { return distinct_images(code, gm).size(); }

}  // namespace ringcode
