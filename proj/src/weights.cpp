#include "ringcode/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringcode {

WeightFunction::WeightFunction(Ring ring, std::string name, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), name_(std::move(name)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_.cardinality())
        throw std::invalid_argument("weight table for " + ring_.name() + " needs " +
                                    std::to_string(ring_.cardinality()) + " entries, got " +
                                    std::to_string(coeffs_.size()));
    if (coeffs_[0] != Rational(0)) throw std::invalid_argument("weight of the zero element must be 0");
    for (std::size_t r = 1; r < coeffs_.size(); ++r)
        if (coeffs_[r] <= Rational(0))
            throw std::invalid_argument("weight of nonzero element " + ring_.format(static_cast<Element>(r)) +
                                        " must be positive");
    max_ = *std::max_element(coeffs_.begin(), coeffs_.end());
    for (const auto& a : coeffs_) denominator_ = std::lcm(denominator_, a.denominator());
    scaled_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) scaled_.push_back(a.numerator() * (denominator_ / a.denominator()));
}

bool WeightFunction::is_symmetric() const {
    for (unsigned r = 0; r < ring_.cardinality(); ++r)
        if (coeffs_[r] != coeffs_[ring_.neg_unchecked(static_cast<Element>(r))]) return false;
    return true;
}

bool WeightFunction::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& a) { return is_integer(a); });
}

Rational WeightFunction::weight(std::span<const Element> v) const {
    std::int64_t total = 0;
    for (Element x : v) total += scaled_[x];
    return Rational(total, denominator_);
}

CompleteWeightProfile complete_weight(const RingVector& v) {
    CompleteWeightProfile profile{std::vector<std::size_t>(v.ring.cardinality(), 0)};
    for (Element x : v.entries) ++profile.counts[x];
    return profile;
}

Rational general_weight(const WeightFunction& wf, const RingVector& v) {
    if (!(wf.ring() == v.ring))
        throw std::invalid_argument("weight function over " + wf.ring().name() + " applied to a vector over " +
                                    v.ring.name());
    return wf.weight(v.entries);
}

Rational distance(const WeightFunction& wf, const RingVector& x, const RingVector& y) {
    return general_weight(wf, x - y);
}

WeightFunction hamming_wf(const Ring& ring) {
    std::vector<Rational> coeffs(ring.cardinality(), Rational(1));
    coeffs[0] = 0;
    return {ring, "hamming", std::move(coeffs)};
}

namespace {

std::vector<Rational> lee_table(unsigned modulus, unsigned power) {
    std::vector<Rational> coeffs(modulus);
    for (unsigned a = 0; a < modulus; ++a) {
        const std::int64_t lee = std::min(a, modulus - a);
        coeffs[a] = power == 1 ? lee : lee * lee;
    }
    return coeffs;
}

}  // namespace

WeightFunction lee_wf_zl(unsigned modulus) { return {Ring::zmod(modulus), "lee", lee_table(modulus, 1)}; }

WeightFunction euclidean_wf_zl(unsigned modulus) {
    return {Ring::zmod(modulus), "euclidean", lee_table(modulus, 2)};
}

// codes: 0, 1, u, 1+u
WeightFunction lee_wf_f2u() { return {Ring::f2u(), "lee", {0, 1, 2, 1}}; }

WeightFunction euclidean_wf_f2u() { return {Ring::f2u(), "euclidean", {0, 1, 4, 1}}; }

std::array<std::uint8_t, 4> f2uv_gray_formula(Element x) {
    const unsigned a = x & 1u, b = (x >> 1) & 1u, c = (x >> 2) & 1u, d = (x >> 3) & 1u;
    return {static_cast<std::uint8_t>((a + b + c + d) & 1u), static_cast<std::uint8_t>((c + d) & 1u),
            static_cast<std::uint8_t>((b + d) & 1u), static_cast<std::uint8_t>(d)};
}

WeightFunction lee_wf_f2uv() {
    const Ring ring = Ring::f2uv();
    std::vector<Rational> coeffs;
    for (Element x : ring.elements()) {
        const auto image = f2uv_gray_formula(x);
        coeffs.emplace_back(std::count(image.begin(), image.end(), 1));
    }
    return {ring, "lee", std::move(coeffs)};
}

WeightFunction builtin_wf(const Ring& ring, std::string_view name) {
    if (name == "hamming") return hamming_wf(ring);
    const bool lee = name == "lee";
    const bool euclidean = name == "euclidean";
    if (lee || euclidean) {
        switch (ring.family()) {
            case Family::ZMod:
            case Family::PrimeField:
                return {ring, std::string(name), lee_table(ring.cardinality(), lee ? 1 : 2)};
            case Family::F2U: return lee ? lee_wf_f2u() : euclidean_wf_f2u();
            case Family::F2UV:
                if (lee) return lee_wf_f2uv();
                break;
        }
    }
    throw std::invalid_argument("no built-in weight '" + std::string(name) + "' for " + ring.name());
}

}  // namespace ringcode
