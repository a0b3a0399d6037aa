#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringcode/rational.hpp"
#include "ringcode/ring.hpp"

namespace ringcode {

/// Counts n_r(c): how many coordinates of c equal r, indexed by element code.
struct CompleteWeightProfile {
    std::vector<std::size_t> counts;
    bool operator==(const CompleteWeightProfile&) const = default;
};

/// A general weight w(c) = sum_r a_r n_r(c) with a_0 = 0 and a_r > 0 otherwise.
class WeightFunction {
  public:
    WeightFunction(Ring ring, std::string name, std::vector<Rational> coeffs);

    const Ring& ring() const { return ring_; }
    const std::string& name() const { return name_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& coeff(Element r) const { return coeffs_.at(r); }

    /// A = max a_r.
    const Rational& max_coeff() const { return max_; }
    /// True iff a_r = a_{-r} for every r.
    bool is_symmetric() const;
    /// True iff every a_r is an integer.
    bool is_integral() const;

    /// Weight of a raw coordinate sequence; entries must be valid codes.
    Rational weight(std::span<const Element> v) const;

    bool operator==(const WeightFunction& other) const {
        return ring_ == other.ring_ && name_ == other.name_ && coeffs_ == other.coeffs_;
    }

  private:
    Ring ring_;
    std::string name_;
    std::vector<Rational> coeffs_;
    Rational max_;
    // coeffs_ over a common denominator, for allocation-free summation
    std::vector<std::int64_t> scaled_;
    std::int64_t denominator_ = 1;
};

CompleteWeightProfile complete_weight(const RingVector& v);
Rational general_weight(const WeightFunction& wf, const RingVector& v);
/// d(x, y) = w(x - y).
Rational distance(const WeightFunction& wf, const RingVector& x, const RingVector& y);

WeightFunction hamming_wf(const Ring& ring);
WeightFunction lee_wf_zl(unsigned modulus);
WeightFunction euclidean_wf_zl(unsigned modulus);
WeightFunction lee_wf_f2u();
WeightFunction euclidean_wf_f2u();
/// Derived from the Hamming weight of f2uv_gray_formula.
WeightFunction lee_wf_f2uv();

/// `hamming`, `lee` or `euclidean` for the given ring; throws if the ring has no such table.
WeightFunction builtin_wf(const Ring& ring, std::string_view name);

/// a + ub + vc + uvd -> (a+b+c+d, c+d, b+d, d) over F2.
std::array<std::uint8_t, 4> f2uv_gray_formula(Element x);

}  // namespace ringcode
