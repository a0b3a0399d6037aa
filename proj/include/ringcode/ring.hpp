#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringcode {

/// Canonical integer code of a ring element, in [0, M).
///
/// ZMod / PrimeField: the residue. F2U: a + ub -> a + 2b.
/// F2UV: a + ub + vc + uvd -> a + 2b + 4c + 8d.
using Element = std::uint8_t;

enum class Family { ZMod, F2U, F2UV, PrimeField };

struct PrimePower {
    unsigned prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

inline constexpr unsigned kMaxModulus = 64;

/// One of the four supported finite commutative ring families.
///
/// Addition and multiplication are precomputed into M x M tables at
/// construction; copies share the tables.
class Ring {
  public:
    static Ring zmod(unsigned modulus);
    static Ring f2u();
    static Ring f2uv();
    static Ring prime_field(unsigned p);

    /// Parses a ring selector: `Z<l>`, `F2U`, `F2UV` or `F<p>`.
    static Ring parse(std::string_view name);

    Family family() const { return family_; }
    unsigned cardinality() const { return cardinality_; }
    unsigned characteristic() const { return characteristic_; }
    const std::vector<PrimePower>& factorization() const { return factorization_; }
    /// Smallest prime dividing the cardinality.
    unsigned min_prime() const { return factorization_.front().prime; }
    std::string name() const;

    Element add(Element x, Element y) const;
    Element neg(Element x) const;
    Element sub(Element x, Element y) const;
    Element mul(Element x, Element y) const;

    /// Unchecked table lookups for inner loops; callers guarantee x, y < M.
    Element add_unchecked(Element x, Element y) const { return tables_->add[x * cardinality_ + y]; }
    Element mul_unchecked(Element x, Element y) const { return tables_->mul[x * cardinality_ + y]; }
    Element neg_unchecked(Element x) const { return tables_->neg[x]; }

    /// All codes 0..M-1 in increasing order.
    std::vector<Element> elements() const;

    bool contains(unsigned code) const { return code < cardinality_; }

    std::string format(Element x) const;
    Element parse_element(std::string_view token) const;

    bool operator==(const Ring& other) const {
        return family_ == other.family_ && cardinality_ == other.cardinality_;
    }

  private:
    struct Tables {
        std::vector<Element> add;
        std::vector<Element> mul;
        std::vector<Element> neg;
    };

    Ring(Family family, unsigned cardinality, unsigned characteristic);
    void check(Element x) const;

    Family family_;
    unsigned cardinality_;
    unsigned characteristic_;
    std::vector<PrimePower> factorization_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(unsigned value);
std::vector<PrimePower> factorize(unsigned value);

/// An element of R^n.
struct RingVector {
    Ring ring;
    std::vector<Element> entries;

    RingVector(Ring r, std::vector<Element> e);
    std::size_t size() const { return entries.size(); }
    bool operator==(const RingVector& other) const = default;
};

RingVector operator+(const RingVector& x, const RingVector& y);
RingVector operator-(const RingVector& x, const RingVector& y);
RingVector operator-(const RingVector& x);
RingVector scale(Element lambda, const RingVector& x);
/// Concatenation x || y.
RingVector concat(const RingVector& x, const RingVector& y);

}  // namespace ringcode
