#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringcode/gray.hpp"
#include "ringcode/rational.hpp"

namespace ringcode {

enum class BoundId { FieldSingleton, ShiromotoFloor, GraySingleton, StrongSingleton, ZlHamming, ZlLee, ZlEuclidean };

std::string to_string(BoundId id);
BoundId parse_bound_id(std::string_view text);

/// Each bound is decided as size^size_exponent <= base^base_exponent.
///
/// left and right are the two integers actually compared. A negative
/// base_exponent moves base^-base_exponent to the left, leaving right = 1.
struct Witness {
    BigInt left = 0;
    BigInt right = 0;
    std::int64_t size_exponent = 0;
    std::int64_t base_exponent = 0;
    bool operator==(const Witness&) const = default;
};

struct BoundInputs {
    std::size_t n = 0;
    std::uint64_t size = 0;
    /// M, q or p depending on the bound.
    unsigned base = 0;
    std::optional<Rational> d;
    std::optional<Rational> max_coeff;
    std::optional<unsigned> modulus;  // l, for the Z_l forms
    bool operator==(const BoundInputs&) const = default;
};

struct BoundReport {
    BoundId id = BoundId::FieldSingleton;
    bool applicable = false;
    std::string reason;
    bool holds = true;
    bool tight = false;
    Witness witness;
    BoundInputs inputs;
    bool operator==(const BoundReport&) const = default;
};

/// size <= q^(n - d + 1).
BoundReport field_singleton_check(std::size_t n, unsigned q, std::uint64_t size, std::size_t d);

/// size <= M^(n - floor((d - 1) / A)).
BoundReport shiromoto_floor_check(std::size_t n, unsigned modulus, std::uint64_t size, const Rational& d,
                                  const Rational& max_coeff);

/// d <= A n - log_p size + 1, denominators of d and A cleared.
BoundReport gray_singleton_check(std::size_t n, unsigned p, std::uint64_t size, const Rational& d,
                                 const Rational& max_coeff);

/// (d - 1) / A <= n - log_M size. Applicable only when the evidence shows a
/// bijective isometric Gray map.
BoundReport strong_singleton_check(std::size_t n, unsigned modulus, std::uint64_t size, const Rational& d,
                                   const Rational& max_coeff, const GrayFlags& evidence);

struct ZlDistances {
    std::optional<Rational> hamming, lee, euclidean;
};

struct ZlEvidence {
    std::optional<GrayFlags> hamming, lee, euclidean;
};

/// The three Z_l bounds against p = min prime with A = 1, floor(l/2),
/// floor(l/2)^2, followed by the strong form of each one for which
/// evidence was supplied.
std::vector<BoundReport> corollary_zl_check(unsigned modulus, std::size_t n, std::uint64_t size,
                                            const ZlDistances& d, const ZlEvidence& evidence = {});

/// Recomputes left <= right from the stored witness integers.
bool witness_holds(const Witness& w);

}  // namespace ringcode
