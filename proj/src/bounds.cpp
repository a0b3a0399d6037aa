#include "ringcode/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "ringcode/ring.hpp"

namespace ringcode {

namespace {

constexpr const char* kBoundNames[] = {"FieldSingleton", "ShiromotoFloor", "GraySingleton", "StrongSingleton",
                                       "Zl_Hamming",     "Zl_Lee",         "Zl_Euclidean"};

constexpr std::int64_t kMaxExponent = 1 << 20;

BigInt power(unsigned base, std::int64_t exponent) {
    if (exponent > kMaxExponent) throw std::range_error("bound exponent " + std::to_string(exponent) + " is too large");
    BigInt out = 1;
    BigInt b = base;
    for (std::int64_t e = exponent; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

std::int64_t to_exponent(const Rational& value) {
    if (!is_integer(value)) throw std::logic_error("non-integer exponent after clearing denominators");
    return value.numerator();
}

// size^a <= base^e, with e of either sign.
void decide(BoundReport& report, std::uint64_t size, std::int64_t size_exponent, unsigned base,
            std::int64_t base_exponent) {
    Witness& w = report.witness;
    w.size_exponent = size_exponent;
    w.base_exponent = base_exponent;
    if (size_exponent > kMaxExponent) throw std::range_error("bound exponent is too large");
    w.left = 1;
    for (std::int64_t i = 0; i < size_exponent; ++i) w.left *= size;
    if (base_exponent >= 0) {
        w.right = power(base, base_exponent);
    } else {
        w.left *= power(base, -base_exponent);
        w.right = 1;
    }
    report.applicable = true;
    report.holds = w.left <= w.right;
    report.tight = w.left == w.right;
}

BoundReport not_applicable(BoundId id, BoundInputs inputs, std::string reason) {
    BoundReport report;
    report.id = id;
    report.applicable = false;
    report.reason = std::move(reason);
    report.holds = true;
    report.tight = false;
    report.inputs = std::move(inputs);
    return report;
}

void require_positive(const Rational& d, const Rational& max_coeff) {
    if (d <= Rational(0)) throw std::invalid_argument("minimum weight must be positive");
    if (max_coeff <= Rational(0)) throw std::invalid_argument("maximum weight coefficient must be positive");
}

std::int64_t common_denominator(const Rational& a, const Rational& b) {
    return std::lcm(a.denominator(), b.denominator());
}

}  // namespace

std::string to_string(BoundId id) { return kBoundNames[static_cast<int>(id)]; }

BoundId parse_bound_id(std::string_view text) {
    for (int i = 0; i < 7; ++i)
        if (text == kBoundNames[i]) return static_cast<BoundId>(i);
    throw std::invalid_argument("unknown bound '" + std::string(text) + "'");
}

bool witness_holds(const Witness& w) { return w.left <= w.right; }

BoundReport field_singleton_check(std::size_t n, unsigned q, std::uint64_t size, std::size_t d) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (size < 1) throw std::invalid_argument("code must be nonempty");
    if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
    if (d > n) throw std::invalid_argument("minimum distance " + std::to_string(d) + " exceeds length " + std::to_string(n));
    BoundReport report;
    report.id = BoundId::FieldSingleton;
    report.inputs = {n, size, q, Rational(static_cast<std::int64_t>(d)), std::nullopt, std::nullopt};
    decide(report, size, 1, q, static_cast<std::int64_t>(n) - static_cast<std::int64_t>(d) + 1);
    return report;
}

BoundReport shiromoto_floor_check(std::size_t n, unsigned modulus, std::uint64_t size, const Rational& d,
                                  const Rational& max_coeff) {
    BoundInputs inputs{n, size, modulus, d, max_coeff, std::nullopt};
    if (size < 2) return not_applicable(BoundId::ShiromotoFloor, inputs, "code has no nonzero codeword");
    require_positive(d, max_coeff);
    BoundReport report;
    report.id = BoundId::ShiromotoFloor;
    report.inputs = inputs;
    const std::int64_t t = floor((d - 1) / max_coeff);
    decide(report, size, 1, modulus, static_cast<std::int64_t>(n) - t);
    return report;
}

BoundReport gray_singleton_check(std::size_t n, unsigned p, std::uint64_t size, const Rational& d,
                                 const Rational& max_coeff) {
    BoundInputs inputs{n, size, p, d, max_coeff, std::nullopt};
    if (size < 2) return not_applicable(BoundId::GraySingleton, inputs, "code has no nonzero codeword");
    require_positive(d, max_coeff);
    BoundReport report;
    report.id = BoundId::GraySingleton;
    report.inputs = inputs;
    const std::int64_t D = common_denominator(d, max_coeff);
    const Rational exponent = (max_coeff * static_cast<std::int64_t>(n) + 1 - d) * D;
    decide(report, size, D, p, to_exponent(exponent));
    return report;
}

BoundReport strong_singleton_check(std::size_t n, unsigned modulus, std::uint64_t size, const Rational& d,
                                   const Rational& max_coeff, const GrayFlags& evidence) {
    BoundInputs inputs{n, size, modulus, d, max_coeff, std::nullopt};
    if (evidence.bijective != Verdict::True || evidence.isometric != Verdict::True)
        return not_applicable(BoundId::StrongSingleton, inputs, "no bijective isometric Gray map");
    if (size < 2) return not_applicable(BoundId::StrongSingleton, inputs, "code has no nonzero codeword");
    require_positive(d, max_coeff);
    BoundReport report;
    report.id = BoundId::StrongSingleton;
    report.inputs = inputs;
    const std::int64_t an = max_coeff.numerator(), ad = max_coeff.denominator();
    const std::int64_t dn = d.numerator(), dd = d.denominator();
    decide(report, size, an * dd, modulus, an * dd * static_cast<std::int64_t>(n) - ad * (dn - dd));
    return report;
}

std::vector<BoundReport> corollary_zl_check(unsigned modulus, std::size_t n, std::uint64_t size,
                                            const ZlDistances& d, const ZlEvidence& evidence) {
    if (modulus < 2) throw std::invalid_argument("Z_l requires l >= 2");
    const unsigned p = factorize(modulus).front().prime;
    const std::int64_t l1 = modulus / 2;
    const Rational coeffs[] = {Rational(1), Rational(l1), Rational(l1 * l1)};
    const BoundId ids[] = {BoundId::ZlHamming, BoundId::ZlLee, BoundId::ZlEuclidean};
    const std::optional<Rational>* distances[] = {&d.hamming, &d.lee, &d.euclidean};
    const std::optional<GrayFlags>* flags[] = {&evidence.hamming, &evidence.lee, &evidence.euclidean};

    std::vector<BoundReport> out;
    for (int i = 0; i < 3; ++i) {
        BoundReport report;
        if (distances[i]->has_value()) {
            report = gray_singleton_check(n, p, size, **distances[i], coeffs[i]);
        } else {
            report = not_applicable(ids[i], {n, size, p, std::nullopt, coeffs[i], std::nullopt},
                                    "code has no nonzero codeword");
        }
        report.id = ids[i];
        report.inputs.modulus = modulus;
        out.push_back(std::move(report));
    }
    for (int i = 0; i < 3; ++i) {
        if (!flags[i]->has_value()) continue;
        BoundReport report;
        if (distances[i]->has_value()) {
            report = strong_singleton_check(n, modulus, size, **distances[i], coeffs[i], **flags[i]);
        } else {
            report = not_applicable(BoundId::StrongSingleton, {n, size, modulus, std::nullopt, coeffs[i], std::nullopt},
                                    "code has no nonzero codeword");
        }
        report.inputs.modulus = modulus;
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace ringcode
