#include "ringcode/ring.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace ringcode {

namespace {

// Coefficient vectors over F2 for the polynomial-quotient families.
struct Coeffs {
    unsigned a, b, c, d;
};

Coeffs unpack(Element x) { return {x & 1u, (x >> 1) & 1u, (x >> 2) & 1u, (x >> 3) & 1u}; }

Element pack(const Coeffs& k) {
    return static_cast<Element>((k.a & 1u) | ((k.b & 1u) << 1) | ((k.c & 1u) << 2) | ((k.d & 1u) << 3));
}

// u^2 = v^2 = 0, uv = vu.
Element mul_f2uv(Element x, Element y) {
    const Coeffs p = unpack(x);
    const Coeffs q = unpack(y);
    return pack({p.a * q.a, p.a * q.b + p.b * q.a, p.a * q.c + p.c * q.a,
                 p.a * q.d + p.d * q.a + p.b * q.c + p.c * q.b});
}

std::optional<unsigned> parse_unsigned(std::string_view text) {
    unsigned value = 0;
    if (text.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace

bool is_prime(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(unsigned value) {
    std::vector<PrimePower> out;
    for (unsigned p = 2; p * p <= value; ++p) {
        if (value % p != 0) continue;
        PrimePower pp{p, 0};
        while (value % p == 0) {
            value /= p;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (value > 1) out.push_back({value, 1});
    return out;
}

Ring::Ring(Family family, unsigned cardinality, unsigned characteristic)
    : family_(family),
      cardinality_(cardinality),
      characteristic_(characteristic),
      factorization_(factorize(cardinality)) {
    auto t = std::make_shared<Tables>();
    const unsigned m = cardinality_;
    t->add.resize(m * m);
    t->mul.resize(m * m);
    t->neg.resize(m);
    for (unsigned x = 0; x < m; ++x) {
        for (unsigned y = 0; y < m; ++y) {
            Element s = 0;
            Element p = 0;
            switch (family_) {
                case Family::ZMod:
                case Family::PrimeField:
                    s = static_cast<Element>((x + y) % m);
                    p = static_cast<Element>((x * y) % m);
                    break;
                case Family::F2U:
                case Family::F2UV:
                    s = static_cast<Element>(x ^ y);
                    p = mul_f2uv(static_cast<Element>(x), static_cast<Element>(y));
                    break;
            }
            t->add[x * m + y] = s;
            t->mul[x * m + y] = p;
        }
        t->neg[x] = (family_ == Family::F2U || family_ == Family::F2UV) ? static_cast<Element>(x)
                                                                          : static_cast<Element>((m - x) % m);
    }
    tables_ = std::move(t);
}

Ring Ring::zmod(unsigned modulus) {
    if (modulus < 2) throw std::invalid_argument("Z_l requires l >= 2");
    if (modulus > kMaxModulus) throw std::invalid_argument("Z_l is capped at l <= 64");
    return Ring(Family::ZMod, modulus, modulus);
}

Ring Ring::f2u() { return Ring(Family::F2U, 4, 2); }

Ring Ring::f2uv() { return Ring(Family::F2UV, 16, 2); }

Ring Ring::prime_field(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("F_p requires a prime p, got " + std::to_string(p));
    if (p > kMaxModulus) throw std::invalid_argument("F_p is capped at p <= 64");
    return Ring(Family::PrimeField, p, p);
}

Ring Ring::parse(std::string_view name) {
    if (name == "F2U") return f2u();
    if (name == "F2UV") return f2uv();
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'F')) {
        if (auto v = parse_unsigned(name.substr(1))) return name[0] == 'Z' ? zmod(*v) : prime_field(*v);
    }
    throw std::invalid_argument("unknown ring '" + std::string(name) + "' (expected Z<l>, F<p>, F2U or F2UV)");
}

std::string Ring::name() const {
    switch (family_) {
        case Family::ZMod: return "Z" + std::to_string(cardinality_);
        case Family::PrimeField: return "F" + std::to_string(cardinality_);
        case Family::F2U: return "F2U";
        case Family::F2UV: return "F2UV";
    }
    return {};
}

void Ring::check(Element x) const {
    if (x >= cardinality_)
        throw std::out_of_range("element code " + std::to_string(x) + " is not in " + name());
}

Element Ring::add(Element x, Element y) const {
    check(x);
    check(y);
    return add_unchecked(x, y);
}

Element Ring::neg(Element x) const {
    check(x);
    return neg_unchecked(x);
}

Element Ring::sub(Element x, Element y) const {
    check(x);
    check(y);
    return add_unchecked(x, neg_unchecked(y));
}

Element Ring::mul(Element x, Element y) const {
    check(x);
    check(y);
    return mul_unchecked(x, y);
}

std::vector<Element> Ring::elements() const {
    std::vector<Element> out(cardinality_);
    for (unsigned i = 0; i < cardinality_; ++i) out[i] = static_cast<Element>(i);
    return out;
}

std::string Ring::format(Element x) const {
    check(x);
    switch (family_) {
        case Family::ZMod:
        case Family::PrimeField: return std::to_string(x);
        case Family::F2U:
        case Family::F2UV: {
            if (x == 0) return "0";
            static constexpr const char* kTerms[] = {"1", "u", "v", "uv"};
            std::string out;
            for (unsigned bit = 0; bit < 4; ++bit) {
                if (!(x & (1u << bit))) continue;
                if (!out.empty()) out += '+';
                out += kTerms[bit];
            }
            return out;
        }
    }
    return {};
}

Element Ring::parse_element(std::string_view token) const {
    auto fail = [&]() -> Element {
        throw std::invalid_argument("'" + std::string(token) + "' is not an element of " + name());
    };
    switch (family_) {
        case Family::ZMod:
        case Family::PrimeField: {
            auto v = parse_unsigned(token);
            if (!v || *v >= cardinality_) return fail();
            return static_cast<Element>(*v);
        }
        case Family::F2U:
        case Family::F2UV: {
            if (family_ == Family::F2UV) {
                if (auto v = parse_unsigned(token)) {
                    if (*v >= cardinality_) return fail();
                    return static_cast<Element>(*v);
                }
            }
            if (token == "0") return 0;
            const std::string_view terms[] = {"1", "u", "v", "uv"};
            const unsigned term_count = family_ == Family::F2U ? 2 : 4;
            unsigned code = 0;
            int last = -1;
            std::size_t pos = 0;
            while (pos <= token.size()) {
                const std::size_t plus = std::min(token.find('+', pos), token.size());
                const std::string_view term = token.substr(pos, plus - pos);
                const auto it = std::find(terms, terms + term_count, term);
                const int index = static_cast<int>(it - terms);
                // canonical order: constant, u, v, uv; no repeats
                if (it == terms + term_count || index <= last) return fail();
                code |= 1u << index;
                last = index;
                pos = plus + 1;
            }
            return static_cast<Element>(code);
        }
    }
    return fail();
}

RingVector::RingVector(Ring r, std::vector<Element> e) : ring(std::move(r)), entries(std::move(e)) {
    for (Element x : entries)
        if (!ring.contains(x))
            throw std::out_of_range("element code " + std::to_string(x) + " is not in " + ring.name());
}

namespace {

void require_compatible(const RingVector& x, const RingVector& y) {
    if (!(x.ring == y.ring)) throw std::invalid_argument("vectors over different rings");
    if (x.size() != y.size()) throw std::invalid_argument("vectors of different lengths");
}

}  // namespace

RingVector operator+(const RingVector& x, const RingVector& y) {
    require_compatible(x, y);
    std::vector<Element> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.ring.add_unchecked(x.entries[i], y.entries[i]);
    return {x.ring, std::move(out)};
}

RingVector operator-(const RingVector& x) {
    std::vector<Element> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.ring.neg_unchecked(x.entries[i]);
    return {x.ring, std::move(out)};
}

RingVector operator-(const RingVector& x, const RingVector& y) { return x + (-y); }

RingVector scale(Element lambda, const RingVector& x) {
    std::vector<Element> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.ring.mul(lambda, x.entries[i]);
    return {x.ring, std::move(out)};
}

RingVector concat(const RingVector& x, const RingVector& y) {
    if (!(x.ring == y.ring)) throw std::invalid_argument("vectors over different rings");
    std::vector<Element> out = x.entries;
    out.insert(out.end(), y.entries.begin(), y.entries.end());
    return {x.ring, std::move(out)};
}

}  // namespace ringcode
