#include "ringcode/gray.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ringcode {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unverified: return "unverified";
        case Verdict::True: return "true";
        case Verdict::False: return "false";
    }
    return {};
}

GrayMap::GrayMap(Ring domain, unsigned prime, std::size_t length, std::vector<FieldVector> table, GrayFlags flags)
    : domain_(std::move(domain)), prime_(prime), length_(length), table_(std::move(table)), flags_(std::move(flags)) {
    if (!is_prime(prime_)) throw std::invalid_argument("Gray codomain must be a prime field, got p=" + std::to_string(prime_));
    if (length_ == 0) throw std::invalid_argument("Gray image length must be positive");
    if (table_.size() != domain_.cardinality())
        throw std::invalid_argument("Gray table for " + domain_.name() + " needs " +
                                    std::to_string(domain_.cardinality()) + " entries");
    for (std::size_t r = 0; r < table_.size(); ++r) {
        if (table_[r].size() != length_)
            throw std::invalid_argument("Gray image of " + domain_.format(static_cast<Element>(r)) + " has length " +
                                        std::to_string(table_[r].size()) + ", expected " + std::to_string(length_));
        for (auto c : table_[r])
            if (c >= prime_) throw std::invalid_argument("Gray image entry " + std::to_string(c) + " is not in F_" + std::to_string(prime_));
    }
    if (hamming_weight(table_[0]) != 0) throw std::invalid_argument("Gray image of 0 must be the zero vector");
}

GrayMap gray_z4() { return {Ring::zmod(4), 2, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}}; }

GrayMap gray_f2u() {
    const Ring ring = Ring::f2u();
    std::vector<FieldVector> table;
    for (Element x : ring.elements()) {
        const std::uint8_t a = x & 1u, b = (x >> 1) & 1u;
        table.push_back({b, static_cast<std::uint8_t>(a ^ b)});
    }
    return {ring, 2, 2, std::move(table)};
}

GrayMap gray_f2uv() {
    const Ring ring = Ring::f2uv();
    std::vector<FieldVector> table;
    for (Element x : ring.elements()) {
        const auto image = f2uv_gray_formula(x);
        table.emplace_back(image.begin(), image.end());
    }
    return {ring, 2, 4, std::move(table)};
}

GrayMap builtin_gray(const Ring& ring, std::string_view name) {
    if (name == "standard") {
        if (ring == Ring::f2u()) return gray_f2u();
        if (ring == Ring::f2uv()) return gray_f2uv();
        if (ring.family() == Family::ZMod && ring.cardinality() == 4) return gray_z4();
    }
    throw std::invalid_argument("no built-in Gray map '" + std::string(name) + "' for " + ring.name());
}

namespace {

// Shared preconditions of the general construction.
std::size_t construction_length(const Ring& ring, const WeightFunction& wf, unsigned prime) {
    if (!(wf.ring() == ring)) throw std::invalid_argument("weight function is over " + wf.ring().name() + ", not " + ring.name());
    if (!wf.is_integral()) throw std::invalid_argument("Gray construction requires integer-valued weights");
    if (!is_prime(prime) || ring.cardinality() % prime != 0)
        throw std::invalid_argument("Gray codomain prime " + std::to_string(prime) + " must be a prime dividing " +
                                    std::to_string(ring.cardinality()));
    return static_cast<std::size_t>(wf.max_coeff().numerator());
}

std::size_t symbol_weight(const WeightFunction& wf, Element r) {
    return static_cast<std::size_t>(wf.coeff(r).numerator());
}

}  // namespace

GrayMap build_general_gray(const Ring& ring, const WeightFunction& wf, unsigned prime,
                           const std::vector<SymbolImage>& assignment) {
    const std::size_t length = construction_length(ring, wf, prime);
    if (assignment.size() != ring.cardinality())
        throw std::invalid_argument("assignment needs one entry per element of " + ring.name());
    if (!assignment[0].support.empty() || !assignment[0].values.empty())
        throw std::invalid_argument("zero element must map to the zero vector");
    std::vector<FieldVector> table(ring.cardinality(), FieldVector(length, 0));
    for (unsigned r = 1; r < ring.cardinality(); ++r) {
        const auto& entry = assignment[r];
        const std::string label = ring.format(static_cast<Element>(r));
        const std::size_t w = symbol_weight(wf, static_cast<Element>(r));
        if (entry.support.size() != w)
            throw std::invalid_argument("support of " + label + " has size " + std::to_string(entry.support.size()) +
                                        " but w(" + label + ") = " + std::to_string(w));
        if (entry.values.size() != entry.support.size())
            throw std::invalid_argument("support and values of " + label + " differ in size");
        for (std::size_t i = 0; i < w; ++i) {
            const unsigned pos = entry.support[i];
            const unsigned value = entry.values[i];
            if (pos >= length) throw std::invalid_argument("support position " + std::to_string(pos) + " of " + label + " is out of range");
            if (table[r][pos] != 0) throw std::invalid_argument("repeated support position in " + label);
            if (value == 0) throw std::invalid_argument("zero value on the support of " + label);
            if (value >= prime) throw std::invalid_argument("value " + std::to_string(value) + " is not in F_" + std::to_string(prime));
            table[r][pos] = static_cast<std::uint8_t>(value);
        }
    }
    GrayFlags flags;
    flags.weight_preserving = Verdict::True;
    flags.weight_function = wf.name();
    return {ring, prime, length, std::move(table), std::move(flags)};
}

FieldVector apply(const GrayMap& gm, std::span<const Element> v) {
    FieldVector out;
    out.reserve(v.size() * gm.length());
    for (Element x : v) {
        const auto& image = gm.image(x);
        out.insert(out.end(), image.begin(), image.end());
    }
    return out;
}

FieldVector apply(const GrayMap& gm, const RingVector& v) {
    if (!(v.ring == gm.domain()))
        throw std::invalid_argument("Gray map over " + gm.domain().name() + " applied to a vector over " + v.ring.name());
    return apply(gm, std::span<const Element>(v.entries));
}

std::size_t hamming_weight(std::span<const std::uint8_t> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::uint8_t c) { return c != 0; }));
}

std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size()) throw std::invalid_argument("Hamming distance of vectors with different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

namespace {

void require_domain(const GrayMap& gm, const WeightFunction& wf) {
    if (!(gm.domain() == wf.ring()))
        throw std::invalid_argument("Gray map over " + gm.domain().name() + " checked against a weight over " + wf.ring().name());
}

Verdict verdict(bool ok) { return ok ? Verdict::True : Verdict::False; }

void record(GrayMap& gm, const WeightFunction& wf, Verdict GrayFlags::*field, bool ok) {
    GrayFlags flags = gm.flags();
    if (flags.weight_function != wf.name()) {
        // flags checked against another weight no longer apply
        flags.weight_preserving = Verdict::Unverified;
        flags.isometric = Verdict::Unverified;
        flags.weight_function = wf.name();
    }
    flags.*field = verdict(ok);
    gm.set_flags(std::move(flags));
}

}  // namespace

bool verify_weight_preserving(GrayMap& gm, const WeightFunction& wf) {
    require_domain(gm, wf);
    bool ok = true;
    for (Element r : gm.domain().elements())
        ok = ok && Rational(static_cast<std::int64_t>(hamming_weight(gm.image(r)))) == wf.coeff(r);
    record(gm, wf, &GrayFlags::weight_preserving, ok);
    return ok;
}

bool verify_isometric(GrayMap& gm, const WeightFunction& wf) {
    require_domain(gm, wf);
    const Ring& ring = gm.domain();
    bool ok = true;
    for (Element x : ring.elements())
        for (Element y : ring.elements())
            ok = ok && Rational(static_cast<std::int64_t>(hamming_distance(gm.image(x), gm.image(y)))) ==
                           wf.coeff(ring.sub(x, y));
    record(gm, wf, &GrayFlags::isometric, ok);
    return ok;
}

bool verify_bijective(GrayMap& gm) {
    const std::set<FieldVector> distinct(gm.table().begin(), gm.table().end());
    BigInt codomain = 1;
    for (std::size_t i = 0; i < gm.length(); ++i) codomain *= gm.prime();
    const bool ok = distinct.size() == gm.table().size() && codomain == gm.domain().cardinality();
    GrayFlags flags = gm.flags();
    flags.bijective = verdict(ok);
    gm.set_flags(std::move(flags));
    return ok;
}

namespace {

// All vectors in F_p^L of Hamming weight w: supports lexicographic, then values lexicographic.
std::vector<FieldVector> candidates_of_weight(std::size_t length, std::size_t w, unsigned prime) {
    std::vector<FieldVector> out;
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
        std::vector<unsigned> values(w, 1);
        while (true) {
            FieldVector v(length, 0);
            for (std::size_t i = 0; i < w; ++i) v[support[i]] = static_cast<std::uint8_t>(values[i]);
            out.push_back(std::move(v));
            std::size_t i = w;
            while (i > 0 && values[i - 1] == prime - 1) values[--i] = 1;
            if (i == 0) break;
            ++values[i - 1];
        }
        // next combination
        std::size_t i = w;
        while (i > 0 && support[i - 1] == length - w + i - 1) --i;
        if (i == 0) break;
        ++support[i - 1];
        for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    }
    return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

GraySearchResult find_isometric_gray(const Ring& ring, const WeightFunction& wf, unsigned prime,
                                     std::uint64_t node_budget) {
    const std::size_t length = construction_length(ring, wf, prime);
    const unsigned m = ring.cardinality();

    GraySearchResult result;
    result.search_space = 1;
    std::vector<std::vector<FieldVector>> candidates(length + 1);
    for (unsigned r = 1; r < m; ++r) {
        const std::size_t w = symbol_weight(wf, static_cast<Element>(r));
        BigInt per = binomial(length, w);
        for (std::size_t i = 0; i < w; ++i) per *= prime - 1;
        result.search_space *= per;
        if (candidates[w].empty()) candidates[w] = candidates_of_weight(length, w, prime);
    }

    std::vector<FieldVector> table(m, FieldVector(length, 0));
    bool budget_hit = false;

    // distances required by isometry: d_H(phi(r), phi(s)) = w(r - s) = w(s - r)
    std::function<bool(unsigned)> assign = [&](unsigned r) -> bool {
        if (r == m) return true;
        const auto& pool = candidates[symbol_weight(wf, static_cast<Element>(r))];
        for (const auto& candidate : pool) {
            if (result.nodes_visited >= node_budget) {
                budget_hit = true;
                return false;
            }
            ++result.nodes_visited;
            bool consistent = true;
            for (unsigned s = 0; s < r && consistent; ++s) {
                const Rational d(static_cast<std::int64_t>(hamming_distance(candidate, table[s])));
                consistent = d == wf.coeff(ring.sub(static_cast<Element>(r), static_cast<Element>(s))) &&
                             d == wf.coeff(ring.sub(static_cast<Element>(s), static_cast<Element>(r)));
            }
            if (!consistent) continue;
            table[r] = candidate;
            if (assign(r + 1)) return true;
            if (budget_hit) return false;
        }
        return false;
    };

    if (assign(1)) {
        GrayMap gm(ring, prime, length, std::move(table));
        verify_weight_preserving(gm, wf);
        verify_isometric(gm, wf);
        verify_bijective(gm);
        result.outcome = SearchOutcome::Found;
        result.map = std::move(gm);
    } else {
        result.outcome = budget_hit ? SearchOutcome::BudgetExceeded : SearchOutcome::NoneExists;
    }
    return result;
}

}  // namespace ringcode
