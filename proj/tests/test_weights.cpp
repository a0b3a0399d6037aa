#include <random>
#include <vector>

#include "doctest.h"
#include "ringcode/weights.hpp"

using namespace ringcode;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::vector<Rational> table(std::initializer_list<std::int64_t> values) {
    std::vector<Rational> out;
    for (auto v : values) out.emplace_back(v);
    return out;
}

std::vector<std::vector<Element>> all_vectors(const Ring& ring, std::size_t n) {
    std::vector<std::vector<Element>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Element>> next;
        for (const auto& v : out)
            for (Element x : ring.elements()) {
                auto w = v;
                w.push_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("complete_weight counts coordinates") {
    const Ring z4 = Ring::zmod(4);
    CHECK(complete_weight(RingVector(z4, {1, 2, 1, 0})).counts == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(complete_weight(RingVector(z4, {0, 0, 0})).counts == std::vector<std::size_t>{3, 0, 0, 0});
    CHECK(complete_weight(RingVector(Ring::f2u(), {2, 3})).counts == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("general_weight sums a_r n_r") {
    const Ring z6 = Ring::zmod(6);
    CHECK(general_weight(lee_wf_zl(6), RingVector(z6, {1, 3, 4})) == q(6));
    CHECK(general_weight(euclidean_wf_zl(6), RingVector(z6, {3})) == q(9));
    CHECK(general_weight(lee_wf_zl(6), RingVector(z6, {0, 0, 0, 0})) == q(0));
    CHECK(general_weight(hamming_wf(Ring::zmod(4)), RingVector(Ring::zmod(4), {0, 2, 3})) == q(2));
    CHECK_THROWS_AS(general_weight(lee_wf_zl(6), RingVector(Ring::zmod(4), {1})), std::invalid_argument);

    const WeightFunction halves(Ring::zmod(3), "halves", {q(0), q(1, 2), q(1, 3)});
    CHECK(general_weight(halves, RingVector(Ring::zmod(3), {1, 2, 2})) == q(7, 6));
}

TEST_CASE("max_coeff") {
    CHECK(lee_wf_zl(6).max_coeff() == q(3));
    CHECK(euclidean_wf_zl(6).max_coeff() == q(9));
    CHECK(lee_wf_f2u().max_coeff() == q(2));
    CHECK(euclidean_wf_f2u().max_coeff() == q(4));
    CHECK(hamming_wf(Ring::f2uv()).max_coeff() == q(1));
    CHECK(lee_wf_f2uv().max_coeff() == q(4));
}

TEST_CASE("built-in tables") {
    auto coeffs = [](const WeightFunction& wf) { return std::vector<Rational>(wf.coeffs().begin(), wf.coeffs().end()); };
    CHECK(coeffs(hamming_wf(Ring::zmod(4))) == table({0, 1, 1, 1}));
    const auto hf = hamming_wf(Ring::f2uv());
    for (Element r = 1; r < 16; ++r) CHECK(hf.coeff(r) == q(1));

    CHECK(coeffs(lee_wf_zl(6)) == table({0, 1, 2, 3, 2, 1}));
    CHECK(coeffs(lee_wf_zl(4)) == table({0, 1, 2, 1}));
    CHECK(coeffs(euclidean_wf_zl(6)) == table({0, 1, 4, 9, 4, 1}));
    CHECK(coeffs(lee_wf_f2u()) == table({0, 1, 2, 1}));
    CHECK(coeffs(euclidean_wf_f2u()) == table({0, 1, 4, 1}));
    CHECK(lee_wf_f2u().coeff(2) == q(2));  // a_u

    const auto f2uv = lee_wf_f2uv();
    CHECK(f2uv.coeff(8) == q(4));  // uv -> (1,1,1,1)
    CHECK(f2uv.coeff(3) == q(1));  // 1+u -> (0,0,1,0)
    CHECK(f2uv_gray_formula(3) == std::array<std::uint8_t, 4>{0, 0, 1, 0});
    CHECK(f2uv_gray_formula(8) == std::array<std::uint8_t, 4>{1, 1, 1, 1});

    CHECK(builtin_wf(Ring::zmod(6), "lee") == lee_wf_zl(6));
    CHECK(builtin_wf(Ring::f2u(), "euclidean") == euclidean_wf_f2u());
    CHECK_THROWS_AS(builtin_wf(Ring::f2uv(), "euclidean"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_wf(Ring::zmod(4), "manhattan"), std::invalid_argument);
}

TEST_CASE("Z_l Lee and Euclidean tables match min(a, l - a) and its square") {
    for (unsigned l = 2; l <= 64; ++l) {
        const auto lee = lee_wf_zl(l);
        const auto euc = euclidean_wf_zl(l);
        for (unsigned a = 0; a < l; ++a) {
            const std::int64_t expected = a < l - a ? a : l - a;
            REQUIRE(lee.coeff(static_cast<Element>(a)) == q(expected));
            REQUIRE(euc.coeff(static_cast<Element>(a)) == q(expected * expected));
        }
        CHECK(lee.max_coeff() == q(l / 2));
        CHECK(euc.max_coeff() == q((l / 2) * (l / 2)));
    }
}

TEST_CASE("distance is w(x - y)") {
    const Ring z4 = Ring::zmod(4);
    const RingVector v(z4, {1, 3});
    CHECK(distance(lee_wf_zl(4), v, v) == q(0));
    CHECK(distance(lee_wf_zl(4), RingVector(z4, {1, 0}), RingVector(z4, {3, 0})) == q(2));
    const Ring z6 = Ring::zmod(6);
    CHECK(distance(lee_wf_zl(6), RingVector(z6, {1}), RingVector(z6, {5})) == q(2));
    CHECK_THROWS(distance(lee_wf_zl(4), RingVector(z4, {1}), RingVector(z4, {1, 1})));
}

TEST_CASE("is_symmetric") {
    CHECK(lee_wf_zl(6).is_symmetric());
    CHECK(euclidean_wf_zl(4).is_symmetric());
    const WeightFunction skew(Ring::zmod(4), "skew", table({0, 1, 1, 2}));
    CHECK_FALSE(skew.is_symmetric());
    // asymmetric weights make d(x, y) and d(y, x) differ
    const Ring z4 = Ring::zmod(4);
    CHECK(distance(skew, RingVector(z4, {1}), RingVector(z4, {0})) == q(1));
    CHECK(distance(skew, RingVector(z4, {0}), RingVector(z4, {1})) == q(2));
}

TEST_CASE("weight function validation") {
    const Ring z4 = Ring::zmod(4);
    CHECK_THROWS_AS(WeightFunction(z4, "bad", table({1, 1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction(z4, "bad", table({0, 0, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction(z4, "bad", {q(0), q(-1, 2), q(1), q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction(z4, "bad", table({0, 1, 1})), std::invalid_argument);
    CHECK(WeightFunction(z4, "ok", {q(0), q(1, 2), q(1), q(1, 2)}).max_coeff() == q(1));
    CHECK_FALSE(WeightFunction(z4, "ok", {q(0), q(1, 2), q(1), q(1, 2)}).is_integral());
}

TEST_CASE("general weight is additive over concatenation and bounded by A n") {
    std::mt19937 rng(7);
    const std::vector<WeightFunction> wfs = {lee_wf_zl(6), euclidean_wf_zl(9), lee_wf_f2u(), lee_wf_f2uv(),
                                             WeightFunction(Ring::zmod(3), "frac", {q(0), q(2, 3), q(5, 7)})};
    for (const auto& wf : wfs) {
        const Ring& ring = wf.ring();
        std::uniform_int_distribution<unsigned> pick(0, ring.cardinality() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Element> a(trial % 7), b(trial % 5);
            for (auto& x : a) x = static_cast<Element>(pick(rng));
            for (auto& x : b) x = static_cast<Element>(pick(rng));
            const RingVector va(ring, a), vb(ring, b);
            const Rational wa = general_weight(wf, va);
            CHECK(general_weight(wf, concat(va, vb)) == wa + general_weight(wf, vb));
            CHECK(wa >= q(0));
            const Rational cap = wf.max_coeff() * static_cast<std::int64_t>(a.size());
            CHECK(wa <= cap);
            bool all_max = true;
            for (Element x : a) all_max = all_max && wf.coeff(x) == wf.max_coeff();
            CHECK((wa == cap) == all_max);
        }
    }
}

TEST_CASE("distance is translation invariant") {
    for (const auto& wf : {lee_wf_zl(4), lee_wf_zl(6), euclidean_wf_zl(5), lee_wf_f2u(),
                           WeightFunction(Ring::zmod(4), "skew", table({0, 1, 1, 2}))}) {
        const Ring& ring = wf.ring();
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto vectors = all_vectors(ring, n);
            for (const auto& x : vectors)
                for (const auto& y : vectors)
                    for (const auto& t : vectors) {
                        const RingVector vx(ring, x), vy(ring, y), vt(ring, t);
                        REQUIRE(distance(wf, vx + vt, vy + vt) == distance(wf, vx, vy));
                    }
        }
    }
}
