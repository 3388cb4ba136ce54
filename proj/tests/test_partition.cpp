#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "denum/combinatorics.hpp"
#include "denum/corpus.hpp"
#include "denum/cyclotomic.hpp"
#include "denum/partition.hpp"

using namespace denum;

namespace {
constexpr unsigned long kSeed = 20240915;
}

TEST_CASE("component validation and divisors") {
    CHECK_THROWS_AS(validate_components({}), std::invalid_argument);
    CHECK_THROWS_AS(validate_components({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate_components({-3}), std::invalid_argument);
    CHECK_NOTHROW(validate_components({2, 2, 7}));
    CHECK(component_divisors({1, 2, 3, 4, 5}) == std::vector<long>{1, 2, 3, 4, 5});
    CHECK(component_divisors({6, 10, 15}) == std::vector<long>{1, 2, 3, 5, 6, 10, 15});
    CHECK(component_divisors({2, 2}) == std::vector<long>{1, 2});
}

TEST_CASE("herschel_indicator") {
    CHECK(herschel_indicator(6, 3) == 1);
    CHECK(herschel_indicator(7, 3) == 0);
    CHECK(herschel_indicator(0, 9) == 1);
    CHECK_THROWS_AS(herschel_indicator(3, 0), std::invalid_argument);

    // average of l-th powers over all q-th roots of unity, including 1
    for (long q = 1; q <= 12; ++q) {
        CycloField F(q);
        for (long l = 0; l <= 30; ++l) {
            CycloElem s = F.zero();
            for (long m = 0; m < q; ++m) s = s + F.zeta_power(m * l);
            CHECK(s.as_rational() == Rational(herschel_indicator(l, q) * q));
        }
    }
}

TEST_CASE("brute-force tables") {
    DenumerantTable ones = denumerant_bruteforce(9, {1});
    for (const Int& v : ones.values) CHECK(v == 1);
    CHECK(denumerant_bruteforce(8, {2, 3, 5}).values[8] == 3);
    CHECK(denumerant_bruteforce(100, {1, 2, 3, 4, 5}).values[100] == 46262);
    CHECK(denumerant_bruteforce(0, {4}).values == std::vector<Int>{Int(1)});
    CHECK_THROWS_AS(denumerant_bruteforce(5, {}), std::invalid_argument);
}

TEST_CASE("series tables") {
    CHECK(denumerant_series(6, {1, 2}).values ==
          std::vector<Int>{Int(1), Int(1), Int(2), Int(2), Int(3), Int(3), Int(4)});
    CHECK(denumerant_series(3, {5}).values ==
          std::vector<Int>{Int(1), Int(0), Int(0), Int(0)});
    CHECK(denumerant_series(100, {1, 2, 3, 4, 5}).values[100] == 46262);
}

TEST_CASE("series path agrees with the convolution oracle") {
    std::mt19937 gen(kSeed);
    for (int i = 0; i < 50; ++i) {
        Components c = random_components(gen, 5, 12);
        long L = 200;
        CHECK(denumerant_series(L, c).values == denumerant_bruteforce(L, c).values);
    }
}

TEST_CASE("split convolution identity") {
    std::mt19937 gen(kSeed + 1);
    for (int i = 0; i < 12; ++i) {
        Components c = random_components(gen, 4, 9);
        if (c.size() < 2) continue;
        std::size_t cut = 1 + gen() % (c.size() - 1);
        Components a(c.begin(), c.begin() + static_cast<long>(cut));
        Components b(c.begin() + static_cast<long>(cut), c.end());
        long L = 60;
        DenumerantTable tc = denumerant_bruteforce(L, c);
        DenumerantTable ta = denumerant_bruteforce(L, a);
        DenumerantTable tb = denumerant_bruteforce(L, b);
        for (long l = 0; l <= L; ++l) {
            Int acc = 0;
            for (long lp = 0; lp <= l; ++lp)
                acc += ta.values[static_cast<std::size_t>(l - lp)] *
                       tb.values[static_cast<std::size_t>(lp)];
            CHECK(acc == tc.values[static_cast<std::size_t>(l)]);
        }
    }
}

TEST_CASE("unit denumerants") {
    for (long l = 0; l <= 12; ++l) CHECK(unit_denumerant(l, 1) == 1);
    CHECK(unit_denumerant(5, 2) == 6);
    CHECK(unit_denumerant(2, 3) == 6);
    CHECK_THROWS_AS(unit_denumerant(-1, 2), std::invalid_argument);
}

TEST_CASE("add_ones_smoothing") {
    CHECK(add_ones_smoothing({2}, 1, 6).values == denumerant_bruteforce(6, {1, 2}).values);
    CHECK(add_ones_smoothing({1}, 1, 3).values ==
          std::vector<Int>{Int(1), Int(2), Int(3), Int(4)});
    CHECK(add_ones_smoothing({3}, 2, 3).values[3] == 5);
    CHECK_THROWS_AS(add_ones_smoothing({3}, 0, 3), std::invalid_argument);

    std::mt19937 gen(kSeed + 2);
    for (int i = 0; i < 10; ++i) {
        Components c = random_components(gen, 4, 9);
        long k = 1 + static_cast<long>(gen() % 3);
        long L = 40;
        DenumerantTable smoothed = add_ones_smoothing(c, k, L);
        Components ext = c;
        ext.insert(ext.end(), static_cast<std::size_t>(k), 1L);
        CHECK(smoothed.components == ext);
        CHECK(smoothed.values == denumerant_bruteforce(L, ext).values);
        // smoothing never decreases a count
        DenumerantTable base = denumerant_bruteforce(L, c);
        for (long l = 0; l <= L; ++l)
            CHECK(smoothed.values[static_cast<std::size_t>(l)] >=
                  base.values[static_cast<std::size_t>(l)]);
    }
}

TEST_CASE("cesaro sums") {
    std::vector<Int> ones(25, Int(1));
    for (long n = 0; n <= 20; ++n) {
        CHECK(cesaro_sum(0, ones, n) == Rational(n + 1));
        CHECK(cesaro_sum(1, ones, n) == Rational((n + 1) * (n + 2), 2));
    }
    std::vector<Int> spike(25, Int(0));
    spike[0] = 1;
    for (long n = 0; n <= 20; ++n)
        CHECK(cesaro_sum(2, spike, n) ==
              Rational(binomial_uint(static_cast<unsigned long>(n) + 2, 2)));
    CHECK_THROWS_AS(cesaro_sum(1, spike, 25), std::invalid_argument);

    // generating-function identity: S_n^(r) for g = table(c) equals the
    // denumerant of c extended by r+1 unit components
    Components c = {2, 3};
    DenumerantTable base = denumerant_bruteforce(20, c);
    DenumerantTable ext = denumerant_bruteforce(20, {2, 3, 1, 1, 1});
    for (long n = 0; n <= 20; ++n)
        CHECK(cesaro_sum(2, base.values, n) == Rational(ext.values[static_cast<std::size_t>(n)]));
}

TEST_CASE("table exports") {
    DenumerantTable t = denumerant_bruteforce(3, {2});
    CHECK(t.to_csv() == "l,value\n0,1\n1,0\n2,1\n3,0\n");
    CHECK(t.to_json() == "[\"1\",\"0\",\"1\",\"0\"]");
}
