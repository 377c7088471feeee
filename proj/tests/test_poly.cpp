#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mss/poly.hpp"
#include "oracles.hpp"

using mss::FieldElement;
using mss::Point;
using mss::PointSet;
using mss::Polynomial;
using mss::PrimeModulus;

TEST_CASE("evaluation matches the worked shares") {
    const PrimeModulus p{999961};
    // q(x) = 4x^3 + 3x^2 + 2x + 15 has q(3) = 156
    const Polynomial q{p, {15, 2, 3, 4}};
    CHECK(q.evaluate({3, p}).value() == 156);
    // ...and the +14 variant has q(3) = 155
    const Polynomial q2{p, {14, 2, 3, 4}};
    CHECK(q2.evaluate({3, p}).value() == 155);

    // constant polynomial evaluates to itself anywhere
    const Polynomial c{p, {42}};
    for (std::uint64_t x : {0ull, 1ull, 999960ull}) {
        CHECK(c.evaluate({x, p}).value() == 42);
    }
}

TEST_CASE("evaluation agrees with naive term-by-term sums") {
    std::mt19937_64 gen{0xbeef01};
    for (std::uint64_t p : {7ull, 101ull, 999961ull}) {
        const PrimeModulus mod{p};
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint64_t> coeffs(1 + gen() % 6);
            for (auto& c : coeffs) c = gen() % p;
            const Polynomial q{mod, coeffs};
            const std::uint64_t x = gen() % p;
            CHECK(q.evaluate({x, mod}).value() == oracle::naive_eval(coeffs, x, p));
        }
    }
}

TEST_CASE("interpolation reproduces the quadratic example") {
    const PrimeModulus p{31};
    const Polynomial q = interpolate(PointSet{p, {{0, 2}, {1, 6}, {2, 12}, {3, 20}}});
    CHECK(q.coefficients() == std::vector<std::uint64_t>{2, 3, 1, 0}); // x^2 + 3x + 2
    CHECK(q.true_degree() == 2);
}

TEST_CASE("interpolation of equal values is constant") {
    const PrimeModulus p{3};
    const Polynomial q = interpolate(PointSet{p, {{0, 2}, {1, 2}, {2, 2}}});
    CHECK(q.coefficients() == std::vector<std::uint64_t>{2, 0, 0});
    CHECK(q.true_degree() == 0);
}

TEST_CASE("single point interpolates to a constant") {
    const PrimeModulus p{7};
    const Polynomial q = interpolate(PointSet{p, {{0, 5}}});
    CHECK(q.coefficients() == std::vector<std::uint64_t>{5});
}

TEST_CASE("point set validation") {
    const PrimeModulus p{7};
    CHECK_THROWS_AS(PointSet(p, {}), mss::Error);
    try {
        PointSet{p, {{1, 2}, {1, 3}}};
        FAIL("duplicate x accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == mss::ErrorCode::DuplicateX);
    }
    // 8 = 1 mod 7 collides with 1
    CHECK_THROWS_AS(PointSet(p, {{1, 2}, {8, 3}}), mss::Error);
}

TEST_CASE("true degree") {
    const PrimeModulus p{31};
    CHECK(Polynomial{p, {2, 3, 1, 0}}.true_degree() == 2);
    CHECK(Polynomial{p, {2, 0, 0}}.true_degree() == 0);
    CHECK_FALSE(Polynomial{p, {0, 0, 0}}.true_degree().has_value());
}

TEST_CASE("round trip: interpolate(evaluations) is coefficient-identical") {
    std::mt19937_64 gen{0x5eed02};
    for (std::uint64_t p : {7ull, 31ull, 101ull}) {
        const PrimeModulus mod{p};
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t k = 1 + gen() % std::min<std::uint64_t>(5, p);
            std::vector<std::uint64_t> coeffs(k);
            for (auto& c : coeffs) c = gen() % p;
            const Polynomial q{mod, coeffs};

            // pick k distinct x-values by shuffling the residues
            std::vector<std::uint64_t> xs(p);
            for (std::uint64_t i = 0; i < p; ++i) xs[i] = i;
            std::shuffle(xs.begin(), xs.end(), gen);

            std::vector<Point> pts;
            for (std::size_t i = 0; i < k; ++i) {
                pts.push_back({xs[i], q.evaluate({xs[i], mod}).value()});
            }
            const Polynomial back = interpolate(PointSet{mod, pts});
            CHECK(back.coefficients() == coeffs);
        }
    }
}

TEST_CASE("interpolation passes through every input point") {
    std::mt19937_64 gen{0x5eed03};
    const PrimeModulus p{101};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + gen() % 6;
        std::vector<std::uint64_t> xs(101);
        for (std::uint64_t i = 0; i < 101; ++i) xs[i] = i;
        std::shuffle(xs.begin(), xs.end(), gen);
        std::vector<Point> pts;
        for (std::size_t i = 0; i < k; ++i) pts.push_back({xs[i], gen() % 101});
        const Polynomial q = interpolate(PointSet{p, pts});
        for (const Point& pt : pts) {
            CHECK(q.evaluate({pt.x, p}).value() == pt.y);
        }
        CHECK(q.coefficient_count() == k);
    }
}

TEST_CASE("inverse Vandermonde row, k=2") {
    for (std::uint64_t p : {3ull, 7ull, 101ull}) {
        const auto row = mss::vandermonde_first_row_inverse(2, PrimeModulus{p});
        REQUIRE(row.size() == 2);
        // a_1 = s_1 - s_0, i.e. the row is [p-1, 1]
        CHECK(row[0].value() == p - 1);
        CHECK(row[1].value() == 1);
    }
}

TEST_CASE("inverse Vandermonde row annihilates known degenerate tuples") {
    {
        const PrimeModulus p{5};
        const auto row = mss::vandermonde_first_row_inverse(3, p);
        FieldElement dot{0, p};
        for (std::size_t i = 0; i < 3; ++i) dot = dot + row[i] * FieldElement{2, p};
        CHECK(dot.is_zero());
    }
    {
        const PrimeModulus p{31};
        const auto row = mss::vandermonde_first_row_inverse(4, p);
        const std::uint64_t secrets[] = {2, 6, 12, 20};
        FieldElement dot{0, p};
        for (std::size_t i = 0; i < 4; ++i) {
            dot = dot + row[i] * FieldElement{secrets[i], p};
        }
        CHECK(dot.is_zero());
    }
}

TEST_CASE("Vandermonde row reproduces the leading interpolation coefficient") {
    std::mt19937_64 gen{0x5eed04};
    for (std::uint64_t p : {7ull, 31ull}) {
        const PrimeModulus mod{p};
        for (std::size_t k = 1; k <= 5; ++k) {
            const auto row = mss::vandermonde_first_row_inverse(k, mod);
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Point> pts;
                FieldElement dot{0, mod};
                for (std::size_t i = 0; i < k; ++i) {
                    const std::uint64_t s = gen() % p;
                    pts.push_back({i, s});
                    dot = dot + row[i] * FieldElement{s, mod};
                }
                const Polynomial q = interpolate(PointSet{mod, pts});
                CHECK(q.coefficient(k - 1) == dot);
            }
        }
    }
}

TEST_CASE("degeneracy equivalence: row dot zero iff degree drops") {
    // exhaustive over all tuples for k <= 4, p <= 11
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        const PrimeModulus mod{p};
        for (std::uint32_t k = 2; k <= 4 && k <= p; ++k) {
            const auto row = mss::vandermonde_first_row_inverse(k, mod);
            std::vector<std::uint64_t> tuple(k, 0);
            do {
                FieldElement dot{0, mod};
                std::vector<Point> pts;
                for (std::uint32_t i = 0; i < k; ++i) {
                    dot = dot + row[i] * FieldElement{tuple[i], mod};
                    pts.push_back({i, tuple[i]});
                }
                const auto degree = interpolate(PointSet{mod, pts}).true_degree();
                const bool degenerate = !degree || *degree < k - 1;
                CHECK(dot.is_zero() == degenerate);
            } while (oracle::next_tuple(tuple, p));
        }
    }
}

TEST_CASE("k larger than the field is rejected") {
    try {
        mss::vandermonde_first_row_inverse(8, PrimeModulus{7});
        FAIL("k > p accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == mss::ErrorCode::KTooLargeForField);
    }
}
