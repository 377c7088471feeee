#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mss/analysis.hpp"
#include "oracles.hpp"

using mss::CensusMethod;
using mss::CensusReport;
using mss::DegeneracyTester;
using mss::ErrorCode;
using mss::PrimeModulus;
using mss::Rational;
using mss::SchemeKind;

TEST_CASE("rational reduction") {
    CHECK(Rational::reduced(2500, 125) == Rational{20, 1});
    CHECK(Rational::reduced(300, 9) == Rational{100, 3});
    CHECK(Rational::reduced(0, 5) == Rational{0, 1});
    CHECK_THROWS_AS(Rational::reduced(1, 0), mss::Error);
}

TEST_CASE("census for p=3, k=2 counts the equal pairs") {
    for (CensusMethod method : {CensusMethod::Interpolate, CensusMethod::Vandermonde}) {
        const CensusReport report = mss::degeneracy_census(PrimeModulus{3}, 2, method);
        CHECK(report.total_tuples == 9);
        CHECK(report.degenerate_count == 3); // exactly the tuples with s0 == s1
        CHECK(report.closed_form == 3);
        CHECK(report.failure_percent == Rational{100, 3});
        CHECK(mss::eq1_check(report));
    }
}

TEST_CASE("census for p=5, k=3 matches the independent finite-difference count") {
    // independent oracle: second difference s2 - 2 s1 + s0 vanishes mod 5
    std::uint64_t expected = 0;
    std::vector<std::uint64_t> tuple(3, 0);
    do {
        if (oracle::finite_difference_degenerate(tuple, 5)) ++expected;
    } while (oracle::next_tuple(tuple, 5));
    CHECK(expected == 25);

    for (CensusMethod method : {CensusMethod::Interpolate, CensusMethod::Vandermonde}) {
        const CensusReport report = mss::degeneracy_census(PrimeModulus{5}, 3, method);
        CHECK(report.total_tuples == 125);
        CHECK(report.degenerate_count == expected);
        CHECK(report.closed_form == 25);
        CHECK(report.failure_percent == Rational{20, 1});
        CHECK(mss::eq1_check(report));
    }
}

TEST_CASE("the worked quadruple is counted degenerate at p=31, k=4") {
    const DegeneracyTester tester{PrimeModulus{31}, 4};
    const std::vector<std::uint64_t> tuple{2, 6, 12, 20};
    CHECK(tester.by_interpolation(tuple));
    CHECK(tester.by_vandermonde(tuple));

    const CensusReport report =
        mss::degeneracy_census(PrimeModulus{31}, 4, CensusMethod::Vandermonde);
    CHECK(report.degenerate_count == 29791); // 31^3
    CHECK(mss::eq1_check(report));
}

TEST_CASE("both census methods agree with the oracle tuple by tuple") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        for (std::uint32_t k = 2; k <= 3; ++k) {
            const DegeneracyTester tester{PrimeModulus{p}, k};
            std::vector<std::uint64_t> tuple(k, 0);
            do {
                const bool via_interp = tester.by_interpolation(tuple);
                CHECK(via_interp == tester.by_vandermonde(tuple));
                CHECK(via_interp == oracle::finite_difference_degenerate(tuple, p));
            } while (oracle::next_tuple(tuple, p));
        }
    }
}

TEST_CASE("all-equal tuples are always degenerate") {
    const std::uint64_t p = 7;
    const DegeneracyTester tester{PrimeModulus{p}, 3};
    for (std::uint64_t c = 0; c < p; ++c) {
        const std::vector<std::uint64_t> tuple{c, c, c};
        CHECK(tester.by_interpolation(tuple));
        CHECK(tester.by_vandermonde(tuple));
    }
}

TEST_CASE("census at k=1 counts only the zero tuple") {
    // a single secret degenerates only when its constant polynomial is zero
    const CensusReport report =
        mss::degeneracy_census(PrimeModulus{7}, 1, CensusMethod::Interpolate);
    CHECK(report.total_tuples == 7);
    CHECK(report.degenerate_count == 1);
    CHECK(report.closed_form == 1);
    CHECK(mss::eq1_check(report));
}

TEST_CASE("census refuses oversized and ill-posed grids") {
    try {
        mss::degeneracy_census(PrimeModulus{999961}, 2, CensusMethod::Vandermonde);
        FAIL("oversized census accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    try {
        mss::degeneracy_census(PrimeModulus{3}, 4, CensusMethod::Interpolate);
        FAIL("k > p accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::KTooLargeForField);
    }
}

TEST_CASE("tampered census reports fail the identity check") {
    CensusReport report = mss::degeneracy_census(PrimeModulus{5}, 3, CensusMethod::Vandermonde);
    REQUIRE(mss::eq1_check(report));
    report.degenerate_count = report.closed_form + 1;
    CHECK_FALSE(mss::eq1_check(report));

    CensusReport stale = mss::degeneracy_census(PrimeModulus{5}, 3, CensusMethod::Vandermonde);
    stale.failure_percent = Rational{19, 1};
    CHECK_FALSE(mss::eq1_check(stale));
}

TEST_CASE("blow-up factors") {
    const auto shamir = mss::blowup_factor(SchemeKind::Shamir, 5, 3, 1, 1);
    CHECK(shamir.blowup == Rational{5, 1});

    const auto coeff = mss::blowup_factor(SchemeKind::Coeff, 6, 3, 3, 1);
    CHECK(coeff.blowup == Rational{2, 1});

    const auto optimal = mss::blowup_factor(SchemeKind::Coeff, 4, 4, 4, 16);
    CHECK(optimal.blowup == Rational{1, 1});

    const auto points = mss::blowup_factor(SchemeKind::Points, 10, 4, 4, 2);
    CHECK(points.blowup == Rational{5, 2});

    try {
        mss::blowup_factor(SchemeKind::Shamir, 5, 3, 3, 1);
        FAIL("per-secret shamir with k != 1 accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParams);
    }
    CHECK_THROWS_AS(mss::blowup_factor(SchemeKind::Coeff, 0, 3, 3, 1), mss::Error);
}

TEST_CASE("coeff blow-up times k equals n") {
    for (std::uint32_t n = 1; n <= 12; ++n) {
        for (std::uint32_t k = 1; k <= n; ++k) {
            const auto report = mss::blowup_factor(SchemeKind::Coeff, n, k, k, 7);
            CHECK(report.blowup.num * k == n * report.blowup.den);
        }
    }
}
