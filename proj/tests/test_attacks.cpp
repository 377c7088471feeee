#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mss/attacks.hpp"
#include "mss/poly.hpp"
#include "mss/random.hpp"
#include "oracles.hpp"

using mss::ErrorCode;
using mss::FieldElement;
using mss::Point;
using mss::PointSet;
using mss::PrimeModulus;
using mss::RandomSource;
using mss::SchemeKind;
using mss::SecretSet;
using mss::Share;

namespace {

// The scheme as originally described emits shares even for degenerate
// tuples; the attack demonstrations reproduce that behaviour directly on
// the interpolation layer instead of going through the guarded split.
mss::Polynomial points_polynomial(const std::vector<std::uint64_t>& secrets,
                                  PrimeModulus p) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < secrets.size(); ++i) {
        pts.push_back({i, secrets[i]});
    }
    return mss::interpolate(PointSet{p, pts});
}

} // namespace

TEST_CASE("divisibility inference on the worked shares") {
    const PrimeModulus p{999961};
    {
        // q(x) = 4x^3 + 3x^2 + 2x + 15, share (3, 156), a_0 = 15
        const Share share{SchemeKind::Coeff, p, 4, 3, 156};
        const auto inference = mss::divisibility_attack(share, 16);
        CHECK(inference.divisible);
        CHECK(inference.search_space_size == 6); // floor(16/3) + 1
        CHECK(15 % 3 == 0);
    }
    {
        // q(x) = 4x^3 + 3x^2 + 2x + 14, share (3, 155), a_0 = 14
        const Share share{SchemeKind::Coeff, p, 4, 3, 155};
        const auto inference = mss::divisibility_attack(share, 16);
        CHECK_FALSE(inference.divisible);
        CHECK(inference.search_space_size == 10); // 16 - floor(16/3) - 1
        CHECK(14 % 3 != 0);
    }
}

TEST_CASE("divisibility inference refuses unsound setups") {
    const PrimeModulus p{999961};
    const Share share{SchemeKind::Coeff, p, 4, 3, 156};
    try {
        // 250000 * (1 + 3 + 9 + 27) = 10^7 > p, so wraparound is possible
        mss::divisibility_attack(share, 250000);
        FAIL("wraparound accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::WraparoundRisk);
    }

    const Share at_one{SchemeKind::Coeff, p, 4, 1, 156};
    CHECK_THROWS_AS(mss::divisibility_attack(at_one, 16), mss::Error);

    const Share shamir{SchemeKind::Shamir, p, 4, 3, 156};
    try {
        mss::divisibility_attack(shamir, 16);
        FAIL("non-coeff share accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParams);
    }
}

TEST_CASE("divisibility biconditional holds exhaustively on a small grid") {
    const PrimeModulus p{999961};
    for (std::uint32_t t = 2; t <= 3; ++t) {
        for (std::uint64_t u : {2ull, 3ull}) {
            for (std::uint64_t r = 1; r <= 8; ++r) {
                std::vector<std::uint64_t> coeffs(t, 0);
                bool more = true;
                while (more) {
                    const std::uint64_t q_u = oracle::naive_eval(coeffs, u, p.value());
                    const Share share{SchemeKind::Coeff, p, t, u, q_u};
                    const auto inference = mss::divisibility_attack(share, r);
                    CHECK(inference.divisible == (coeffs[0] % u == 0));
                    // odometer over [0..r]^t
                    more = false;
                    for (auto& c : coeffs) {
                        if (++c <= r) {
                            more = true;
                            break;
                        }
                        c = 0;
                    }
                }
            }
        }
    }
}

TEST_CASE("divisibility tells nothing about shamir shares") {
    // negative control: with random coefficients the divisibility of q(u)
    // is independent of a_0, so the hit rate is about 1/u
    const PrimeModulus p{999961};
    const std::uint64_t u = 3;
    const int trials = 1500;
    RandomSource rng{20240901};
    int hits = 0;
    for (int i = 0; i < trials; ++i) {
        const auto shares = mss::shamir_split(p, 15, 4, 4, rng); // a_0 = 15, 3 | 15
        REQUIRE(shares[u - 1].x() == u);
        if (shares[u - 1].y() % u == 0) ++hits;
    }
    const double freq = static_cast<double>(hits) / trials;
    CHECK(std::abs(freq - 1.0 / u) < 0.05);
}

TEST_CASE("a fixed shamir secret reaches every share value") {
    // exhausting the coefficient space at fixed u covers all residues, which
    // is why the divisibility argument has no purchase on shamir
    for (std::uint64_t p : {7ull, 11ull}) {
        const std::uint64_t secret = 5 % p;
        for (std::uint64_t u = 1; u < p; ++u) {
            std::vector<std::uint64_t> counts(p, 0);
            for (std::uint64_t a1 = 0; a1 < p; ++a1) {
                for (std::uint64_t a2 = 0; a2 < p; ++a2) {
                    ++counts[oracle::naive_eval({secret, a1, a2}, u, p)];
                }
            }
            for (std::uint64_t y = 0; y < p; ++y) {
                CHECK(counts[y] == p); // uniform across residues
            }
        }
    }
}

TEST_CASE("related-share forgery on the worked triple") {
    const PrimeModulus p{7};
    const std::vector<std::uint64_t> secrets{1, 2, 3};
    const std::vector<std::uint64_t> scaled{2, 4, 6};
    const auto q = points_polynomial(secrets, p);
    const auto r = points_polynomial(scaled, p);

    // r(u) = 2 q(u) for every u in Z_7
    for (std::uint64_t u = 0; u < 7; ++u) {
        const auto qu = q.evaluate({u, p});
        const auto ru = r.evaluate({u, p});
        CHECK(ru == qu * FieldElement{2, p});
    }

    // Eve holds the group-R share at u = 3 and forges the group-S share
    const Share source{SchemeKind::Points, p, 3, 3, q.evaluate({3, p}).value()};
    const auto forgery = mss::related_share_forgery(source, 2);
    CHECK(forgery.forged.x() == source.x());
    CHECK(forgery.forged.y() == r.evaluate({3, p}).value());

    // forged share plus two honest group-S shares reconstructs (2, 4, 6)
    const std::vector<Share> quorum{
        forgery.forged,
        Share{SchemeKind::Points, p, 3, 4, r.evaluate({4, p}).value()},
        Share{SchemeKind::Points, p, 3, 5, r.evaluate({5, p}).value()},
    };
    const SecretSet recovered = mss::points_reconstruct(quorum);
    CHECK(recovered.values() == scaled);
}

TEST_CASE("identity multiplier forges the source share itself") {
    const PrimeModulus p{7};
    const Share source{SchemeKind::Points, p, 3, 4, 5};
    const auto forgery = mss::related_share_forgery(source, 1);
    CHECK(forgery.forged == source);
}

TEST_CASE("forgery rejects non-points shares") {
    const PrimeModulus p{7};
    const Share coeff{SchemeKind::Coeff, p, 3, 4, 5};
    try {
        mss::related_share_forgery(coeff, 2);
        FAIL("coeff share accepted");
    } catch (const mss::Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParams);
    }
}

TEST_CASE("points sharing is linear in the secrets, exhaustively at p=7") {
    const PrimeModulus p{7};
    std::vector<std::uint64_t> tuple(3, 0);
    do {
        const auto q = points_polynomial(tuple, p);
        for (std::uint64_t d = 0; d < 7; ++d) {
            std::vector<std::uint64_t> scaled(3);
            for (std::size_t i = 0; i < 3; ++i) {
                scaled[i] = oracle::mul(tuple[i], d, 7);
            }
            const auto r = points_polynomial(scaled, p);
            for (std::size_t c = 0; c < 3; ++c) {
                CHECK(r.coefficient(c) == q.coefficient(c) * FieldElement{d, p});
            }
        }
    } while (oracle::next_tuple(tuple, 7));
}

TEST_CASE("coefficient packing at m=k scales the same way") {
    // same linearity for the packed scheme when no random padding is used;
    // this extends the forgery beyond the scheme it was stated for
    const PrimeModulus p{11};
    const SecretSet secrets{p, {3, 1, 4}};
    const auto shares = mss::coeff_split(secrets, 3, 5, nullptr);
    for (std::uint64_t d = 1; d < 11; ++d) {
        std::vector<std::uint64_t> scaled(3);
        for (std::size_t i = 0; i < 3; ++i) scaled[i] = oracle::mul(secrets.values()[i], d, 11);
        const auto scaled_shares = mss::coeff_split(SecretSet{p, scaled}, 3, 5, nullptr);
        for (std::size_t i = 0; i < shares.size(); ++i) {
            CHECK(scaled_shares[i].y() == oracle::mul(shares[i].y(), d, 11));
        }
    }
}
