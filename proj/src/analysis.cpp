#include "mss/analysis.hpp"

#include <numeric>
#include <string>

namespace mss {

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw Error(ErrorCode::InvalidParams, "rational with zero denominator");
    }
    const std::uint64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

DegeneracyTester::DegeneracyTester(PrimeModulus p, std::uint32_t k) : p_(p), k_(k) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidParams, "k must be positive");
    }
    row_.reserve(k);
    for (const FieldElement& m : vandermonde_first_row_inverse(k, p)) {
        row_.push_back(m.value());
    }
}

bool DegeneracyTester::by_interpolation(std::span<const std::uint64_t> secrets) const {
    std::vector<Point> pts(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        pts[i] = {i, secrets[i]};
    }
    const auto degree = interpolate(PointSet{p_, std::move(pts)}).true_degree();
    return !degree || *degree < k_ - 1;
}

bool DegeneracyTester::by_vandermonde(std::span<const std::uint64_t> secrets) const {
    FieldElement dot{0, p_};
    for (std::uint32_t i = 0; i < k_; ++i) {
        dot = dot + FieldElement{row_[i], p_} * FieldElement{secrets[i], p_};
    }
    return dot.is_zero();
}

bool DegeneracyTester::degenerate(std::span<const std::uint64_t> secrets,
                                  CensusMethod method) const {
    return method == CensusMethod::Interpolate ? by_interpolation(secrets)
                                               : by_vandermonde(secrets);
}

namespace {

// p^e, or nullopt once the running product would pass the cap.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint32_t e,
                                         std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (result > cap / p) return std::nullopt;
        result *= p;
    }
    return result;
}

} // namespace

CensusReport degeneracy_census(PrimeModulus p, std::uint32_t k, CensusMethod method) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidParams, "k must be positive");
    }
    if (k > p.value()) {
        throw Error(ErrorCode::KTooLargeForField,
                    "census needs k <= p so the nodes 0..k-1 are distinct");
    }
    const auto total = checked_pow(p.value(), k, kCensusBound);
    if (!total) {
        throw Error(ErrorCode::TooLarge,
                    "p^k exceeds the exhaustive-census bound of " +
                        std::to_string(kCensusBound) + " tuples");
    }

    const DegeneracyTester tester{p, k};
    std::vector<std::uint64_t> tuple(k, 0);
    std::uint64_t degenerate = 0;
    for (std::uint64_t count = 0; count < *total; ++count) {
        if (tester.degenerate(tuple, method)) ++degenerate;
        // Odometer step through Z_p^k.
        for (std::uint32_t i = 0; i < k; ++i) {
            if (++tuple[i] < p.value()) break;
            tuple[i] = 0;
        }
    }

    CensusReport report;
    report.p = p.value();
    report.k = k;
    report.total_tuples = *total;
    report.degenerate_count = degenerate;
    report.closed_form = *total / p.value(); // p^(k-1)
    report.failure_percent = Rational::reduced(100 * degenerate, *total);
    return report;
}

bool eq1_check(const CensusReport& report) {
    if (report.p == 0 || report.total_tuples == 0) return false;
    const Rational expected = Rational::reduced(100, report.p);
    const Rational from_counts =
        Rational::reduced(100 * report.degenerate_count, report.total_tuples);
    return from_counts == expected && report.failure_percent == from_counts;
}

BlowupReport blowup_factor(SchemeKind scheme, std::uint32_t n, std::uint32_t threshold,
                           std::uint32_t k_secrets, std::uint64_t d) {
    if (n < 1 || threshold < 1 || k_secrets < 1 || d < 1) {
        throw Error(ErrorCode::InvalidParams, "blowup arguments must be positive");
    }
    if (scheme == SchemeKind::Shamir && k_secrets != 1) {
        throw Error(ErrorCode::InvalidParams,
                    "per-secret Shamir shares one secret per invocation; "
                    "total cost for k secrets is k separate runs");
    }
    BlowupReport report;
    report.scheme = scheme;
    report.n = n;
    report.threshold = threshold;
    report.k_secrets = k_secrets;
    report.secret_size_units = d;
    // Share size equals the secret element size d, so n*d over k*d.
    report.blowup = Rational::reduced(static_cast<std::uint64_t>(n) * d,
                                      static_cast<std::uint64_t>(k_secrets) * d);
    return report;
}

} // namespace mss
