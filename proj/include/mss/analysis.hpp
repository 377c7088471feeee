#ifndef MSS_ANALYSIS_HPP
#define MSS_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mss/field.hpp"
#include "mss/poly.hpp"
#include "mss/schemes.hpp"

namespace mss {

// Exact nonnegative rational, kept reduced with den >= 1. Reports use this
// instead of floating point so equality checks stay exact.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den);

    friend bool operator==(Rational, Rational) = default;
};

enum class CensusMethod : int {
    Interpolate = 0, // fit the tuple and inspect the true degree
    Vandermonde = 1, // dot the tuple with the inverse-Vandermonde row
};

// Per-tuple degeneracy classifier offering both routes independently, so
// they can be compared against each other tuple by tuple.
class DegeneracyTester {
public:
    DegeneracyTester(PrimeModulus p, std::uint32_t k);

    bool by_interpolation(std::span<const std::uint64_t> secrets) const;
    bool by_vandermonde(std::span<const std::uint64_t> secrets) const;
    bool degenerate(std::span<const std::uint64_t> secrets, CensusMethod method) const;

private:
    PrimeModulus p_;
    std::uint32_t k_;
    std::vector<std::uint64_t> row_;
};

struct CensusReport {
    std::uint64_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t total_tuples = 0;     // p^k
    std::uint64_t degenerate_count = 0;
    std::uint64_t closed_form = 0;      // p^(k-1)
    Rational failure_percent;           // 100 * degenerate / total
};

// Exhaustive enumeration refuses above this many tuples rather than sample.
inline constexpr std::uint64_t kCensusBound = 100'000'000;

/// Counts ordered secret tuples whose sharing polynomial degenerates below
/// degree k-1, over all p^k tuples.
CensusReport degeneracy_census(PrimeModulus p, std::uint32_t k, CensusMethod method);

/// True iff the report's failure rate is exactly 100/p.
bool eq1_check(const CensusReport& report);

struct BlowupReport {
    SchemeKind scheme = SchemeKind::Shamir;
    std::uint32_t n = 0;
    std::uint32_t threshold = 0;
    std::uint32_t k_secrets = 0;
    std::uint64_t secret_size_units = 0;
    Rational blowup; // n * share_size / (k_secrets * d)
};

/// Storage blow-up: total share size over total secret size. Shares are one
/// field element of size d each, so per-secret Shamir costs n and the packed
/// schemes cost n/k.
BlowupReport blowup_factor(SchemeKind scheme, std::uint32_t n, std::uint32_t threshold,
                           std::uint32_t k_secrets, std::uint64_t d);

} // namespace mss

#endif // MSS_ANALYSIS_HPP
