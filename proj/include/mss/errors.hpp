#ifndef MSS_ERRORS_HPP
#define MSS_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mss {

// Stable error codes. Values are part of the C ABI (see include/mss.h) and
// double as CLI exit codes, so existing entries must never be renumbered.
enum class ErrorCode : int {
    Ok = 0,
    Fail = 1,
    InvalidParams = 2,
    NotPrime = 3,
    ModulusMismatch = 4,
    ZeroInverse = 5,
    DuplicateX = 6,
    EmptyInput = 7,
    KTooLargeForField = 8,
    DegenerateSecretSetError = 9,
    LeadingSecretZero = 10,
    AllZeroSecrets = 11,
    MixedShares = 12,
    QuorumTooSmall = 13,
    ChunkExceedsModulus = 14,
    TooLarge = 15,
    WraparoundRisk = 16,
    ParseError = 17,
    BufferTooSmall = 18,
    IoError = 19,
};

/// Short stable token for an error code, e.g. "degenerate-secret-set".
const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised by the points scheme when the interpolated polynomial has degree
// below threshold-1. Carries the observed true degree; nullopt means the
// zero polynomial.
class DegenerateSecretSet final : public Error {
public:
    explicit DegenerateSecretSet(std::optional<std::size_t> true_degree,
                                 std::size_t required_degree);

    std::optional<std::size_t> true_degree() const noexcept { return true_degree_; }

private:
    std::optional<std::size_t> true_degree_;
};

} // namespace mss

#endif // MSS_ERRORS_HPP
