#include "mss/errors.hpp"

namespace mss {

const char* error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Ok: return "ok";
        case ErrorCode::Fail: return "failure";
        case ErrorCode::InvalidParams: return "invalid-params";
        case ErrorCode::NotPrime: return "not-prime";
        case ErrorCode::ModulusMismatch: return "modulus-mismatch";
        case ErrorCode::ZeroInverse: return "zero-inverse";
        case ErrorCode::DuplicateX: return "duplicate-x";
        case ErrorCode::EmptyInput: return "empty-input";
        case ErrorCode::KTooLargeForField: return "k-too-large-for-field";
        case ErrorCode::DegenerateSecretSetError: return "degenerate-secret-set";
        case ErrorCode::LeadingSecretZero: return "leading-secret-zero";
        case ErrorCode::AllZeroSecrets: return "all-zero-secrets";
        case ErrorCode::MixedShares: return "mixed-shares";
        case ErrorCode::QuorumTooSmall: return "quorum-too-small";
        case ErrorCode::ChunkExceedsModulus: return "chunk-exceeds-modulus";
        case ErrorCode::TooLarge: return "too-large";
        case ErrorCode::WraparoundRisk: return "wraparound-risk";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::BufferTooSmall: return "buffer-too-small";
        case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

namespace {

std::string degenerate_message(std::optional<std::size_t> true_degree,
                               std::size_t required_degree) {
    std::string deg = true_degree ? std::to_string(*true_degree)
                                  : std::string("-inf (zero polynomial)");
    return "degenerate secret set: interpolated polynomial has degree " + deg +
           ", scheme requires degree " + std::to_string(required_degree);
}

} // namespace

DegenerateSecretSet::DegenerateSecretSet(std::optional<std::size_t> true_degree,
                                         std::size_t required_degree)
    : Error(ErrorCode::DegenerateSecretSetError,
            degenerate_message(true_degree, required_degree)),
      true_degree_(true_degree) {}

} // namespace mss
