#ifndef MSS_SCHEMES_HPP
#define MSS_SCHEMES_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mss/field.hpp"
#include "mss/poly.hpp"
#include "mss/random.hpp"

namespace mss {

enum class SchemeKind : int {
    Shamir = 0, // single secret in the free term, random higher coefficients
    Points = 1, // k secrets as y-values at x = 0..k-1, shares at x = k..k+n-1
    Coeff = 2,  // k secrets as coefficients a_0..a_{k-1}, threshold m >= k
};

std::string_view scheme_tag(SchemeKind scheme) noexcept;          // "shamir" etc.
SchemeKind scheme_from_tag(std::string_view tag);                 // throws ParseError

// Ordered tuple of secrets over one field. Order is significant: (0,1,1,2)
// and (0,1,2,1) are different secret sets.
class SecretSet {
public:
    SecretSet(PrimeModulus modulus, std::vector<std::uint64_t> secrets);

    PrimeModulus modulus() const noexcept { return modulus_; }
    const std::vector<std::uint64_t>& values() const noexcept { return secrets_; }
    std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(secrets_.size()); }
    bool all_zero() const noexcept;

    friend bool operator==(const SecretSet&, const SecretSet&) = default;

private:
    PrimeModulus modulus_;
    std::vector<std::uint64_t> secrets_;
};

// One shareholder's record. The constructor enforces per-scheme x rules:
// x = 0 would hand out the free term (Shamir secret / first Coeff secret),
// and Points reserves x = 0..threshold-1 for the secrets themselves.
class Share {
public:
    Share(SchemeKind scheme, PrimeModulus p, std::uint32_t threshold,
          std::uint64_t x, std::uint64_t y);

    SchemeKind scheme() const noexcept { return scheme_; }
    PrimeModulus modulus() const noexcept { return p_; }
    std::uint32_t threshold() const noexcept { return threshold_; }
    std::uint64_t x() const noexcept { return x_; }
    std::uint64_t y() const noexcept { return y_; }

    friend bool operator==(const Share&, const Share&) = default;

private:
    SchemeKind scheme_;
    PrimeModulus p_;
    std::uint32_t threshold_;
    std::uint64_t x_;
    std::uint64_t y_;
};

/// Classic (k, n) sharing of one secret: free term is the secret, higher
/// coefficients are uniform, and the top coefficient is resampled until
/// nonzero so the threshold is exactly k. Shares sit at x = 1..n.
std::vector<Share> shamir_split(PrimeModulus p, std::uint64_t secret,
                                std::uint32_t threshold, std::uint32_t n,
                                RandomSource& rng);

/// Recovers the secret from any threshold-many Shamir shares.
std::uint64_t shamir_reconstruct(std::span<const Share> shares);

/// The critiqued scheme: interpolate through (i, s_i) and share evaluations
/// at x = k..k+n-1. Throws DegenerateSecretSet instead of silently emitting
/// shares whose effective threshold is below k.
std::vector<Share> points_split(const SecretSet& secrets, std::uint32_t n);

SecretSet points_reconstruct(std::span<const Share> shares);

/// Coefficient packing: q(x) = s_0 + s_1 x + ... + s_{k-1} x^{k-1}, extended
/// to threshold m >= k with random coefficients at degrees k..m-1 (top one
/// resampled until nonzero). rng may be null only when m == k. Shares sit at
/// x = 1..n.
std::vector<Share> coeff_split(const SecretSet& secrets, std::uint32_t m,
                               std::uint32_t n, RandomSource* rng);

/// Interpolates m shares and returns coefficients a_0..a_{k_secrets-1};
/// random padding coefficients are discarded.
SecretSet coeff_reconstruct(std::span<const Share> shares, std::uint32_t k_secrets);

/// Splits a byte string into k equal bit-width chunks (width ceil(8*len/k),
/// big-endian, final chunk zero-padded) for coefficient-packed sharing.
SecretSet chunk_secret(std::span<const std::uint8_t> bytes, std::uint32_t k,
                       PrimeModulus p);

/// Inverse of chunk_secret; byte_len is the original length and the chunk
/// count must match the one used to split.
std::vector<std::uint8_t> unchunk_secret(std::span<const std::uint64_t> chunks,
                                         std::size_t byte_len);

} // namespace mss

#endif // MSS_SCHEMES_HPP
