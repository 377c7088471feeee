#include "mss/schemes.hpp"

#include <algorithm>
#include <string>

namespace mss {

std::string_view scheme_tag(SchemeKind scheme) noexcept {
    switch (scheme) {
        case SchemeKind::Shamir: return "shamir";
        case SchemeKind::Points: return "points";
        case SchemeKind::Coeff: return "coeff";
    }
    return "unknown";
}

SchemeKind scheme_from_tag(std::string_view tag) {
    if (tag == "shamir") return SchemeKind::Shamir;
    if (tag == "points") return SchemeKind::Points;
    if (tag == "coeff") return SchemeKind::Coeff;
    throw Error(ErrorCode::ParseError, "unknown scheme tag '" + std::string(tag) + "'");
}

SecretSet::SecretSet(PrimeModulus modulus, std::vector<std::uint64_t> secrets)
    : modulus_(modulus), secrets_(std::move(secrets)) {
    if (secrets_.empty()) {
        throw Error(ErrorCode::EmptyInput, "secret set is empty");
    }
    for (auto s : secrets_) {
        if (s >= modulus_.value()) {
            throw Error(ErrorCode::InvalidParams,
                        "secret " + std::to_string(s) + " is not a residue mod " +
                            std::to_string(modulus_.value()));
        }
    }
}

bool SecretSet::all_zero() const noexcept {
    return std::ranges::all_of(secrets_, [](std::uint64_t s) { return s == 0; });
}

Share::Share(SchemeKind scheme, PrimeModulus p, std::uint32_t threshold,
             std::uint64_t x, std::uint64_t y)
    : scheme_(scheme), p_(p), threshold_(threshold), x_(x), y_(y) {
    if (threshold < 2) {
        throw Error(ErrorCode::InvalidParams, "share threshold must be at least 2");
    }
    if (x >= p.value() || y >= p.value()) {
        throw Error(ErrorCode::InvalidParams, "share coordinates must be residues mod p");
    }
    switch (scheme) {
        case SchemeKind::Shamir:
        case SchemeKind::Coeff:
            if (x == 0) {
                throw Error(ErrorCode::InvalidParams,
                            "share at x=0 would expose the free term");
            }
            break;
        case SchemeKind::Points:
            if (x < threshold) {
                throw Error(ErrorCode::InvalidParams,
                            "points-scheme share x must avoid the secret nodes 0.." +
                                std::to_string(threshold - 1));
            }
            break;
    }
}

namespace {

std::vector<Share> emit_shares(SchemeKind scheme, const Polynomial& q,
                               std::uint32_t threshold, std::uint64_t first_x,
                               std::uint32_t n) {
    std::vector<Share> shares;
    shares.reserve(n);
    const PrimeModulus p = q.modulus();
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t x = first_x + i;
        shares.emplace_back(scheme, p, threshold, x,
                            q.evaluate({x, p}).value());
    }
    return shares;
}

// Shared validation for reconstruction: consistent headers, enough shares,
// then an interpolation through the first `threshold` of them.
Polynomial reconstruct_polynomial(std::span<const Share> shares, SchemeKind expected) {
    if (shares.empty()) {
        throw Error(ErrorCode::EmptyInput, "no shares given");
    }
    const Share& first = shares.front();
    for (const Share& s : shares) {
        if (s.scheme() != expected || s.scheme() != first.scheme() ||
            s.modulus() != first.modulus() || s.threshold() != first.threshold()) {
            throw Error(ErrorCode::MixedShares,
                        "shares disagree on scheme, modulus, or threshold");
        }
    }
    const std::uint32_t threshold = first.threshold();
    if (shares.size() < threshold) {
        throw Error(ErrorCode::QuorumTooSmall,
                    "got " + std::to_string(shares.size()) + " shares, threshold is " +
                        std::to_string(threshold));
    }
    std::vector<Point> pts;
    pts.reserve(threshold);
    for (std::uint32_t i = 0; i < threshold; ++i) {
        pts.push_back({shares[i].x(), shares[i].y()});
    }
    return interpolate(PointSet{first.modulus(), std::move(pts)});
}

} // namespace

std::vector<Share> shamir_split(PrimeModulus p, std::uint64_t secret,
                                std::uint32_t threshold, std::uint32_t n,
                                RandomSource& rng) {
    if (threshold < 2 || threshold > n || n >= p.value()) {
        throw Error(ErrorCode::InvalidParams,
                    "need 2 <= k <= n <= p-1 for a (k, n) split");
    }
    if (secret >= p.value()) {
        throw Error(ErrorCode::InvalidParams, "secret is not a residue mod p");
    }
    std::vector<std::uint64_t> coeffs(threshold);
    coeffs[0] = secret;
    for (std::uint32_t i = 1; i < threshold; ++i) {
        coeffs[i] = rng.below(p.value());
    }
    while (coeffs[threshold - 1] == 0) {
        coeffs[threshold - 1] = rng.below(p.value());
    }
    return emit_shares(SchemeKind::Shamir, Polynomial{p, std::move(coeffs)},
                       threshold, 1, n);
}

std::uint64_t shamir_reconstruct(std::span<const Share> shares) {
    return reconstruct_polynomial(shares, SchemeKind::Shamir)
        .evaluate({0, shares.front().modulus()})
        .value();
}

std::vector<Share> points_split(const SecretSet& secrets, std::uint32_t n) {
    const std::uint32_t k = secrets.count();
    const PrimeModulus p = secrets.modulus();
    if (k < 2 || n < 1 || k > p.value()) {
        throw Error(ErrorCode::InvalidParams,
                    "need 2 <= k <= p and n >= 1 for a points-scheme split");
    }
    std::vector<Point> pts(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        pts[i] = {i, secrets.values()[i]};
    }
    const Polynomial q = interpolate(PointSet{p, std::move(pts)});
    const auto degree = q.true_degree();
    if (!degree || *degree < k - 1) {
        throw DegenerateSecretSet(degree, k - 1);
    }
    // Checked after degeneracy: a bad tuple is reported as such even when
    // there is no room left in the field for share coordinates.
    if (static_cast<std::uint64_t>(k) + n > p.value()) {
        throw Error(ErrorCode::InvalidParams,
                    "share coordinates k..k+n-1 must stay below p");
    }
    return emit_shares(SchemeKind::Points, q, k, k, n);
}

SecretSet points_reconstruct(std::span<const Share> shares) {
    const Polynomial q = reconstruct_polynomial(shares, SchemeKind::Points);
    const PrimeModulus p = shares.front().modulus();
    const std::uint32_t k = shares.front().threshold();
    std::vector<std::uint64_t> secrets(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        secrets[i] = q.evaluate({i, p}).value();
    }
    return {p, std::move(secrets)};
}

std::vector<Share> coeff_split(const SecretSet& secrets, std::uint32_t m,
                               std::uint32_t n, RandomSource* rng) {
    const std::uint32_t k = secrets.count();
    const PrimeModulus p = secrets.modulus();
    if (m < 2 || m < k || m > n || n >= p.value()) {
        throw Error(ErrorCode::InvalidParams,
                    "need 2 <= m, k <= m <= n <= p-1 for a coefficient split");
    }
    if (secrets.all_zero()) {
        throw Error(ErrorCode::AllZeroSecrets,
                    "all-zero secret set cannot be shared");
    }
    if (m == k && secrets.values().back() == 0) {
        throw Error(ErrorCode::LeadingSecretZero,
                    "last secret is 0, so the degree-" + std::to_string(k - 1) +
                        " coefficient would vanish; use m > k or reorder");
    }
    std::vector<std::uint64_t> coeffs = secrets.values();
    if (m > k) {
        if (rng == nullptr) {
            throw Error(ErrorCode::InvalidParams,
                        "random source required when m > k");
        }
        coeffs.resize(m);
        for (std::uint32_t i = k; i < m; ++i) {
            coeffs[i] = rng->below(p.value());
        }
        while (coeffs[m - 1] == 0) {
            coeffs[m - 1] = rng->below(p.value());
        }
    }
    return emit_shares(SchemeKind::Coeff, Polynomial{p, std::move(coeffs)}, m, 1, n);
}

SecretSet coeff_reconstruct(std::span<const Share> shares, std::uint32_t k_secrets) {
    const Polynomial q = reconstruct_polynomial(shares, SchemeKind::Coeff);
    const std::uint32_t m = shares.front().threshold();
    if (k_secrets < 1 || k_secrets > m) {
        throw Error(ErrorCode::InvalidParams,
                    "k_secrets must be in 1..threshold");
    }
    std::vector<std::uint64_t> secrets(k_secrets);
    for (std::uint32_t i = 0; i < k_secrets; ++i) {
        secrets[i] = q.coefficient(i).value();
    }
    return {shares.front().modulus(), std::move(secrets)};
}

SecretSet chunk_secret(std::span<const std::uint8_t> bytes, std::uint32_t k,
                       PrimeModulus p) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidParams, "chunk count must be positive");
    }
    const std::size_t total_bits = bytes.size() * 8;
    const std::size_t chunk_bits = (total_bits + k - 1) / k;
    std::vector<std::uint64_t> chunks(k, 0);
    for (std::uint32_t c = 0; c < k; ++c) {
        std::uint64_t value = 0;
        for (std::size_t b = 0; b < chunk_bits; ++b) {
            const std::size_t bit_index = static_cast<std::size_t>(c) * chunk_bits + b;
            unsigned bit = 0;
            if (bit_index < total_bits) {
                bit = (bytes[bit_index / 8] >> (7 - bit_index % 8)) & 1u;
            }
            value = value * 2 + bit;
            // The running value only grows, so an early hit is conclusive.
            if (value >= p.value()) {
                throw Error(ErrorCode::ChunkExceedsModulus,
                            "chunk " + std::to_string(c) + " does not fit below p=" +
                                std::to_string(p.value()) +
                                "; use a larger p or more chunks");
            }
        }
        chunks[c] = value;
    }
    return {p, std::move(chunks)};
}

std::vector<std::uint8_t> unchunk_secret(std::span<const std::uint64_t> chunks,
                                         std::size_t byte_len) {
    const std::size_t k = chunks.size();
    if (k == 0) {
        throw Error(ErrorCode::EmptyInput, "no chunks given");
    }
    const std::size_t total_bits = byte_len * 8;
    const std::size_t chunk_bits = (total_bits + k - 1) / k;
    for (auto c : chunks) {
        if (chunk_bits < 64 && c >= (std::uint64_t{1} << chunk_bits)) {
            throw Error(ErrorCode::InvalidParams,
                        "chunk value " + std::to_string(c) + " is wider than the " +
                            std::to_string(chunk_bits) + "-bit chunk size");
        }
    }
    std::vector<std::uint8_t> bytes(byte_len, 0);
    for (std::size_t bit_index = 0; bit_index < total_bits; ++bit_index) {
        const std::size_t c = bit_index / chunk_bits;
        const std::size_t b = bit_index % chunk_bits;
        const std::size_t shift = chunk_bits - 1 - b;
        unsigned bit = shift >= 64 ? 0u
                                   : static_cast<unsigned>((chunks[c] >> shift) & 1u);
        bytes[bit_index / 8] |= static_cast<std::uint8_t>(bit << (7 - bit_index % 8));
    }
    return bytes;
}

} // namespace mss
