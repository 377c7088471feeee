#include "mss/attacks.hpp"

#include <string>

namespace mss {

DivisibilityInference divisibility_attack(const Share& share, std::uint64_t r) {
    if (share.scheme() != SchemeKind::Coeff) {
        throw Error(ErrorCode::InvalidParams,
                    "divisibility inference applies to coefficient-packed shares");
    }
    const std::uint64_t u = share.x();
    const std::uint64_t p = share.modulus().value();
    if (u < 2) {
        throw Error(ErrorCode::InvalidParams, "share x-coordinate must be at least 2");
    }
    if (r < 1 || r >= p) {
        throw Error(ErrorCode::InvalidParams, "coefficient bound r must be in 1..p-1");
    }

    // Soundness needs sum_{i=0}^{t-1} r*u^i < p: then q(u) is the plain
    // integer value and divisibility by u carries through. Each accepted
    // term keeps power < p < 2^61, so the 128-bit products cannot overflow.
    unsigned __int128 sum = 0;
    unsigned __int128 power = 1;
    for (std::uint32_t i = 0; i < share.threshold(); ++i) {
        sum += static_cast<unsigned __int128>(r) * power;
        if (sum >= p) {
            throw Error(ErrorCode::WraparoundRisk,
                        "coefficient bound r=" + std::to_string(r) +
                            " admits wraparound mod p at x=" + std::to_string(u) +
                            "; the inference would be unsound");
        }
        power *= u;
    }

    DivisibilityInference inference;
    inference.u = u;
    inference.q_u = share.y();
    inference.r = r;
    inference.divisible = share.y() % u == 0;
    inference.search_space_size =
        inference.divisible ? r / u + 1 : r - r / u - 1;
    return inference;
}

RelatedShareForgery related_share_forgery(const Share& source, std::uint64_t d) {
    if (source.scheme() != SchemeKind::Points) {
        throw Error(ErrorCode::InvalidParams,
                    "forgery target is a points-scheme share");
    }
    const PrimeModulus p = source.modulus();
    if (d >= p.value()) {
        throw Error(ErrorCode::InvalidParams, "multiplier d must be a residue mod p");
    }
    const FieldElement scaled = FieldElement{source.y(), p} * FieldElement{d, p};
    return {d, source,
            Share{source.scheme(), p, source.threshold(), source.x(), scaled.value()}};
}

} // namespace mss
