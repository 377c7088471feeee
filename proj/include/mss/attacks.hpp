#ifndef MSS_ATTACKS_HPP
#define MSS_ATTACKS_HPP

#include <cstdint>

#include "mss/schemes.hpp"

namespace mss {

// What a shareholder learns from one coefficient-packed share (u, q(u)) when
// every coefficient is known to be at most r and no modular wraparound can
// occur: u divides q(u) iff u divides the first secret a_0.
struct DivisibilityInference {
    std::uint64_t u = 0;
    std::uint64_t q_u = 0;
    std::uint64_t r = 0;
    bool divisible = false;
    std::uint64_t search_space_size = 0;
};

/// Runs the divisibility inference on a Coeff share. Refuses with
/// WraparoundRisk unless sum_{i < threshold} r * u^i < p, the condition under
/// which evaluation never reduces mod p and the inference is sound.
DivisibilityInference divisibility_attack(const Share& share, std::uint64_t r);

// A share for the second group forged from a share of the first, given that
// the second group's secrets are d times the first group's.
struct RelatedShareForgery {
    std::uint64_t d = 0;
    Share source;
    Share forged;
};

/// Sharing is linear in the secrets, so scaling the secrets by d scales every
/// share's y-value by d: the forged share (x, d*y mod p) is a valid share of
/// the scaled group.
RelatedShareForgery related_share_forgery(const Share& source, std::uint64_t d);

} // namespace mss

#endif // MSS_ATTACKS_HPP
