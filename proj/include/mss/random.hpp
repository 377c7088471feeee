#ifndef MSS_RANDOM_HPP
#define MSS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mss/errors.hpp"
#include "mss/field.hpp"

namespace mss {

// Seedable source of uniform residues. Built on mt19937_64 with rejection
// sampling so the same seed yields the same sequence on every platform
// (std::uniform_int_distribution makes no such promise).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw Error(ErrorCode::InvalidParams, "random bound must be positive");
        }
        // Accept only draws under the largest multiple of bound in [0, 2^64).
        const std::uint64_t overhang = (UINT64_MAX % bound + 1) % bound;
        const std::uint64_t limit = UINT64_MAX - overhang;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw > limit);
        return draw % bound;
    }

    FieldElement uniform(PrimeModulus modulus) {
        return {below(modulus.value()), modulus};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mss

#endif // MSS_RANDOM_HPP
