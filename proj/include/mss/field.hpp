#ifndef MSS_FIELD_HPP
#define MSS_FIELD_HPP

#include <cstdint>

#include "mss/errors.hpp"

namespace mss {

// Largest admissible modulus is kept below 2^61 so the product of two
// canonical residues fits a 128-bit intermediate with headroom.
inline constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 61;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

// A validated prime modulus, 2 <= p < 2^61.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    std::uint64_t p_;
};

// A canonical residue in [0, p). Arithmetic between elements of different
// fields throws ModulusMismatch; all results are reduced immediately.
class FieldElement {
public:
    FieldElement(std::uint64_t value, PrimeModulus modulus)
        : value_(value % modulus.value()), modulus_(modulus) {}

    std::uint64_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(FieldElement other) const;
    FieldElement operator-(FieldElement other) const;
    FieldElement operator*(FieldElement other) const;
    FieldElement operator-() const;

    FieldElement pow(std::uint64_t exponent) const;

    /// Multiplicative inverse via extended Euclid; throws ZeroInverse on 0.
    FieldElement inverse() const;

    friend bool operator==(FieldElement, FieldElement) = default;

private:
    std::uint64_t value_;
    PrimeModulus modulus_;
};

} // namespace mss

#endif // MSS_FIELD_HPP
