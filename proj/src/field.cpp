#include "mss/field.hpp"

#include <string>

namespace mss {

static_assert(sizeof(unsigned __int128) == 16, "128-bit arithmetic required");

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent != 0) {
        if (exponent & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exponent >>= 1;
    }
    return result;
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
    if (a != b) {
        throw Error(ErrorCode::ModulusMismatch,
                    "field elements have different moduli: " +
                        std::to_string(a.value()) + " vs " +
                        std::to_string(b.value()));
    }
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is exact for all n below 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p >= kModulusBound) {
        throw Error(ErrorCode::InvalidParams,
                    "modulus " + std::to_string(p) + " is not below 2^61");
    }
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime,
                    "modulus " + std::to_string(p) + " is not prime");
    }
}

FieldElement FieldElement::operator+(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {(value_ + other.value_) % modulus_.value(), modulus_};
}

FieldElement FieldElement::operator-(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {(value_ + modulus_.value() - other.value_) % modulus_.value(), modulus_};
}

FieldElement FieldElement::operator*(FieldElement other) const {
    require_same_modulus(modulus_, other.modulus_);
    return {mul_mod(value_, other.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator-() const {
    return {(modulus_.value() - value_) % modulus_.value(), modulus_};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return {pow_mod(value_, exponent, modulus_.value()), modulus_};
}

FieldElement FieldElement::inverse() const {
    if (value_ == 0) {
        throw Error(ErrorCode::ZeroInverse, "0 has no multiplicative inverse");
    }
    // Extended Euclid on (value, p); Bezout coefficient of value is the inverse.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus_.value());
    std::int64_t new_r = static_cast<std::int64_t>(value_);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus_.value());
    return {static_cast<std::uint64_t>(t), modulus_};
}

} // namespace mss
