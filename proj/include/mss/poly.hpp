#ifndef MSS_POLY_HPP
#define MSS_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mss/field.hpp"

namespace mss {

// Coefficient-vector polynomial over Z_p; coefficients[i] is the coefficient
// of x^i. Trailing zeros are legal storage and ignored by true_degree().
class Polynomial {
public:
    Polynomial(PrimeModulus modulus, std::vector<std::uint64_t> coefficients);

    PrimeModulus modulus() const noexcept { return modulus_; }
    std::size_t coefficient_count() const noexcept { return coefficients_.size(); }
    FieldElement coefficient(std::size_t i) const;
    const std::vector<std::uint64_t>& coefficients() const noexcept { return coefficients_; }

    /// Largest index with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> true_degree() const noexcept;

    /// Horner evaluation at x.
    FieldElement evaluate(FieldElement x) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    PrimeModulus modulus_;
    std::vector<std::uint64_t> coefficients_;
};

struct Point {
    std::uint64_t x;
    std::uint64_t y;
};

// Interpolation input: points with pairwise-distinct x over one field.
class PointSet {
public:
    PointSet(PrimeModulus modulus, std::vector<Point> points);

    PrimeModulus modulus() const noexcept { return modulus_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    PrimeModulus modulus_;
    std::vector<Point> points_;
};

/// Lagrange interpolation. The result stores |points| coefficients, so its
/// true degree may be lower than its storage degree.
Polynomial interpolate(const PointSet& points);

/// Row of the inverse of the k-by-k Vandermonde matrix on nodes 0..k-1 that
/// yields the degree-(k-1) coefficient: a_{k-1} = sum_i row[i] * s_i for the
/// polynomial through (i, s_i). A tuple is degenerate exactly when that dot
/// product vanishes.
std::vector<FieldElement> vandermonde_first_row_inverse(std::size_t k, PrimeModulus p);

} // namespace mss

#endif // MSS_POLY_HPP
