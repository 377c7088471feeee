#include "mss/poly.hpp"

#include <string>
#include <unordered_set>

namespace mss {

Polynomial::Polynomial(PrimeModulus modulus, std::vector<std::uint64_t> coefficients)
    : modulus_(modulus), coefficients_(std::move(coefficients)) {
    for (auto& c : coefficients_) c %= modulus_.value();
}

FieldElement Polynomial::coefficient(std::size_t i) const {
    if (i >= coefficients_.size()) return {0, modulus_};
    return {coefficients_[i], modulus_};
}

std::optional<std::size_t> Polynomial::true_degree() const noexcept {
    for (std::size_t i = coefficients_.size(); i > 0; --i) {
        if (coefficients_[i - 1] != 0) return i - 1;
    }
    return std::nullopt;
}

FieldElement Polynomial::evaluate(FieldElement x) const {
    if (x.modulus() != modulus_) {
        throw Error(ErrorCode::ModulusMismatch,
                    "evaluation point is not in the polynomial's field");
    }
    FieldElement acc{0, modulus_};
    for (std::size_t i = coefficients_.size(); i > 0; --i) {
        acc = acc * x + FieldElement{coefficients_[i - 1], modulus_};
    }
    return acc;
}

PointSet::PointSet(PrimeModulus modulus, std::vector<Point> points)
    : modulus_(modulus), points_(std::move(points)) {
    if (points_.empty()) {
        throw Error(ErrorCode::EmptyInput, "point set is empty");
    }
    std::unordered_set<std::uint64_t> seen;
    for (auto& pt : points_) {
        pt.x %= modulus_.value();
        pt.y %= modulus_.value();
        if (!seen.insert(pt.x).second) {
            throw Error(ErrorCode::DuplicateX,
                        "duplicate x-coordinate " + std::to_string(pt.x));
        }
    }
}

Polynomial interpolate(const PointSet& points) {
    const PrimeModulus p = points.modulus();
    const auto& pts = points.points();
    const std::size_t n = pts.size();

    // Lagrange basis form: accumulate y_i/denom_i times the expanded
    // numerator polynomial prod_{j != i} (x - x_j).
    std::vector<FieldElement> result(n, FieldElement{0, p});
    std::vector<FieldElement> numer(n, FieldElement{0, p});
    for (std::size_t i = 0; i < n; ++i) {
        numer.assign(n, FieldElement{0, p});
        numer[0] = FieldElement{1, p};
        std::size_t len = 1;
        FieldElement denom{1, p};
        const FieldElement xi{pts[i].x, p};
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const FieldElement neg_xj = -FieldElement{pts[j].x, p};
            numer[len] = numer[len - 1];
            for (std::size_t d = len - 1; d >= 1; --d) {
                numer[d] = numer[d - 1] + neg_xj * numer[d];
            }
            numer[0] = neg_xj * numer[0];
            ++len;
            denom = denom * (xi - FieldElement{pts[j].x, p});
        }
        const FieldElement scale = FieldElement{pts[i].y, p} * denom.inverse();
        for (std::size_t d = 0; d < n; ++d) {
            result[d] = result[d] + numer[d] * scale;
        }
    }
    std::vector<std::uint64_t> coeffs(n);
    for (std::size_t d = 0; d < n; ++d) coeffs[d] = result[d].value();
    return {p, std::move(coeffs)};
}

std::vector<FieldElement> vandermonde_first_row_inverse(std::size_t k, PrimeModulus p) {
    if (k == 0) {
        throw Error(ErrorCode::InvalidParams, "k must be positive");
    }
    if (k > p.value()) {
        throw Error(ErrorCode::KTooLargeForField,
                    "k=" + std::to_string(k) + " exceeds field size p=" +
                        std::to_string(p.value()));
    }

    // M[i][j] = i^(k-1-j): row i lists descending powers of node i, so
    // M * (a_{k-1},...,a_0)^T = (s_0,...,s_{k-1})^T. Row 0 of M^-1 then
    // recovers a_{k-1} from the secrets.
    std::vector<std::vector<FieldElement>> m(k, std::vector<FieldElement>(k, FieldElement{0, p}));
    std::vector<std::vector<FieldElement>> inv(k, std::vector<FieldElement>(k, FieldElement{0, p}));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m[i][j] = FieldElement{i, p}.pow(k - 1 - j);
        }
        inv[i][i] = FieldElement{1, p};
    }

    // Gauss-Jordan with pivot search; the Vandermonde determinant on
    // distinct nodes is a unit mod p, so a pivot always exists.
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col].is_zero()) ++pivot;
        if (pivot == k) {
            throw Error(ErrorCode::Fail, "Vandermonde matrix is singular");
        }
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const FieldElement scale = m[col][col].inverse();
        for (std::size_t j = 0; j < k; ++j) {
            m[col][j] = m[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (std::size_t row = 0; row < k; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const FieldElement factor = m[row][col];
            for (std::size_t j = 0; j < k; ++j) {
                m[row][j] = m[row][j] - factor * m[col][j];
                inv[row][j] = inv[row][j] - factor * inv[col][j];
            }
        }
    }
    return inv[0];
}

} // namespace mss
