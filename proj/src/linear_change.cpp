#include "lefarr/linear_change.hpp"

#include <stdexcept>

namespace lefarr {

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

LinearChange::LinearChange(std::vector<std::vector<Rational>> matrix)
    : matrix_(std::move(matrix)) {
    const std::size_t n = matrix_.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : matrix_)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    if (determinant(matrix_) == 0)
        throw std::invalid_argument("singular change of coordinates");
}

LinearChange LinearChange::identity(std::size_t n) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return LinearChange(std::move(m));
}

LinearChange LinearChange::inverse() const {
    const std::size_t n = size();
    auto m = matrix_;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular matrix in inverse");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational d = m[col][col];
        for (std::size_t k = 0; k < n; ++k) {
            m[col][k] /= d;
            inv[col][k] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational factor = m[row][col];
            for (std::size_t k = 0; k < n; ++k) {
                m[row][k] -= factor * m[col][k];
                inv[row][k] -= factor * inv[col][k];
            }
        }
    }
    return LinearChange(std::move(inv));
}

Polynomial LinearChange::apply(const Polynomial& f) const {
    const std::size_t n = size();
    if (f.nvars() != n)
        throw std::invalid_argument("polynomial from different context");
    // images of the variables
    std::vector<Polynomial> image(n, Polynomial::zero(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j)
            if (matrix_[i][j] != 0)
                terms.push_back({matrix_[i][j], PowerProduct::variable(n, j)});
        image[i] = Polynomial::from_terms(n, std::move(terms));
    }
    Polynomial out = Polynomial::zero(n);
    for (const auto& t : f.terms()) {
        Polynomial part = Polynomial::constant(n, t.coeff);
        for (std::size_t i = 0; i < n; ++i) {
            // binary powering keeps intermediate products few
            int e = t.pp.exponent(i);
            Polynomial base = image[i];
            while (e > 0) {
                if (e & 1) part = part * base;
                e >>= 1;
                if (e) base = base * base;
            }
        }
        out = out + part;
    }
    return out;
}

}  // namespace lefarr
