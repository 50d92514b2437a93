#pragma once

#include <vector>

#include "lefarr/polynomial.hpp"
#include "lefarr/rational.hpp"

namespace lefarr {

// Invertible l x l change of coordinates x_i -> sum_j m[i][j] x_j.
class LinearChange {
public:
    explicit LinearChange(std::vector<std::vector<Rational>> matrix);
    static LinearChange identity(std::size_t n);

    std::size_t size() const { return matrix_.size(); }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

    LinearChange inverse() const;

    // substitute and expand; homogeneous degrees are preserved
    Polynomial apply(const Polynomial& f) const;

private:
    std::vector<std::vector<Rational>> matrix_;
};

Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace lefarr
