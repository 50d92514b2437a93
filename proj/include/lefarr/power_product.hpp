#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lefarr {

enum class Ordering { less, equal, greater };

// Exponent vector in l variables; index 0 is the largest variable x_1.
class PowerProduct {
public:
    PowerProduct() = default;
    explicit PowerProduct(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }
    static PowerProduct one(std::size_t nvars) {
        return PowerProduct(std::vector<int>(nvars, 0));
    }
    static PowerProduct variable(std::size_t nvars, std::size_t i, int e = 1);

    std::size_t nvars() const { return exps_.size(); }
    int exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    int degree() const;
    bool is_one() const;

    bool divides(const PowerProduct& other) const;
    PowerProduct operator*(const PowerProduct& other) const;
    // exact quotient; requires other | *this
    PowerProduct operator/(const PowerProduct& other) const;
    PowerProduct gcd(const PowerProduct& other) const;
    PowerProduct lcm(const PowerProduct& other) const;

    // index of the biggest variable dividing this (smallest index with
    // positive exponent); -1 for the unit power-product
    int max_var() const;

    bool operator==(const PowerProduct& other) const { return exps_ == other.exps_; }

private:
    std::vector<int> exps_;
};

// DegRevLex: higher degree wins; on equal degree the last nonzero entry
// of a-b being negative means a > b.
Ordering compare_degrevlex(const PowerProduct& a, const PowerProduct& b);

inline bool degrevlex_greater(const PowerProduct& a, const PowerProduct& b) {
    return compare_degrevlex(a, b) == Ordering::greater;
}
inline bool degrevlex_less(const PowerProduct& a, const PowerProduct& b) {
    return compare_degrevlex(a, b) == Ordering::less;
}

// All power-products of total degree d in nvars variables, DegRevLex descending.
std::vector<PowerProduct> monomials_of_degree(std::size_t nvars, int d);

struct PowerProductHash {
    std::size_t operator()(const PowerProduct& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int e : p.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace lefarr
