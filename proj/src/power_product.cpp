#include "lefarr/power_product.hpp"

#include <algorithm>
#include <numeric>

namespace lefarr {

PowerProduct PowerProduct::variable(std::size_t nvars, std::size_t i, int e) {
    std::vector<int> exps(nvars, 0);
    exps.at(i) = e;
    return PowerProduct(std::move(exps));
}

int PowerProduct::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool PowerProduct::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool PowerProduct::divides(const PowerProduct& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("power-products from different contexts");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

PowerProduct PowerProduct::operator*(const PowerProduct& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("power-products from different contexts");
    std::vector<int> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
    return PowerProduct(std::move(exps));
}

PowerProduct PowerProduct::operator/(const PowerProduct& other) const {
    if (!other.divides(*this))
        throw std::invalid_argument("inexact power-product quotient");
    std::vector<int> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= other.exps_[i];
    return PowerProduct(std::move(exps));
}

PowerProduct PowerProduct::gcd(const PowerProduct& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("power-products from different contexts");
    std::vector<int> exps(exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::min(exps_[i], other.exps_[i]);
    return PowerProduct(std::move(exps));
}

PowerProduct PowerProduct::lcm(const PowerProduct& other) const {
    if (nvars() != other.nvars())
        throw std::invalid_argument("power-products from different contexts");
    std::vector<int> exps(exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::max(exps_[i], other.exps_[i]);
    return PowerProduct(std::move(exps));
}

int PowerProduct::max_var() const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) return static_cast<int>(i);
    return -1;
}

Ordering compare_degrevlex(const PowerProduct& a, const PowerProduct& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("power-products from different contexts");
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? Ordering::greater : Ordering::less;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        const int diff = a.exponent(i) - b.exponent(i);
        if (diff != 0) return diff < 0 ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

std::vector<PowerProduct> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<PowerProduct> out;
    std::vector<int> exps(nvars, 0);
    // enumerate all exponent vectors summing to d
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i + 1 == nvars) {
            exps[i] = rem;
            out.emplace_back(exps);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            exps[i] = e;
            rec(i + 1, rem - e);
        }
    };
    if (d < 0) return out;
    rec(0, d);
    std::sort(out.begin(), out.end(), degrevlex_greater);
    return out;
}

}  // namespace lefarr
