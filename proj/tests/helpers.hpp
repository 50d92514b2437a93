#pragma once

#include <random>
#include <set>
#include <vector>

#include "lefarr/io.hpp"
#include "lefarr/monomial_ideal.hpp"
#include "lefarr/polynomial.hpp"

namespace lefarr::testing {

inline PowerProduct pp(std::vector<int> e) { return PowerProduct(std::move(e)); }

inline MonomialIdeal ideal(std::size_t nvars, std::vector<std::vector<int>> exps) {
    std::vector<PowerProduct> gens;
    for (auto& e : exps) gens.emplace_back(std::move(e));
    return MonomialIdeal::make(nvars, std::move(gens));
}

// Hilbert function by plain enumeration: independent of the recursive
// splitting used in the library.
inline long hf_by_enumeration(const MonomialIdeal& I, int d) {
    long count = 0;
    for (const auto& m : monomials_of_degree(I.nvars(), d))
        if (!I.contains(m)) ++count;
    return count;
}

// rank of an explicit rational matrix by Gaussian elimination
inline long matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// rank of multiplication by x_l^s from degree i, as an explicit matrix
inline long xl_rank_by_matrix(const MonomialIdeal& I, int i, int s) {
    const auto src = standard_monomials(I, i);
    const auto tgt = standard_monomials(I, i + s);
    const PowerProduct shift = PowerProduct::variable(I.nvars(), I.nvars() - 1, s);
    std::vector<std::vector<Rational>> m(tgt.size(),
                                         std::vector<Rational>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const PowerProduct image = src[c] * shift;
        for (std::size_t r = 0; r < tgt.size(); ++r)
            if (tgt[r] == image) m[r][c] = 1;
    }
    return matrix_rank(std::move(m));
}

inline PowerProduct random_pp(std::mt19937_64& rng, std::size_t nvars, int max_deg) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    std::vector<int> e(nvars, 0);
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) e[var(rng)] += 1;
    return PowerProduct(std::move(e));
}

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t nvars,
                                           int max_gens, int max_deg) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::vector<PowerProduct> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_pp(rng, nvars, max_deg));
    return MonomialIdeal::make(nvars, std::move(gens));
}

// smallest strongly stable ideal containing the given monomials
inline MonomialIdeal borel_closure(std::size_t nvars, std::vector<PowerProduct> seed) {
    auto cmp = [](const PowerProduct& a, const PowerProduct& b) {
        return a.exponents() < b.exponents();
    };
    std::set<PowerProduct, decltype(cmp)> closed(cmp);
    std::vector<PowerProduct> todo = std::move(seed);
    while (!todo.empty()) {
        PowerProduct t = std::move(todo.back());
        todo.pop_back();
        if (!closed.insert(t).second) continue;
        for (std::size_t j = 1; j < nvars; ++j) {
            if (t.exponent(j) == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                auto e = t.exponents();
                e[j] -= 1;
                e[i] += 1;
                todo.emplace_back(std::move(e));
            }
        }
    }
    return MonomialIdeal::make(nvars,
                               std::vector<PowerProduct>(closed.begin(), closed.end()));
}

inline MonomialIdeal random_strongly_stable(std::mt19937_64& rng, std::size_t nvars,
                                            int max_gens, int max_deg) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::vector<PowerProduct> seed;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) seed.push_back(random_pp(rng, nvars, max_deg));
    return borel_closure(nvars, std::move(seed));
}

inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t nvars,
                                     int degree, int coeff_bound) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(nvars, degree)) {
        const int c = coeff(rng);
        if (c != 0) terms.push_back({Rational(c), m});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace lefarr::testing
