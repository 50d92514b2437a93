#pragma once

#include <optional>
#include <vector>

#include "lefarr/monomial_ideal.hpp"
#include "lefarr/polynomial.hpp"

namespace lefarr {

// Ideal given by generators. An empty generator list is the zero ideal.
struct IdealPresentation {
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;
    bool homogeneous = false;

    static IdealPresentation make(std::size_t nvars, std::vector<Polynomial> gens);
};

// Reduced Groebner basis w.r.t. DegRevLex: elements monic, no term of any
// element divisible by the leading term of another, sorted by leading
// term descending.
struct GroebnerBasis {
    std::size_t nvars = 0;
    std::vector<Polynomial> elements;
};

// remainder of f on division by basis; no term of the result is divisible
// by any basis leading term, and f minus the result lies in the ideal
// generated by basis
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Buchberger with the coprime and chain criteria; pair selection is by
// smallest lcm degree, ties broken DegRevLex-ascending on the lcm, so the
// run is deterministic. degree_cap truncates the basis (unused by the
// higher-level operations).
GroebnerBasis buchberger(const IdealPresentation& gens,
                         std::optional<int> degree_cap = std::nullopt);

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const IdealPresentation& gens);

}  // namespace lefarr
