#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lefarr/power_product.hpp"
#include "lefarr/rational.hpp"

namespace lefarr {

struct Term {
    Rational coeff;
    PowerProduct pp;
};

// Sparse polynomial over Q. Terms are kept sorted DegRevLex descending
// with no zero coefficients, so the leading term is terms().front().
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero(std::size_t nvars);
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial monomial(const Rational& c, const PowerProduct& pp);
    // from arbitrary (possibly unsorted, duplicated) term list
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // undefined for the zero polynomial, reported as nullopt
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    const Term& leading_term() const;  // throws on zero

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    // this - c * pp * other; the workhorse of polynomial reduction
    Polynomial subtract_multiple(const Rational& c, const PowerProduct& pp,
                                 const Polynomial& other) const;

    Polynomial differentiate(std::size_t var) const;

    // divide by rational content so coefficients are coprime integers and
    // the leading coefficient is positive; zero stays zero
    Polynomial primitive_part() const;
    Polynomial monic() const;  // leading coefficient 1; throws on zero

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_matches(other);
    }

private:
    bool terms_matches(const Polynomial& other) const;

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace lefarr
