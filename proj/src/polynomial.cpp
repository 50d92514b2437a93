#include "lefarr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefarr {

Polynomial Polynomial::zero(std::size_t nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    return monomial(c, PowerProduct::one(nvars));
}

Polynomial Polynomial::monomial(const Rational& c, const PowerProduct& pp) {
    Polynomial p;
    p.nvars_ = pp.nvars();
    if (c != 0) p.terms_.push_back({c, pp});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.pp.nvars() != nvars)
            throw std::invalid_argument("term from different context");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return degrevlex_greater(a.pp, b.pp);
    });
    Polynomial p;
    p.nvars_ = nvars;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().pp == t.pp)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.pp.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().pp.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.pp.degree() == d; });
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials from different contexts");
    Polynomial out;
    out.nvars_ = nvars_;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const Ordering ord = compare_degrevlex(terms_[i].pp, other.terms_[j].pp);
        if (ord == Ordering::greater) {
            out.terms_.push_back(terms_[i++]);
        } else if (ord == Ordering::less) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + other.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({std::move(c), terms_[i].pp});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials from different contexts");
    std::vector<Term> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            acc.push_back({a.coeff * b.coeff, a.pp * b.pp});
    return from_terms(nvars_, std::move(acc));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return zero(nvars_);
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::subtract_multiple(const Rational& c, const PowerProduct& pp,
                                         const Polynomial& other) const {
    Polynomial shifted;
    shifted.nvars_ = nvars_;
    shifted.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
        shifted.terms_.push_back({-(c * t.coeff), pp * t.pp});
    // multiplying by a fixed power-product preserves DegRevLex order
    return *this + shifted;
}

Polynomial Polynomial::differentiate(std::size_t var) const {
    if (var >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial out;
    out.nvars_ = nvars_;
    for (const auto& t : terms_) {
        const int e = t.pp.exponent(var);
        if (e == 0) continue;
        auto exps = t.pp.exponents();
        exps[var] -= 1;
        out.terms_.push_back({t.coeff * e, PowerProduct(std::move(exps))});
    }
    // derivative preserves relative DegRevLex order of surviving terms
    return out;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.front().coeff < 0) scale = -scale;
    return *this * scale;
}

Polynomial Polynomial::monic() const {
    return *this * (1 / leading_term().coeff);
}

bool Polynomial::terms_matches(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].pp == other.terms_[i].pp) ||
            terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

}  // namespace lefarr
