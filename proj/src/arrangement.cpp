#include "lefarr/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefarr {

Arrangement Arrangement::make(std::size_t nvars, std::vector<Polynomial> forms) {
    if (forms.empty()) throw std::invalid_argument("empty arrangement");
    for (const auto& f : forms) {
        if (f.nvars() != nvars)
            throw std::invalid_argument("form from different context");
        if (f.is_zero()) throw std::invalid_argument("zero linear form");
        if (!f.is_homogeneous() || *f.degree() != 1)
            throw std::invalid_argument("arrangement forms must be linear with zero constant term");
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (forms[i].monic() == forms[j].monic())
                throw std::invalid_argument("proportional forms define the same hyperplane");
    Arrangement A;
    A.nvars_ = nvars;
    A.forms_ = std::move(forms);
    return A;
}

Polynomial defining_polynomial(const Arrangement& A) {
    Polynomial q = Polynomial::constant(A.nvars(), 1);
    for (const auto& f : A.forms()) q = q * f;
    return q;
}

IdealPresentation jacobian_ideal(const Arrangement& A) {
    const Polynomial q = defining_polynomial(A);
    std::vector<Polynomial> gens;
    gens.push_back(q);
    Polynomial euler = Polynomial::zero(A.nvars());
    for (std::size_t i = 0; i < A.nvars(); ++i) {
        Polynomial d = q.differentiate(i);
        euler = euler + Polynomial::monomial(1, PowerProduct::variable(A.nvars(), i)) * d;
        gens.push_back(std::move(d));
    }
    // Euler relation sum x_i dQ/dx_i = n Q puts Q in the partials ideal
    if (!(euler == q * Rational(static_cast<long>(A.size()))))
        throw std::logic_error("Euler relation failed");
    return IdealPresentation::make(A.nvars(), std::move(gens));
}

DerivationVector DerivationVector::make(std::vector<Polynomial> coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("empty derivation");
    int pdeg = -1;
    for (const auto& c : coefficients) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous())
            throw std::invalid_argument("derivation coefficients must be homogeneous");
        if (pdeg >= 0 && *c.degree() != pdeg)
            throw std::invalid_argument("derivation coefficients of mixed degree");
        pdeg = *c.degree();
    }
    if (pdeg < 0) throw std::invalid_argument("zero derivation");
    return {std::move(coefficients), pdeg};
}

namespace {

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
                            std::vector<std::size_t> cols, std::size_t row,
                            std::size_t nvars) {
    if (cols.size() == 1) return m[row][cols[0]];
    Polynomial det = Polynomial::zero(nvars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m[row][cols[k]].is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        Polynomial minor = poly_determinant(m, std::move(rest), row + 1, nvars);
        Polynomial contrib = m[row][cols[k]] * minor;
        det = (k % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

}  // namespace

SaitoVerdict saito_verify(const Arrangement& A,
                          const std::vector<DerivationVector>& deltas) {
    const std::size_t l = A.nvars();
    if (deltas.size() != l)
        throw std::invalid_argument("Saito verification needs exactly one candidate per variable");
    const Polynomial q = defining_polynomial(A);

    SaitoVerdict v;
    for (const auto& d : deltas) {
        if (d.coefficients.size() != l)
            throw std::invalid_argument("derivation coefficient count mismatch");
        v.pdeg_sum += d.pdeg;
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        Polynomial dq = Polynomial::zero(l);
        for (std::size_t j = 0; j < l; ++j)
            dq = dq + deltas[i].coefficients[j] * q.differentiate(j);
        if (!normal_form(dq, {q}).is_zero()) {
            v.reason = SaitoFailure::not_logarithmic;
            v.offending_index = i;
            return v;
        }
    }
    if (v.pdeg_sum != static_cast<long>(A.size())) {
        v.reason = SaitoFailure::degree_sum;
        return v;
    }
    std::vector<std::vector<Polynomial>> m(l);
    for (std::size_t i = 0; i < l; ++i) m[i] = deltas[i].coefficients;
    std::vector<std::size_t> cols(l);
    for (std::size_t j = 0; j < l; ++j) cols[j] = j;
    const Polynomial det = poly_determinant(m, std::move(cols), 0, l);
    // det = c Q for nonzero c, i.e. equal primitive parts
    if (det.is_zero() || !(det.primitive_part() == q.primitive_part())) {
        v.reason = SaitoFailure::determinant;
        return v;
    }
    v.basis = true;
    return v;
}

FreenessVerdict is_free_via_rgin_of(const MonomialIdeal& rgin_ideal, std::size_t n) {
    FreenessVerdict v;
    if (rgin_ideal.is_unit()) {
        v.free = true;
        return v;
    }
    for (const auto& g : rgin_ideal.min_gens()) {
        for (std::size_t k = 2; k < rgin_ideal.nvars(); ++k)
            if (g.exponent(k) > 0) {
                v.witness = g;
                v.witness_reason = "minimal generator involves a variable past x_2";
                return v;
            }
    }
    if (rgin_ideal.min_gens().size() != n) {
        v.witness_reason = "generator count does not match the free pattern";
        if (!rgin_ideal.min_gens().empty()) v.witness = rgin_ideal.min_gens().front();
        return v;
    }
    // expect x_1^(n-1), x_1^(n-2) x_2^(lambda_1), ..., x_2^(lambda_(n-1))
    auto gens = rgin_ideal.min_gens();
    std::sort(gens.begin(), gens.end(), [](const PowerProduct& a, const PowerProduct& b) {
        return a.exponent(0) > b.exponent(0);
    });
    int prev_lambda = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int e1 = gens[i].exponent(0);
        const int e2 = rgin_ideal.nvars() >= 2 ? gens[i].exponent(1) : 0;
        if (e1 != static_cast<int>(n) - 1 - static_cast<int>(i)) {
            v.witness = gens[i];
            v.witness_reason = "x_1 exponents do not step down by one";
            return v;
        }
        if (i == 0) {
            if (e2 != 0) {
                v.witness = gens[i];
                v.witness_reason = "top generator is not a pure power of x_1";
                return v;
            }
            continue;
        }
        const int gap = e2 - prev_lambda;
        if ((i == 1 && e2 < 1) || (i > 1 && (gap != 1 && gap != 2))) {
            v.witness = gens[i];
            v.witness_reason = "lambda gaps fall outside {1, 2}";
            return v;
        }
        prev_lambda = e2;
        v.lambda.push_back(e2);
    }
    v.free = true;
    return v;
}

FreenessVerdict is_free_via_rgin(const Arrangement& A, const GinConfig& cfg) {
    const GinResult r = rgin(jacobian_ideal(A), cfg);
    return is_free_via_rgin_of(r.ideal, A.size());
}

ConjectureReport check_conjecture_d0_of(const MonomialIdeal& rgin_ideal) {
    ConjectureReport rep;
    rep.d0 = -1;
    for (const auto& g : rgin_ideal.min_gens()) {
        bool pure_x2 = g.exponent(1) > 0;
        for (std::size_t k = 0; k < rgin_ideal.nvars(); ++k)
            if (k != 1 && g.exponent(k) > 0) pure_x2 = false;
        if (pure_x2 && (rep.d0 < 0 || g.exponent(1) < rep.d0))
            rep.d0 = g.exponent(1);
    }
    rep.consistent = true;
    if (rep.d0 < 0) return rep;  // no pure power of x_2: nothing to compare
    for (const auto& g : rgin_ideal.min_gens()) {
        bool involves_later = false;
        for (std::size_t k = 2; k < rgin_ideal.nvars(); ++k)
            if (g.exponent(k) > 0) involves_later = true;
        if (involves_later && g.degree() < rep.d0) {
            rep.consistent = false;
            rep.violating_generator = g;
            return rep;
        }
    }
    return rep;
}

ConjectureReport check_conjecture_d0(const Arrangement& A, const GinConfig& cfg) {
    return check_conjecture_d0_of(rgin(jacobian_ideal(A), cfg).ideal);
}

JacobianAlgebraReport jacobian_algebra_report(const Arrangement& A,
                                              const GinConfig& cfg,
                                              int max_degree) {
    JacobianAlgebraReport rep;
    rep.n = A.size();
    const IdealPresentation j = jacobian_ideal(A);
    rep.gin = rgin(j, cfg);
    // HF(S/J) equals HF of the quotient by its generic initial ideal
    for (int d = 0; d <= max_degree; ++d)
        rep.hilbert.push_back(hilbert_function(rep.gin.ideal, d));
    rep.wlp = has_wlp_monomial(rep.gin.ideal);
    rep.slp = has_slp_monomial(rep.gin.ideal);
    for (auto* r : {&rep.wlp, &rep.slp}) {
        r->route = LefschetzRoute::via_rgin;
        r->element = "general linear form";
        r->element_only = false;
        r->gin = rep.gin;
    }
    rep.almost_revlex = is_almost_revlex(rep.gin.ideal);
    rep.freeness = is_free_via_rgin_of(rep.gin.ideal, A.size());
    rep.conjecture = check_conjecture_d0_of(rep.gin.ideal);
    return rep;
}

}  // namespace lefarr
