#include "lefarr/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lefarr {

IdealPresentation IdealPresentation::make(std::size_t nvars,
                                          std::vector<Polynomial> gens) {
    IdealPresentation p;
    p.nvars = nvars;
    for (auto& g : gens) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator from different context");
        if (!g.is_zero()) p.generators.push_back(std::move(g));
    }
    p.homogeneous = std::all_of(p.generators.begin(), p.generators.end(),
                                [](const Polynomial& g) { return g.is_homogeneous(); });
    return p;
}

namespace {

// integer-coefficient polynomial, terms DegRevLex descending; the whole
// Buchberger loop is fraction-free
struct ITerm {
    PowerProduct pp;
    Integer c;
};
using IPoly = std::vector<ITerm>;

IPoly to_ipoly(const Polynomial& f) {
    const Polynomial prim = f.primitive_part();
    IPoly out;
    out.reserve(prim.terms().size());
    for (const auto& t : prim.terms()) out.push_back({t.pp, t.coeff.get_num()});
    return out;
}

Polynomial to_monic_polynomial(std::size_t nvars, const IPoly& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.push_back({Rational(t.c), t.pp});
    Polynomial p = Polynomial::from_terms(nvars, std::move(terms));
    return p.is_zero() ? p : p.monic();
}

void strip_content(IPoly& f) {
    if (f.empty()) return;
    Integer g = 0;
    for (const auto& t : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (f.front().c < 0) g = -g;
    if (g == 1) return;
    for (auto& t : f) t.c /= g;
}

// a*f - b*(u*g), leading terms assumed to cancel when called from reduction
IPoly combine(const IPoly& f, const Integer& a, const Integer& b,
              const PowerProduct& u, const IPoly& g) {
    IPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        const PowerProduct gj = u * g[j].pp;
        const Ordering ord = compare_degrevlex(f[i].pp, gj);
        if (ord == Ordering::greater) {
            out.push_back({f[i].pp, a * f[i].c});
            ++i;
        } else if (ord == Ordering::less) {
            out.push_back({gj, -b * g[j].c});
            ++j;
        } else {
            Integer c = a * f[i].c - b * g[j].c;
            if (c != 0) out.push_back({f[i].pp, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back({f[i].pp, a * f[i].c});
    for (; j < g.size(); ++j) out.push_back({u * g[j].pp, -b * g[j].c});
    return out;
}

// full remainder of f modulo basis; if scale is given it receives the
// integer A with A*f = (basis combination) + remainder, and no content
// stripping happens
IPoly ipoly_normal_form(IPoly f, const std::vector<IPoly>& basis,
                        Integer* scale = nullptr) {
    if (scale) *scale = 1;
    IPoly remainder;
    while (!f.empty()) {
        const ITerm& lead = f.front();
        const IPoly* reducer = nullptr;
        for (const auto& g : basis)
            if (!g.empty() && g.front().pp.divides(lead.pp)) {
                reducer = &g;
                break;
            }
        if (!reducer) {
            remainder.push_back(lead);
            f.erase(f.begin());
            continue;
        }
        const PowerProduct u = lead.pp / reducer->front().pp;
        Integer d;
        mpz_gcd(d.get_mpz_t(), lead.c.get_mpz_t(),
                reducer->front().c.get_mpz_t());
        const Integer a = reducer->front().c / d;
        const Integer b = lead.c / d;
        if (a != 1)
            for (auto& t : remainder) t.c *= a;
        f = combine(f, a, b, u, *reducer);
        if (scale) {
            *scale *= a;
        } else {
            // remainder + f must stay a common scalar multiple of the true
            // normal form, so only their joint content may be stripped
            Integer g = 0;
            for (const auto& t : remainder)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            for (const auto& t : f)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g > 1) {
                for (auto& t : remainder) t.c /= g;
                for (auto& t : f) t.c /= g;
            }
        }
    }
    return remainder;
}

IPoly s_polynomial(const IPoly& f, const IPoly& g) {
    const PowerProduct L = f.front().pp.lcm(g.front().pp);
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const Integer cf = g.front().c / d;
    const Integer cg = f.front().c / d;
    // cf*(L/LT(f))*f - cg*(L/LT(g))*g
    IPoly shifted;
    const PowerProduct uf = L / f.front().pp;
    shifted.reserve(f.size());
    for (const auto& t : f) shifted.push_back({uf * t.pp, cf * t.c});
    return combine(shifted, 1, cg, L / g.front().pp, g);
}

struct PairKey {
    int deg;
    PowerProduct lcm;
    int i, j;

    bool operator<(const PairKey& other) const {
        if (deg != other.deg) return deg < other.deg;
        const Ordering ord = compare_degrevlex(lcm, other.lcm);
        if (ord != Ordering::equal) return ord == Ordering::less;
        if (i != other.i) return i < other.i;
        return j < other.j;
    }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (f.is_zero()) return f;
    std::vector<IPoly> ib;
    for (const auto& g : basis) {
        if (g.nvars() != f.nvars())
            throw std::invalid_argument("basis element from different context");
        if (g.is_zero())
            throw std::invalid_argument("zero polynomial in division basis");
        ib.push_back(to_ipoly(g));
    }
    // f = content * primitive; undo both scalings at the end
    const Rational content = f.leading_term().coeff /
                             Rational(to_ipoly(f).front().c);
    Integer scale;
    const IPoly r = ipoly_normal_form(to_ipoly(f), ib, &scale);
    std::vector<Term> terms;
    for (const auto& t : r) terms.push_back({Rational(t.c) * content / Rational(scale), t.pp});
    return Polynomial::from_terms(f.nvars(), std::move(terms));
}

GroebnerBasis buchberger(const IdealPresentation& gens,
                         std::optional<int> degree_cap) {
    const std::size_t nvars = gens.nvars;
    std::vector<IPoly> basis;
    for (const auto& g : gens.generators) {
        IPoly ig = ipoly_normal_form(to_ipoly(g), basis);
        strip_content(ig);
        if (!ig.empty()) basis.push_back(std::move(ig));
    }

    std::set<PairKey> pending;
    std::set<std::pair<int, int>> alive;  // pairs still in the queue
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const PowerProduct& a = basis[i].front().pp;
            const PowerProduct& b = basis[j].front().pp;
            if (a.gcd(b).is_one()) continue;  // coprime criterion
            const PowerProduct L = a.lcm(b);
            pending.insert({L.degree(), L, i, j});
            alive.insert({i, j});
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        const PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        alive.erase({pk.i, pk.j});

        // chain criterion: a third leading term inside the lcm whose pairs
        // with both ends were already handled makes this pair redundant
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis[k].front().pp.divides(pk.lcm)) continue;
            const auto p1 = std::minmax(pk.i, k);
            const auto p2 = std::minmax(pk.j, k);
            if (!alive.count({p1.first, p1.second}) &&
                !alive.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        IPoly s = s_polynomial(basis[pk.i], basis[pk.j]);
        strip_content(s);
        IPoly r = ipoly_normal_form(std::move(s), basis);
        strip_content(r);
        if (r.empty()) continue;
        if (degree_cap && r.front().pp.degree() > *degree_cap) continue;
        basis.push_back(std::move(r));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<IPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const PowerProduct &a = basis[j].front().pp, &b = basis[i].front().pp;
            if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<IPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        IPoly r = ipoly_normal_form(minimal[i], others);
        strip_content(r);
        reduced.push_back(to_monic_polynomial(nvars, r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return degrevlex_greater(a.leading_term().pp, b.leading_term().pp);
              });
    return {nvars, std::move(reduced)};
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb) {
    std::vector<PowerProduct> lts;
    for (const auto& g : gb.elements) lts.push_back(g.leading_term().pp);
    return MonomialIdeal::make(gb.nvars, std::move(lts));
}

bool ideal_membership(const Polynomial& f, const IdealPresentation& gens) {
    if (f.is_zero()) return true;
    const GroebnerBasis gb = buchberger(gens);
    return normal_form(f, gb.elements).is_zero();
}

}  // namespace lefarr
