#include "lefarr/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>

namespace lefarr {

namespace {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

PowerProduct strip_last(const PowerProduct& p) {
    auto e = p.exponents();
    e.pop_back();
    return PowerProduct(std::move(e));
}

PowerProduct append_zero(const PowerProduct& p) {
    auto e = p.exponents();
    e.push_back(0);
    return PowerProduct(std::move(e));
}

std::string cache_key(const MonomialIdeal& I) {
    std::ostringstream os;
    for (const auto& g : I.min_gens()) {
        for (int e : g.exponents()) os << e << ',';
        os << ';';
    }
    return os.str();
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(std::size_t nvars) {
    MonomialIdeal I;
    I.nvars_ = nvars;
    return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
    return make(nvars, {PowerProduct::one(nvars)});
}

MonomialIdeal MonomialIdeal::make(std::size_t nvars, std::vector<PowerProduct> gens) {
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator from different context");
    // keep only divisibility-minimal generators
    std::vector<PowerProduct> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[j] == gens[i])) redundant = true;
            // among equal duplicates keep the first
            if (gens[j] == gens[i] && j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end(), degrevlex_greater);
    MonomialIdeal I;
    I.nvars_ = nvars;
    I.gens_ = std::move(minimal);
    return I;
}

bool MonomialIdeal::contains(const PowerProduct& t) const {
    if (t.nvars() != nvars_)
        throw std::invalid_argument("power-product from different context");
    for (const auto& g : gens_)
        if (g.divides(t)) return true;
    return false;
}

std::optional<int> MonomialIdeal::max_generator_degree() const {
    if (gens_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal colon_by_power(const MonomialIdeal& I, int k) {
    if (k < 1) throw std::invalid_argument("colon exponent must be positive");
    const std::size_t last = I.nvars() - 1;
    std::vector<PowerProduct> gens;
    gens.reserve(I.min_gens().size());
    for (const auto& g : I.min_gens()) {
        auto e = g.exponents();
        e[last] = std::max(0, e[last] - k);
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(I.nvars(), std::move(gens));
}

StronglyStableVerdict is_strongly_stable(const MonomialIdeal& I) {
    for (auto it = I.min_gens().rbegin(); it != I.min_gens().rend(); ++it) {
        const PowerProduct& t = *it;
        for (std::size_t j = 0; j < I.nvars(); ++j) {
            if (t.exponent(j) == 0) continue;
            for (std::size_t i = 0; i < j; ++i) {
                auto e = t.exponents();
                e[j] -= 1;
                e[i] += 1;
                PowerProduct exch(std::move(e));
                if (!I.contains(exch))
                    return {false, StronglyStableWitness{t, i, j, std::move(exch)}};
            }
        }
    }
    return {true, std::nullopt};
}

AlmostRevlexVerdict is_almost_revlex(const MonomialIdeal& I) {
    // smallest generators first so the reported witness is the one the
    // first offending generator misses
    for (auto it = I.min_gens().rbegin(); it != I.min_gens().rend(); ++it) {
        const PowerProduct& t = *it;
        for (const auto& tp : monomials_of_degree(I.nvars(), t.degree())) {
            if (tp == t) break;  // descending order: all greater ones seen
            if (!I.contains(tp)) return {false, AlmostRevlexWitness{t, tp}};
        }
    }
    return {true, std::nullopt};
}

std::vector<PowerProduct> standard_monomials(const MonomialIdeal& I, int d) {
    std::vector<PowerProduct> out;
    for (auto& m : monomials_of_degree(I.nvars(), d))
        if (!I.contains(m)) out.push_back(std::move(m));
    return out;
}

namespace {

long hf_split(const MonomialIdeal& I, int d,
              std::map<std::pair<std::string, int>, long>& memo) {
    if (d < 0) return 0;
    if (I.is_unit()) return 0;
    const std::size_t l = I.nvars();
    if (I.is_zero())
        return binomial(d + static_cast<long>(l) - 1, static_cast<long>(l) - 1);
    if (l == 1) return d < I.min_gens().front().degree() ? 1 : 0;

    const auto key = std::make_pair(cache_key(I), d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // split standard monomials by the exponent of x_l
    long total = 0;
    for (int k = 0; k <= d; ++k) {
        const MonomialIdeal slice =
            restrict_to_subring(k == 0 ? I : colon_by_power(I, k));
        total += hf_split(slice, d - k, memo);
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

long hilbert_function(const MonomialIdeal& I, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::map<std::pair<std::string, int>, long> memo;
    return hf_split(I, d, memo);
}

long first_difference_c(const MonomialIdeal& I, int j) {
    if (j < 0) throw std::invalid_argument("negative degree");
    const long prev = j == 0 ? 0 : hilbert_function(I, j - 1);
    return std::max(prev - hilbert_function(I, j), 0L);
}

bool is_unimodal_or_increasing(const std::vector<long>& values) {
    bool decreased = false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[i - 1]) decreased = true;
        else if (decreased && values[i] > values[i - 1]) return false;
    }
    return true;
}

int regularity_strongly_stable(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) return 0;
    if (!is_strongly_stable(I).holds)
        throw std::invalid_argument("regularity shortcut needs a strongly stable ideal");
    return *I.max_generator_degree();
}

XlChain chain(const MonomialIdeal& I, const PowerProduct& start) {
    const std::size_t last = I.nvars() - 1;
    if (start.exponent(last) != 0)
        throw std::invalid_argument("chain start must not be divisible by the last variable");
    if (I.contains(start))
        throw std::invalid_argument("chain start must lie outside the ideal");
    // start * x_l^k enters I exactly when some generator m * x_l^r with
    // m | start and r <= k exists
    int min_r = std::numeric_limits<int>::max();
    for (const auto& g : I.min_gens()) {
        const int r = g.exponent(last);
        if (r < 1) continue;
        auto e = g.exponents();
        e[last] = 0;
        if (PowerProduct(std::move(e)).divides(start)) min_r = std::min(min_r, r);
    }
    if (min_r == std::numeric_limits<int>::max()) return {start, false, 0};
    return {start, true, start.degree() + min_r - 1};
}

namespace {

constexpr long kInfiniteEnd = std::numeric_limits<long>::max();

long chain_end(const MonomialIdeal& I, const PowerProduct& start) {
    const XlChain c = chain(I, start);
    return c.finite ? c.ending_degree : kInfiniteEnd;
}

// does every variable of this (monomial) ideal appear as a pure power
// among the generators, i.e. is the quotient Artinian?
bool quotient_is_artinian(const MonomialIdeal& I) {
    if (I.is_unit()) return true;
    for (std::size_t v = 0; v < I.nvars(); ++v) {
        bool found = false;
        for (const auto& g : I.min_gens()) {
            if (g.exponent(v) == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; w < I.nvars(); ++w)
                if (w != v && g.exponent(w) != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

SlVerdict sl_condition(const MonomialIdeal& I) {
    const std::size_t l = I.nvars();
    if (I.is_unit()) return {true, std::nullopt};

    bool has_xl_gen = false;
    for (const auto& g : I.min_gens())
        if (g.exponent(l - 1) > 0) has_xl_gen = true;
    if (!has_xl_gen) return {true, std::nullopt};  // every chain is infinite
    if (l == 1) return {true, std::nullopt};       // only chain start is 1

    const MonomialIdeal bar = restrict_to_subring(I);
    // chain starts = standard monomials of the x_l-free restriction

    if (!quotient_is_artinian(bar)) {
        // starts exist in every degree; find the first degree with a finite
        // chain and exhibit a start above its ending degree
        for (int d = 0;; ++d) {
            const auto starts = standard_monomials(bar, d);
            long best = kInfiniteEnd;
            PowerProduct best_u;
            for (const auto& u : starts) {
                const long e = chain_end(I, append_zero(u));
                if (e < best) { best = e; best_u = append_zero(u); }
            }
            if (best == kInfiniteEnd) continue;
            const auto high = standard_monomials(bar, static_cast<int>(best) + 1);
            return {false, std::make_pair(best_u, append_zero(high.front()))};
        }
    }

    // Artinian restriction: finitely many chain starts; compare the minimal
    // ending degree of each degree against the maximal one of every higher degree
    struct DegreeEnds {
        int degree;
        long min_end, max_end;
        PowerProduct arg_min, arg_max;
    };
    std::vector<DegreeEnds> per_degree;
    for (int d = 0;; ++d) {
        const auto starts = standard_monomials(bar, d);
        if (starts.empty()) break;
        DegreeEnds de{d, kInfiniteEnd, -1, {}, {}};
        for (const auto& u : starts) {
            const PowerProduct lifted = append_zero(u);
            const long e = chain_end(I, lifted);
            if (e < de.min_end) { de.min_end = e; de.arg_min = lifted; }
            if (e > de.max_end) { de.max_end = e; de.arg_max = lifted; }
        }
        per_degree.push_back(std::move(de));
    }
    for (std::size_t a = 0; a < per_degree.size(); ++a)
        for (std::size_t b = a + 1; b < per_degree.size(); ++b)
            if (per_degree[a].min_end < per_degree[b].max_end)
                return {false, std::make_pair(per_degree[a].arg_min,
                                              per_degree[b].arg_max)};
    return {true, std::nullopt};
}

BettiTable betti_eliahou_kervaire(const MonomialIdeal& I) {
    if (I.is_unit())
        throw std::invalid_argument("Betti table of the unit ideal is undefined");
    if (!is_strongly_stable(I).holds)
        throw std::invalid_argument("Eliahou-Kervaire needs a strongly stable ideal");
    BettiTable t;
    t.beta[{0, 0}] = 1;
    for (const auto& g : I.min_gens()) {
        // k = 1-based position of the last variable dividing g
        int k = 0;
        for (std::size_t v = 0; v < I.nvars(); ++v)
            if (g.exponent(v) > 0) k = static_cast<int>(v) + 1;
        t.m[{k, g.degree()}] += 1;
    }
    const int l = static_cast<int>(I.nvars());
    for (const auto& [kj, count] : t.m) {
        const auto [k, j] = kj;
        for (int i = 1; i <= l; ++i) {
            const long b = binomial(k - 1, i - 1) * count;
            if (b != 0) t.beta[{i, j}] += b;
        }
    }
    return t;
}

namespace {

bool wlp_with_xl(const MonomialIdeal& I) {
    if (I.is_unit()) return true;
    const int reg =
        I.is_zero() ? 0 : *I.max_generator_degree();
    for (int i = 0; i + 1 <= reg; ++i) {
        const long src = hilbert_function(I, i);
        const long dst = hilbert_function(I, i + 1);
        if (xl_multiplication_rank(I, i, 1) != std::min(src, dst)) return false;
    }
    return true;
}

BettiTable betti_inductive_rec(const MonomialIdeal& I) {
    BettiTable t;
    t.beta[{0, 0}] = 1;
    if (I.is_zero()) return t;
    const int l = static_cast<int>(I.nvars());
    if (l == 1) {
        const int d = I.min_gens().front().degree();
        t.beta[{1, d}] = 1;
        t.m[{1, d}] = 1;
        return t;
    }
    const BettiTable sub = betti_inductive_rec(restrict_to_subring(I));
    const int reg = *I.max_generator_degree();

    std::map<int, long> m_top;
    if (wlp_with_xl(I)) {
        // with x_l a Lefschetz element the generators in the top variable
        // are counted by the Hilbert function first differences
        for (int j = 1; j <= reg; ++j) {
            const long c = first_difference_c(I, j);
            if (c != 0) m_top[j] = c;
        }
    } else {
        for (const auto& g : I.min_gens())
            if (g.exponent(l - 1) > 0) m_top[g.degree()] += 1;
    }

    t.m = sub.m;
    for (const auto& [j, c] : m_top) t.m[{l, j}] += c;
    for (const auto& [ij, b] : sub.beta)
        if (ij.first >= 1) t.beta[ij] += b;
    for (const auto& [j, c] : m_top)
        for (int i = 1; i <= l; ++i) {
            const long b = binomial(l - 1, i - 1) * c;
            if (b != 0) t.beta[{i, j}] += b;
        }
    return t;
}

}  // namespace

BettiTable betti_wlp_inductive(const MonomialIdeal& I) {
    if (I.is_unit())
        throw std::invalid_argument("Betti table of the unit ideal is undefined");
    if (!is_strongly_stable(I).holds)
        throw std::invalid_argument("inductive Betti needs a strongly stable ideal");
    if (!wlp_with_xl(I))
        throw std::invalid_argument("inductive Betti needs the WLP with element x_l");
    return betti_inductive_rec(I);
}

MonomialIdeal restrict_to_subring(const MonomialIdeal& I) {
    if (I.nvars() < 2)
        throw std::invalid_argument("cannot restrict below one variable");
    const std::size_t last = I.nvars() - 1;
    std::vector<PowerProduct> gens;
    for (const auto& g : I.min_gens())
        if (g.exponent(last) == 0) gens.push_back(strip_last(g));
    return MonomialIdeal::make(I.nvars() - 1, std::move(gens));
}

InfeasibleHilbertTarget::InfeasibleHilbertTarget(int d)
    : std::runtime_error("infeasible Hilbert function target at degree " +
                         std::to_string(d)),
      degree(d) {}

MonomialIdeal build_almost_revlex_from_hf(std::size_t nvars,
                                          const std::vector<long>& values) {
    if (values.empty() || values[0] != 1)
        throw InfeasibleHilbertTarget(0);
    std::vector<PowerProduct> gens;
    MonomialIdeal I = MonomialIdeal::zero(nvars);
    for (std::size_t d = 1; d < values.size(); ++d) {
        const auto standard = standard_monomials(I, static_cast<int>(d));
        const long target = values[d];
        const long surplus = static_cast<long>(standard.size()) - target;
        if (target < 0 || surplus < 0)
            throw InfeasibleHilbertTarget(static_cast<int>(d));
        // kill the DegRevLex-largest standard monomials; taking a prefix is
        // what keeps the result almost revlex
        for (long i = 0; i < surplus; ++i) gens.push_back(standard[i]);
        I = MonomialIdeal::make(nvars, gens);
        gens = I.min_gens();
    }
    return I;
}

long xl_multiplication_rank(const MonomialIdeal& I, int i, int s) {
    if (i < 0 || s < 1) throw std::invalid_argument("bad degree or shift");
    const std::size_t last = I.nvars() - 1;
    const PowerProduct shift = PowerProduct::variable(I.nvars(), last, s);
    long rank = 0;
    for (const auto& m : standard_monomials(I, i))
        if (!I.contains(m * shift)) ++rank;
    return rank;
}

}  // namespace lefarr
