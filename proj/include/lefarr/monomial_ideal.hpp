#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lefarr/power_product.hpp"

namespace lefarr {

// Monomial ideal held by its canonical minimal generating set:
// an antichain under divisibility, sorted DegRevLex descending.
// No generators = zero ideal; the single generator 1 = the unit ideal.
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t nvars);
    static MonomialIdeal unit(std::size_t nvars);
    static MonomialIdeal make(std::size_t nvars, std::vector<PowerProduct> gens);

    std::size_t nvars() const { return nvars_; }
    const std::vector<PowerProduct>& min_gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const PowerProduct& t) const;

    // highest degree among minimal generators; nullopt for the zero ideal
    std::optional<int> max_generator_degree() const;

    bool operator==(const MonomialIdeal& other) const {
        return nvars_ == other.nvars_ && gens_ == other.gens_;
    }

private:
    std::size_t nvars_ = 0;
    std::vector<PowerProduct> gens_;
};

// (I : x_l^k)
MonomialIdeal colon_by_power(const MonomialIdeal& I, int k);

struct StronglyStableWitness {
    PowerProduct generator;   // t in the minimal generating set
    std::size_t larger_var;   // i (0-based)
    std::size_t smaller_var;  // j (0-based), x_j | t
    PowerProduct exchanged;   // x_i * t / x_j, not in I
};

struct StronglyStableVerdict {
    bool holds = false;
    std::optional<StronglyStableWitness> witness;
    explicit operator bool() const { return holds; }
};

StronglyStableVerdict is_strongly_stable(const MonomialIdeal& I);

struct AlmostRevlexWitness {
    PowerProduct generator;  // minimal generator t
    PowerProduct missing;    // t' of the same degree, t' > t, t' not in I
};

struct AlmostRevlexVerdict {
    bool holds = false;
    std::optional<AlmostRevlexWitness> witness;
    explicit operator bool() const { return holds; }
};

AlmostRevlexVerdict is_almost_revlex(const MonomialIdeal& I);

// Standard monomials (monomials outside I) of total degree d, DegRevLex descending.
std::vector<PowerProduct> standard_monomials(const MonomialIdeal& I, int d);

// HF(S/I, d): number of degree-d standard monomials, computed by splitting
// on the x_l-exponent (not by enumeration).
long hilbert_function(const MonomialIdeal& I, int d);

// c_j(S/I) = max{HF(j-1) - HF(j), 0} with HF(-1) = 0
long first_difference_c(const MonomialIdeal& I, int j);

// true iff the sequence never strictly decreases and later strictly increases
bool is_unimodal_or_increasing(const std::vector<long>& values);

// max generator degree, valid for strongly stable ideals;
// reg = 0 for the zero and unit ideals by convention
int regularity_strongly_stable(const MonomialIdeal& I);

struct XlChain {
    PowerProduct start;
    bool finite = false;
    int ending_degree = 0;  // degree of the last standard monomial in the chain
};

// the x_l-chain {start * x_l^k not in I}; start must be x_l-free and outside I
XlChain chain(const MonomialIdeal& I, const PowerProduct& start);

struct SlVerdict {
    bool holds = false;
    // violating pair (u, v): x_l-free standard monomials, deg(u) < deg(v),
    // with v's chain finite and u's chain infinite or ending earlier
    std::optional<std::pair<PowerProduct, PowerProduct>> witness;
    explicit operator bool() const { return holds; }
};

SlVerdict sl_condition(const MonomialIdeal& I);

struct BettiTable {
    // beta[{i, j}] = β_{i,i+j}(S/I)
    std::map<std::pair<int, int>, long> beta;
    // m[{k, j}] = number of minimal generators of degree j whose last
    // dividing variable is x_k (k is 1-based, as in the resolution formula)
    std::map<std::pair<int, int>, long> m;

    long beta_at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

BettiTable betti_eliahou_kervaire(const MonomialIdeal& I);

// Betti numbers via restriction to fewer variables and Hilbert function
// first differences; requires a strongly stable ideal whose quotient has
// the WLP (checked along the recursion, with a generator-count fallback
// at levels where x_l is not a Lefschetz element).
BettiTable betti_wlp_inductive(const MonomialIdeal& I);

// drop generators divisible by x_l and re-index into l-1 variables
MonomialIdeal restrict_to_subring(const MonomialIdeal& I);

struct InfeasibleHilbertTarget : std::runtime_error {
    int degree;
    explicit InfeasibleHilbertTarget(int d);
};

// The unique almost revlex ideal whose quotient has the given Hilbert
// function values at degrees 0..values.size()-1; no minimal generators are
// created beyond the last listed degree.
MonomialIdeal build_almost_revlex_from_hf(std::size_t nvars,
                                          const std::vector<long>& values);

// rank of multiplication by x_l^s from degree i: the number of degree-i
// standard monomials whose x_l^s multiple stays standard
long xl_multiplication_rank(const MonomialIdeal& I, int i, int s);

}  // namespace lefarr
