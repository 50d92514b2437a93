#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefarr/gin.hpp"
#include "lefarr/groebner.hpp"
#include "lefarr/lefschetz.hpp"
#include "lefarr/polynomial.hpp"

namespace lefarr {

// Central hyperplane arrangement: pairwise non-proportional nonzero
// linear forms (degree 1, no constant term by construction).
class Arrangement {
public:
    static Arrangement make(std::size_t nvars, std::vector<Polynomial> forms);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return forms_.size(); }  // n
    const std::vector<Polynomial>& forms() const { return forms_; }

private:
    std::size_t nvars_ = 0;
    std::vector<Polynomial> forms_;
};

// Q(A), the product of the defining forms; homogeneous of degree n
Polynomial defining_polynomial(const Arrangement& A);

// <Q, dQ/dx_1, ..., dQ/dx_l>; the Euler relation is asserted on the way
IdealPresentation jacobian_ideal(const Arrangement& A);

// candidate logarithmic vector field sum f_i d/dx_i
struct DerivationVector {
    std::vector<Polynomial> coefficients;  // length l
    int pdeg = 0;                          // common degree of the coefficients

    static DerivationVector make(std::vector<Polynomial> coefficients);
};

enum class SaitoFailure { wrong_count, not_logarithmic, degree_sum, determinant };

struct SaitoVerdict {
    bool basis = false;
    std::optional<SaitoFailure> reason;
    std::optional<std::size_t> offending_index;  // for not_logarithmic
    long pdeg_sum = 0;
};

SaitoVerdict saito_verify(const Arrangement& A,
                          const std::vector<DerivationVector>& deltas);

struct FreenessVerdict {
    bool free = false;
    std::vector<int> lambda;                   // exponent pattern when free
    std::optional<PowerProduct> witness;       // offending rgin generator
    std::optional<std::string> witness_reason; // textual explanation
};

// freeness through the generator pattern of rgin(J(A))
FreenessVerdict is_free_via_rgin_of(const MonomialIdeal& rgin_ideal, std::size_t n);
FreenessVerdict is_free_via_rgin(const Arrangement& A, const GinConfig& cfg);

struct ConjectureReport {
    bool consistent = false;
    int d0 = 0;  // min d with x_2^d in rgin(J(A))
    std::optional<PowerProduct> violating_generator;
};

// generators involving x_3 (or later variables) must have degree >= d0
ConjectureReport check_conjecture_d0_of(const MonomialIdeal& rgin_ideal);
ConjectureReport check_conjecture_d0(const Arrangement& A, const GinConfig& cfg);

struct JacobianAlgebraReport {
    std::size_t n = 0;  // number of hyperplanes
    GinResult gin;
    std::vector<long> hilbert;  // HF(S/J(A), d) for d = 0..max_degree
    LefschetzReport wlp;
    LefschetzReport slp;
    AlmostRevlexVerdict almost_revlex;
    FreenessVerdict freeness;
    ConjectureReport conjecture;
};

JacobianAlgebraReport jacobian_algebra_report(const Arrangement& A,
                                              const GinConfig& cfg,
                                              int max_degree);

}  // namespace lefarr
