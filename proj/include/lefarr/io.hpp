#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lefarr/arrangement.hpp"
#include "lefarr/context.hpp"
#include "lefarr/groebner.hpp"
#include "lefarr/monomial_ideal.hpp"
#include "lefarr/polynomial.hpp"

namespace lefarr {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& message);
};

// term syntax: [coeff][*]var[^exp][*var[^exp]...], coeff an integer or p/q;
// terms joined by + and -
Polynomial parse_polynomial(const std::string& text, const VariableContext& ctx,
                            int line_number = 0);

std::string to_string(const PowerProduct& pp, const VariableContext& ctx);
std::string to_string(const Rational& r);
std::string to_string(const Polynomial& f, const VariableContext& ctx);

// `vars: x,y,z` header, one generator per line, # comments.
// Files whose every line is a single term parse as a monomial ideal too.
struct IdealFile {
    VariableContext ctx;
    IdealPresentation presentation;
    std::optional<MonomialIdeal> monomial;
};

IdealFile parse_ideal_text(const std::string& text);
IdealFile read_ideal_file(const std::string& path);

// same header; one linear form with zero constant term per line
struct ArrangementFile {
    VariableContext ctx;
    Arrangement arrangement;
};

ArrangementFile parse_arrangement_text(const std::string& text);
ArrangementFile read_arrangement_file(const std::string& path);

std::string format_monomial_ideal(const MonomialIdeal& I, const VariableContext& ctx);

}  // namespace lefarr
