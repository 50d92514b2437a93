#include "lefarr/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lefarr {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return pos < text.size() ? text[pos] : '\0'; }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col(), msg); }
};

Integer parse_integer(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.text[c.pos++];
    if (digits.empty()) c.fail("expected a number");
    return Integer(digits);
}

std::string parse_identifier(Cursor& c) {
    c.skip_ws();
    std::string name;
    if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
        c.fail("expected a variable name");
    while (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')
        name += c.text[c.pos++];
    return name;
}

Term parse_term(Cursor& c, const VariableContext& ctx) {
    Rational coeff = 1;
    c.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        const Integer num = parse_integer(c);
        c.skip_ws();
        if (c.peek() == '/') {
            ++c.pos;
            const Integer den = parse_integer(c);
            if (den == 0) c.fail("zero denominator");
            coeff = Rational(num, den);
            coeff.canonicalize();
        } else {
            coeff = Rational(num);
        }
        c.skip_ws();
        if (c.peek() == '*') ++c.pos;
        else if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_')
            return {coeff, PowerProduct::one(ctx.size())};  // constant term
    }
    std::vector<int> exps(ctx.size(), 0);
    for (;;) {
        const int start_col = c.col();
        const std::string name = parse_identifier(c);
        const int idx = ctx.index_of(name);
        if (idx < 0) throw ParseError(c.line, start_col, "unknown variable '" + name + "'");
        int e = 1;
        c.skip_ws();
        if (c.peek() == '^') {
            ++c.pos;
            const Integer ei = parse_integer(c);
            if (ei > 1000000) c.fail("exponent too large");
            e = static_cast<int>(ei.get_si());
        }
        exps[idx] += e;
        c.skip_ws();
        if (c.peek() == '*') {
            ++c.pos;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c.peek())) || c.peek() == '_')
            continue;  // implicit product, e.g. "x y" or "2xy"
        break;
    }
    return {coeff, PowerProduct(std::move(exps))};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableContext& ctx,
                            int line_number) {
    Cursor c{text, 0, line_number};
    std::vector<Term> terms;
    bool first = true;
    while (!c.done()) {
        Rational sign = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.pos;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        Term t = parse_term(c, ctx);
        t.coeff *= sign;
        terms.push_back(std::move(t));
        first = false;
    }
    if (terms.empty()) c.fail("empty polynomial");
    return Polynomial::from_terms(ctx.size(), std::move(terms));
}

std::string to_string(const PowerProduct& pp, const VariableContext& ctx) {
    std::ostringstream os;
    bool printed = false;
    for (std::size_t i = 0; i < pp.nvars(); ++i) {
        const int e = pp.exponent(i);
        if (e == 0) continue;
        if (printed) os << '*';
        os << ctx.names[i];
        if (e > 1) os << '^' << e;
        printed = true;
    }
    if (!printed) os << '1';
    return os.str();
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const Polynomial& f, const VariableContext& ctx) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        const Rational abs_c = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (t.coeff < 0) os << '-';
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || t.pp.is_one()) {
            os << abs_c;
            if (!t.pp.is_one()) os << '*';
        }
        if (!t.pp.is_one()) os << to_string(t.pp, ctx);
        first = false;
    }
    return os.str();
}

namespace {

struct RawFile {
    VariableContext ctx;
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
};

RawFile split_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    RawFile out;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_header) {
            if (line.rfind("vars:", 0) != 0)
                throw ParseError(lineno, 1, "expected 'vars:' header");
            std::vector<std::string> names;
            std::string name;
            std::istringstream vs(line.substr(5));
            while (std::getline(vs, name, ',')) {
                const auto na = name.find_first_not_of(" \t");
                const auto nb = name.find_last_not_of(" \t");
                if (na == std::string::npos)
                    throw ParseError(lineno, 1, "empty variable name in header");
                names.push_back(name.substr(na, nb - na + 1));
            }
            try {
                out.ctx = VariableContext(std::move(names));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, 1, e.what());
            }
            have_header = true;
            continue;
        }
        out.lines.emplace_back(lineno, line);
    }
    if (!have_header) throw ParseError(1, 1, "missing 'vars:' header");
    return out;
}

}  // namespace

IdealFile parse_ideal_text(const std::string& text) {
    const RawFile raw = split_lines(text);
    IdealFile out;
    out.ctx = raw.ctx;
    std::vector<Polynomial> gens;
    bool all_single_terms = true;
    for (const auto& [lineno, content] : raw.lines) {
        Polynomial f = parse_polynomial(content, raw.ctx, lineno);
        if (f.terms().size() != 1) all_single_terms = false;
        gens.push_back(std::move(f));
    }
    if (all_single_terms && !gens.empty()) {
        std::vector<PowerProduct> pps;
        for (const auto& g : gens) pps.push_back(g.leading_term().pp);
        out.monomial = MonomialIdeal::make(raw.ctx.size(), std::move(pps));
    }
    out.presentation = IdealPresentation::make(raw.ctx.size(), std::move(gens));
    return out;
}

IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str());
}

ArrangementFile parse_arrangement_text(const std::string& text) {
    const RawFile raw = split_lines(text);
    std::vector<Polynomial> forms;
    for (const auto& [lineno, content] : raw.lines) {
        Polynomial f = parse_polynomial(content, raw.ctx, lineno);
        if (f.is_zero()) throw ParseError(lineno, 1, "zero form");
        if (!f.is_homogeneous() || *f.degree() != 1)
            throw ParseError(lineno, 1,
                             "form must be linear with zero constant term");
        forms.push_back(std::move(f));
    }
    try {
        return {raw.ctx, Arrangement::make(raw.ctx.size(), std::move(forms))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, 0, e.what());
    }
}

ArrangementFile read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement_text(buf.str());
}

std::string format_monomial_ideal(const MonomialIdeal& I, const VariableContext& ctx) {
    std::ostringstream os;
    os << "vars: ";
    for (std::size_t i = 0; i < ctx.names.size(); ++i) {
        if (i) os << ',';
        os << ctx.names[i];
    }
    os << '\n';
    for (const auto& g : I.min_gens()) os << to_string(g, ctx) << '\n';
    return os.str();
}

}  // namespace lefarr
