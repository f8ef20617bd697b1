#include <cctype>
#include <sstream>

#include "srliaison/polynomial.hpp"

namespace srl {

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < m.nvars(); ++v) {
        int e = m.exp(v);
        if (!e) continue;
        if (!first) os << "*";
        os << "x" << (v + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        bool unit_coeff = (a == 1) && !m.is_one();
        if (!unit_coeff) os << a.get_str();
        if (!m.is_one()) {
            if (!unit_coeff) os << "*";
            os << to_string(m);
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
    }
    mpz_class integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return mpz_class(s.substr(start, i - start));
    }
};

// term := coefficient ['*' factors] | factors ; factor := xK ['^' exp]
void parse_term(Cursor& c, const PolyContext& ctx, Rat sign, Polynomial& out) {
    Rat coeff = sign;
    Monomial m(ctx.nvars);
    bool saw_factor = false;

    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        mpz_class num = c.integer();
        mpz_class den = 1;
        if (c.peek() == '/') {
            ++c.i;
            den = c.integer();
            if (den == 0) c.fail("zero denominator");
        }
        coeff *= Rat(num, den);
        coeff.canonicalize();
        saw_factor = true;
        if (c.peek() == '*') {
            ++c.i;
            saw_factor = false;
        } else {
            out.add_term(m, coeff);
            return;
        }
    }

    while (true) {
        if (c.peek() != 'x') {
            if (!saw_factor) c.fail("expected variable");
            break;
        }
        ++c.i;
        mpz_class idx = c.integer();
        if (idx < 1 || idx > ctx.nvars) c.fail("variable index out of range");
        int v = static_cast<int>(idx.get_si()) - 1;
        int e = 1;
        if (c.peek() == '^') {
            ++c.i;
            mpz_class ex = c.integer();
            if (ex < 1 || ex > 1000000) c.fail("exponent out of range");
            e = static_cast<int>(ex.get_si());
        }
        std::vector<int> exps = m.exps();
        exps[v] += e;
        m = Monomial(std::move(exps));
        saw_factor = true;
        if (c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    out.add_term(m, coeff);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyContext& ctx) {
    Cursor c{text};
    Polynomial out(ctx);
    if (c.done()) c.fail("empty input");
    bool first = true;
    while (!c.done()) {
        Rat sign(1);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? Rat(-1) : Rat(1);
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        parse_term(c, ctx, sign, out);
        first = false;
    }
    return out;
}

Monomial parse_monomial(const std::string& text, int nvars) {
    PolyContext ctx(nvars, Field::Q);
    Polynomial p = parse_polynomial(text, ctx);
    if (p.term_count() != 1 || p.leading_coeff() != 1)
        throw std::invalid_argument("not a monic monomial: " + text);
    return p.leading_monomial();
}

}  // namespace srl
