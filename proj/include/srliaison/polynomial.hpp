#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "srliaison/monomial.hpp"

namespace srl {

using Rat = mpq_class;

/// Reduce a coefficient into canonical field form (mod 2 for GF(2)).
inline Rat field_normalize(const Rat& c, Field f) {
    if (f == Field::Q) return c;
    if (c.get_den() != 1) throw std::invalid_argument("GF(2) coefficient must be integral");
    mpz_class r = c.get_num() % 2;
    if (r < 0) r += 2;
    return Rat(r);
}

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// descending monomial order, so begin() is the leading term. The zero
/// polynomial is the empty map; no zero coefficients are stored.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    explicit Polynomial(const PolyContext& ctx)
        : ctx_(ctx), terms_(MonoGreater{ctx.order}) {}

    Polynomial(const PolyContext& ctx, const Monomial& m, const Rat& c = Rat(1))
        : Polynomial(ctx) {
        add_term(m, c);
    }

    const PolyContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
        return terms_.begin()->first;
    }
    const Rat& leading_coeff() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    bool has_integer_coeffs() const {
        for (const auto& [m, c] : terms_)
            if (c.get_den() != 1) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (m.nvars() != ctx_.nvars) throw std::invalid_argument("monomial arity mismatch");
        Rat cc = field_normalize(c, ctx_.field);
        if (cc == 0) return;
        auto [it, fresh] = terms_.emplace(m, cc);
        if (!fresh) {
            it->second = field_normalize(it->second + cc, ctx_.field);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        Polynomial r(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial scaled(const Rat& c) const {
        Polynomial r(ctx_);
        for (const auto& [m, co] : terms_) r.add_term(m, co * c);
        return r;
    }

    Polynomial times_term(const Monomial& m, const Rat& c) const {
        Polynomial r(ctx_);
        for (const auto& [mm, cc] : terms_) r.add_term(mm * m, cc * c);
        return r;
    }

    /// Leading coefficient scaled to 1.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(Rat(1) / leading_coeff());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    static Polynomial zero(const PolyContext& ctx) { return Polynomial(ctx); }
    static Polynomial one(const PolyContext& ctx) {
        return Polynomial(ctx, Monomial(ctx.nvars));
    }
    static Polynomial variable(const PolyContext& ctx, int v) {
        return Polynomial(ctx, Monomial::variable(ctx.nvars, v));
    }

  private:
    PolyContext ctx_;
    TermMap terms_;
};

// Canonical ASCII grammar (see parse.cpp): terms like `3/2*x1^2*x4` joined by
// `+`/`-`. Printing and parsing round-trip exactly.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m);  // `1` for the empty monomial
Polynomial parse_polynomial(const std::string& text, const PolyContext& ctx);
Monomial parse_monomial(const std::string& text, int nvars);

}  // namespace srl
