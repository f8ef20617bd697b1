#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "srliaison/context.hpp"

namespace srl {

/// Exponent vector. Variables are 0-indexed internally; printing and JSON use
/// the 1-based labels x1..xn.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int v) const { return exps_[v]; }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    bool is_one() const {
        for (int e : exps_)
            if (e) return false;
        return true;
    }

    bool squarefree() const {
        for (int e : exps_)
            if (e > 1) return false;
        return true;
    }

    /// Support as a bitmask (variable v -> bit v). Requires nvars <= 32.
    uint32_t support() const {
        uint32_t m = 0;
        for (int v = 0; v < nvars(); ++v)
            if (exps_[v]) m |= (1u << v);
        return m;
    }

    bool divides(const Monomial& other) const {
        for (int v = 0; v < nvars(); ++v)
            if (exps_[v] > other.exps_[v]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (int v = 0; v < nvars(); ++v) r.exps_[v] += o.exps_[v];
        return r;
    }

    /// Exact division; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (int v = 0; v < nvars(); ++v) {
            r.exps_[v] -= o.exps_[v];
            if (r.exps_[v] < 0) throw std::invalid_argument("monomial division not exact");
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (int v = 0; v < a.nvars(); ++v)
            if (b.exps_[v] > r.exps_[v]) r.exps_[v] = b.exps_[v];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int v = 0; v < a.nvars(); ++v)
            if (a.exps_[v] && b.exps_[v]) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    static Monomial variable(int nvars, int v) {
        Monomial m(nvars);
        m.exps_[v] = 1;
        return m;
    }

    /// Squarefree monomial from a support bitmask.
    static Monomial from_support(int nvars, uint32_t mask) {
        Monomial m(nvars);
        for (int v = 0; v < nvars; ++v)
            if (mask & (1u << v)) m.exps_[v] = 1;
        return m;
    }

  private:
    std::vector<int> exps_;
};

/// Three-way compare under the given order; > 0 means a is the larger monomial.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Strict "greater" comparator for ordered term maps (leading term first).
struct MonoGreater {
    MonomialOrder order = MonomialOrder::DegRevLex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, order) > 0;
    }
};

}  // namespace srl
