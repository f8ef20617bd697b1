#pragma once

#include <optional>
#include <vector>

#include "srliaison/ideal.hpp"

namespace srl {

/// Monomial ideal stored by its unique minimal monic generating set, sorted in
/// descending monomial order. The unit ideal is representable (generator 1);
/// the zero ideal is the empty list.
class MonomialIdeal {
  public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool is_squarefree() const {
        for (const auto& g : gens_)
            if (!g.squarefree()) return false;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    /// Membership of a monomial is divisibility by some generator.
    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    MonomialIdeal operator+(const MonomialIdeal& o) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    Ideal to_ideal(Field f) const;

  private:
    int nvars_;
    std::vector<Monomial> gens_;
};

}  // namespace srl
