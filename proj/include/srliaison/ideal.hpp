#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "srliaison/polynomial.hpp"

namespace srl {

/// Ideal given by a generator list. The reduced Groebner basis is a fill-once
/// cache shared by copies; values are otherwise immutable.
class Ideal {
  public:
    explicit Ideal(const PolyContext& ctx) : ctx_(ctx), cache_(std::make_shared<GbCache>()) {}

    Ideal(const PolyContext& ctx, std::vector<Polynomial> gens)
        : ctx_(ctx), gens_(std::move(gens)), cache_(std::make_shared<GbCache>()) {
        for (const auto& g : gens_) require_same_context(ctx_, g.ctx());
    }

    const PolyContext& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    bool is_zero_ideal() const {
        for (const auto& g : gens_)
            if (!g.is_zero()) return false;
        return true;
    }

    struct GbCache {
        std::once_flag flag;
        std::vector<Polynomial> basis;
    };
    GbCache& cache() const { return *cache_; }

  private:
    PolyContext ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<GbCache> cache_;
};

}  // namespace srl
