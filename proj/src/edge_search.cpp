#include <algorithm>
#include <map>
#include <set>

#include "srliaison/edge_search.hpp"

namespace srl {

namespace {

uint32_t apply_perm_mask(const std::vector<int>& perm, uint32_t mask) {
    uint32_t out = 0;
    for (int v = 1; v <= static_cast<int>(perm.size()); ++v)
        if (mask & (1u << (v - 1))) out |= 1u << (perm[v - 1] - 1);
    return out;
}

std::vector<int> mask_labels(uint32_t m) {
    std::vector<int> out;
    for (int v = 1; v <= 32; ++v)
        if (m & (1u << (v - 1))) out.push_back(v);
    return out;
}

}  // namespace

EdgeSearchResult search_edge_bdl(const Graph& g, Field field,
                                 const std::vector<std::vector<int>>* symmetry_generators) {
    EdgeSearchResult out;
    MonomialIdeal ig = edge_ideal(g);
    if (ig.is_zero_ideal()) {
        out.structural_refutation = "edgeless graph: the edge ideal is zero";
        return out;
    }
    SimplicialComplex ind = complex_of(ig, g.n());  // independence complex

    out.c_unmixed = ind.is_pure();
    if (!out.c_unmixed) {
        // a basic double G-link is G-linked to unmixed ideals, so C must be unmixed
        out.structural_refutation = "edge ideal is not unmixed (independence complex impure)";
        return out;
    }
    out.c_cm = is_cohen_macaulay(ind, field);

    std::vector<std::vector<int>> group;
    if (symmetry_generators && !symmetry_generators->empty())
        group = generate_group(*symmetry_generators);

    auto orbit_rep = [&](uint32_t mask) {
        if (group.empty()) return mask;
        uint32_t best = mask;
        for (const auto& p : group) best = std::min(best, apply_perm_mask(p, mask));
        return best;
    };

    // supports with a common neighbour live inside some N(j)
    std::set<uint32_t> reps;
    int bound = max_support_bound(g);
    {
        std::vector<uint32_t> all;
        uint32_t full = (g.n() >= 32) ? ~0u : ((1u << g.n()) - 1);
        // enumerate supports of size <= bound
        std::vector<int> verts;
        for (int v = 1; v <= g.n(); ++v) verts.push_back(v);
        std::vector<int> idx;
        std::function<void(size_t, uint32_t, int)> rec = [&](size_t start, uint32_t m, int size) {
            if (size > 0) all.push_back(m);
            if (size == bound) return;
            for (size_t k = start; k < verts.size(); ++k)
                rec(k + 1, m | (1u << (verts[k] - 1)), size + 1);
        };
        rec(0, 0, 0);
        (void)full;
        for (uint32_t m : all) reps.insert(orbit_rep(m));
    }

    // cache CM verdicts per B
    std::map<std::string, bool> cm_cache;
    auto cm_of = [&](const MonomialIdeal& B) {
        std::string key;
        for (const auto& m : B.gens()) key += to_string(m) + "|";
        auto it = cm_cache.find(key);
        if (it != cm_cache.end()) return it->second;
        bool v = is_cm_quotient(B, field);
        cm_cache.emplace(std::move(key), v);
        return v;
    };

    for (uint32_t m : reps) {
        EdgeCandidate cand{.support = mask_labels(m),
                           .nf_vars = {},
                           .B = MonomialIdeal(g.n())};
        MonomialIdeal nf = nf_ideal(g, cand.support);
        for (const auto& mo : nf.gens()) cand.nf_vars.push_back(mask_labels(mo.support())[0]);
        cand.nf_nonempty = !nf.is_zero_ideal();
        if (cand.nf_nonempty) {
            cand.B = ig + nf;
            bool cm_b = cm_of(cand.B);
            cand.cm_match = (cm_b == out.c_cm);
            if (*cand.cm_match && cand.support.size() == 1) {
                cand.fisxi = fisxi_necessary(ig, cand.support[0], field);
            }
            cand.survives = *cand.cm_match && (!cand.fisxi.has_value() || *cand.fisxi);
            if (cand.survives && cand.support.size() == 1)
                cand.witness = vertex_bdl(ind, cand.support[0], field);
        }
        out.candidates.push_back(std::move(cand));
    }
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const EdgeCandidate& a, const EdgeCandidate& b) {
                  if (a.support.size() != b.support.size())
                      return a.support.size() < b.support.size();
                  return a.support < b.support;
              });
    for (size_t i = 0; i < out.candidates.size(); ++i)
        if (out.candidates[i].survives) out.survivors.push_back(i);

    // anchored candidate-B scan per vertex orbit (the paper's "we may assume
    // x_{i1} = x_1" narrative); only run when a symmetry is supplied.
    if (!group.empty()) {
        std::set<int> anchors;
        std::set<int> seen;
        for (int v = 1; v <= g.n(); ++v) {
            if (seen.count(v)) continue;
            anchors.insert(v);
            for (const auto& p : group) {
                uint32_t img = apply_perm_mask(p, 1u << (v - 1));
                seen.insert(mask_labels(img)[0]);
            }
        }
        for (int anchor : anchors) {
            uint32_t nb = g.neighbours(anchor);
            std::vector<int> nbs = mask_labels(nb);
            for (uint32_t sub = 0;; ++sub) {
                uint32_t y = 0;
                for (size_t k = 0; k < nbs.size(); ++k)
                    if (sub & (1u << k)) y |= 1u << (nbs[k] - 1);
                AnchoredRow row;
                row.anchor = anchor;
                row.vars = mask_labels(y);
                MonomialIdeal yv(g.n());
                {
                    std::vector<Monomial> vars;
                    for (int v : row.vars) vars.push_back(Monomial::variable(g.n(), v - 1));
                    yv = MonomialIdeal(g.n(), std::move(vars));
                }
                row.cm = cm_of(ig + yv);
                if (row.vars.empty()) {
                    row.structurally_excluded = true;  // N_f must be nonzero
                    row.eliminated_by = "nonempty";
                } else if (!(row.cm == out.c_cm)) {
                    row.eliminated_by = "cm";
                } else {
                    // realizability: a support T with anchor in T and N_f(T) == Y;
                    // T is then a subset of the common neighbourhood of Y.
                    uint32_t pool = ~0u;
                    for (int v : row.vars) pool &= g.neighbours(v);
                    std::vector<int> pl = mask_labels(pool & ((1u << g.n()) - 1));
                    if (pool & (1u << (anchor - 1))) {
                        for (uint32_t s = 0; s < (1u << pl.size()); ++s) {
                            std::vector<int> T;
                            for (size_t k = 0; k < pl.size(); ++k)
                                if (s & (1u << k)) T.push_back(pl[k]);
                            if (T.empty() ||
                                std::find(T.begin(), T.end(), anchor) == T.end())
                                continue;
                            uint32_t common = ~0u;
                            for (int v : T) common &= g.neighbours(v);
                            if ((common & ((1u << g.n()) - 1)) == y) row.realizers.push_back(T);
                        }
                    }
                    if (row.realizers.empty()) {
                        row.eliminated_by = "realizability";
                    } else {
                        bool only_anchor_singleton =
                            row.realizers.size() == 1 && row.realizers[0].size() == 1;
                        if (only_anchor_singleton) {
                            row.fisxi = fisxi_necessary(ig, anchor, field);
                            if (!row.fisxi) row.eliminated_by = "fisxi";
                        }
                    }
                }
                out.anchored.push_back(std::move(row));
                if (sub == (1u << nbs.size()) - 1) break;
            }
        }
    }
    return out;
}

}  // namespace srl
