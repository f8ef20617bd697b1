#include <algorithm>
#include <mutex>
#include <set>

#include "srliaison/simplicial.hpp"

namespace srl {

VertexSet vs_of(const std::vector<int>& labels) {
    VertexSet s = 0;
    for (int v : labels) {
        if (v < 1 || v > 32) throw std::invalid_argument("vertex label out of range");
        s |= vs_bit(v);
    }
    return s;
}

std::vector<int> vs_labels(VertexSet s) {
    std::vector<int> out;
    for (int v = 1; v <= 32; ++v)
        if (s & vs_bit(v)) out.push_back(v);
    return out;
}

struct SimplicialComplex::FaceCache {
    std::once_flag flag;
    std::vector<VertexSet> faces;
};

SimplicialComplex::SimplicialComplex(int n, VertexSet ambient, std::vector<VertexSet> facets)
    : n_(n), ambient_(ambient), face_cache_(std::make_shared<FaceCache>()) {
    if (n < 1 || n > 30) throw std::invalid_argument("vertex count out of range");
    if (!vs_subset(ambient, (n >= 32 ? ~0u : (1u << n) - 1)))
        throw std::invalid_argument("ambient set exceeds [n]");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (VertexSet f : facets) {
        if (!vs_subset(f, ambient)) throw std::invalid_argument("facet outside ambient set");
        bool maximal = true;
        for (VertexSet g : facets)
            if (f != g && vs_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) facets_.push_back(f);
    }
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<std::vector<int>>& fs) {
    std::vector<VertexSet> masks;
    masks.reserve(fs.size());
    for (const auto& f : fs) {
        VertexSet m = vs_of(f);
        if (!vs_subset(m, (1u << n) - 1)) throw std::invalid_argument("facet outside [n]");
        masks.push_back(m);
    }
    return SimplicialComplex(n, (1u << n) - 1, std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(int n, VertexSet ambient) {
    return SimplicialComplex(n, ambient, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n, VertexSet ambient) {
    return SimplicialComplex(n, ambient, {0});
}

SimplicialComplex SimplicialComplex::simplex(int n) {
    return SimplicialComplex(n, (1u << n) - 1, {(1u << n) - 1});
}

int SimplicialComplex::dim() const {
    if (is_void()) throw std::logic_error("the void complex has no dimension");
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, vs_card(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.size() <= 1) return true;
    int c = vs_card(facets_[0]);
    for (VertexSet f : facets_)
        if (vs_card(f) != c) return false;
    return true;
}

VertexSet SimplicialComplex::vertices() const {
    VertexSet u = 0;
    for (VertexSet f : facets_) u |= f;
    return u;
}

bool SimplicialComplex::has_face(VertexSet f) const {
    for (VertexSet g : facets_)
        if (vs_subset(f, g)) return true;
    return false;
}

const std::vector<VertexSet>& SimplicialComplex::faces() const {
    std::call_once(face_cache_->flag, [&] {
        std::set<VertexSet> out;
        for (VertexSet f : facets_) {
            // enumerate subsets of f
            VertexSet s = f;
            while (true) {
                out.insert(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        face_cache_->faces.assign(out.begin(), out.end());
    });
    return face_cache_->faces;
}

SimplicialComplex SimplicialComplex::link(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    return link_face(vs_bit(v));
}

SimplicialComplex SimplicialComplex::link_face(VertexSet f) const {
    std::vector<VertexSet> fs;
    for (VertexSet g : facets_)
        if (vs_subset(f, g)) fs.push_back(g & ~f);
    return SimplicialComplex(n_, ambient_ & ~f, std::move(fs));
}

SimplicialComplex SimplicialComplex::deletion(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    VertexSet b = vs_bit(v);
    std::vector<VertexSet> fs;
    for (VertexSet g : facets_) fs.push_back(g & ~b);
    return SimplicialComplex(n_, ambient_ & ~b, std::move(fs));
}

SimplicialComplex SimplicialComplex::cone(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("apex out of range");
    VertexSet b = vs_bit(k);
    if (has_face(b)) throw std::invalid_argument("apex is already a vertex of the complex");
    std::vector<VertexSet> fs;
    for (VertexSet g : facets_) fs.push_back(g | b);
    return SimplicialComplex(n_, ambient_ | b, std::move(fs));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& dl) {
    int n = dl.n();
    std::vector<Monomial> gens;
    if (dl.is_void()) {
        gens.push_back(Monomial(n));  // the empty set is a nonface: unit ideal
        return MonomialIdeal(n, std::move(gens));
    }
    // minimal nonfaces: S not a face with every S \ {v} a face
    std::vector<int> amb = vs_labels(dl.ambient());
    // grow candidates from faces by one vertex
    std::set<VertexSet> cand;
    for (VertexSet f : dl.faces()) {
        for (int v : amb) {
            VertexSet b = vs_bit(v);
            if (f & b) continue;
            VertexSet s = f | b;
            if (!dl.has_face(s)) cand.insert(s);
        }
    }
    for (VertexSet s : cand) {
        bool minimal = true;
        for (int v : vs_labels(s)) {
            if (!dl.has_face(s & ~vs_bit(v))) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(Monomial::from_support(n, s));
    }
    return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& I, int n) {
    if (!I.is_squarefree()) throw std::invalid_argument("complex_of requires a squarefree ideal");
    if (I.nvars() != n) throw std::invalid_argument("arity mismatch");
    if (n > 24) throw std::invalid_argument("complex_of supports at most 24 vertices");
    std::vector<uint32_t> sup;
    for (const auto& g : I.gens()) sup.push_back(g.support());
    if (I.is_unit()) return SimplicialComplex::void_complex(n, (1u << n) - 1);

    std::vector<VertexSet> maximal;
    for (VertexSet s = 0; s < (1u << n); ++s) {
        bool face = true;
        for (uint32_t g : sup)
            if (vs_subset(g, s)) {
                face = false;
                break;
            }
        if (!face) continue;
        // keep only maximal faces: no extension by one vertex stays a face
        bool max = true;
        for (int v = 0; v < n && max; ++v) {
            if (s & (1u << v)) continue;
            VertexSet t = s | (1u << v);
            bool tface = true;
            for (uint32_t g : sup)
                if (vs_subset(g, t)) {
                    tface = false;
                    break;
                }
            if (tface) max = false;
        }
        if (max) maximal.push_back(s);
    }
    return SimplicialComplex(n, (1u << n) - 1, std::move(maximal));
}

}  // namespace srl
