#include <mutex>
#include <unordered_map>

#include "srliaison/decomposability.hpp"

namespace srl {

namespace {

// Canonical form: compress the vertex labels order-preservingly, then the
// sorted facet mask list identifies the complex up to its ambient view.
std::string canonical_key(const SimplicialComplex& dl) {
    std::vector<int> vs = vs_labels(dl.vertices());
    std::vector<int> pos(33, 0);
    for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<VertexSet> fs;
    for (VertexSet f : dl.facets()) {
        VertexSet g = 0;
        for (int v : vs_labels(f)) g |= 1u << pos[v];
        fs.push_back(g);
    }
    std::sort(fs.begin(), fs.end());
    std::string key;
    key.reserve(fs.size() * 5 + 4);
    key += std::to_string(vs.size());
    for (VertexSet f : fs) {
        key += ':';
        key += std::to_string(f);
    }
    return key;
}

class Memo {
  public:
    std::optional<bool> get(const std::string& k) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::string& k, bool v) {
        std::lock_guard<std::mutex> lk(mu_);
        map_.emplace(k, v);
    }

  private:
    std::mutex mu_;
    std::unordered_map<std::string, bool> map_;
};

Memo& vd_memo() {
    static Memo m;
    return m;
}
Memo& wvd_memo(Field f) {
    static Memo q, f2;
    return f == Field::Q ? q : f2;
}
Memo& cm_memo(Field f) {
    static Memo q, f2;
    return f == Field::Q ? q : f2;
}

bool cm_cached(const SimplicialComplex& dl, Field field) {
    std::string key = canonical_key(dl);
    if (auto hit = cm_memo(field).get(key)) return *hit;
    bool v = is_cohen_macaulay(dl, field);
    cm_memo(field).put(key, v);
    return v;
}

using NodePtr = std::shared_ptr<DecompositionNode>;

NodePtr leaf(const std::string& kind) {
    auto n = std::make_shared<DecompositionNode>();
    n->kind = kind;
    return n;
}

bool vd_rec(const SimplicialComplex& dl, NodePtr& out);

bool vd_branch(const SimplicialComplex& dl, NodePtr& out, std::string& why,
               const char* side) {
    if (!dl.is_pure()) {
        why = std::string(side) + " impure";
        out = leaf("impure");
        return false;
    }
    if (!vd_rec(dl, out)) {
        why = std::string(side) + " not vertex decomposable";
        return false;
    }
    return true;
}

bool vd_rec(const SimplicialComplex& dl, NodePtr& out) {
    if (dl.is_void()) throw std::invalid_argument("vertex decomposability of the void complex");
    if (!dl.is_pure()) {
        out = leaf("impure");
        return false;
    }
    if (dl.is_simplex()) {
        out = leaf(dl.is_empty_complex() ? "empty" : "simplex");
        return true;
    }
    std::string key = canonical_key(dl);
    if (auto hit = vd_memo().get(key)) {
        out = leaf("memo");
        return *hit;
    }
    auto fail = std::make_shared<DecompositionNode>();
    fail->kind = "fail";
    for (int v : vs_labels(dl.vertices())) {
        SimplicialComplex lk = dl.link(v);
        SimplicialComplex del = dl.deletion(v);
        NodePtr lnode, dnode;
        std::string why;
        if (!vd_branch(lk, lnode, why, "link")) {
            fail->failures.emplace_back(v, why);
            continue;
        }
        if (!vd_branch(del, dnode, why, "deletion")) {
            fail->failures.emplace_back(v, why);
            continue;
        }
        auto shed = std::make_shared<DecompositionNode>();
        shed->kind = "shed";
        shed->vertex = v;
        shed->dim_condition = !del.is_void() && lk.dim() == del.dim() - 1;
        shed->link_branch = lnode;
        shed->deletion_branch = dnode;
        vd_memo().put(key, true);
        out = shed;
        return true;
    }
    vd_memo().put(key, false);
    out = fail;
    return false;
}

bool wvd_rec(const SimplicialComplex& dl, Field field, NodePtr& out) {
    if (dl.is_void())
        throw std::invalid_argument("weak vertex decomposability of the void complex");
    if (!dl.is_pure()) {
        out = leaf("impure");
        return false;
    }
    if (dl.is_simplex()) {
        out = leaf(dl.is_empty_complex() ? "empty" : "simplex");
        return true;
    }
    std::string key = canonical_key(dl);
    if (auto hit = wvd_memo(field).get(key)) {
        out = leaf("memo");
        return *hit;
    }
    auto fail = std::make_shared<DecompositionNode>();
    fail->kind = "fail";
    for (int v : vs_labels(dl.vertices())) {
        SimplicialComplex del = dl.deletion(v);
        if (!cm_cached(del, field)) {
            fail->failures.emplace_back(v, "deletion not Cohen-Macaulay");
            continue;
        }
        SimplicialComplex lk = dl.link(v);
        if (!lk.is_pure()) {
            fail->failures.emplace_back(v, "link impure");
            continue;
        }
        NodePtr lnode;
        if (!wvd_rec(lk, field, lnode)) {
            fail->failures.emplace_back(v, "link not weakly vertex decomposable");
            continue;
        }
        auto shed = std::make_shared<DecompositionNode>();
        shed->kind = "shed";
        shed->vertex = v;
        shed->dim_condition = !del.is_void() && lk.dim() == del.dim() - 1;
        shed->link_branch = lnode;
        shed->deletion_branch = leaf("deletion-cm");
        wvd_memo(field).put(key, true);
        out = shed;
        return true;
    }
    wvd_memo(field).put(key, false);
    out = fail;
    return false;
}

}  // namespace

DecompositionTrace is_vertex_decomposable(const SimplicialComplex& dl) {
    DecompositionTrace t;
    t.verdict = vd_rec(dl, t.root);
    return t;
}

DecompositionTrace is_weakly_vertex_decomposable(const SimplicialComplex& dl, Field field) {
    DecompositionTrace t;
    t.verdict = wvd_rec(dl, field, t.root);
    return t;
}

}  // namespace srl
