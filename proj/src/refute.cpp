#include <algorithm>
#include <map>
#include <set>

#include "srliaison/intmat.hpp"
#include "srliaison/parallel.hpp"
#include "srliaison/refute.hpp"

namespace srl {

using nlohmann::json;

RefuteMode mode_from_name(const std::string& s) {
    if (s == "general-A" || s == "general" || s == "generalA") return RefuteMode::GeneralA;
    if (s == "squarefree-A" || s == "squarefree" || s == "squarefreeA")
        return RefuteMode::SquarefreeA;
    throw std::invalid_argument("unknown refutation mode: " + s);
}

namespace {

constexpr const char* kSchema = "srliaison-cert/1";

void validate_input(const MonomialIdeal& C) {
    if (C.gens().empty()) throw std::invalid_argument("refutation engine: zero ideal");
    if (!C.is_squarefree()) throw std::invalid_argument("refutation engine: non-squarefree input");
    for (const auto& g : C.gens())
        if (g.degree() != 3)
            throw std::invalid_argument("refutation engine: generator of degree != 3");
    if (C.nvars() > 24) throw std::invalid_argument("refutation engine: too many variables");
}

std::vector<int> mask_labels(uint32_t m) {
    std::vector<int> out;
    for (int v = 1; v <= 32; ++v)
        if (m & (1u << (v - 1))) out.push_back(v);
    return out;
}

json labels_json(uint32_t m) { return json(mask_labels(m)); }

std::vector<std::vector<size_t>> combinations(size_t n, size_t r) {
    std::vector<std::vector<size_t>> out;
    if (r > n) return out;
    std::vector<size_t> idx(r);
    for (size_t k = 0; k < r; ++k) idx[k] = k;
    while (true) {
        out.push_back(idx);
        size_t k = r;
        while (k > 0) {
            --k;
            if (++idx[k] <= n - (r - k)) {
                for (size_t j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (k == 0) return out;
        }
        if (r == 0) return out;
    }
}

int height_of_masks(const std::vector<uint32_t>& supports, int nvars) {
    // min hitting set of supports = height of the squarefree monomial ideal
    std::vector<Monomial> gens;
    gens.reserve(supports.size());
    for (uint32_t s : supports) gens.push_back(Monomial::from_support(nvars, s));
    MonomialIdeal I(nvars, std::move(gens));
    return height(I.to_ideal(Field::Q));
}

// ---- shared combinatorics ------------------------------------------------

struct InputData {
    int n;
    std::vector<uint32_t> gens;           // generator supports, in C's order
    std::set<uint32_t> gen_set;
    int ht_c;
    std::vector<uint32_t> pairs;          // all squarefree degree-2 supports, lex order
    std::map<uint32_t, std::vector<int>> J;  // J(z) = {j : z union {j} is a generator}
};

InputData analyze(const MonomialIdeal& C) {
    InputData d;
    d.n = C.nvars();
    for (const auto& g : C.gens()) d.gens.push_back(g.support());
    d.gen_set.insert(d.gens.begin(), d.gens.end());
    d.ht_c = height(C.to_ideal(Field::Q));
    for (int a = 1; a <= d.n; ++a)
        for (int b = a + 1; b <= d.n; ++b) {
            uint32_t z = vs_bit(a) | vs_bit(b);
            d.pairs.push_back(z);
            std::vector<int> js;
            for (int j = 1; j <= d.n; ++j) {
                if (z & vs_bit(j)) continue;
                if (d.gen_set.count(z | vs_bit(j))) js.push_back(j);
            }
            d.J.emplace(z, std::move(js));
        }
    return d;
}

Polynomial support_sum(const PolyContext& ctx, const std::vector<int>& vars) {
    Polynomial f(ctx);
    for (int v : vars) f.add_term(Monomial::variable(ctx.nvars, v - 1), Rat(1));
    return f;
}

// A' heights for one (fz, dichotomy/alpha) family: generators are the chosen
// monomial plus mu or mu - fmono for every alpha-generator mu.
json alpha_height_histogram(const InputData& d, const PolyContext& ctx, const Polynomial& fmono,
                            const std::vector<uint32_t>& alpha_gens,
                            const std::vector<uint32_t>& fixed_gens, int jobs) {
    size_t cases = size_t(1) << alpha_gens.size();
    std::vector<int> hts(cases, 0);
    parallel_for(cases, jobs, [&](size_t alpha) {
        std::vector<Polynomial> gens;
        gens.reserve(fixed_gens.size() + alpha_gens.size());
        for (uint32_t s : fixed_gens) gens.emplace_back(ctx, Monomial::from_support(d.n, s));
        for (size_t k = 0; k < alpha_gens.size(); ++k) {
            Polynomial mu(ctx, Monomial::from_support(d.n, alpha_gens[k]));
            if (alpha & (size_t(1) << k)) mu -= fmono;
            gens.push_back(std::move(mu));
        }
        hts[alpha] = height(Ideal(ctx, std::move(gens)));
    });
    std::map<int, size_t> hist;
    for (int h : hts) ++hist[h];
    json out = json::object();
    for (auto& [h, c] : hist) out[std::to_string(h)] = c;
    return out;
}

bool histogram_refutes(const json& hist, int ht_c) {
    for (auto it = hist.begin(); it != hist.end(); ++it)
        if (std::stoi(it.key()) < ht_c) return false;
    return true;
}

json input_json(const MonomialIdeal& C, Field field) {
    json gens = json::array();
    for (const auto& g : C.gens()) gens.push_back(to_string(g));
    return json{{"n", C.nvars()}, {"field", field_name(field)}, {"gens", gens}};
}

MonomialIdeal input_from_json(const json& in) {
    int n = in.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& s : in.at("gens")) gens.push_back(parse_monomial(s.get<std::string>(), n));
    return MonomialIdeal(n, std::move(gens));
}

// ---- between-ideal enumeration (squarefree-A machinery) -------------------

struct BetweenStats {
    size_t target_height_count = 0;  // ideals at the required height
    size_t cm_count = 0;             // of those, Cohen-Macaulay
    json cm_examples = json::array();
};

// Squarefree monomial ideals A with (forced) subseteq A subseteq C and the
// excluded generators not in A; counts those of the target height and tests
// CM. Complexes K with Delta subseteq K subseteq complex_of(forced) and the
// excluded supports faces of K.
BetweenStats between_ideals(const InputData& d, const SimplicialComplex& delta,
                            const std::vector<uint32_t>& forced,
                            const std::vector<uint32_t>& excluded, int target_height,
                            Field field) {
    BetweenStats out;
    std::vector<Monomial> fg;
    for (uint32_t s : forced) fg.push_back(Monomial::from_support(d.n, s));
    SimplicialComplex big = complex_of(MonomialIdeal(d.n, std::move(fg)), d.n);

    std::set<uint32_t> delta_faces(delta.faces().begin(), delta.faces().end());
    std::vector<uint32_t> extra;
    for (VertexSet f : big.faces())
        if (!delta_faces.count(f)) extra.push_back(f);
    std::sort(extra.begin(), extra.end(),
              [](uint32_t a, uint32_t b) { return vs_card(a) < vs_card(b); });
    if (extra.size() > 22)
        throw std::invalid_argument("between-ideal enumeration too large");

    for (uint64_t sub = 0; sub < (uint64_t(1) << extra.size()); ++sub) {
        std::set<uint32_t> chosen;
        for (size_t k = 0; k < extra.size(); ++k)
            if (sub & (uint64_t(1) << k)) chosen.insert(extra[k]);
        bool ok = true;
        for (uint32_t e : excluded)
            if (!chosen.count(e)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (uint32_t f : chosen) {
            for (int v : mask_labels(f)) {
                uint32_t g = f & ~vs_bit(v);
                if (!delta_faces.count(g) && !chosen.count(g)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        std::vector<VertexSet> facets = delta.facets();
        facets.insert(facets.end(), chosen.begin(), chosen.end());
        SimplicialComplex K(d.n, (1u << d.n) - 1, std::move(facets));
        int ht = d.n - (K.dim() + 1);
        if (ht != target_height) continue;
        ++out.target_height_count;
        if (is_cohen_macaulay(K, field)) {
            ++out.cm_count;
            json fac = json::array();
            for (VertexSet f : K.facets()) fac.push_back(labels_json(f));
            out.cm_examples.push_back(fac);
        }
    }
    return out;
}

// dropped-generator tables: squarefree monomial ideals between (gens minus
// dropped) and C, the dropped generators excluded
BetweenStats all_but_table(const InputData& d, const SimplicialComplex& delta,
                           const std::vector<uint32_t>& dropped, Field field) {
    std::vector<uint32_t> forced;
    for (uint32_t g : d.gens)
        if (std::find(dropped.begin(), dropped.end(), g) == dropped.end()) forced.push_back(g);
    return between_ideals(d, delta, forced, dropped, d.ht_c - 1, field);
}

}  // namespace

// ===========================================================================
// refute_deg1
// ===========================================================================

namespace {

json deg1_general(const MonomialIdeal& C, Field field, int jobs,
                  std::vector<std::string>& survivors) {
    InputData d = analyze(C);
    PolyContext ctx(d.n, Field::Q);

    json cert;
    cert["height_c"] = d.ht_c;

    // (i) single variables, Lemma 3.7
    json singles = json::array();
    for (int i = 1; i <= d.n; ++i) {
        bool cm = fisxi_necessary(C, i, field);
        singles.push_back(json{{"i", i}, {"cm_quotient", cm}});
        if (cm) survivors.push_back("f = x" + std::to_string(i) + " not excluded by the quotient CM test");
    }
    cert["single_variable"] = singles;

    // (ii) multi-variable supports: a degree-2 generator z of B forces
    // supp(f) inside J(z)
    int z_cap = 0;
    for (const auto& [z, js] : d.J) z_cap = std::max(z_cap, static_cast<int>(js.size()));
    cert["z_cap"] = z_cap;

    json pair_cases = json::array();
    // admissible supports of size 2
    for (int i1 = 1; i1 <= d.n; ++i1) {
        for (int i2 = i1 + 1; i2 <= d.n; ++i2) {
            std::vector<uint32_t> Z;
            for (uint32_t z : d.pairs) {
                const auto& js = d.J.at(z);
                if (std::find(js.begin(), js.end(), i1) != js.end() &&
                    std::find(js.begin(), js.end(), i2) != js.end())
                    Z.push_back(z);
            }
            if (Z.empty()) continue;
            json jcase;
            jcase["support"] = json{i1, i2};
            if (Z.size() > 1) {
                json zs = json::array();
                for (uint32_t z : Z) zs.push_back(labels_json(z));
                jcase["admissible_z"] = zs;
                jcase["status"] = "not-mechanized";
                survivors.push_back("support {x" + std::to_string(i1) + ",x" + std::to_string(i2) +
                                    "}: multiple admissible degree-2 generators");
                pair_cases.push_back(jcase);
                continue;
            }
            uint32_t z = Z[0];
            jcase["z"] = labels_json(z);
            uint32_t d1 = z | vs_bit(i1), d2 = z | vs_bit(i2);
            std::vector<uint32_t> alpha_gens;
            for (uint32_t g : d.gens)
                if (g != d1 && g != d2) alpha_gens.push_back(g);
            jcase["alpha_generators"] = alpha_gens.size();

            Polynomial fz = support_sum(ctx, {i1, i2}) *
                            Polynomial(ctx, Monomial::from_support(d.n, z));
            json hist_total = json::object();
            bool group_refuted = true;
            for (uint32_t chosen : {d1, d2}) {
                json h = alpha_height_histogram(d, ctx, fz, alpha_gens, {chosen}, jobs);
                for (auto it = h.begin(); it != h.end(); ++it) {
                    size_t prev = hist_total.contains(it.key())
                                      ? hist_total[it.key()].get<size_t>()
                                      : 0;
                    hist_total[it.key()] = prev + it.value().get<size_t>();
                }
                if (!histogram_refutes(h, d.ht_c)) group_refuted = false;
            }
            jcase["heights"] = hist_total;
            jcase["status"] = group_refuted ? "refuted" : "not-refuted";
            if (!group_refuted)
                survivors.push_back("support {x" + std::to_string(i1) + ",x" + std::to_string(i2) +
                                    "}: some forced A' has height < ht(C)");
            pair_cases.push_back(jcase);
        }
    }
    cert["pair_cases"] = pair_cases;

    // supports larger than 2 need |J(z)| > 2 for some z; the height machinery
    // is only mechanized for pairs
    if (z_cap > 2) {
        survivors.push_back("supports of size > 2 admissible (z_cap = " + std::to_string(z_cap) +
                            "): not mechanized in general-A mode");
        cert["large_supports"] = "not-mechanized";
    }
    return cert;
}

json deg1_squarefree(const MonomialIdeal& C, Field field, int jobs,
                     std::vector<std::string>& survivors) {
    (void)jobs;
    InputData d = analyze(C);
    SimplicialComplex delta = complex_of(C, d.n);

    json cert;
    cert["height_c"] = d.ht_c;

    // n = 1: the vertex witness is forced (link/cone lemma), so verify it
    json singles = json::array();
    for (int k = 1; k <= d.n; ++k) {
        json e{{"k", k}};
        if (!delta.has_face(vs_bit(k))) {
            e["status"] = "refuted";
            e["reason"] = "x_k lies in C: the equation forces 1 in A";
        } else {
            VertexBDL vb = vertex_bdl(delta, k, field);
            if (vb.applicable && vb.verdict &&
                vb.verdict->overall() == BDLVerdict::Overall::Valid) {
                e["status"] = "witness";
                survivors.push_back("f = x" + std::to_string(k) +
                                    " admits the forced vertex witness (valid BDL)");
            } else {
                e["status"] = "refuted";
                e["reason"] = vb.applicable ? "forced witness fails verification" : vb.reason;
            }
        }
        singles.push_back(e);
    }
    cert["single_variable"] = singles;

    // global dropped-generator tables (the paper's candidate-A enumerations)
    {
        size_t cnt = 0, cm = 0;
        for (uint32_t g : d.gens) {
            BetweenStats st = all_but_table(d, delta, {g}, field);
            cnt += st.target_height_count;
            cm += st.cm_count;
        }
        cert["all_but_one"] = json{{"height_count", cnt}, {"cm_count", cm}};
    }

    // n >= 2: every degree-2 generator z of B needs supp(f) inside J(z);
    // exemption choices give the excluded generators, everything else forced
    json multi = json::array();
    std::set<uint32_t> support_universe;
    for (const auto& [z, js] : d.J) {
        if (js.size() < 2) continue;
        for (size_t a = 0; a < js.size(); ++a)
            for (size_t b = a + 1; b < js.size(); ++b) {
                // all subsets of J(z) of size >= 2 containing {js[a], js[b]}
                std::vector<int> rest;
                for (size_t c = 0; c < js.size(); ++c)
                    if (c != a && c != b) rest.push_back(js[c]);
                for (uint32_t sub = 0; sub < (1u << rest.size()); ++sub) {
                    uint32_t T = vs_bit(js[a]) | vs_bit(js[b]);
                    for (size_t c = 0; c < rest.size(); ++c)
                        if (sub & (1u << c)) T |= vs_bit(rest[c]);
                    support_universe.insert(T);
                }
            }
    }
    for (uint32_t T : support_universe) {
        std::vector<int> tv = mask_labels(T);
        std::vector<uint32_t> Z;
        for (uint32_t z : d.pairs) {
            const auto& js = d.J.at(z);
            bool all = true;
            for (int t : tv)
                if (std::find(js.begin(), js.end(), t) == js.end()) {
                    all = false;
                    break;
                }
            if (all) Z.push_back(z);
        }
        if (Z.empty()) continue;
        json e;
        e["support"] = json(tv);
        json zs = json::array();
        for (uint32_t z : Z) zs.push_back(labels_json(z));
        e["admissible_z"] = zs;
        size_t cases = 0, consistent = 0, surviving = 0;
        // W = nonempty subset of Z (the degree-2 part of B), exemption choice
        // j(z) in T per z in W
        for (uint32_t wsub = 1; wsub < (1u << Z.size()); ++wsub) {
            std::vector<uint32_t> W;
            for (size_t k = 0; k < Z.size(); ++k)
                if (wsub & (1u << k)) W.push_back(Z[k]);
            std::vector<size_t> choice(W.size(), 0);
            while (true) {
                ++cases;
                std::set<uint32_t> D;
                std::set<uint32_t> forced;
                for (size_t k = 0; k < W.size(); ++k)
                    D.insert(W[k] | vs_bit(tv[choice[k]]));
                bool consistent_case = true;
                for (size_t k = 0; k < W.size() && consistent_case; ++k)
                    for (int t : tv) {
                        uint32_t gen = W[k] | vs_bit(t);
                        if (t != tv[choice[k]]) {
                            if (D.count(gen)) {
                                consistent_case = false;
                                break;
                            }
                            forced.insert(gen);
                        }
                    }
                if (consistent_case) {
                    for (uint32_t g : d.gens) {
                        bool div = false;
                        for (uint32_t z : W)
                            if ((g & z) == z) {
                                div = true;
                                break;
                            }
                        if (!div) {
                            if (D.count(g)) {
                                consistent_case = false;
                                break;
                            }
                            forced.insert(g);
                        }
                    }
                }
                if (consistent_case) {
                    ++consistent;
                    BetweenStats st =
                        between_ideals(d, delta, {forced.begin(), forced.end()},
                                       {D.begin(), D.end()}, d.ht_c - 1, field);
                    if (st.cm_count > 0) {
                        ++surviving;
                        survivors.push_back("support {" + to_string(Monomial::from_support(d.n, T)) +
                                            "}: a CM candidate A exists");
                    }
                }
                // next exemption choice
                size_t k = 0;
                while (k < choice.size()) {
                    if (++choice[k] < tv.size()) break;
                    choice[k++] = 0;
                }
                if (k == choice.size()) break;
            }
        }
        e["cases"] = cases;
        e["consistent_cases"] = consistent;
        e["surviving_cases"] = surviving;
        e["status"] = surviving ? "not-refuted" : "refuted";
        multi.push_back(e);
    }
    cert["multi_variable"] = multi;
    return cert;
}

}  // namespace

RefutationOutcome refute_deg1(const MonomialIdeal& C, Field field, RefuteMode mode, int jobs) {
    validate_input(C);
    RefutationOutcome out;
    json cert;
    cert["schema"] = kSchema;
    cert["engine"] = "refute-deg1";
    cert["mode"] = mode_name(mode);
    cert["input"] = input_json(C, field);
    json body = (mode == RefuteMode::GeneralA) ? deg1_general(C, field, jobs, out.survivors)
                                               : deg1_squarefree(C, field, jobs, out.survivors);
    cert.update(body);
    cert["survivors"] = out.survivors;
    cert["verdict"] = out.survivors.empty() ? "refuted" : "candidates";
    out.refuted = out.survivors.empty();
    out.certificate = std::move(cert);
    return out;
}

// ===========================================================================
// refute_deg2
// ===========================================================================

namespace {

// exponent incidence matrix of the degree-2 monomials of f
std::vector<std::vector<int64_t>> incidence_matrix(const std::vector<uint32_t>& ys, int n) {
    std::vector<std::vector<int64_t>> m;
    for (uint32_t y : ys) {
        std::vector<int64_t> row(n, 0);
        for (int v : mask_labels(y)) row[v - 1] = 1;
        m.push_back(std::move(row));
    }
    return m;
}

bool unimodular_surjective(const std::vector<std::vector<int64_t>>& m, size_t need_rank) {
    auto inv = smith_invariants(m);
    if (inv.size() != need_rank) return false;
    for (int64_t v : inv)
        if (v != 1) return false;
    return true;
}

json deg2_general(const MonomialIdeal& C, Field field, int jobs,
                  std::vector<std::string>& survivors) {
    InputData d = analyze(C);
    PolyContext ctx(d.n, Field::Q);

    json cert;
    cert["height_c"] = d.ht_c;

    // n = 1: f = q*y; B needs a variable w with y*w a generator. The colon
    // argument refutes as soon as some other generator meets supp(y).
    json single_y = json::array();
    for (uint32_t y : d.pairs) {
        const auto& W = d.J.at(y);
        json e{{"y", labels_json(y)}, {"allowable_w", json(W)}};
        if (W.empty()) {
            e["status"] = "refuted";
            e["reason"] = "no allowable w";
        } else {
            std::set<uint32_t> excl;
            for (int w : W) excl.insert(y | vs_bit(w));
            uint32_t witness = 0;
            for (uint32_t g : d.gens)
                if (!excl.count(g) && (g & y)) {
                    witness = g;
                    break;
                }
            if (witness) {
                e["status"] = "refuted";
                e["witness_mu"] = labels_json(witness);
                e["reason"] = "mu - sum alpha_i f w_i is divisible by a variable of y, breaking A:f=A";
            } else {
                e["status"] = "not-refuted";
                survivors.push_back("f = " + to_string(Monomial::from_support(d.n, y)) +
                                    ": no witness generator for the colon argument");
            }
        }
        single_y.push_back(e);
    }
    cert["single_y"] = single_y;

    // n >= 2: the unique allowable variable w fixes f inside Y(w)
    std::map<int, std::vector<uint32_t>> Y;
    for (int w = 1; w <= d.n; ++w) {
        std::vector<uint32_t> ys;
        for (uint32_t y : d.pairs)
            if (!(y & vs_bit(w)) && d.gen_set.count(y | vs_bit(w))) ys.push_back(y);
        Y[w] = std::move(ys);
    }
    {
        json counts = json::object();
        for (int w = 1; w <= d.n; ++w) {
            json per = json::object();
            for (size_t nn = 2; nn <= Y[w].size(); ++nn) {
                // C(|Y|, nn)
                size_t c = 1;
                for (size_t k = 0; k < nn; ++k) c = c * (Y[w].size() - k) / (k + 1);
                per[std::to_string(nn)] = c;
            }
            counts[std::to_string(w)] = per;
        }
        cert["f_counts_per_w"] = counts;
    }

    // at most one allowable w for any multi-term f
    size_t max_w_per_f = 0;
    for (int w = 1; w <= d.n; ++w) {
        const auto& ys = Y[w];
        for (uint32_t sub = 0; sub < (1u << ys.size()); ++sub) {
            if (__builtin_popcount(sub) < 2) continue;
            size_t nw = 0;
            for (int w2 = 1; w2 <= d.n; ++w2) {
                bool all = true;
                for (size_t k = 0; k < ys.size() && all; ++k)
                    if (sub & (1u << k))
                        all = all && !(ys[k] & vs_bit(w2)) &&
                              d.gen_set.count(ys[k] | vs_bit(w2)) > 0;
                if (all) ++nw;
            }
            max_w_per_f = std::max(max_w_per_f, nw);
        }
    }
    cert["max_allowable_w_multi"] = max_w_per_f;
    if (max_w_per_f > 1)
        survivors.push_back("some multi-term f admits two allowable variables: not mechanized");

    json wcases = json::array();
    for (int w = 1; w <= d.n; ++w) {
        const auto& ys = Y[w];
        for (uint32_t sub = 0; sub < (1u << ys.size()); ++sub) {
            int nn = __builtin_popcount(sub);
            if (nn < 2) continue;
            std::vector<uint32_t> f;
            for (size_t k = 0; k < ys.size(); ++k)
                if (sub & (1u << k)) f.push_back(ys[k]);
            json e{{"w", w}};
            json fy = json::array();
            for (uint32_t y : f) fy.push_back(labels_json(y));
            e["f"] = fy;
            e["n"] = nn;

            bool licensed = unimodular_surjective(incidence_matrix(f, d.n), f.size());
            e["normalization"] = licensed ? "all-ones" : "residual";
            if (licensed) {
                Polynomial fw(ctx);
                for (uint32_t y : f)
                    fw += Polynomial(ctx, Monomial::from_support(d.n, y | vs_bit(w)));
                json h = alpha_height_histogram(d, ctx, fw, d.gens, {}, jobs);
                e["heights"] = h;
                bool ok = histogram_refutes(h, d.ht_c);
                e["status"] = ok ? "refuted" : "not-refuted";
                if (!ok)
                    survivors.push_back("w = x" + std::to_string(w) +
                                        ", normalized f: some forced A' has height < ht(C)");
            } else {
                // residual family: one invariant factor 2; parity branches over GF(2)
                auto inv = smith_invariants(incidence_matrix(f, d.n));
                bool shape_ok = inv.size() == f.size();
                size_t twos = 0;
                for (int64_t v : inv) {
                    if (v == 2) ++twos;
                    else if (v != 1) shape_ok = false;
                }
                shape_ok = shape_ok && twos == 1;
                int residual = -1;
                if (shape_ok) {
                    for (size_t k = 0; k < f.size() && residual < 0; ++k) {
                        std::vector<uint32_t> rest;
                        for (size_t j = 0; j < f.size(); ++j)
                            if (j != k) rest.push_back(f[j]);
                        if (unimodular_surjective(incidence_matrix(rest, d.n), rest.size()))
                            residual = static_cast<int>(k);
                    }
                }
                if (!shape_ok || residual < 0) {
                    e["status"] = "not-mechanized";
                    survivors.push_back("w = x" + std::to_string(w) +
                                        ": coefficient family not reducible to the parity branch");
                } else {
                    e["residual_y"] = labels_json(f[residual]);
                    PolyContext f2(d.n, Field::GF2);
                    json branches = json::array();
                    bool all_ok = true;
                    for (int b = 0; b < 3; ++b) {
                        Polynomial g(f2);
                        const char* tag;
                        if (b == 0) {
                            tag = "residual-only";
                            g += Polynomial(f2, Monomial::from_support(d.n, f[residual]));
                        } else {
                            tag = (b == 1) ? "all" : "all-minus-residual";
                            for (size_t k = 0; k < f.size(); ++k) {
                                if (b == 2 && static_cast<int>(k) == residual) continue;
                                g += Polynomial(f2, Monomial::from_support(d.n, f[k]));
                            }
                        }
                        Polynomial gw = g * Polynomial(f2, Monomial::variable(d.n, w - 1));
                        json h = alpha_height_histogram(d, f2, gw, d.gens, {}, jobs);
                        bool ok = histogram_refutes(h, d.ht_c);
                        branches.push_back(json{{"gbar", tag}, {"heights", h},
                                                {"status", ok ? "refuted" : "not-refuted"}});
                        all_ok = all_ok && ok;
                    }
                    e["gf2_branches"] = branches;
                    e["status"] = all_ok ? "refuted" : "not-refuted";
                    if (!all_ok)
                        survivors.push_back("w = x" + std::to_string(w) +
                                            ": a GF(2) parity branch has height < ht(C)");
                }
            }
            wcases.push_back(e);
        }
    }
    cert["w_cases"] = wcases;
    return cert;
}

json deg2_squarefree(const MonomialIdeal& C, Field field, int jobs,
                     std::vector<std::string>& survivors) {
    (void)jobs;
    InputData d = analyze(C);
    SimplicialComplex delta = complex_of(C, d.n);

    json cert;
    cert["height_c"] = d.ht_c;
    // every z_i must be squarefree: a square factor admits no allowable variable
    cert["square_terms"] = "no allowable variable, structurally refuted";

    auto vars_of = [&](const std::vector<uint32_t>& zs) {
        std::vector<int> out;
        for (int i = 1; i <= d.n; ++i) {
            bool all = true;
            for (uint32_t z : zs)
                if ((z & vs_bit(i)) || !d.gen_set.count(z | vs_bit(i))) {
                    all = false;
                    break;
                }
            if (all) out.push_back(i);
        }
        return out;
    };

    // global all-but-two table (subcase 2b's enumeration)
    {
        size_t cnt = 0, cm = 0;
        for (size_t a = 0; a < d.gens.size(); ++a)
            for (size_t b = a + 1; b < d.gens.size(); ++b) {
                BetweenStats st = all_but_table(d, delta, {d.gens[a], d.gens[b]}, field);
                cnt += st.target_height_count;
                cm += st.cm_count;
            }
        cert["all_but_two"] = json{{"height_count", cnt}, {"cm_count", cm}};
    }
    {
        size_t cnt = 0, cm = 0;
        for (uint32_t g : d.gens) {
            BetweenStats st = all_but_table(d, delta, {g}, field);
            cnt += st.target_height_count;
            cm += st.cm_count;
        }
        cert["all_but_one"] = json{{"height_count", cnt}, {"cm_count", cm}};
    }
    bool tables_clean = cert["all_but_one"]["cm_count"].get<size_t>() == 0 &&
                        cert["all_but_two"]["cm_count"].get<size_t>() == 0;
    if (!tables_clean)
        survivors.push_back("a dropped-generator candidate A is Cohen-Macaulay of the right height");

    // n = 1
    json n1 = json::array();
    for (uint32_t z : d.pairs) {
        const auto& W = d.J.at(z);
        if (W.empty()) continue;
        json e{{"z", labels_json(z)}, {"allowable_vars", json(W)}};
        json subs = json::array();
        size_t maxvars = std::min<size_t>(W.size(), static_cast<size_t>(d.ht_c));
        for (size_t r = 1; r <= maxvars; ++r) {
            for (const auto& idx : combinations(W.size(), r)) {
                std::vector<int> vars;
                for (size_t k : idx) vars.push_back(W[k]);
                json s{{"vars", json(vars)}};
                if (r == 1) {
                    // forced: all generators but z*x_i; candidate A must avoid it
                    s["kind"] = "all-but-one";
                    s["status"] = tables_clean ? "refuted" : "not-refuted";
                } else {
                    // a generator outside {z*x_i} meeting supp(z) cannot be a
                    // minimal generator of A but is forced into A
                    std::set<uint32_t> excl;
                    for (int v : vars) excl.insert(z | vs_bit(v));
                    uint32_t witness = 0;
                    for (uint32_t g : d.gens)
                        if (!excl.count(g) && (g & z)) {
                            witness = g;
                            break;
                        }
                    if (witness) {
                        s["witness_mu"] = labels_json(witness);
                        s["status"] = "refuted";
                    } else {
                        s["status"] = "not-refuted";
                        survivors.push_back("deg-2 n=1, z = " +
                                            to_string(Monomial::from_support(d.n, z)) +
                                            ": no witness generator");
                    }
                }
                subs.push_back(s);
            }
        }
        if (W.size() > static_cast<size_t>(d.ht_c))
            subs.push_back(json{{"vars_above_height", true},
                                {"status", "refuted"},
                                {"reason", "ht(B) would exceed ht(C)"}});
        e["subcases"] = subs;
        n1.push_back(e);
    }
    cert["n1_cases"] = n1;

    // n = 2
    json n2 = json::array();
    for (size_t a = 0; a < d.pairs.size(); ++a) {
        for (size_t b = a + 1; b < d.pairs.size(); ++b) {
            uint32_t z1 = d.pairs[a], z2 = d.pairs[b];
            std::vector<int> V = vars_of({z1, z2});
            if (V.empty()) continue;
            json e{{"f", json{labels_json(z1), labels_json(z2)}}, {"common_vars", json(V)}};
            json subs = json::array();
            // |vars| = 1 -> all-but-one; |vars| = 2 -> all-but-two; |vars| = 3 -> shared variable
            subs.push_back(json{{"size", 1}, {"kind", "all-but-one"},
                                {"status", tables_clean ? "refuted" : "not-refuted"}});
            if (V.size() >= 2)
                subs.push_back(json{{"size", 2}, {"kind", "all-but-two"},
                                    {"status", tables_clean ? "refuted" : "not-refuted"}});
            if (V.size() >= 3) {
                bool shared = (z1 & z2) != 0;
                subs.push_back(json{{"size", 3},
                                    {"kind", "shared-variable"},
                                    {"shared", shared},
                                    {"status", shared ? "refuted" : "not-refuted"}});
                if (!shared)
                    survivors.push_back("deg-2 n=2 with three variables and disjoint terms: not mechanized");
            }
            if (V.size() > 3)
                subs.push_back(json{{"size_above_3", true}, {"status", "refuted"},
                                    {"reason", "ht(B) would exceed ht(C)"}});
            e["subcases"] = subs;
            n2.push_back(e);
        }
    }
    cert["n2_cases"] = n2;

    // n >= 3: count f with a valid variable; each has at most one, and the
    // forced A contains all generators but one
    json n3plus = json::object();
    for (size_t nn = 3; nn <= 5 && nn <= d.pairs.size(); ++nn) {
        size_t with_u = 0, multi_u = 0;
        for (const auto& idx : combinations(d.pairs.size(), nn)) {
            std::vector<uint32_t> zs;
            for (size_t k : idx) zs.push_back(d.pairs[k]);
            std::vector<int> U = vars_of(zs);
            if (!U.empty()) {
                ++with_u;
                if (U.size() >= 2) ++multi_u;
            }
        }
        n3plus[std::to_string(nn)] =
            json{{"with_valid_variable", with_u}, {"with_two_or_more", multi_u}};
        if (multi_u)
            survivors.push_back("deg-2 n=" + std::to_string(nn) +
                                ": an f with two valid variables exists: not mechanized");
    }
    n3plus["resolution"] = std::string("all-but-one");
    n3plus["status"] = tables_clean ? "refuted" : "not-refuted";
    cert["n3_plus"] = n3plus;
    return cert;
}

}  // namespace

RefutationOutcome refute_deg2(const MonomialIdeal& C, Field field, RefuteMode mode, int jobs) {
    validate_input(C);
    RefutationOutcome out;
    json cert;
    cert["schema"] = kSchema;
    cert["engine"] = "refute-deg2";
    cert["mode"] = mode_name(mode);
    cert["input"] = input_json(C, field);
    json body = (mode == RefuteMode::GeneralA) ? deg2_general(C, field, jobs, out.survivors)
                                               : deg2_squarefree(C, field, jobs, out.survivors);
    cert.update(body);
    cert["survivors"] = out.survivors;
    cert["verdict"] = out.survivors.empty() ? "refuted" : "candidates";
    out.refuted = out.survivors.empty();
    out.certificate = std::move(cert);
    return out;
}

bool recheck_certificate(const json& cert, std::string* mismatch, int jobs) {
    auto fail = [&](const std::string& why) {
        if (mismatch) *mismatch = why;
        return false;
    };
    if (!cert.contains("schema") || cert["schema"].get<std::string>() != kSchema)
        return fail("unknown certificate schema");
    std::string engine = cert.value("engine", "");
    Field field = field_from_name(cert.at("input").at("field").get<std::string>());
    MonomialIdeal C = input_from_json(cert.at("input"));
    RefutationOutcome fresh;
    if (engine == "refute-deg1")
        fresh = refute_deg1(C, field, mode_from_name(cert.value("mode", "")), jobs);
    else if (engine == "refute-deg2")
        fresh = refute_deg2(C, field, mode_from_name(cert.value("mode", "")), jobs);
    else
        return fail("unknown engine: " + engine);
    if (fresh.certificate == cert) return true;
    // locate the first differing key for the report
    for (auto it = fresh.certificate.begin(); it != fresh.certificate.end(); ++it) {
        if (!cert.contains(it.key()))
            return fail("missing key: " + it.key());
        if (cert[it.key()] != it.value())
            return fail("mismatch under key: " + it.key());
    }
    return fail("certificate has extra keys");
}

}  // namespace srl
