// srliaison: Stanley-Reisner liaison toolkit command line.
//
// Subcommands:
//   complex info|link|deletion|cone|cm|vd|wvd  <complex.json>
//   bdl verify|vertex|search-edge|refute-deg1|refute-deg2|recheck|biliaison
//   repro <target> | repro --all
//
// Exit codes: 0 success/verified, 1 usage or input error, 2 negative verdict
// (with --assert) or failed recheck/repro.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "srliaison/decomposability.hpp"
#include "srliaison/json_io.hpp"
#include "srliaison/refute.hpp"
#include "srliaison/repro.hpp"

using nlohmann::json;
using namespace srl;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

struct Options {
    std::string field = "Q";
    bool as_json = false;
    bool do_assert = false;
    int jobs = 0;
};

void print_complex(const SimplicialComplex& dl, bool as_json) {
    if (as_json) {
        std::cout << complex_to_json(dl).dump(1) << "\n";
        return;
    }
    if (dl.is_void()) {
        std::cout << "void complex\n";
        return;
    }
    std::cout << "n: " << dl.n() << "\n";
    std::cout << "dimension: " << dl.dim() << "\n";
    std::cout << "pure: " << (dl.is_pure() ? "true" : "false") << "\n";
    std::cout << "facets (" << dl.facets().size() << "):";
    for (VertexSet f : dl.facets()) {
        std::cout << " {";
        bool first = true;
        for (int v : vs_labels(f)) {
            std::cout << (first ? "" : ",") << v;
            first = false;
        }
        std::cout << "}";
    }
    std::cout << "\n";
    MonomialIdeal sr = stanley_reisner(dl);
    std::cout << "stanley-reisner ideal:";
    for (const auto& g : sr.gens()) std::cout << " " << to_string(g);
    std::cout << "\n";
}

int cmd_complex(const std::string& op, const std::string& file, int vertex, const Options& opt) {
    std::vector<std::string> warnings;
    SimplicialComplex dl = complex_from_json(load_json(file), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    Field field = field_from_name(opt.field);

    if (op == "info") {
        print_complex(dl, opt.as_json);
        return 0;
    }
    if (op == "link" || op == "deletion" || op == "cone") {
        if (vertex == 0) throw std::runtime_error(op + " needs --vertex");
        SimplicialComplex out = (op == "link")     ? dl.link(vertex)
                                : (op == "deletion") ? dl.deletion(vertex)
                                                     : dl.cone(vertex);
        print_complex(out, opt.as_json);
        return 0;
    }
    bool verdict;
    std::string label;
    if (op == "cm") {
        verdict = is_cohen_macaulay(dl, field);
        label = "Cohen-Macaulay";
    } else if (op == "vd") {
        verdict = is_vertex_decomposable(dl).verdict;
        label = "vertex decomposable";
    } else if (op == "wvd") {
        verdict = is_weakly_vertex_decomposable(dl, field).verdict;
        label = "weakly vertex decomposable";
    } else {
        throw CLI::ValidationError("unknown complex operation: " + op);
    }
    if (opt.as_json)
        std::cout << json{{"operation", op}, {"verdict", verdict}}.dump(1) << "\n";
    else
        std::cout << label << ": " << (verdict ? "true" : "false") << "\n";
    return (opt.do_assert && !verdict) ? 2 : 0;
}

int bdl_verify(const std::string& file, const Options& opt) {
    BDLWitness w = bdl_witness_from_json(load_json(file));
    BDLVerdict v = verify_bdl(w, field_from_name(opt.field));
    if (opt.as_json) {
        std::cout << to_json(v).dump(1) << "\n";
    } else {
        for (const auto& [name, r] : v.items()) {
            std::cout << name << ": "
                      << (r->status == CheckStatus::Pass   ? "pass"
                          : r->status == CheckStatus::Fail ? "fail"
                                                           : "not-checked")
                      << (r->detail.empty() ? "" : "  (" + r->detail + ")") << "\n";
        }
        std::cout << "verdict: " << v.overall_name() << "\n";
    }
    bool ok = v.overall() == BDLVerdict::Overall::Valid;
    return (opt.do_assert && !ok) ? 2 : 0;
}

int bdl_vertex(const std::string& file, int vertex, const Options& opt) {
    std::vector<std::string> warnings;
    SimplicialComplex dl = complex_from_json(load_json(file), &warnings);
    VertexBDL v = vertex_bdl(dl, vertex, field_from_name(opt.field));
    if (opt.as_json) {
        std::cout << to_json(v).dump(1) << "\n";
    } else if (!v.applicable) {
        std::cout << "no vertex basic double G-link: " << v.reason << "\n";
    } else {
        std::cout << "f: x" << vertex << "\n";
        std::cout << "B (link ideal):";
        for (const auto& g : v.B->gens()) std::cout << " " << to_string(g);
        std::cout << "\nA (cone over deletion):";
        for (const auto& g : v.A->gens()) std::cout << " " << to_string(g);
        std::cout << "\nverdict: " << v.verdict->overall_name() << "\n";
    }
    bool ok = v.applicable && v.verdict &&
              v.verdict->overall() == BDLVerdict::Overall::Valid;
    return (opt.do_assert && !ok) ? 2 : 0;
}

int bdl_search_edge(const std::string& file, const std::string& circ, const std::string& symmetry,
                    const std::string& cert_out, const Options& opt) {
    Graph g = [&] {
        if (!circ.empty()) {
            json spec = json::parse(circ);
            return circulant(spec.at(0).get<int>(), spec.at(1).get<std::vector<int>>());
        }
        return graph_from_json(load_json(file));
    }();
    std::vector<std::vector<int>> sym;
    const std::vector<std::vector<int>>* symp = nullptr;
    if (symmetry == "rotation") {
        sym.push_back(rotation_permutation(g.n()));
        symp = &sym;
    } else if (!symmetry.empty()) {
        throw std::runtime_error("unknown symmetry: " + symmetry);
    }
    EdgeSearchResult res = search_edge_bdl(g, field_from_name(opt.field), symp);
    if (!cert_out.empty()) write_json(cert_out, to_json(res));
    if (opt.as_json) {
        std::cout << to_json(res).dump(1) << "\n";
    } else if (!res.structural_refutation.empty()) {
        std::cout << "no basic double G-link: " << res.structural_refutation << "\n";
    } else if (res.refuted()) {
        size_t cm_cands = 0;
        for (const auto& r : res.anchored)
            if (!r.vars.empty() && r.cm) ++cm_cands;
        std::cout << "no basic double G-link with monomial B";
        if (cm_cands) std::cout << "; " << cm_cands << " CM candidates eliminated";
        std::cout << "\n";
    } else {
        for (size_t i : res.survivors) {
            const auto& c = res.candidates[i];
            std::cout << "candidate f =";
            bool first = true;
            for (int v : c.support) {
                std::cout << (first ? " x" : "+x") << v;
                first = false;
            }
            std::cout << ", B =";
            for (const auto& m : c.B.gens()) std::cout << " " << to_string(m);
            std::cout << "\n";
        }
    }
    return (opt.do_assert && !res.refuted()) ? 2 : 0;
}

int bdl_refute(int degree, const std::string& file, const std::string& mode,
               const std::string& cert_out, const Options& opt) {
    MonomialIdeal C = monomial_ideal_from_json(load_json(file));
    Field field = field_from_name(opt.field);
    RefutationOutcome out = (degree == 1)
                                ? refute_deg1(C, field, mode_from_name(mode), opt.jobs)
                                : refute_deg2(C, field, mode_from_name(mode), opt.jobs);
    if (!cert_out.empty()) write_json(cert_out, out.certificate);
    if (opt.as_json) {
        std::cout << out.certificate.dump(1) << "\n";
    } else {
        std::cout << "verdict: " << (out.refuted ? "refutation" : "candidates remain") << "\n";
        for (const auto& s : out.survivors) std::cout << "surviving: " << s << "\n";
    }
    return (opt.do_assert && !out.refuted) ? 2 : 0;
}

int bdl_recheck(const std::string& file, const Options& opt) {
    std::string why;
    bool ok = recheck_certificate(load_json(file), &why, opt.jobs);
    std::cout << (ok ? "certificate replay: pass" : "certificate replay: FAIL (" + why + ")")
              << "\n";
    return ok ? 0 : 2;
}

int bdl_biliaison(const std::string& file, const Options& opt) {
    BiliaisonWitness w = biliaison_witness_from_json(load_json(file));
    BiliaisonVerdict v = verify_biliaison(w, field_from_name(opt.field));
    if (opt.as_json) {
        std::cout << to_json(v).dump(1) << "\n";
    } else {
        std::cout << "preconditions: " << (v.preconditions_ok ? "pass" : "fail") << "\n";
        std::cout << "x*J+N == a*I+N: " << (v.equality.ok() ? "true" : "false") << "\n";
        std::cout << "height shift: " << v.ell << "\n";
        std::cout << "L = a*I+N monomial: " << (v.l_monomial ? "true" : "false") << "\n";
        if (v.r) std::cout << "x = r*a with r = " << to_string(*v.r) << "\n";
    }
    bool ok = v.preconditions_ok && v.equality.ok();
    return (opt.do_assert && !ok) ? 2 : 0;
}

int cmd_repro(const std::string& target, bool all, const Options& opt) {
    std::vector<std::string> targets = all ? repro_targets() : std::vector<std::string>{target};
    bool pass = true;
    json out = json::array();
    for (const auto& t : targets) {
        ReproReport rep = run_repro(t, opt.jobs);
        pass = pass && rep.pass;
        if (opt.as_json) {
            out.push_back(json{{"target", rep.target}, {"pass", rep.pass}, {"lines", rep.lines}});
        } else {
            std::cout << "== " << rep.target << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& l : rep.lines) std::cout << "   " << l << "\n";
        }
    }
    if (opt.as_json) std::cout << out.dump(1) << "\n";
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner liaison toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads for case enumeration (default: cores)");

    // complex
    auto* cx = app.add_subcommand("complex", "simplicial complex operations");
    std::string cx_op, cx_file;
    int cx_vertex = 0;
    cx->add_option("operation", cx_op, "info|link|deletion|cone|cm|vd|wvd")->required();
    cx->add_option("file", cx_file, "complex JSON file")->required();
    cx->add_option("--vertex,--apex", cx_vertex, "vertex for link/deletion/cone");
    cx->add_option("--field", opt.field, "Q or GF2");
    cx->add_flag("--assert", opt.do_assert, "exit 2 on a negative verdict");
    cx->add_flag("--json", opt.as_json, "machine readable output");

    // bdl
    auto* bdl = app.add_subcommand("bdl", "basic double G-link operations");
    std::string bdl_op, bdl_file, bdl_mode = "general-A", bdl_cert, bdl_circ, bdl_sym;
    int bdl_vertex_arg = 0;
    bdl->add_option("operation", bdl_op,
                    "verify|vertex|search-edge|refute-deg1|refute-deg2|recheck|biliaison")
        ->required();
    bdl->add_option("file", bdl_file, "input JSON file");
    bdl->add_option("--vertex", bdl_vertex_arg, "vertex for the vertex construction");
    bdl->add_option("--mode", bdl_mode, "general-A or squarefree-A");
    bdl->add_option("--certificate", bdl_cert, "write the certificate to this file");
    bdl->add_option("--circulant", bdl_circ, "circulant graph, e.g. [16,[1,4,8]]");
    bdl->add_option("--symmetry", bdl_sym, "rotation (circulant graphs)");
    bdl->add_option("--field", opt.field, "Q or GF2");
    bdl->add_flag("--assert", opt.do_assert, "exit 2 on a negative verdict");
    bdl->add_flag("--json", opt.as_json, "machine readable output");

    // repro
    auto* rp = app.add_subcommand("repro", "reproduce a named computation from the case studies");
    std::string rp_target;
    bool rp_all = false;
    rp->add_option("target", rp_target, "one of the repro targets");
    rp->add_flag("--all", rp_all, "run every target");
    rp->add_flag("--json", opt.as_json, "machine readable output");
    rp->add_option("--list", "list targets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cx->parsed()) return cmd_complex(cx_op, cx_file, cx_vertex, opt);
        if (bdl->parsed()) {
            if (bdl_op == "verify") return bdl_verify(bdl_file, opt);
            if (bdl_op == "vertex") return bdl_vertex(bdl_file, bdl_vertex_arg, opt);
            if (bdl_op == "search-edge")
                return bdl_search_edge(bdl_file, bdl_circ, bdl_sym, bdl_cert, opt);
            if (bdl_op == "refute-deg1") return bdl_refute(1, bdl_file, bdl_mode, bdl_cert, opt);
            if (bdl_op == "refute-deg2") return bdl_refute(2, bdl_file, bdl_mode, bdl_cert, opt);
            if (bdl_op == "recheck") return bdl_recheck(bdl_file, opt);
            if (bdl_op == "biliaison") return bdl_biliaison(bdl_file, opt);
            std::cerr << "unknown bdl operation: " << bdl_op << "\n";
            return 1;
        }
        if (rp->parsed()) {
            if (!rp_all && rp_target.empty()) {
                for (const auto& t : repro_targets()) std::cout << t << "\n";
                return 0;
            }
            return cmd_repro(rp_target, rp_all, opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
