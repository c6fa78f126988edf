/// Command-line interface.
///
///   qnichols validate <subdatum.json>
///       Reports each of the six embedding conditions with a witness for any
///       failure.  Exit 0 when all hold, 1 when any fails, 2 on bad input.
///
///   qnichols compute <subdatum.json> [--max-degree N] [--orbit-cap C]
///                    [--word-cap W] [--seed S] [--format text|json]
///                    [--out FILE]
///       Computes the graded braided algebra attached to the embedding and
///       writes a deterministic report.  Exit 0 on success, 1 on a
///       mathematical failure, 2 on bad input, 3 when a resource cap left
///       only partial results (the report then carries "partial": true).
///
///   qnichols selftest [--max-degree N] [--seed S]
///       Runs the built-in verification suite.  Exit 0 when every check
///       passes, 1 otherwise.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnichols/braided.hpp"
#include "qnichols/errors.hpp"
#include "qnichols/selftest.hpp"

using namespace qnichols;
using nlohmann::ordered_json;

namespace {

ordered_json datum_summary(const RootDatum& d) {
    ordered_json j;
    j["names"] = d.names();
    j["nodes"] = d.size();
    j["rankY"] = d.rank_y();
    j["rankX"] = d.rank_x();
    return j;
}

ordered_json validation_json(const ValidationReport& rep) {
    ordered_json j;
    j["ok"] = rep.all_ok();
    ordered_json conds = ordered_json::array();
    for (const auto& c : rep.conditions) {
        ordered_json e;
        e["id"] = c.id;
        e["ok"] = c.ok;
        if (!c.ok) e["detail"] = c.detail;
        conds.push_back(std::move(e));
    }
    j["conditions"] = std::move(conds);
    return j;
}

ordered_json kvec_json(const KVec& v) {
    ordered_json a = ordered_json::array();
    for (long x : v) a.push_back(x);
    return a;
}

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const mpz_class& x : v) a.push_back(x.get_si());
    return a;
}

ordered_json matrix_json(const RatMat& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const RatQ& c : row) r.push_back(c.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

int cmd_validate(const std::string& path) {
    const SubRootDatum s = load_sub_root_datum(path);
    const ValidationReport rep = s.validate();
    for (const auto& c : rep.conditions) {
        if (c.ok)
            std::cout << "(" << c.id << ") ok\n";
        else
            std::cout << "(" << c.id << ") FAIL: " << c.detail << "\n";
    }
    if (rep.all_ok()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    return 1;
}

struct ComputeOptions {
    std::string path;
    unsigned max_degree = 3;
    std::size_t orbit_cap = 512;
    std::size_t word_cap = 16;
    unsigned long seed = 1;
    std::string format = "text";
    std::string out;
};

void render_text(const ordered_json& rep, std::ostream& os) {
    os << "input: " << rep["input"].get<std::string>() << "\n";
    os << "ambient nodes: " << rep["ambient"]["nodes"].get<std::size_t>()
       << ", embedded nodes: " << rep["sub"]["nodes"].get<std::size_t>()
       << ", deleted nodes:";
    if (rep["complement"].empty()) os << " (none)";
    for (const auto& v : rep["complement"]) os << " " << v.get<std::string>();
    os << "\n";
    os << "validation: " << (rep["validation"]["ok"].get<bool>() ? "ok" : "FAILED")
       << "\n";
    if (rep["partial"].get<bool>()) {
        os << "PARTIAL RESULTS (a resource cap was hit)\n";
        for (const auto& n : rep["notes"])
            os << "  note: " << n.get<std::string>() << "\n";
    }
    const auto& d1 = rep["degree1"];
    os << "degree 1: dimension " << d1["dimension"].get<std::size_t>()
       << (d1["complete"].get<bool>() ? "" : " (incomplete)") << "\n";
    for (const auto& v : d1["vectors"])
        os << "  " << v["expr"].get<std::string>() << "\n";
    if (rep.contains("index")) {
        os << "corank: " << rep["index"]["corank"].get<std::size_t>();
        if (rep["index"]["known"].get<bool>())
            os << ", index: " << rep["index"]["value"].get<std::size_t>();
        else
            os << ", index: not established";
        os << "\n";
    }
    if (rep.contains("hilbert")) {
        os << "graded dimensions:";
        for (const auto& h : rep["hilbert"])
            os << " " << h["dimension"].get<std::size_t>();
        os << "\n";
    }
    if (rep.contains("relations")) {
        for (const auto& r : rep["relations"])
            os << "relations at degree " << r["degree"].get<unsigned>() << ": "
               << r["count"].get<std::size_t>() << "\n";
    }
    if (rep.contains("nichols")) {
        os << "Nichols property up to degree "
           << rep["nichols"]["max_degree"].get<unsigned>() << ": "
           << (rep["nichols"]["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
    if (rep.contains("hecke")) {
        const auto& h = rep["hecke"];
        if (h["applies"].get<bool>())
            os << "hecke: " << h["detail"].get<std::string>() << "\n";
    }
    if (rep.contains("zero_component"))
        os << "degree-0 checks: "
           << (rep["zero_component"]["ok"].get<bool>() ? "ok" : "FAILED")
           << "\n";
    if (rep.contains("pairing")) {
        os << "pairing ranks:";
        for (const auto& p : rep["pairing"])
            os << " " << p["rank"].get<std::size_t>() << "/"
               << p["dimension"].get<std::size_t>();
        os << "\n";
    }
    os << (rep["partial"].get<bool>() ? "partial\n" : "done\n");
}

int cmd_compute(const ComputeOptions& o) {
    const SubRootDatum s = load_sub_root_datum(o.path);
    const ValidationReport vrep = s.validate();
    if (!vrep.all_ok()) {
        for (const auto& c : vrep.conditions)
            if (!c.ok)
                std::cerr << "condition (" << c.id << ") fails: " << c.detail
                          << "\n";
        std::cerr << "the embedding is invalid; nothing to compute\n";
        return 1;
    }

    const UqEngine eng(s.ambient(), o.word_cap);
    const BraidedEngine b(eng, s, o.orbit_cap);

    bool partial = false;
    std::vector<std::string> notes;

    ordered_json rep;
    rep["command"] = "compute";
    rep["input"] = o.path;
    ordered_json params;
    params["max_degree"] = o.max_degree;
    params["orbit_cap"] = o.orbit_cap;
    params["word_cap"] = o.word_cap;
    params["seed"] = o.seed;
    rep["parameters"] = std::move(params);
    rep["ambient"] = datum_summary(s.ambient());
    ordered_json subj = datum_summary(s.sub());
    ordered_json iota = ordered_json::array();
    for (std::size_t v : s.iota()) iota.push_back(s.ambient().name(v));
    subj["iota"] = std::move(iota);
    rep["sub"] = std::move(subj);
    ordered_json comp = ordered_json::array();
    for (std::size_t v : s.complement()) comp.push_back(s.ambient().name(v));
    rep["complement"] = std::move(comp);
    rep["validation"] = validation_json(vrep);

    const B1Result& b1 = b.compute_b1();
    if (!b1.complete) {
        partial = true;
        notes.push_back(b1.note);
    }

    ordered_json d1;
    d1["complete"] = b1.complete;
    d1["dimension"] = b1.basis.dim();
    ordered_json vecs = ordered_json::array();
    for (const BElement& v : b1.basis.vectors) {
        ordered_json e;
        e["expr"] = v.value.str();
        e["weight"] = kvec_json(v.weight);
        vecs.push_back(std::move(e));
    }
    d1["vectors"] = std::move(vecs);
    ordered_json comps = ordered_json::array();
    for (const B1Component& c : b1.components) {
        ordered_json e;
        e["node"] = s.ambient().name(c.d);
        ordered_json mem = ordered_json::array();
        for (std::size_t m : c.members) mem.push_back(m);
        e["members"] = std::move(mem);
        e["top"] = c.top_index;
        e["highest_weight"] = vec_json(c.highest_weight);
        comps.push_back(std::move(e));
    }
    d1["components"] = std::move(comps);
    ordered_json prims = ordered_json::array();
    for (std::size_t p : b1.primitive_indices) prims.push_back(p);
    d1["primitive_indices"] = std::move(prims);
    rep["degree1"] = std::move(d1);

    const IndexCorank ic = b.index_and_corank();
    ordered_json ij;
    ij["corank"] = ic.corank;
    ij["known"] = ic.index_known;
    if (ic.index_known) ij["value"] = ic.index;
    rep["index"] = std::move(ij);

    const ZeroComponentReport zc = b.verify_zero_component();
    ordered_json zj;
    zj["ok"] = zc.ok;
    zj["checks"] = zc.checks;
    rep["zero_component"] = std::move(zj);

    if (b1.complete) {
        const ActionTable tab = b.action_table(b1.basis);
        ordered_json aj;
        aj["labels"] = tab.labels;
        ordered_json mats = ordered_json::array();
        for (const RatMat& m : tab.matrices) mats.push_back(matrix_json(m));
        aj["matrices"] = std::move(mats);
        rep["action"] = std::move(aj);

        if (b1.basis.dim() > 0) {
            const BraidingMatrix bm = b.braiding_matrix(1, 1);
            ordered_json bj;
            bj["dim"] = bm.dim_left;
            bj["matrix"] = matrix_json(bm.entries);
            rep["braiding"] = std::move(bj);
        }

        const HeckeReport hk = b.hecke_diagnostic();
        ordered_json hj;
        hj["applies"] = hk.applies;
        if (hk.applies) {
            hj["alpha"] = hk.alpha.str();
            hj["beta"] = hk.beta.str();
            hj["detail"] = hk.detail;
        }
        rep["hecke"] = std::move(hj);

        const IntegrabilityReport ir = b.integrability_check(b1.basis, 6);
        ordered_json irj;
        irj["ok"] = ir.ok;
        irj["nilbound"] = ir.nilbound;
        ordered_json entries = ordered_json::array();
        for (const auto& e : ir.entries) {
            ordered_json ej;
            ej["vector"] = e.vector_index;
            ej["node"] = s.ambient().name(e.ambient_j);
            ej["e_power"] = e.e_power;
            ej["f_power"] = e.f_power;
            ej["ok"] = e.ok;
            entries.push_back(std::move(ej));
        }
        irj["entries"] = std::move(entries);
        rep["integrability"] = std::move(irj);

        const auto gens = b.module_generators(o.max_degree);
        ordered_json gj = ordered_json::array();
        for (const auto& g : gens) {
            ordered_json e;
            ordered_json gamma = ordered_json::array();
            for (std::size_t d : g.gamma) gamma.push_back(s.ambient().name(d));
            e["gamma"] = std::move(gamma);
            e["expr"] = g.element.value.str();
            gj.push_back(std::move(e));
        }
        rep["module_generators"] = std::move(gj);

        // Graded slices, one degree at a time, stopping at a resource cap.
        unsigned reached = 0;
        ordered_json hil = ordered_json::array();
        bool capped = false;
        for (unsigned n = 0; n <= o.max_degree; ++n) {
            try {
                const BnResult& bn = b.compute_bn(n);
                ordered_json h;
                h["degree"] = n;
                h["dimension"] = bn.basis.dim();
                h["product_dim"] = bn.certificate.product_dim;
                h["coinvariant_dim"] = bn.certificate.coinvariant_dim;
                h["windows"] = bn.certificate.window_count;
                h["agreed"] = bn.certificate.agreed;
                hil.push_back(std::move(h));
                reached = n;
            } catch (const CapError& e) {
                partial = true;
                capped = true;
                notes.push_back(std::string("degree ") + std::to_string(n) +
                                ": " + e.what());
                break;
            } catch (const BoundError& e) {
                partial = true;
                capped = true;
                notes.push_back(std::string("degree ") + std::to_string(n) +
                                ": " + e.what());
                break;
            }
        }
        rep["hilbert"] = std::move(hil);

        ordered_json relj = ordered_json::array();
        for (unsigned n = 2; n <= reached; ++n) {
            const RelationsResult rr = b.relations_at_degree(n);
            ordered_json r;
            r["degree"] = n;
            r["tensor_dimension"] = rr.tensor_dim;
            r["count"] = rr.kernel.size();
            ordered_json kern = ordered_json::array();
            for (const auto& rel : rr.kernel) {
                ordered_json terms = ordered_json::array();
                for (const auto& [tup, c] : rel) {
                    ordered_json t;
                    ordered_json w = ordered_json::array();
                    for (std::size_t idx : tup) w.push_back(idx);
                    t["tuple"] = std::move(w);
                    t["coeff"] = c.str();
                    terms.push_back(std::move(t));
                }
                kern.push_back(std::move(terms));
            }
            r["kernel"] = std::move(kern);
            relj.push_back(std::move(r));
        }
        rep["relations"] = std::move(relj);

        if (!capped) {
            const NicholsReport nr = b.nichols_check(o.max_degree);
            ordered_json nj;
            nj["max_degree"] = nr.max_degree;
            nj["degree_zero_ok"] = nr.degree_zero_ok;
            nj["primitives_ok"] = nr.primitives_ok;
            nj["generation_ok"] = nr.generation_ok;
            nj["ok"] = nr.ok;
            ordered_json pd = ordered_json::array();
            for (std::size_t v : nr.primitive_dims) pd.push_back(v);
            nj["primitive_dims"] = std::move(pd);
            if (!nr.ok) nj["witness"] = nr.witness;
            rep["nichols"] = std::move(nj);
        }

        ordered_json pj = ordered_json::array();
        for (unsigned n = 1; n <= reached; ++n) {
            const GradedBasis& bn = b.compute_bn(n).basis;
            const RatMat gram = b.pairing_gram(bn, bn);
            const std::size_t rank = rat_rank(gram);
            ordered_json p;
            p["degree"] = n;
            p["dimension"] = bn.dim();
            p["rank"] = rank;
            p["nondegenerate"] = (rank == bn.dim());
            pj.push_back(std::move(p));
        }
        rep["pairing"] = std::move(pj);
    }

    rep["partial"] = partial;
    rep["notes"] = notes;

    std::ostringstream body;
    if (o.format == "json")
        body << rep.dump(2) << "\n";
    else
        render_text(rep, body);

    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw InputError("cannot write file: " + o.out);
        f << body.str();
    }
    return partial ? 3 : 0;
}

int cmd_selftest(unsigned max_degree, unsigned long seed, bool corrupt) {
    SelfTestOptions opts;
    opts.max_degree = max_degree;
    opts.seed = seed;
    opts.corrupt_serre = corrupt;
    const SelfTestResult r = run_selftest(opts);
    for (const auto& c : r.checks) {
        std::cout << (c.ok ? "pass" : "FAIL") << "  " << c.name;
        if (!c.ok) std::cout << "  (" << c.witness << ")";
        std::cout << "\n";
    }
    if (r.checks.empty()) std::cout << "trivial run (max degree 0)\n";
    std::cout << (r.ok ? "selftest passed\n" : "selftest FAILED\n");
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact braided Hopf algebras attached to embeddings of root data"};
    app.require_subcommand(1);

    auto* val = app.add_subcommand(
        "validate", "Check the six embedding conditions of a sub-datum file");
    std::string val_path;
    val->add_option("file", val_path, "sub-datum JSON file")->required();

    auto* cmp = app.add_subcommand(
        "compute", "Compute the braided algebra attached to a sub-datum file");
    ComputeOptions copt;
    cmp->add_option("file", copt.path, "sub-datum JSON file")->required();
    cmp->add_option("--max-degree", copt.max_degree,
                    "largest graded degree to compute (default 3)");
    cmp->add_option("--orbit-cap", copt.orbit_cap,
                    "bound on the degree-1 orbit size (default 512)");
    cmp->add_option("--word-cap", copt.word_cap,
                    "bound on any word length (default 16)");
    cmp->add_option("--seed", copt.seed, "seed recorded in the report");
    cmp->add_option("--format", copt.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmp->add_option("--out", copt.out, "write the report to this file");

    auto* st = app.add_subcommand("selftest",
                                  "Run the built-in verification suite");
    unsigned st_degree = 2;
    unsigned long st_seed = 1;
    bool st_corrupt = false;
    st->add_option("--max-degree", st_degree,
                   "graded double-computation bound (default 2; 0 = trivial)");
    st->add_option("--seed", st_seed, "seed for the randomized checks");
    st->add_flag("--corrupt", st_corrupt,
                 "damage one coefficient first; the run must then fail")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(val)) return cmd_validate(val_path);
        if (app.got_subcommand(cmp)) return cmd_compute(copt);
        return cmd_selftest(st_degree, st_seed, st_corrupt);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const BoundError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
