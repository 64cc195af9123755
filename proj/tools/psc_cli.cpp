// Command-line front end: relation emission, pseudocharacter verification,
// conjugacy comparison, and the even special-orthogonal counterexample
// generator. Exit codes: 0 success/pass, 1 verification or comparison
// negative, 2 malformed input, 3 element-conjugate only.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "psc/conjugacy.hpp"
#include "psc/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitElementOnly = 3;

psc::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw psc::ParseError("cannot open '" + path + "'");
    psc::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw psc::ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string tuple_with_labels(const psc::FiniteGroup& grp, const std::vector<int>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += grp.label(tuple[i]);
    }
    out += ")";
    return out;
}

int run_emit_relations(const std::string& family, int n, int j, bool j_given) {
    using namespace psc;
    if (family == "gl") {
        std::cout << "gl relation, n=" << n << ", arity " << n + 1 << ":\n";
        std::cout << format_polynomial(gl_relation(n)) << "\n";
        return kExitPass;
    }
    const int jmax = (n + 1) / 2;
    std::vector<int> js;
    if (j_given) {
        js.push_back(j);
    } else {
        for (int jj = 0; jj <= jmax; ++jj) js.push_back(jj);
    }
    for (int jj : js) {
        if (family == "o") {
            std::cout << "orthogonal relation F, n=" << n << ", j=" << jj << ":\n";
            std::cout << format_polynomial(f_relation(n, jj)) << "\n";
        } else {
            std::cout << "general orthogonal relation G, n=" << n << ", j=" << jj << ":\n";
            std::cout << format_polynomial(g_relation(n, jj)) << "\n";
        }
    }
    return kExitPass;
}

int run_verify(const std::string& path, const std::string& family, int dim_override,
               const std::string& rep_path, const psc::VerifyOptions& opts, int max_order) {
    using namespace psc;
    const Json doc = load_json(path);
    const std::string kind = document_kind(doc);
    PseudocharData data;
    std::optional<Representation> model;
    if (kind == "pseudocharacter") {
        data = pseudocharacter_from_json(doc);
    } else if (kind == "representation") {
        Representation rep = representation_from_json(doc, max_order);
        model = rep;
        data = trace_function(rep);
        if (data.dim % 2 == 0 && family == "so") data.P = pl_table(rep);
    } else {
        throw ParseError("'" + path + "' holds a " + kind + ", not verifiable data");
    }
    if (!rep_path.empty()) model = representation_from_json(load_json(rep_path), max_order);
    if (dim_override > 0) data.dim = dim_override;

    VerificationReport report;
    if (family == "gl") {
        report = verify_gl(data, opts);
    } else if (family == "o") {
        if (data.l) {
            // derived similitude characters that are identically 1 drop to O mode
            bool ones = std::all_of(data.l->begin(), data.l->end(),
                                    [](const Rational& q) { return q == 1; });
            if (!ones) throw ParseError("O verification needs l identically 1");
            data.l.reset();
        }
        report = verify_o(data, opts);
    } else if (family == "go") {
        report = verify_go(data, opts);
    } else if (family == "gsp") {
        report = verify_gsp(data, opts);
    } else if (family == "sp") {
        if (data.l) {
            bool ones = std::all_of(data.l->begin(), data.l->end(),
                                    [](const Rational& q) { return q == 1; });
            if (!ones) throw ParseError("Sp verification needs l identically 1");
            data.l.reset();
        }
        report = verify_sp(data, opts);
    } else if (family == "so") {
        if (data.l) {
            bool ones = std::all_of(data.l->begin(), data.l->end(),
                                    [](const Rational& q) { return q == 1; });
            if (!ones) throw ParseError("SO verification needs l identically 1");
            data.l.reset();
        }
        report = data.dim % 2 == 1 ? verify_so_odd(data, opts)
                                   : verify_so_even(data, model ? &*model : nullptr, opts);
    } else {
        throw ParseError("unknown family '" + family + "'");
    }
    std::cout << report.to_text();
    return report.pass() ? kExitPass : kExitFail;
}

psc::RepFamily parse_family(const std::string& family) {
    using psc::RepFamily;
    if (family == "gl") return RepFamily::GL;
    if (family == "o") return RepFamily::O;
    if (family == "go") return RepFamily::GO;
    if (family == "so") return RepFamily::SO;
    if (family == "sp") return RepFamily::Sp;
    if (family == "gsp") return RepFamily::GSp;
    throw psc::ParseError("unknown family '" + family + "'");
}

int run_conjugacy(const std::string& path1, const std::string& path2, const std::string& family,
                  const psc::ConjugacyOptions& opts, int max_order) {
    using namespace psc;
    const Representation r1 = representation_from_json(load_json(path1), max_order);
    const Representation r2 = representation_from_json(load_json(path2), max_order);
    const ConjugacyVerdict v = compare_representations(r1, r2, parse_family(family), opts);

    auto print_detail = [&](const DistinguishingInvariant& d) {
        std::cout << "  distinguishing " << d.kind << " at "
                  << tuple_with_labels(r1.group, d.tuple) << ": " << to_string(d.left) << " vs "
                  << to_string(d.right) << "\n";
    };
    std::cout << "element-conjugate: " << (v.element_conjugate ? "yes" : "no") << "\n";
    if (!v.element_conjugate && v.element_witness)
        std::cout << "  witness element: " << r1.group.label(*v.element_witness) << "\n";
    if (v.element_detail) print_detail(*v.element_detail);
    std::cout << "globally-conjugate: "
              << (v.globally_conjugate
                      ? (v.global_sampled ? "no distinction found (sampled)" : "yes")
                      : "no")
              << "\n";
    if (v.global_detail) print_detail(*v.global_detail);

    if (v.globally_conjugate) return kExitPass;
    if (v.element_conjugate) return kExitElementOnly;
    return kExitFail;
}

int run_counterexample(int n, const std::string& out_dir, const psc::ConjugacyOptions& opts) {
    using namespace psc;
    if (n < 3) {
        std::cerr << "error: the construction needs n >= 3\n";
        return kExitMalformed;
    }
    const Representation rho = build_rho_2n(n);
    const Json group_spec{{"kind", "product"},
                          {"factors", Json::array({Json{{"kind", "cyclic"}, {"m", 4}},
                                                   Json{{"kind", "cyclic"}, {"m", 4}}})}};
    const std::vector<int> gen_elems{4, 1};
    const std::vector<Matrix> gen_mats{rho.images[4], rho.images[1]};
    const Json doc = representation_to_json(group_spec, gen_elems, gen_mats);
    const std::filesystem::path out_path =
        std::filesystem::path(out_dir) / ("rho_" + std::to_string(2 * n) + ".json");
    {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitMalformed;
        }
        out << doc.dump(2) << "\n";
    }
    const CounterexampleCriterion crit = so_counterexample_criterion(rho, opts);
    std::cout << "representation written to " << out_path.string() << "\n";
    std::cout << "dimension: " << rho.dim << ", group order: " << rho.group.order() << "\n";
    if (crit.holds) {
        std::cout << "criterion holds: witness tuple "
                  << tuple_with_labels(rho.group, *crit.witness_tuple) << ", pl = "
                  << to_string(crit.witness_value) << "\n";
        return kExitPass;
    }
    if (crit.blocking_element) {
        std::cout << "criterion fails: blocking element "
                  << rho.group.label(*crit.blocking_element) << "\n";
    } else {
        std::cout << "criterion fails: no nonzero pl tuple found"
                  << (crit.search_exhausted ? " (search exhausted)" : " (budget truncated)")
                  << "\n";
    }
    return kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pseudocharacter toolkit for classical groups"};
    app.require_subcommand(1);

    std::string family;
    int n = 0, j = -1;
    long long budget = 2'000'000;
    std::uint64_t seed = 1;
    int max_order = 5000;
    int dim_override = 0;
    std::string path1, path2, rep_path, out_dir = ".";

    auto* emit = app.add_subcommand("emit-relations", "print relation polynomials");
    emit->add_option("--family", family, "gl | o | go")->required();
    emit->add_option("--n", n, "dimension")->required();
    emit->add_option("--j", j, "single j (default: all admissible)");

    auto* verify = app.add_subcommand("verify", "verify pseudocharacter axioms");
    verify->add_option("file", path1, "pseudocharacter or representation document")->required();
    verify->add_option("--family", family, "gl | o | go | sp | gsp | so")->required();
    verify->add_option("--dim", dim_override, "override the declared dimension");
    verify->add_option("--rep", rep_path, "attach a representation model (even SO)");
    verify->add_option("--budget", budget, "relation evaluation budget");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--max-order", max_order, "matrix closure ceiling");

    auto* conj = app.add_subcommand("conjugacy-compare", "element vs global conjugacy");
    conj->add_option("rep1", path1, "first representation document")->required();
    conj->add_option("rep2", path2, "second representation document")->required();
    conj->add_option("--family", family, "gl | o | go | sp | gsp | so")->required();
    conj->add_option("--budget", budget, "tuple scan budget");
    conj->add_option("--seed", seed, "seed (recorded in reports)");
    conj->add_option("--max-order", max_order, "matrix closure ceiling");

    auto* cx = app.add_subcommand("so-counterexample", "emit the rho_2n family");
    cx->add_option("--n", n, "number of 2x2 blocks (>= 3)")->required();
    cx->add_option("--out", out_dir, "output directory");
    cx->add_option("--budget", budget, "tuple scan budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (emit->parsed()) {
            if (family != "gl" && family != "o" && family != "go") {
                std::cerr << "error: emit-relations family must be gl, o or go\n";
                return kExitMalformed;
            }
            return run_emit_relations(family, n, j, emit->count("--j") > 0);
        }
        if (verify->parsed()) {
            psc::VerifyOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            return run_verify(path1, family, dim_override, rep_path, opts, max_order);
        }
        if (conj->parsed()) {
            psc::ConjugacyOptions opts{budget, seed};
            return run_conjugacy(path1, path2, family, opts, max_order);
        }
        if (cx->parsed()) {
            psc::ConjugacyOptions opts{budget, seed};
            return run_counterexample(n, out_dir, opts);
        }
    } catch (const psc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const psc::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
