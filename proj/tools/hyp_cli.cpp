// Command-line front end: every library operation behind a scriptable,
// deterministic interface.
//
// Exit codes: 0 success, 1 validation/usage error, 2 resource bound
// exceeded, 3 verification sweep found a theorem/oracle disagreement.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyp/chains.hpp"
#include "hyp/errors.hpp"
#include "hyp/isomorphism.hpp"
#include "hyp/lattice.hpp"
#include "hyp/quotient.hpp"
#include "hyp/segre.hpp"

namespace {

struct Options {
    std::string alpha;
    std::string beta;
    std::string tuple;
    std::string format = "text";
    std::string output;
    int n_max = 12;
    long long max_nodes = 1'000'000;
    long long oracle_max_nodes = 20'000;
};

hyp::SegreChar parse_alpha(const std::string& text, const char* flag) {
    hyp::ReduceResult res = hyp::parse_segre(text);
    if (res.lossy) {
        std::cerr << "warning: " << flag << " " << text
                  << " is not reduced; using " << hyp::to_string(res.segre)
                  << " (the dimension changes)\n";
    }
    return res.segre;
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw hyp::validation_error("cannot open output file: " + opt.output);
    }
    out << payload;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string lattice_dot(const hyp::Hyperlattice& L) {
    std::ostringstream out;
    out << "digraph hyperlattice {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < L.node_count(); ++i) {
        out << "  n" << i << " [label=\"" << hyp::to_string(L.node(i)) << "\"];\n";
    }
    std::map<int, std::vector<int>> levels;
    for (int i = 0; i < L.node_count(); ++i) levels[hyp::weight(L.node(i))].push_back(i);
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        out << "  { rank=same;";
        for (int i : it->second) out << " n" << i << ";";
        out << " }\n";
    }
    for (int i = 0; i < L.node_count(); ++i) {
        for (int s : L.sons_of(i)) out << "  n" << i << " -> n" << s << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string factor_dot(const hyp::Hyperlattice& L, const hyp::FactorLattice& F) {
    std::ostringstream out;
    out << "digraph factor {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (int c = 0; c < F.class_count(); ++c) {
        out << "  c" << c << " [label=\"[" << hyp::to_string(L.node(F.representative(c)))
            << "]\"];\n";
    }
    for (const auto& [p, s] : F.covers) {
        out << "  c" << p << " -> c" << s << ";\n";
    }
    out << "}\n";
    return out.str();
}

[[noreturn]] void reject_format(const std::string& format, const char* sub) {
    throw hyp::validation_error("format \"" + format + "\" is not supported by " + sub);
}

int run_enumerate(const Options& opt, bool as_hasse) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::Hyperlattice L = hyp::Hyperlattice::enumerate(alpha, opt.max_nodes);
    if (opt.format == "json") {
        emit(opt, dump(L.to_json()));
    } else if (opt.format == "dot") {
        emit(opt, lattice_dot(L));
    } else if (as_hasse) {
        std::ostringstream out;
        for (int i = 0; i < L.node_count(); ++i) {
            for (int s : L.sons_of(i)) {
                out << hyp::to_string(L.node(i)) << " -> " << hyp::to_string(L.node(s))
                    << "\n";
            }
        }
        emit(opt, out.str());
    } else {
        std::ostringstream out;
        for (const hyp::Hypertuple& u : L.nodes()) out << hyp::to_string(u) << "\n";
        emit(opt, out.str());
    }
    return 0;
}

int run_sons(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::Hypertuple u = hyp::parse_tuple(opt.tuple);
    auto ss = hyp::sons(alpha, u);
    if (opt.format == "json") {
        nlohmann::json j;
        j["alpha"] = alpha.parts();
        j["u"] = u;
        j["sons"] = ss;
        emit(opt, dump(j));
    } else if (opt.format == "text") {
        std::ostringstream out;
        for (const hyp::Hypertuple& s : ss) out << hyp::to_string(s) << "\n";
        emit(opt, out.str());
    } else {
        reject_format(opt.format, "sons");
    }
    return 0;
}

int run_special_chains(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::Hyperlattice L = hyp::Hyperlattice::enumerate(alpha, opt.max_nodes);
    auto chains = hyp::special_chains(L);
    if (opt.format == "json") {
        nlohmann::json j;
        j["alpha"] = alpha.parts();
        j["special_chains"] = hyp::to_json(chains);
        emit(opt, dump(j));
    } else if (opt.format == "text") {
        std::ostringstream out;
        for (const hyp::SpecialChain& sc : chains) {
            out << hyp::to_string(sc.kind) << ": " << hyp::to_string(sc.chain) << "\n";
        }
        emit(opt, out.str());
    } else {
        reject_format(opt.format, "special-chains");
    }
    return 0;
}

int run_riding_chains(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::Hyperlattice L = hyp::Hyperlattice::enumerate(alpha, opt.max_nodes);
    auto chains = hyp::riding_chains(L);
    if (opt.format == "json") {
        nlohmann::json j;
        j["alpha"] = alpha.parts();
        j["riding_chains"] = hyp::to_json(chains);
        emit(opt, dump(j));
    } else if (opt.format == "text") {
        std::ostringstream out;
        for (const hyp::RidingChain& rc : chains) {
            out << hyp::to_string(rc.kind) << " on " << hyp::to_string(rc.attached_to)
                << ": " << hyp::to_string(rc.chain) << "\n";
        }
        emit(opt, out.str());
    } else {
        reject_format(opt.format, "riding-chains");
    }
    return 0;
}

int run_quotient(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    if (alpha.r() < 2) {
        throw hyp::validation_error("no congruence applies to V(" +
                                    hyp::to_string(alpha) + "): r must be >= 2");
    }
    const int gap = alpha.part(0) - alpha.part(1);
    hyp::CongruenceKind kind;
    if (gap > 1) {
        kind = hyp::CongruenceKind::SIM2;
    } else if (alpha.r() >= 3) {
        kind = hyp::CongruenceKind::SIM3;
    } else {
        throw hyp::validation_error("no congruence applies to V(" +
                                    hyp::to_string(alpha) +
                                    "): a1-a2 = 1 requires r >= 3");
    }
    hyp::Congruence c = hyp::Congruence::make(kind, alpha);
    hyp::Hyperlattice L = hyp::Hyperlattice::enumerate(alpha, opt.max_nodes);
    hyp::FactorLattice F = hyp::factor(L, c);
    if (opt.format == "json") {
        emit(opt, dump(hyp::to_json(L, F)));
        return 0;
    }
    if (opt.format == "dot") {
        emit(opt, factor_dot(L, F));
        return 0;
    }
    hyp::QuotientIsoReport report = hyp::quotient_iso(L, c);
    std::ostringstream out;
    out << "congruence " << hyp::to_string(kind) << " on V(" << hyp::to_string(alpha)
        << ")\n";
    out << "classes: " << report.class_count << " of size " << report.class_size
        << " (formula: " << report.formula_class_count << " of size "
        << report.formula_class_size << ")"
        << (report.counts_match_formulas ? "" : "  MISMATCH, enumerated values authoritative")
        << "\n";
    out << "quotient isomorphic to V(" << hyp::to_string(report.tail) << "): verified\n";
    for (int cls = 0; cls < F.class_count(); ++cls) {
        out << "[" << hyp::to_string(L.node(F.representative(cls))) << "]:";
        for (int i : F.classes[static_cast<size_t>(cls)]) {
            out << " " << hyp::to_string(L.node(i));
        }
        out << "\n";
    }
    emit(opt, out.str());
    return 0;
}

int run_iso(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::SegreChar beta = parse_alpha(opt.beta, "--beta");
    hyp::IsoVerdict verdict = hyp::decide_iso(alpha, beta);
    if (opt.format == "json") {
        nlohmann::json j;
        j["alpha"] = alpha.parts();
        j["beta"] = beta.parts();
        j["isomorphic"] = verdict.isomorphic;
        j["rule"] = hyp::to_string(verdict.rule);
        emit(opt, dump(j));
    } else if (opt.format == "text") {
        if (verdict.isomorphic) {
            emit(opt, "isomorphic (rule: " + hyp::to_string(verdict.rule) + ")\n");
        } else {
            emit(opt, "not isomorphic\n");
        }
    } else {
        reject_format(opt.format, "iso");
    }
    return 0;
}

int run_witness(const Options& opt) {
    hyp::SegreChar alpha = parse_alpha(opt.alpha, "--alpha");
    hyp::SegreChar beta = parse_alpha(opt.beta, "--beta");
    auto witness = hyp::build_witness(alpha, beta, opt.oracle_max_nodes);
    if (opt.format == "json") {
        nlohmann::json j;
        j["alpha"] = alpha.parts();
        j["beta"] = beta.parts();
        if (witness) {
            hyp::Hyperlattice A = hyp::Hyperlattice::enumerate(alpha);
            hyp::Hyperlattice B = hyp::Hyperlattice::enumerate(beta);
            auto arr = nlohmann::json::array();
            for (int i = 0; i < A.node_count(); ++i) {
                arr.push_back({A.node(i), B.node((*witness)[static_cast<size_t>(i)])});
            }
            j["witness"] = std::move(arr);
        } else {
            j["witness"] = nullptr;
        }
        emit(opt, dump(j));
    } else if (opt.format == "text") {
        if (!witness) {
            emit(opt, "no witness (not isomorphic)\n");
        } else {
            hyp::Hyperlattice A = hyp::Hyperlattice::enumerate(alpha);
            hyp::Hyperlattice B = hyp::Hyperlattice::enumerate(beta);
            std::ostringstream out;
            for (int i = 0; i < A.node_count(); ++i) {
                out << hyp::to_string(A.node(i)) << " -> "
                    << hyp::to_string(B.node((*witness)[static_cast<size_t>(i)])) << "\n";
            }
            emit(opt, out.str());
        }
    } else {
        reject_format(opt.format, "witness");
    }
    return 0;
}

int run_verify(const Options& opt) {
    hyp::VerifyReport report = hyp::verify_range(opt.n_max, opt.oracle_max_nodes);
    if (opt.format == "json") {
        emit(opt, dump(hyp::to_json(report)));
    } else if (opt.format == "text") {
        emit(opt, hyp::summary(report));
    } else {
        reject_format(opt.format, "verify");
    }
    if (!report.all_agree()) {
        std::cerr << "verification found a disagreement\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypertuple lattice toolkit: enumeration, chains, quotients, isomorphism"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--output", opt.output, "Write output to this path");
    };
    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", opt.alpha, "Segre characteristic, e.g. 5,3,1")
            ->required();
    };
    auto add_max_nodes = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", opt.max_nodes, "Enumeration safety bound");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "List every element of V(alpha)");
    add_alpha(enumerate); add_format(enumerate); add_max_nodes(enumerate);

    CLI::App* sons = app.add_subcommand("sons", "List the covers of a tuple");
    add_alpha(sons); add_format(sons);
    sons->add_option("tuple", opt.tuple, "Tuple, e.g. 3,2,1")->required();

    CLI::App* special = app.add_subcommand("special-chains", "Maximal unique-son chains ending at zero");
    add_alpha(special); add_format(special); add_max_nodes(special);

    CLI::App* riding = app.add_subcommand("riding-chains", "Chains riding alongside the special chains");
    add_alpha(riding); add_format(riding); add_max_nodes(riding);

    CLI::App* quotient = app.add_subcommand("quotient", "Factor lattice of the applicable congruence");
    add_alpha(quotient); add_format(quotient); add_max_nodes(quotient);

    CLI::App* iso = app.add_subcommand("iso", "Classify two lattices as isomorphic or not");
    add_alpha(iso); add_format(iso);
    iso->add_option("--beta", opt.beta, "Second Segre characteristic")->required();

    CLI::App* witness = app.add_subcommand("witness", "Explicit isomorphism when one exists");
    add_alpha(witness); add_format(witness);
    witness->add_option("--beta", opt.beta, "Second Segre characteristic")->required();
    witness->add_option("--max-nodes", opt.oracle_max_nodes, "Search safety bound");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check the classification against the search oracle");
    add_format(verify);
    verify->add_option("--n-max", opt.n_max, "Largest dimension to sweep");
    verify->add_option("--max-nodes", opt.oracle_max_nodes, "Search safety bound");

    CLI::App* hasse = app.add_subcommand("hasse", "Cover diagram of V(alpha)");
    add_alpha(hasse); add_format(hasse); add_max_nodes(hasse);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(opt, false);
        if (sons->parsed()) return run_sons(opt);
        if (special->parsed()) return run_special_chains(opt);
        if (riding->parsed()) return run_riding_chains(opt);
        if (quotient->parsed()) return run_quotient(opt);
        if (iso->parsed()) return run_iso(opt);
        if (witness->parsed()) return run_witness(opt);
        if (verify->parsed()) return run_verify(opt);
        if (hasse->parsed()) return run_enumerate(opt, true);
    } catch (const hyp::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hyp::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
