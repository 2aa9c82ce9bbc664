// Command-line front end: construct rings from the DSL, print spectra,
// energies and Ramanujan certificates, export graphs, and run the
// verification sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayring/dsl.hpp"
#include "cayring/identify.hpp"
#include "cayring/ramanujan.hpp"
#include "cayring/spectrum.hpp"
#include "cayring/verify.hpp"

namespace {

using nlohmann::json;
using namespace cayring;

json spectrum_json(const SpectrumMultiset& s) {
    json arr = json::array();
    const auto& e = s.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        arr.push_back({{"lambda", it->first}, {"mult", it->second}});
    return arr;
}

struct ElementArgs {
    std::string ring_spec;
    std::string x_spec;
    bool as_json = false;
    bool check = false;
};

Elem required_nonzero_x(const BuiltRing& built, const std::string& x_spec) {
    const Elem x = parse_element(x_spec, built);
    if (x == built.ring.zero())
        throw Error("x must be a nonzero element of R (the connection set xR* needs x != 0)");
    return x;
}

int cmd_info(const std::string& ring_spec, bool as_json) {
    const BuiltRing built = build_ring(ring_spec);
    const RingTable& R = built.ring;
    const LocalFactorization fact = local_factorization(R);

    json factors = json::array();
    for (const auto& f : fact.factors) {
        json jf;
        jf["order"] = f.ring.order();
        jf["m"] = f.maximal_ideal.size();
        jf["ratio"] = f.ring.order() / f.maximal_ideal.size();
        if (f.ring.order() <= 9) {
            const RingClassLabel label = identify_small_ring(f.ring);
            jf["class"] = label.to_string();
        }
        factors.push_back(jf);
    }

    if (as_json) {
        json out;
        out["ring"] = built.expr.to_string();
        out["order"] = R.order();
        out["unity"] = R.label(*R.unity());
        out["units"] = R.units().size();
        out["factors"] = factors;
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "ring: " << built.expr.to_string() << '\n'
              << "order: " << R.order() << '\n'
              << "unity: " << R.label(*R.unity()) << '\n'
              << "units: " << R.units().size() << '\n'
              << "local factors (sorted by |R_i|/m_i):\n";
    int i = 1;
    for (const auto& jf : factors) {
        std::cout << "  #" << i++ << ": order " << jf["order"] << ", |M| = " << jf["m"]
                  << ", ratio " << jf["ratio"];
        if (jf.contains("class")) std::cout << ", class " << jf["class"].get<std::string>();
        std::cout << '\n';
    }
    return 0;
}

enum class SpectralCommand { Spectrum, Energy, ComplementEnergy };

int cmd_spectral(SpectralCommand kind, const ElementArgs& args) {
    const BuiltRing built = build_ring(args.ring_spec);
    const RingTable& R = built.ring;
    const Elem x = required_nonzero_x(built, args.x_spec);
    const LocalFactorization fact = local_factorization(R);
    const GeneratorContext ctx = build_context(R, x);

    const SpectrumMultiset direct = closed_form_spectrum(R, fact, x);
    SpectrumMultiset shown = direct;
    long long energy = 0;
    if (kind == SpectralCommand::ComplementEnergy) {
        shown = complement_spectrum(direct, R.order(), ctx.xRstar.size());
        energy = complement_energy_closed_form(R, fact, x);
    } else {
        energy = energy_closed_form(R, fact, x);
    }
    if (energy != shown.energy())
        throw InconsistencyError("closed-form energy disagrees with its spectrum");

    bool oracle_agrees = true;
    if (args.check) {
        AdjacencyMatrix graph = cayley_graph(R, ctx.xRstar);
        if (kind == SpectralCommand::ComplementEnergy) graph = complement(graph);
        const SpectrumMultiset oracle = oracle_spectrum(graph);
        oracle_agrees = oracle == shown;
        if (!oracle_agrees)
            throw InconsistencyError("oracle spectrum " + oracle.to_string() +
                                     " disagrees with closed form " + shown.to_string());
    }

    if (args.as_json) {
        json out;
        out["ring"] = built.expr.to_string();
        out["x"] = format_element(built, x);
        out["spectrum"] = spectrum_json(shown);
        out["energy"] = energy;
        if (args.check) out["oracle_agrees"] = oracle_agrees;
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "ring: " << built.expr.to_string() << "  x: " << format_element(built, x) << '\n';
    if (kind == SpectralCommand::Spectrum || kind == SpectralCommand::ComplementEnergy)
        std::cout << (kind == SpectralCommand::Spectrum ? "spectrum: " : "complement spectrum: ")
                  << shown.to_string() << '\n';
    std::cout << (kind == SpectralCommand::ComplementEnergy ? "complement energy: " : "energy: ")
              << energy << '\n';
    if (args.check) std::cout << "oracle: agrees\n";
    return 0;
}

int cmd_ramanujan(const ElementArgs& args, const std::string& method) {
    const BuiltRing built = build_ring(args.ring_spec);
    const RingTable& R = built.ring;
    const Elem x = required_nonzero_x(built, args.x_spec);
    const LocalFactorization fact = local_factorization(R);

    const ReducedInstance reduced = reduce_zero_coordinates(R, fact, x);
    const long long k = reduced.xRstar_size;

    std::optional<bool> spectral, inequality;
    RamanujanCondition condition = RamanujanCondition::None;
    bool have_condition = false;
    std::vector<ProfileEntry> profile = reduced.profile;

    if (method == "all") {
        const RamanujanReport rep = full_report(R, fact, x); // throws on disagreement
        spectral = rep.spectral_verdict;
        inequality = rep.inequality_verdict;
        condition = rep.condition;
        have_condition = true;
        profile = rep.profile;
    } else if (method == "spectral") {
        spectral = spectral_test(closed_form_spectrum(R, fact, x), k);
    } else if (method == "inequality") {
        inequality = inequality_test(reduced.profile, k);
    } else if (method == "conditions") {
        condition = condition_classifier(reduced.profile);
        have_condition = true;
    } else {
        throw Error("unknown method '" + method + "'");
    }

    const bool verdict = spectral ? *spectral
                                  : inequality ? *inequality
                                               : condition != RamanujanCondition::None;

    if (args.as_json) {
        json out;
        out["ring"] = built.expr.to_string();
        out["x"] = format_element(built, x);
        out["k"] = k;
        out["bound_sq"] = 4 * (k - 1);
        out["ramanujan"] = verdict;
        if (spectral) out["spectral"] = *spectral;
        if (inequality) out["inequality"] = *inequality;
        if (have_condition) out["condition"] = to_string(condition);
        json prof = json::array();
        for (const auto& e : profile) {
            json je;
            je["I"] = e.I_size;
            je["M"] = e.M_size;
            je["unit"] = e.unit;
            if (e.klass) je["class"] = e.klass->to_string();
            prof.push_back(je);
        }
        out["profile"] = prof;
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "ring: " << built.expr.to_string() << "  x: " << format_element(built, x) << '\n'
              << "k = |xR*| = " << k << ", squared bound 4(k-1) = " << 4 * (k - 1) << '\n'
              << "ramanujan: " << (verdict ? "yes" : "no") << '\n';
    if (spectral) std::cout << "spectral test: " << (*spectral ? "pass" : "fail") << '\n';
    if (inequality) std::cout << "inequality test: " << (*inequality ? "pass" : "fail") << '\n';
    if (have_condition) std::cout << "condition: " << to_string(condition) << '\n';
    std::cout << "reduced profile:";
    for (const auto& e : profile) {
        std::cout << " (|I|=" << e.I_size << ",|M|=" << e.M_size << ',' << (e.unit ? "unit" : "non-unit");
        if (e.klass) std::cout << ',' << e.klass->to_string();
        std::cout << ')';
    }
    std::cout << '\n';
    return 0;
}

int cmd_export(const ElementArgs& args, const std::string& format, const std::string& outfile) {
    const BuiltRing built = build_ring(args.ring_spec);
    const RingTable& R = built.ring;
    const Elem x = required_nonzero_x(built, args.x_spec);
    const GeneratorContext ctx = build_context(R, x);
    const AdjacencyMatrix graph = cayley_graph(R, ctx.xRstar);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!outfile.empty()) {
        file.open(outfile);
        if (!file) throw Error("cannot open output file " + outfile);
        out = &file;
    }

    if (format == "csv") {
        *out << "source,target\n";
        for (int u = 0; u < graph.size(); ++u)
            for (int v = u + 1; v < graph.size(); ++v)
                if (graph.at(u, v)) *out << u << ',' << v << '\n';
    } else if (format == "dot") {
        *out << "graph cayley {\n";
        for (int u = 0; u < graph.size(); ++u) {
            std::string label = R.label(u);
            std::string escaped;
            for (char c : label) {
                if (c == '"' || c == '\\') escaped.push_back('\\');
                escaped.push_back(c);
            }
            *out << "  n" << u << " [label=\"" << escaped << "\"];\n";
        }
        for (int u = 0; u < graph.size(); ++u)
            for (int v = u + 1; v < graph.size(); ++v)
                if (graph.at(u, v)) *out << "  n" << u << " -- n" << v << ";\n";
        *out << "}\n";
    } else {
        throw Error("unknown export format '" + format + "' (use dot or csv)");
    }
    return 0;
}

json failure_json(const InstanceFailure& f) {
    json out;
    out["ring"] = f.ring;
    out["x"] = f.x;
    out["check"] = f.check;
    out["detail"] = f.detail;
    if (f.order > 0) {
        out["order"] = f.order;
        out["xRstar"] = f.xRstar;
        out["Ix"] = f.Ix;
        out["Mx_per_factor"] = f.Mx_per_factor;
        json spec = json::array();
        for (const auto& [lambda, mult] : f.spectrum)
            spec.push_back({{"lambda", lambda}, {"mult", mult}});
        out["spectrum"] = spec;
        out["energy"] = f.energy;
        out["complement_energy"] = f.complement_energy;
        if (f.ramanujan >= 0) {
            out["ramanujan"] = f.ramanujan == 1;
            out["condition"] = f.condition;
        }
    }
    return out;
}

int cmd_verify(const VerifyOptions& opt, bool verbose) {
    const VerifySummary summary = run_verification(
        opt, verbose ? [](const std::string& spec) { std::cerr << "checked " << spec << '\n'; }
                     : std::function<void(const std::string&)>{});

    std::cout << "rings: " << summary.rings << "  instances: " << summary.instances
              << "  lemma pairs: " << summary.lemma_pairs << '\n'
              << "checks run: " << summary.total_checks() << "  failed: " << summary.total_failed()
              << '\n';
    for (const auto& [name, c] : summary.checks)
        std::cout << "  " << name << ": " << c.run << " run, " << c.failed << " failed\n";

    if (!summary.ok()) {
        std::cout << "failing instances:\n";
        for (const auto& f : summary.failures) std::cout << failure_json(f).dump() << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("CAYRING_MAX_ORDER")) {
        try {
            set_max_ring_order(std::stoi(cap));
        } catch (const std::exception& e) {
            std::cerr << "invalid CAYRING_MAX_ORDER: " << e.what() << '\n';
            return 2;
        }
    }

    CLI::App app{"Cayley graphs Cay(R, xR*) over finite commutative rings: "
                 "spectra, energies, and the Ramanujan property"};
    app.require_subcommand(1);

    ElementArgs args;
    std::string method = "all";
    std::string format = "dot";
    std::string outfile;
    bool verbose = false;
    VerifyOptions vopt;

    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("ring", args.ring_spec, "ring expression, e.g. \"Z4 x GF(9)\"")->required();
    };
    auto add_x = [&](CLI::App* sub) {
        sub->add_option("--x", args.x_spec, "element of R, e.g. \"(2, t+1)\"")->required();
        sub->add_flag("--json", args.as_json, "emit JSON");
    };

    CLI::App* info = app.add_subcommand("info", "ring order, units, and local factorization");
    add_ring(info);
    info->add_flag("--json", args.as_json, "emit JSON");

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum of Cay(R, xR*)");
    add_ring(spectrum);
    add_x(spectrum);
    spectrum->add_flag("--check", args.check, "cross-check against the eigendecomposition oracle");

    CLI::App* energy = app.add_subcommand("energy", "closed-form energy of Cay(R, xR*)");
    add_ring(energy);
    add_x(energy);
    energy->add_flag("--check", args.check, "cross-check against the eigendecomposition oracle");

    CLI::App* cenergy =
        app.add_subcommand("complement-energy", "closed-form energy of the complement graph");
    add_ring(cenergy);
    add_x(cenergy);
    cenergy->add_flag("--check", args.check, "cross-check against the eigendecomposition oracle");

    CLI::App* ram = app.add_subcommand("ramanujan", "certify the Ramanujan property");
    add_ring(ram);
    add_x(ram);
    ram->add_option("--method", method, "spectral|inequality|conditions|all")
        ->check(CLI::IsMember({"spectral", "inequality", "conditions", "all"}));

    CLI::App* exp = app.add_subcommand("export", "export the graph as DOT or CSV");
    add_ring(exp);
    exp->add_option("--x", args.x_spec, "element of R")->required();
    exp->add_option("--format", format, "dot|csv")->check(CLI::IsMember({"dot", "csv"}));
    exp->add_option("-o,--output", outfile, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the verification sweep over the family");
    verify->add_option("--max-order", vopt.max_order, "largest ring order in the family");
    verify->add_option("--oracle-cap", vopt.oracle_cap, "eigendecomposition bound for spectra");
    verify->add_option("--complement-oracle-cap", vopt.complement_oracle_cap,
                       "eigendecomposition bound for complements");
    verify->add_option("--seed", vopt.seed, "sampling seed for large rings");
    verify->add_option("--jobs", vopt.jobs, "worker threads (0 = hardware concurrency)");
    verify->add_flag("--verbose", verbose, "log each checked ring to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(args.ring_spec, args.as_json);
        if (spectrum->parsed()) return cmd_spectral(SpectralCommand::Spectrum, args);
        if (energy->parsed()) return cmd_spectral(SpectralCommand::Energy, args);
        if (cenergy->parsed()) return cmd_spectral(SpectralCommand::ComplementEnergy, args);
        if (ram->parsed()) return cmd_ramanujan(args, method);
        if (exp->parsed()) return cmd_export(args, format, outfile);
        if (verify->parsed()) return cmd_verify(vopt, verbose);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
