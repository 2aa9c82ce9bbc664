#include "cayring/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "cayring/ramanujan.hpp"
#include "cayring/spectrum.hpp"

namespace cayring {

long long VerifySummary::total_checks() const {
    long long t = 0;
    for (const auto& [name, c] : checks) t += c.run;
    return t;
}

long long VerifySummary::total_failed() const {
    long long t = 0;
    for (const auto& [name, c] : checks) t += c.failed;
    return t;
}

std::vector<std::string> family_ring_specs(const VerifyOptions& opt) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto push = [&](const std::string& spec) {
        if (seen.insert(spec).second) out.push_back(spec);
    };

    for (int n = 2; n <= opt.zn_max && n <= opt.max_order; ++n)
        push("Z" + std::to_string(n));

    static const std::pair<const char*, int> bases[] = {
        {"Z2", 2},    {"Z3", 3},    {"Z4", 4},  {"Z8", 8},  {"Z9", 9},  {"GF(4)", 4},
        {"GF(9)", 9}, {"A4", 4},    {"G4", 4},  {"A9", 9},  {"G9", 9}};
    const int nb = static_cast<int>(std::size(bases));
    const int cap = std::min(512, opt.max_order);

    for (int i = 0; i < nb; ++i) {
        if (bases[i].second <= cap) push(bases[i].first);
        for (int j = i; j < nb; ++j) {
            const long long o2 = static_cast<long long>(bases[i].second) * bases[j].second;
            if (o2 > cap) continue;
            push(std::string(bases[i].first) + " x " + bases[j].first);
            for (int k = j; k < nb; ++k) {
                const long long o3 = o2 * bases[k].second;
                if (o3 > cap) continue;
                push(std::string(bases[i].first) + " x " + bases[j].first + " x " + bases[k].first);
            }
        }
    }
    return out;
}

namespace {

struct RingResult {
    long long instances = 0;
    long long lemma_pairs = 0;
    std::map<std::string, CheckCounter> checks;
    std::vector<InstanceFailure> failures;
};

std::uint64_t fnv1a_str(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<Elem> choose_xs(int n, const VerifyOptions& opt, const std::string& spec) {
    std::vector<Elem> all;
    all.reserve(static_cast<std::size_t>(n - 1));
    for (Elem x = 1; x < n; ++x) all.push_back(x);
    if (n <= opt.exhaustive_x_max || static_cast<int>(all.size()) <= opt.sample_count) return all;

    std::mt19937_64 rng(opt.seed ^ fnv1a_str(spec));
    for (int i = 0; i < opt.sample_count; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + rng() % (all.size() - static_cast<std::size_t>(i));
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    all.resize(static_cast<std::size_t>(opt.sample_count));
    std::sort(all.begin(), all.end());
    return all;
}

// Accumulates check outcomes for one (ring, x) scope.
class Recorder {
public:
    Recorder(RingResult& result, std::string ring) : result_(result), ring_(std::move(ring)) {}

    void set_x(std::string x) {
        x_ = std::move(x);
        x_failures_start_ = result_.failures.size();
    }

    bool check(const std::string& name, bool ok, const std::string& detail = "") {
        auto& c = result_.checks[name];
        ++c.run;
        if (!ok) {
            ++c.failed;
            InstanceFailure f;
            f.ring = ring_;
            f.x = x_;
            f.check = name;
            f.detail = detail;
            result_.failures.push_back(std::move(f));
        }
        return ok;
    }

    // Failures recorded since the last set_x; used to attach instance data.
    std::vector<InstanceFailure*> current_failures() {
        std::vector<InstanceFailure*> out;
        for (std::size_t i = x_failures_start_; i < result_.failures.size(); ++i)
            out.push_back(&result_.failures[i]);
        return out;
    }

private:
    RingResult& result_;
    std::string ring_;
    std::string x_;
    std::size_t x_failures_start_ = 0;
};

void lemma_pair_checks(Recorder& rec, const RingTable& local_ring, Elem xi,
                       const VerifyOptions& opt) {
    const GeneratorContext ctx = build_context(local_ring, xi);

    const LemmaReport suite = lemma_suite(local_ring, ctx);
    rec.check("lemma_suite", suite.all_passed(), suite.all_passed() ? "" : suite.summary());

    rec.check("ix_partition",
              ctx.Ix.size() == ctx.Mx.size() + ctx.xRstar.size());

    const MultipartiteReport mp = multipartite_check(local_ring, ctx);
    rec.check("multipartite", mp.passed(), mp.passed() ? "" : mp.to_string());

    // Spectrum of the induced component graph Cay(I_x, xR*).
    const long long I = ctx.Ix.size(), M = ctx.Mx.size(), k = ctx.xRstar.size();
    SpectrumMultiset expected;
    expected.add(k, 1);
    expected.add(-M, I / M - 1);
    expected.add(0, (I / M) * (M - 1));

    AdjacencyMatrix comp_graph(static_cast<int>(I));
    const auto& items = ctx.Ix.items();
    for (std::size_t a = 0; a < items.size(); ++a)
        for (std::size_t b = a + 1; b < items.size(); ++b)
            if (ctx.xRstar.contains(local_ring.sub(items[a], items[b])))
                comp_graph.set_edge(static_cast<int>(a), static_cast<int>(b));
    bool ok = true;
    std::string detail;
    if (opt.with_oracle) {
        const SpectrumMultiset got = oracle_spectrum(comp_graph);
        ok = got == expected;
        if (!ok) detail = "oracle " + got.to_string() + " vs " + expected.to_string();
    }
    rec.check("component_spectrum", ok, detail);
}

// Oracle results per connection set: sampled generators in one associate
// class share xR* and therefore the exact same adjacency matrix.
struct OracleCache {
    std::map<std::vector<Elem>, SpectrumMultiset> direct;
    std::map<std::vector<Elem>, SpectrumMultiset> complement_side;
};

void instance_checks(Recorder& rec, const BuiltRing& built, const LocalFactorization& fact,
                     Elem x, const VerifyOptions& opt, bool first_instance, OracleCache& cache) {
    const RingTable& R = built.ring;
    const long long n = R.order();
    const GeneratorContext ctx = build_context(R, x);
    const auto profiles = coordinate_profiles(R, fact, x);

    // xR* is the coordinatewise product of the x_i R_i^* sets, and I_x the
    // product of the coordinate ideals.
    {
        std::vector<ElementSubset> coord_sets;
        long long expected_size = 1, expected_I = 1;
        for (int i = 0; i < fact.size(); ++i) {
            const RingTable& fr = fact.factors[static_cast<std::size_t>(i)].ring;
            const Elem xi = fact.coordinate(x, i);
            if (xi == fr.zero()) {
                coord_sets.push_back(ElementSubset(fr.order(), {fr.zero()}));
            } else {
                GeneratorContext c = build_context(fr, xi);
                expected_size *= c.xRstar.size();
                expected_I *= c.Ix.size();
                coord_sets.push_back(std::move(c.xRstar));
            }
        }
        bool set_ok = true;
        for (Elem u = 0; u < n && set_ok; ++u) {
            bool member = true;
            for (int i = 0; i < fact.size(); ++i)
                if (!coord_sets[static_cast<std::size_t>(i)].contains(fact.coordinate(u, i))) {
                    member = false;
                    break;
                }
            if (member != ctx.xRstar.contains(u)) set_ok = false;
        }
        rec.check("xrstar_product",
                  set_ok && expected_size == ctx.xRstar.size() && expected_I == ctx.Ix.size());
    }

    const SpectrumMultiset closed = closed_form_spectrum(R, fact, x);
    const long long k = ctx.xRstar.size();
    rec.check("trace_identities",
              closed.total_multiplicity() == n && closed.trace() == 0 &&
                  closed.second_moment() == n * k,
              closed.to_string());

    const AdjacencyMatrix graph = cayley_graph(R, ctx.xRstar);
    rec.check("regularity",
              graph.loop_count() == 0 && regular_degree(graph) == std::optional<long long>(k));
    {
        // In a k-regular graph the multiplicity of k counts the components.
        // The coset count |R|/|I_x| describes them only over a local ring.
        const long long comps = static_cast<long long>(components(graph).size());
        bool ok = comps == closed.multiplicity(k);
        if (fact.size() == 1) ok = ok && comps * ctx.Ix.size() == n;
        rec.check("components", ok);
    }

    const bool use_oracle = opt.with_oracle && n <= opt.oracle_cap;
    SpectrumMultiset oracle;
    if (use_oracle) {
        const auto cached = cache.direct.find(ctx.xRstar.items());
        if (cached != cache.direct.end()) {
            oracle = cached->second;
        } else {
            oracle = oracle_spectrum(graph);
            cache.direct.emplace(ctx.xRstar.items(), oracle);
        }
        rec.check("spectrum_oracle", oracle == closed,
                  "oracle " + oracle.to_string() + " vs closed " + closed.to_string());
    }

    // Kronecker product of the factor graphs, pulled back through the
    // coordinate embedding, is the Cayley graph itself.
    if (n <= opt.oracle_cap) {
        std::vector<AdjacencyMatrix> fgraphs;
        for (int i = 0; i < fact.size(); ++i) {
            const RingTable& fr = fact.factors[static_cast<std::size_t>(i)].ring;
            const Elem xi = fact.coordinate(x, i);
            std::vector<Elem> orbit;
            if (xi == fr.zero()) orbit.push_back(fr.zero());
            else for (Elem u : fr.units()) orbit.push_back(fr.mul(xi, u));
            fgraphs.push_back(cayley_graph(fr, ElementSubset(fr.order(), std::move(orbit))));
        }
        AdjacencyMatrix tensor = fgraphs.front();
        for (std::size_t i = 1; i < fgraphs.size(); ++i) tensor = tensor_product(tensor, fgraphs[i]);

        std::vector<int> mixed(static_cast<std::size_t>(n));
        for (Elem u = 0; u < n; ++u) {
            int idx = 0;
            for (int i = 0; i < fact.size(); ++i)
                idx = idx * fact.orders[static_cast<std::size_t>(i)] + fact.coordinate(u, i);
            mixed[static_cast<std::size_t>(u)] = idx;
        }
        bool iso = true;
        for (Elem u = 0; u < n && iso; ++u)
            for (Elem v = 0; v < n; ++v)
                if (graph.at(u, v) != tensor.at(mixed[static_cast<std::size_t>(u)],
                                                mixed[static_cast<std::size_t>(v)])) {
                    iso = false;
                    break;
                }
        rec.check("tensor_iso", iso);

        // Energy multiplies across a tensor product; check one factor pair.
        if (first_instance && fgraphs.size() >= 2 && opt.with_oracle) {
            const AdjacencyMatrix& ga = fgraphs[0];
            const AdjacencyMatrix& gb = fgraphs[1];
            if (static_cast<long long>(ga.size()) * gb.size() <= 128) {
                const long long ea = oracle_spectrum(ga).energy();
                const long long eb = oracle_spectrum(gb).energy();
                const long long eab = oracle_spectrum(tensor_product(ga, gb)).energy();
                rec.check("tensor_energy", eab == ea * eb);
            }
        }
    }

    const long long energy = energy_closed_form(R, fact, x);
    {
        bool ok = energy == closed.energy();
        if (use_oracle) ok = ok && energy == oracle.energy();
        rec.check("energy", ok, "closed form " + std::to_string(energy));
    }

    const SpectrumMultiset closed_bar = complement_spectrum(closed, n, k);
    const long long energy_bar = complement_energy_closed_form(R, fact, x);
    rec.check("complement_energy", energy_bar == closed_bar.energy(),
              "closed form " + std::to_string(energy_bar) + " vs spectrum " +
                  std::to_string(closed_bar.energy()));
    if (opt.with_oracle && n <= opt.complement_oracle_cap) {
        SpectrumMultiset oracle_bar;
        const auto cached = cache.complement_side.find(ctx.xRstar.items());
        if (cached != cache.complement_side.end()) {
            oracle_bar = cached->second;
        } else {
            oracle_bar = oracle_spectrum(complement(graph));
            cache.complement_side.emplace(ctx.xRstar.items(), oracle_bar);
        }
        rec.check("complement_oracle",
                  oracle_bar == closed_bar && oracle_bar.energy() == energy_bar,
                  "oracle " + oracle_bar.to_string() + " vs closed " + closed_bar.to_string());
    }

    int verdict = -1;
    std::string condition;
    try {
        const RamanujanReport rep = full_report(R, fact, x);
        verdict = rep.ramanujan() ? 1 : 0;
        condition = to_string(rep.condition);
        rec.check("ramanujan_agreement", true);

        if (rep.profile.size() == 1)
            rec.check("ramanujan_corollary",
                      local_corollary_test(rep.profile[0].I_size, rep.profile[0].M_size) ==
                          rep.ramanujan());

        int big = 0;
        for (const auto& e : rep.profile)
            if (e.ratio() > 2) ++big;
        if (big >= 4) rec.check("ramanujan_impossibility", !rep.ramanujan());
    } catch (const InconsistencyError& e) {
        rec.check("ramanujan_agreement", false, e.what());
    }

    // Fill the instance record on whatever failures this x produced.
    for (InstanceFailure* f : rec.current_failures()) {
        f->order = n;
        f->xRstar = k;
        f->Ix = ctx.Ix.size();
        for (const auto& p : profiles) f->Mx_per_factor.push_back(p.M_size);
        const auto& entries = closed.entries();
        for (auto it = entries.rbegin(); it != entries.rend(); ++it)
            f->spectrum.emplace_back(it->first, it->second);
        f->energy = energy;
        f->complement_energy = energy_bar;
        f->ramanujan = verdict;
        f->condition = condition;
    }
}

RingResult check_ring(const std::string& spec, const VerifyOptions& opt) {
    RingResult result;
    Recorder rec(result, spec);
    try {
        const BuiltRing built = build_ring(spec);
        const RingTable& R = built.ring;

        // Canonical rendering and every element label must round-trip.
        {
            bool ok = parse_ring(built.expr.to_string()).to_string() == built.expr.to_string();
            for (Elem e = 0; ok && e < R.order(); ++e)
                if (parse_element(R.label(e), built) != e) ok = false;
            rec.check("parser_roundtrip", ok);
        }

        const LocalFactorization fact = local_factorization(R);
        {
            bool ok = true;
            for (const auto& f : fact.factors) {
                long long p = 2;
                while (f.ring.order() % p != 0) ++p;
                auto power_of = [](long long v, long long q) {
                    while (v % q == 0) v /= q;
                    return v == 1;
                };
                const long long m = f.maximal_ideal.size();
                if (!power_of(f.ring.order(), p) || !(m == 1 || power_of(m, p)) ||
                    !power_of(f.ring.order() / m, p))
                    ok = false;
            }
            rec.check("factorization", ok);
        }

        for (const auto& f : fact.factors)
            for (Elem xi = 0; xi < f.ring.order(); ++xi) {
                if (xi == f.ring.zero()) continue;
                rec.set_x(spec + " factor " + std::to_string(f.ring.order()) + " x=" +
                          f.ring.label(xi));
                lemma_pair_checks(rec, f.ring, xi, opt);
                ++result.lemma_pairs;
            }

        const auto xs = choose_xs(R.order(), opt, spec);
        OracleCache cache;
        bool first = true;
        for (Elem x : xs) {
            rec.set_x(R.label(x));
            instance_checks(rec, built, fact, x, opt, first, cache);
            first = false;
            ++result.instances;
        }
    } catch (const std::exception& e) {
        rec.set_x("");
        rec.check("exception", false, e.what());
    }
    return result;
}

} // namespace

VerifySummary run_verification(const VerifyOptions& opt,
                               const std::function<void(const std::string&)>& progress) {
    const auto specs = family_ring_specs(opt);

    std::vector<RingResult> results(specs.size());
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t jobs =
        std::min(specs.size(), static_cast<std::size_t>(opt.jobs > 0 ? opt.jobs : hw));

    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) break;
            results[i] = check_ring(specs[i], opt);
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(specs[i]);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    VerifySummary summary;
    summary.rings = static_cast<long long>(specs.size());
    for (const RingResult& r : results) {
        summary.instances += r.instances;
        summary.lemma_pairs += r.lemma_pairs;
        for (const auto& [name, c] : r.checks) {
            summary.checks[name].run += c.run;
            summary.checks[name].failed += c.failed;
        }
        summary.failures.insert(summary.failures.end(), r.failures.begin(), r.failures.end());
    }
    return summary;
}

} // namespace cayring
