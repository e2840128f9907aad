// Command-line workbench around the cycbound library.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycbound/harness.hpp"
#include "cycbound/tableau.hpp"

using namespace cycbound;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGcd = 3;
constexpr int kExitCap = 4;
constexpr int kExitPartial = 5;

int run_bound(int q, int n, const std::string& set_text, const std::string& kind_name) {
    auto kind = bound_kind_from_name(kind_name);
    if (!kind) {
        std::cerr << "unknown bound kind '" << kind_name << "'\n";
        return kExitParse;
    }
    CyclicCodeSpec spec = make_spec(q, n, parse_set_text(set_text, n, q));
    BoundOutcome outcome = compute_bound(spec, *kind);
    std::cout << outcome_to_json(outcome) << "\n";
    return 0;
}

int run_distance(int q, int n, const std::string& set_text, unsigned long long cap) {
    CyclicCodeSpec spec = make_spec(q, n, parse_set_text(set_text, n, q));
    FieldContext ctx = FieldContext::build(q, n);
    DistanceResult res = true_distance(spec, ctx, cap);
    std::cout << distance_to_json(res) << "\n";
    return 0;
}

int run_pattern(const std::string& u_text, const std::string& v_text) {
    SymVec u = pattern_expand(u_text);
    SymVec v = pattern_expand(v_text);
    auto shift = includes(u, v);
    json j;
    j["included"] = shift.has_value();
    if (shift) j["shift"] = *shift;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_schaub(int q, int n, const std::string& set_text, long long a_cap, long long subset_cap) {
    CyclicCodeSpec spec = make_spec(q, n, parse_set_text(set_text, n, q));
    std::cerr << "note: exhaustive in the number of unknown positions; desk scale only\n";
    std::cout << schaub_lower_bound(spec, a_cap, subset_cap) << "\n";
    return 0;
}

int run_cosets(int q, int n) {
    std::cout << partition_to_json(coset_partition(n, q)) << "\n";
    return 0;
}

int run_table(const TableOptions& opt, const std::string& out_path) {
    TableResult res = tightness_table(opt);
    for (int n : res.skipped_lengths)
        std::cerr << "warning: n=" << n << " skipped (gcd(n, q) != 1)\n";
    std::string csv = table_csv(res);
    std::string summary = summary_csv(res, opt);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv << summary;
    } else {
        std::ofstream(out_path) << csv;
        std::string sum_path = out_path;
        auto dot = sum_path.rfind(".csv");
        if (dot != std::string::npos && dot == sum_path.size() - 4) sum_path.resize(dot);
        std::ofstream(sum_path + ".summary.csv") << summary;
    }
    for (const auto& inc : res.incidents)
        std::cerr << "incident: II rule exceeded oracle at q=" << inc.q << " n=" << inc.n
                  << " S={" << inc.set << "} lambda=" << inc.lambda << " mu=" << inc.mu
                  << " value=" << inc.stated_value << " d=" << inc.distance << "\n";
    return res.any_failed ? kExitPartial : 0;
}

int run_proof(int n, int ell, int m, int r, int s, int lambda, int mu) {
    TableauParams params;
    params.n = n;
    if (mu > 0) {
        params.kind = TableauKind::Interleaved;
        params.lambda = lambda;
        params.mu = mu;
        params.s = s;
        params.ell = lambda * mu;
        params.m = mu - 1;
        params.r = 1;
    } else {
        params.kind = TableauKind::BlockTrain;
        params.ell = ell;
        params.m = m;
        params.r = r;
        params.s = s;
    }
    SymVec R = synthetic_vector(params);
    VerifyReport rep = verify_construction(R, params, 4096);
    // Show one concrete certificate: pivots at their first admissible spots.
    SymVec v = R;
    int gap = params.kind == TableauKind::Interleaved ? 1 : params.r;
    for (int p = 1; p <= gap; ++p)
        if (v.at1(p) == Sym::Any) {
            v.s[static_cast<size_t>(p - 1)] = Sym::Nonzero;
            break;
        }
    const int bm = params.kind == TableauKind::Interleaved ? params.mu - 1 : params.m;
    const int br = params.kind == TableauKind::Interleaved ? 1 : params.r;
    for (int t = 1; t <= bm; ++t) {
        long long pos = static_cast<long long>(br) +
                        static_cast<long long>(params.s) * (bm + br) + t;
        long long idx = ((pos - 1) % n + n) % n;
        if (v.s[static_cast<size_t>(idx)] == Sym::Any) {
            v.s[static_cast<size_t>(idx)] = Sym::Nonzero;
            break;
        }
    }
    Tableau tb = build_tableau(v, params);
    std::cout << format_tableau(tb);
    TableauCheck chk = check_tableau(tb);
    std::cout << "rows=" << chk.rows << " discarded=" << chk.discarded
              << " s-deletions=" << chk.deletions << " target=" << rep.target << "\n";
    std::cout << "family check: " << (rep.ok ? "ok" : ("FAILED: " + rep.failure)) << " over "
              << rep.cases << " cases, min survivors " << rep.min_survivors << "\n";
    return rep.ok && chk.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance lower bounds for cyclic codes, with exact verification"};
    app.require_subcommand(1);

    int q = 2, n = 0, n_min = 0, n_max = 0;
    std::string set_text, kind = "bc", out_path, cache_dir, u_text, v_text;
    unsigned long long distance_cap = 1ull << 24;
    long long a_cap = 1 << 20, subset_cap = 2'000'000;
    int jobs = 1;
    bool exclude_trivial = false;
    int ell = 0, m = 0, r = 0, s = 0, lambda = 0, mu = 0;

    auto* bound = app.add_subcommand("bound", "one bound on one code");
    bound->add_option("--q", q)->required();
    bound->add_option("--n", n)->required();
    bound->add_option("--set", set_text);
    bound->add_option("--kind", kind)->check(CLI::IsMember({"bch", "ht", "bs", "roos", "bc"}));

    auto* distance = app.add_subcommand("distance", "exact minimum distance");
    distance->add_option("--q", q)->required();
    distance->add_option("--n", n)->required();
    distance->add_option("--set", set_text);
    distance->add_option("--distance-cap", distance_cap);

    auto* table = app.add_subcommand("table", "tightness table over a range of lengths");
    table->add_option("--q", q)->required();
    table->add_option("--n-min", n_min)->required();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--distance-cap", distance_cap);
    table->add_option("--jobs", jobs);
    table->add_option("--out", out_path);
    table->add_option("--cache-dir", cache_dir);
    table->add_flag("--exclude-trivial", exclude_trivial);

    auto* pattern = app.add_subcommand("pattern", "inclusion of one symbol pattern in another");
    pattern->add_option("u", u_text)->required();
    pattern->add_option("v", v_text)->required();

    auto* schaub = app.add_subcommand("schaub", "min pseudo-rank over all resolutions");
    schaub->add_option("--q", q)->required();
    schaub->add_option("--n", n)->required();
    schaub->add_option("--set", set_text);
    schaub->add_option("--a-cap", a_cap);
    schaub->add_option("--subset-cap", subset_cap);

    auto* cosets = app.add_subcommand("cosets", "cyclotomic coset partition");
    cosets->add_option("--q", q)->required();
    cosets->add_option("--n", n)->required();

    auto* proof = app.add_subcommand("proof", "emit and check one elimination certificate");
    proof->add_option("--n", n)->required();
    proof->add_option("--ell", ell);
    proof->add_option("--m", m);
    proof->add_option("--r", r);
    proof->add_option("--s", s)->required();
    proof->add_option("--lambda", lambda);
    proof->add_option("--mu", mu);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (bound->parsed()) return run_bound(q, n, set_text, kind);
        if (distance->parsed()) return run_distance(q, n, set_text, distance_cap);
        if (table->parsed()) {
            TableOptions opt;
            opt.q = q;
            opt.n_min = n_min;
            opt.n_max = n_max;
            opt.distance_cap = distance_cap;
            opt.jobs = jobs;
            opt.exclude_trivial = exclude_trivial;
            opt.cache_dir = cache_dir;
            return run_table(opt, out_path);
        }
        if (pattern->parsed()) return run_pattern(u_text, v_text);
        if (schaub->parsed()) return run_schaub(q, n, set_text, a_cap, subset_cap);
        if (cosets->parsed()) return run_cosets(q, n);
        if (proof->parsed()) return run_proof(n, ell, m, r, s, lambda, mu);
    } catch (const GcdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGcd;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EmptyPattern& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
