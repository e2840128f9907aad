#include "cycbound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace cycbound {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<int> parse_set_text(const std::string& text, int n, int q) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) return {};
    std::vector<int> seeds;
    auto parse_int = [](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                return isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("set: bad token '" + tok + "'");
        return std::stoi(tok);
    };
    if (t.find('C') != std::string::npos || t.find('c') != std::string::npos) {
        std::stringstream ss(t);
        std::string tok;
        while (std::getline(ss, tok, '+')) {
            if (tok.empty() || (tok[0] != 'C' && tok[0] != 'c'))
                throw ParseError("set: expected C<j> in '" + tok + "'");
            seeds.push_back(parse_int(tok.substr(1)));
        }
    } else {
        std::stringstream ss(t);
        std::string tok;
        while (std::getline(ss, tok, ',')) seeds.push_back(parse_int(tok));
    }
    return complete_defining_set(n, q, seeds);
}

std::string set_to_string(const std::vector<int>& S) {
    std::string out;
    for (size_t i = 0; i < S.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(S[i]);
    }
    return out;
}

namespace {

json witness_to_json(const BoundWitness& w) {
    json j;
    j["formula"] = w.formula;
    if (w.i0 >= 0) j["i0"] = w.i0;
    if (w.reflected) j["reflected"] = true;
    j["rho"] = w.rho;
    if (w.ell >= 0) j["ell"] = w.ell;
    if (w.m >= 0) j["m"] = w.m;
    if (w.r >= 0) j["r"] = w.r;
    if (w.s >= 0) j["s"] = w.s;
    if (w.lambda >= 0) j["lambda"] = w.lambda;
    if (w.mu >= 0) j["mu"] = w.mu;
    if (w.holes >= 0) j["holes"] = w.holes;
    if (!w.block_slots.empty()) j["blocks"] = w.block_slots;
    return j;
}

}  // namespace

std::string outcome_to_json(const BoundOutcome& outcome) {
    json j;
    j["kind"] = bound_kind_name(outcome.kind);
    j["value"] = outcome.value;
    j["witness"] = witness_to_json(outcome.witness);
    return j.dump();
}

std::string distance_to_json(const DistanceResult& res) {
    json j;
    j["d"] = res.d;
    j["enumerated"] = res.enumerated;
    if (res.argmin_word)
        j["weight_witness"] = *res.argmin_word;
    else
        j["weight_witness"] = nullptr;
    return j.dump();
}

std::string partition_to_json(const CosetPartition& part) {
    json j;
    j["classes"] = part.classes;
    return j.dump();
}

CodeEval evaluate_code(const CyclicCodeSpec& spec, const FieldContext& ctx,
                       unsigned long long distance_cap) {
    CodeEval ev;
    ev.spec = spec;
    for (size_t i = 0; i < kAllBounds.size(); ++i) ev.bounds[i] = compute_bound(spec, kAllBounds[i]);

    auto classes = enumeration_classes(spec.q, spec.dim());
    if (!classes || *classes > distance_cap) {
        ev.skipped = true;
        return ev;
    }
    ev.dist = true_distance(spec, ctx, distance_cap);
    const int d = ev.dist->d;

    // BC carrying a II-rule witness past the oracle is downgraded once and
    // logged; everything else above the oracle is a hard violation.
    auto& bc = ev.bounds[4];
    if (bc.value > d && bc.witness.formula.rfind("II", 0) == 0) {
        BoundIIIncident inc;
        inc.q = spec.q;
        inc.n = spec.n;
        inc.set = set_to_string(spec.S);
        inc.lambda = bc.witness.lambda;
        inc.mu = bc.witness.mu;
        inc.stated_value = bc.value;
        inc.distance = d;
        ev.incident = inc;
        BoundIIGate gate;
        gate.families.insert({bc.witness.lambda, bc.witness.mu});
        bc = bound_c(spec, &gate);
    }
    for (const auto& b : ev.bounds)
        if (b.value > d) ev.violation = true;
    return ev;
}

namespace {

struct CacheFile {
    fs::path path;
    json data;

    static CacheFile open(const std::string& dir, int q, int n) {
        CacheFile cf;
        cf.path = fs::path(dir) / ("q" + std::to_string(q) + "_n" + std::to_string(n) + ".json");
        cf.data = json::object();
        if (fs::exists(cf.path)) {
            std::ifstream in(cf.path);
            try {
                in >> cf.data;
            } catch (...) {
                cf.data = json::object();  // unreadable cache is recomputed
            }
        }
        return cf;
    }

    void write() const {
        fs::create_directories(path.parent_path());
        fs::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << data.dump(1) << "\n";
        }
        fs::rename(tmp, path);
    }
};

json eval_to_json(const CodeEval& ev) {
    json j;
    json bounds = json::object();
    json witnesses = json::object();
    for (size_t i = 0; i < kAllBounds.size(); ++i) {
        bounds[bound_kind_name(kAllBounds[i])] = ev.bounds[i].value;
        witnesses[bound_kind_name(kAllBounds[i])] = witness_to_json(ev.bounds[i].witness);
    }
    j["bounds"] = bounds;
    j["witnesses"] = witnesses;
    j["skipped"] = ev.skipped;
    if (ev.dist) j["d"] = ev.dist->d;
    if (ev.violation) j["violation"] = true;
    if (ev.incident) {
        j["incident"] = {{"lambda", ev.incident->lambda},
                         {"mu", ev.incident->mu},
                         {"stated_value", ev.incident->stated_value},
                         {"d", ev.incident->distance}};
    }
    return j;
}

struct SlimEval {
    std::array<int, 5> values{};
    int d = -1;  // -1 = skipped
    bool violation = false;
    std::optional<BoundIIIncident> incident;
};

SlimEval slim_from_json(const json& j, const CyclicCodeSpec& spec) {
    SlimEval s;
    for (size_t i = 0; i < kAllBounds.size(); ++i)
        s.values[i] = j.at("bounds").at(bound_kind_name(kAllBounds[i])).get<int>();
    if (j.contains("d")) s.d = j.at("d").get<int>();
    s.violation = j.value("violation", false);
    if (j.contains("incident")) {
        BoundIIIncident inc;
        inc.q = spec.q;
        inc.n = spec.n;
        inc.set = set_to_string(spec.S);
        inc.lambda = j["incident"]["lambda"].get<int>();
        inc.mu = j["incident"]["mu"].get<int>();
        inc.stated_value = j["incident"]["stated_value"].get<int>();
        inc.distance = j["incident"]["d"].get<int>();
        s.incident = inc;
    }
    return s;
}

SlimEval slim_from_eval(const CodeEval& ev) {
    SlimEval s;
    for (size_t i = 0; i < kAllBounds.size(); ++i) s.values[i] = ev.bounds[i].value;
    if (ev.dist) s.d = ev.dist->d;
    s.violation = ev.violation;
    s.incident = ev.incident;
    return s;
}

}  // namespace

TableResult tightness_table(const TableOptions& opt) {
    TableResult result;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        if (n < 1) continue;
        if (std::gcd(n, opt.q) != 1) {
            result.skipped_lengths.push_back(n);
            continue;
        }
        TightnessRow row;
        row.n = n;
        auto specs = enumerate_codes(n, opt.q);
        FieldContext ctx = FieldContext::build(opt.q, n);

        std::optional<CacheFile> cache;
        if (!opt.cache_dir.empty()) cache = CacheFile::open(opt.cache_dir, opt.q, n);

        std::vector<std::optional<SlimEval>> evals(specs.size());
        std::vector<size_t> todo;
        for (size_t i = 0; i < specs.size(); ++i) {
            std::string key = set_to_string(specs[i].S);
            if (cache && cache->data.contains(key)) {
                try {
                    evals[i] = slim_from_json(cache->data[key], specs[i]);
                    continue;
                } catch (...) {
                    // fall through to recompute
                }
            }
            todo.push_back(i);
        }

        std::atomic<size_t> next{0};
        std::mutex cache_mu;
        size_t since_flush = 0;
        auto worker = [&]() {
            while (true) {
                size_t t = next.fetch_add(1);
                if (t >= todo.size()) break;
                size_t i = todo[t];
                CodeEval ev = evaluate_code(specs[i], ctx, opt.distance_cap);
                evals[i] = slim_from_eval(ev);
                if (cache) {
                    std::lock_guard<std::mutex> lock(cache_mu);
                    cache->data[set_to_string(specs[i].S)] = eval_to_json(ev);
                    if (++since_flush >= 64) {
                        cache->write();
                        since_flush = 0;
                    }
                }
            }
        };
        int jobs = std::max(1, opt.jobs);
        if (jobs == 1 || todo.size() <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (cache && since_flush > 0) cache->write();

        for (size_t i = 0; i < specs.size(); ++i) {
            const auto& ev = *evals[i];
            bool trivial = specs[i].S.empty() || specs[i].dim() == 0;
            if (opt.exclude_trivial && trivial) continue;
            ++row.n_codes;
            if (ev.d < 0) {
                ++row.skipped;
                continue;
            }
            if (ev.incident) result.incidents.push_back(*ev.incident);
            if (ev.violation) {
                row.error = true;
                result.any_failed = true;
            }
            bool bch_tight = ev.values[0] == ev.d;
            for (size_t b = 0; b < kAllBounds.size(); ++b) {
                bool tight = ev.values[b] == ev.d;
                row.total[b] += tight;
                row.excess[b] += tight && !bch_tight;
            }
        }
        result.rows.push_back(row);
    }
    return result;
}

std::string table_csv(const TableResult& res) {
    std::ostringstream os;
    os << "n,N_codes,BCH,HT,BS,RS,BC,skipped\n";
    for (const auto& row : res.rows) {
        os << row.n << ',' << row.n_codes;
        for (auto v : row.total) os << ',' << v;
        os << ',' << row.skipped;
        if (row.error) os << ",ERROR";
        os << "\n";
    }
    return os.str();
}

std::string summary_csv(const TableResult& res, const TableOptions& opt) {
    std::array<long long, 5> excess{};
    long long codes = 0, bch_tight = 0;
    for (const auto& row : res.rows) {
        codes += row.n_codes - row.skipped;
        bch_tight += row.total[0];
        for (size_t b = 0; b < excess.size(); ++b) excess[b] += row.excess[b];
    }
    std::ostringstream os;
    os << "q,n_min,n_max,codes,BCH_tight,HT,BS,RS,BC\n";
    os << opt.q << ',' << opt.n_min << ',' << opt.n_max << ',' << codes << ',' << bch_tight << ','
       << excess[1] << ',' << excess[2] << ',' << excess[3] << ',' << excess[4] << "\n";
    return os.str();
}

}  // namespace cycbound
