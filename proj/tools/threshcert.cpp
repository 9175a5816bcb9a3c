// threshcert command line: certification runs, omega tables, classification,
// oracles and the self-check suites.

#include "threshcert/certify.hpp"
#include "threshcert/compare.hpp"
#include "threshcert/errors.hpp"
#include "threshcert/graphs.hpp"
#include "threshcert/io.hpp"
#include "threshcert/oracle.hpp"
#include "threshcert/selfcheck.hpp"
#include "threshcert/tsubenum.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace threshcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOperational = 1;
constexpr int kExitVerification = 2;

// ---------------------------------------------------------------- settings

// Resolved run configuration: command line flags win over THRESHCERT_*
// environment variables, which win over the JSON config file.
struct RunConfig {
    int jobs = 1;
    int refine_budget = kDefaultRefineBudget;
    std::string out_dir = "certs";
    std::string format = "csv";
    bool timing = false;
};

class Settings {
public:
    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot open config file " + path);
        try {
            file_ = Json::parse(in);
        } catch (const std::exception& ex) {
            throw InvalidArgument("config file " + path + ": " + ex.what());
        }
        if (!file_.is_object()) throw InvalidArgument("config file must hold a JSON object");
    }

    std::optional<std::string> lookup(const std::string& key) const {
        std::string env = "THRESHCERT_" + key;
        for (auto& ch : env) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (const char* v = std::getenv(env.c_str()); v && *v) return std::string(v);
        if (file_.contains(key)) {
            const auto& j = file_[key];
            return j.is_string() ? j.get<std::string>() : j.dump();
        }
        return std::nullopt;
    }

    template <class T>
    void resolve(const CLI::Option* flag, const std::string& key, T& value) const {
        if (flag && flag->count() > 0) return;
        const auto v = lookup(key);
        if (!v) return;
        if constexpr (std::is_same_v<T, std::string>) {
            value = *v;
        } else if constexpr (std::is_same_v<T, bool>) {
            value = *v == "1" || *v == "true" || *v == "yes" || *v == "on";
        } else {
            try {
                std::size_t pos = 0;
                value = std::stoi(*v, &pos);
                if (pos != v->size()) throw std::invalid_argument(*v);
            } catch (const std::exception&) {
                throw InvalidArgument("setting '" + key + "' is not an integer: " + *v);
            }
        }
    }

private:
    Json file_ = Json::object();
};

std::vector<int> parse_e_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size() || v < 0) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InvalidArgument("bad edge count '" + s + "' in range '" + text + "'");
        }
    };
    while (std::getline(ss, item, ',')) {
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
            if (lo > hi) throw InvalidArgument("empty range '" + item + "'");
            for (int e = lo; e <= hi; ++e) out.push_back(e);
        } else {
            out.push_back(to_int(item));
        }
    }
    if (out.empty()) throw InvalidArgument("empty edge range");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StepSequence parse_steps(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidArgument("bad step sequence '" + text + "'");
        }
    }
    return StepSequence(std::move(v));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw Error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

// ---------------------------------------------------------------- params / build / enumerate

int cmd_params(const std::vector<int>& es, const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (int e : es) {
            const auto p = edge_params(e);
            arr.push_back({{"e", e}, {"k", p.k}, {"t", p.t}, {"b", p.b}});
        }
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "e,k,t,b\n";
    for (int e : es) {
        const auto p = edge_params(e);
        std::cout << e << "," << p.k << "," << p.t << "," << p.b << "\n";
    }
    return kExitOk;
}

int cmd_build(const std::string& family, int n, int e, const std::string& steps, const std::string& output) {
    ThresholdGraph g = family == "D"   ? build_D(n, e)
                       : family == "V" ? build_V(n, e)
                                       : threshold_from_tsub(parse_steps(steps), n);
    const DenseGraph a = adjacency(g);
    if (output == "graph6") {
        std::cout << to_graph6(a) << "\n";
    } else if (output == "adjacency") {
        for (int i = 0; i < a.order(); ++i) {
            for (int j = 0; j < a.order(); ++j) std::cout << (a.edge(i, j) ? '1' : '0');
            std::cout << "\n";
        }
    } else {
        Json j = {{"n", g.order()},
                  {"e", g.edge_surplus()},
                  {"steps", steps_to_json(g.steps())},
                  {"graph6", to_graph6(a)},
                  {"degrees", a.degrees()},
                  {"charpoly", poly_to_json(threshold_charpoly(a))}};
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(int e, bool all, bool count_only, const std::string& resume) {
    if (!all && edge_params(e).t == 0) throw InvalidRegime("t_e = 0: covered by closed form (Bell); use --all");
    if (count_only) {
        std::cout << (all ? count_S(e) : count_S(e) - 2) << "\n";
        return kExitOk;
    }
    CandidateStream stream = resume.empty() ? CandidateStream(e) : CandidateStream::resume_after(e, parse_steps(resume));
    while (auto s = stream.next()) {
        if (!all && is_extremal_tsub(e, *s)) continue;
        std::cout << s->to_string() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- certify

struct CertifyFlags {
    bool resume = false;
    std::uint64_t stop_after = 0;
    bool recheck = false;
    bool quiet = false;
};

class ProgressPrinter {
public:
    ProgressPrinter(int e, std::uint64_t total, bool quiet) : e_(e), total_(total), quiet_(quiet) {}

    void update(std::uint64_t done, int first_part) {
        if (quiet_) return;
        const auto now = std::chrono::steady_clock::now();
        if (now - last_ < std::chrono::seconds(1) && done < total_) return;
        last_ = now;
        const double secs = std::chrono::duration<double>(now - start_).count();
        std::cerr << "e=" << e_ << " " << done << "/" << total_ << " candidates, "
                  << static_cast<long>(secs > 0 ? done / secs : 0) << "/s, block s1=" << first_part << "\n";
    }

private:
    int e_;
    std::uint64_t total_;
    bool quiet_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
};

std::vector<Json> read_partial(const fs::path& path) {
    std::vector<Json> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(Json::parse(line));
        } catch (const std::exception&) {
            break;  // torn trailing line from an interrupted write
        }
    }
    return out;
}

void update_index(const fs::path& dir, const std::vector<Json>& entries) {
    const fs::path path = dir / "index.json";
    std::map<int, Json> merged;
    if (fs::exists(path)) {
        std::ifstream in(path);
        try {
            const Json old = Json::parse(in);
            for (const auto& ent : old.at("entries")) merged[ent.at("e").get<int>()] = ent;
        } catch (const std::exception&) {
            throw Error("existing index " + path.string() + " is not readable");
        }
    }
    for (const auto& ent : entries) merged[ent.at("e").get<int>()] = ent;
    Json arr = Json::array();
    for (auto& [e, ent] : merged) arr.push_back(ent);
    write_atomic(path, Json{{"entries", arr}}.dump(2) + "\n");
}

int cmd_certify(const std::vector<int>& es, const RunConfig& cfg, const CertifyFlags& fl) {
    const fs::path dir = cfg.out_dir;
    fs::create_directories(dir);
    int exit_code = kExitOk;
    std::uint64_t emitted_total = 0;
    std::vector<Json> index;
    for (int e : es) {
        if (e < 4) throw InvalidArgument("certification needs e >= 4 (got " + std::to_string(e) + ")");
        const auto params = edge_params(e);
        if (params.t == 0) {
            std::cout << "e=" << e << ": t=0: covered by closed form (Bell)\n";
            index.push_back({{"e", e}, {"status", "closed_form"}, {"count", 0}, {"note", "covered by closed form (Bell)"}});
            continue;
        }
        const fs::path final_path = dir / ("cert_e" + std::to_string(e) + ".json");
        const fs::path partial_path = dir / ("cert_e" + std::to_string(e) + ".partial.jsonl");
        if (fl.resume && fs::exists(final_path)) {
            std::ifstream in(final_path);
            const Json done = Json::parse(in);
            std::cout << "e=" << e << ": already certified (" << done.at("count").get<std::uint64_t>() << " certificates)\n";
            index.push_back({{"e", e}, {"status", done.at("status")}, {"count", done.at("count")}, {"file", final_path.filename().string()}});
            continue;
        }

        std::vector<Json> certs;
        CertifyAllOptions opt;
        opt.jobs = cfg.jobs;
        opt.candidate.budget = cfg.refine_budget;
        opt.candidate.timing = cfg.timing;
        if (fl.resume && fs::exists(partial_path)) {
            certs = read_partial(partial_path);
            if (!certs.empty()) opt.resume_after = steps_from_json(certs.back().at("steps"));
        }
        // Rewrite the partial file so a torn trailing line never survives.
        {
            std::ofstream out(partial_path, std::ios::trunc);
            for (const auto& c : certs) out << c.dump() << "\n";
        }
        if (fl.stop_after > 0) {
            if (emitted_total >= fl.stop_after) {
                std::cerr << "stopped after " << emitted_total << " certificates; rerun with --resume\n";
                update_index(dir, index);
                return kExitOperational;
            }
            opt.stop_after = fl.stop_after - emitted_total;
        }
        const std::uint64_t total = count_S(e) - 2;
        ProgressPrinter progress(e, total, fl.quiet);
        const std::uint64_t already = certs.size();
        opt.progress = [&](std::uint64_t done, int first_part) { progress.update(already + done, first_part); };

        std::ofstream partial(partial_path, std::ios::app);
        std::string failure;
        try {
            certify_stream(e, opt, [&](const Certificate& c) {
                Json j = certificate_to_json(c);
                partial << j.dump() << "\n";
                certs.push_back(std::move(j));
                ++emitted_total;
            });
        } catch (const VerificationFailed& ex) {
            failure = ex.what();
        } catch (const RefinementBudgetExceeded& ex) {
            failure = std::string("verification step 7 undecided: ") + ex.what();
        }
        partial.close();

        if (!failure.empty()) {
            std::cout << "FAIL e=" << e << ": " << failure << "\n";
            index.push_back({{"e", e}, {"status", "fail"}, {"count", certs.size()}, {"failure", failure}});
            exit_code = kExitVerification;
            continue;
        }
        if (certs.size() < total) {
            std::cerr << "e=" << e << ": stopped after " << certs.size() << " of " << total
                      << " candidates; rerun with --resume\n";
            update_index(dir, index);
            return exit_code == kExitOk ? kExitOperational : exit_code;
        }
        if (fl.recheck) {
            for (const auto& j : certs) {
                const auto why = recheck_certificate(certificate_from_json(j), cfg.refine_budget);
                if (!why.empty()) {
                    failure = "recheck failed for " + j.at("steps").dump() + ": " + why;
                    break;
                }
            }
            if (!failure.empty()) {
                std::cout << "FAIL e=" << e << ": " << failure << "\n";
                index.push_back({{"e", e}, {"status", "fail"}, {"count", certs.size()}, {"failure", failure}});
                exit_code = kExitVerification;
                continue;
            }
        }
        Json file = {{"e", e}, {"status", "pass"}, {"count", certs.size()}, {"certificates", certs}};
        write_atomic(final_path, file.dump(1) + "\n");
        fs::remove(partial_path);
        std::cout << "e=" << e << ": pass, " << certs.size() << " certificates"
                  << (certs.empty() ? " (S*_" + std::to_string(e) + " is empty)" : "") << (fl.recheck ? ", rechecked" : "")
                  << "\n";
        index.push_back({{"e", e}, {"status", "pass"}, {"count", certs.size()}, {"file", final_path.filename().string()}});
    }
    update_index(dir, index);
    return exit_code;
}

// ---------------------------------------------------------------- table / classify

std::string omega_text(const OmegaValue& w, int digits) {
    if (w.exact) return to_string(*w.exact);
    return to_decimal(w.enclosure.lo, digits, false) + ".." + to_decimal(w.enclosure.hi, digits, true);
}

std::string regime_of(int e) {
    std::string r = edge_params(e).t == 0 ? "t=0" : "t>=1";
    r += e <= kProvenMaxE ? ";proven" : ";beyond_proven_range";
    return r;
}

int cmd_table(const std::vector<int>& es, const RunConfig& cfg, int digits) {
    Rational width = 1;
    for (int i = 0; i < digits; ++i) width /= 10;
    Json rows = Json::array();
    if (cfg.format == "csv") std::cout << "e,k,t,b,psi,psi_poly,omega,regime\n";
    for (int e : es) {
        if (e < 4) throw InvalidArgument("table needs e >= 4 (got " + std::to_string(e) + ")");
        const auto p = edge_params(e);
        const auto d = psi_data(e, width, cfg.refine_budget);
        const auto psi = d.psi.refined(width / 10, cfg.refine_budget + 8 * digits);
        const std::string psi_text = to_decimal(psi.is_exact() ? psi.lo() : psi.interval().midpoint(), digits, false);
        const std::string poly = d.psi_poly.to_string('x');
        const std::string omega = omega_text(d.omega, digits);
        if (cfg.format == "csv") {
            std::cout << e << "," << p.k << "," << p.t << "," << p.b << "," << csv_field(psi_text) << "," << csv_field(poly)
                      << "," << csv_field(omega) << "," << csv_field(regime_of(e)) << "\n";
        } else {
            rows.push_back({{"e", e},
                            {"k", p.k},
                            {"t", p.t},
                            {"b", p.b},
                            {"psi", psi_text},
                            {"psi_poly", poly_to_json(d.psi_poly)},
                            {"omega", omega},
                            {"omega_exact", d.omega.exact.has_value()},
                            {"regime", regime_of(e)}});
        }
    }
    if (cfg.format != "csv") std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

int cmd_classify(int n, int e, bool unsafe, const RunConfig& cfg) {
    const auto c = classify(n, e, unsafe, cfg.refine_budget);
    if (c.beyond_proven_range)
        std::cout << "WARNING: e = " << e << " is beyond the proven range (e <= " << kProvenMaxE
                  << "); this classification is an extrapolation\n";
    if (cfg.format == "json") {
        Json j = {{"n", n},
                  {"e", e},
                  {"verdict", to_string(c.verdict)},
                  {"v_defined", c.v_defined},
                  {"beyond_proven_range", c.beyond_proven_range},
                  {"omega", omega_text(c.omega, 12)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(c.verdict) << "\n";
        std::cout << "omega_e = " << omega_text(c.omega, 12) << "\n";
        if (!c.v_defined) std::cout << "V(n,e) is undefined for n < e + 2\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- oracle / selfcheck

int cmd_oracle(int n, int e, const std::string& graph6, std::uint64_t max_subsets, const RunConfig& cfg) {
    if (!graph6.empty()) {
        const auto g = from_graph6(graph6);
        const auto pd = spectral_radius(g);
        Json j = {{"graph6", graph6}, {"n", g.order()}, {"rho", pd.rho}, {"iterations", pd.iterations}, {"residual", pd.residual}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    BruteOptions bo;
    bo.jobs = cfg.jobs;
    bo.max_subsets = max_subsets;
    const auto r = brute_force_max(n, e, bo);
    std::cout << brute_to_json(r).dump(2) << "\n";
    return kExitOk;
}

int cmd_selfcheck(bool no_oracle, bool tamper, const RunConfig& cfg) {
    SelfcheckOptions opt;
    opt.oracle = !no_oracle;
    opt.tamper_psi = tamper;
    opt.jobs = cfg.jobs;
    bool ok = true;
    run_selfcheck(opt, [&](const SuiteResult& r) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
        if (!r.passed()) std::cout << ", " << r.failures.size() << " failed";
        std::cout << ")\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        ok = ok && r.passed();
    });
    if (no_oracle) std::cout << "SKIP oracle (disabled)\n";
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of spectral radius maximizers among connected graphs with n - 1 + e edges"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "threshcert 0.1.0");

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (also THRESHCERT_CONFIG)");
    auto* jobs_opt = app.add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1024));
    auto* budget_opt = app.add_option("--refine-budget", cfg.refine_budget, "max bisections per refinement")->check(CLI::PositiveNumber);
    auto* format_opt = app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "text"}));

    std::string e_text;
    int n = 0, e = 0;

    auto* params = app.add_subcommand("params", "print k_e, t_e and b_e");
    params->add_option("--e", e_text, "edge surplus range, e.g. 4..30 or 5,7")->required();

    auto* build = app.add_subcommand("build", "build D(n,e), V(n,e) or a threshold graph from T-subgraph steps");
    std::string family = "D", steps_text, output = "json";
    build->add_option("--family", family)->check(CLI::IsMember({"D", "V", "steps"}));
    build->add_option("--n", n)->required();
    build->add_option("--e", e);
    build->add_option("--steps", steps_text, "comma separated, e.g. 3,2");
    build->add_option("--output", output)->check(CLI::IsMember({"json", "graph6", "adjacency"}));

    auto* enumerate = app.add_subcommand("enumerate", "list candidate T-subgraphs of S*_e");
    bool enum_all = false, enum_count = false;
    std::string enum_resume;
    enumerate->add_option("--e", e)->required();
    enumerate->add_flag("--all", enum_all, "include the two extremal sequences");
    enumerate->add_flag("--count", enum_count, "print only the number of sequences");
    enumerate->add_option("--resume-after", enum_resume, "continue strictly after this sequence");

    auto* certify = app.add_subcommand("certify", "run the verification algorithm and write certificates");
    CertifyFlags cf;
    certify->add_option("--e", e_text, "edge surplus range")->required();
    auto* out_opt = certify->add_option("--out-dir", cfg.out_dir, "certificate directory");
    auto* timing_opt = certify->add_flag("--timing", cfg.timing, "record wall_ms per certificate");
    certify->add_flag("--resume", cf.resume, "continue from partial checkpoints in the output directory");
    certify->add_option("--stop-after", cf.stop_after, "stop after this many certificates (checkpoint test)");
    certify->add_flag("--recheck", cf.recheck, "re-verify every certificate with the independent checker");
    certify->add_flag("-q,--quiet", cf.quiet, "no progress output");

    auto* table = app.add_subcommand("table", "psi_e and omega_e table");
    int digits = 12;
    table->add_option("--e", e_text)->required();
    table->add_option("--digits", digits)->check(CLI::Range(1, 60));

    auto* cls = app.add_subcommand("classify", "decide D_unique, Tie or V_unique for (n, e)");
    bool unsafe = false;
    cls->add_option("n", n)->required();
    cls->add_option("e", e)->required();
    cls->add_flag("--unsafe-extrapolate", unsafe, "allow e beyond the proven range");

    auto* oracle = app.add_subcommand("oracle", "numeric spectral radius or exhaustive maximization");
    std::string graph6;
    std::uint64_t max_subsets = BruteOptions{}.max_subsets;
    oracle->add_option("--n", n);
    oracle->add_option("--e", e);
    oracle->add_option("--graph6", graph6, "spectral radius of this graph");
    oracle->add_option("--max-subsets", max_subsets);

    auto* selfcheck = app.add_subcommand("selfcheck", "run the property suites of every module");
    bool no_oracle = false, tamper = false;
    selfcheck->add_flag("--no-oracle", no_oracle, "skip the numeric and brute-force suites");
    selfcheck->add_flag("--tamper-psi", tamper, "mutation check: perturb a Psi coefficient");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex) == 0 ? kExitOk : kExitOperational;
    }

    try {
        Settings settings;
        if (config_path.empty())
            if (const char* p = std::getenv("THRESHCERT_CONFIG"); p && *p) config_path = p;
        if (!config_path.empty()) settings.load_file(config_path);
        settings.resolve(jobs_opt, "jobs", cfg.jobs);
        settings.resolve(budget_opt, "refine_budget", cfg.refine_budget);
        settings.resolve(format_opt, "format", cfg.format);
        settings.resolve(out_opt, "out_dir", cfg.out_dir);
        settings.resolve(timing_opt, "timing", cfg.timing);
        if (cfg.jobs < 1) throw InvalidArgument("jobs must be at least 1");
        if (cfg.refine_budget < 1) throw InvalidArgument("refine_budget must be positive");

        if (*params) return cmd_params(parse_e_range(e_text), cfg.format);
        if (*build) {
            if (family == "steps" && steps_text.empty()) throw InvalidArgument("--family steps needs --steps");
            return cmd_build(family, n, e, steps_text, output);
        }
        if (*enumerate) return cmd_enumerate(e, enum_all, enum_count, enum_resume);
        if (*certify) return cmd_certify(parse_e_range(e_text), cfg, cf);
        if (*table) return cmd_table(parse_e_range(e_text), cfg, digits);
        if (*cls) return cmd_classify(n, e, unsafe, cfg);
        if (*oracle) {
            if (graph6.empty() && (n == 0 || oracle->count("--e") == 0))
                throw InvalidArgument("oracle needs --graph6 or both --n and --e");
            return cmd_oracle(n, e, graph6, max_subsets, cfg);
        }
        if (*selfcheck) return cmd_selfcheck(no_oracle, tamper, cfg);
    } catch (const VerificationFailed& ex) {
        std::cerr << "verification failed: " << ex.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitOperational;
    }
    return kExitOperational;
}
