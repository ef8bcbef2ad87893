#include "run.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ballvol/codes.hpp"
#include "ballvol/conditions.hpp"
#include "ballvol/hardcore.hpp"
#include "ballvol/intersect.hpp"
#include "ballvol/listdecode.hpp"
#include "ballvol/spherical.hpp"
#include "output.hpp"

namespace {

using namespace ballvol;

struct SpaceOpts {
    std::string kind = "hamming";
    int q = 2;
    int n = 4;
    int w = 2;
};

void add_space_options(CLI::App* cmd, SpaceOpts& o) {
    cmd->add_option("--space", o.kind, "hamming | johnson | permutation")
        ->capture_default_str();
    cmd->add_option("--q", o.q, "alphabet size (hamming)")->capture_default_str();
    cmd->add_option("--n", o.n, "word length / ground-set size")->required();
    cmd->add_option("--w", o.w, "subset weight (johnson)")->capture_default_str();
}

SpaceSpec make_space(const SpaceOpts& o) {
    if (o.kind == "hamming") return SpaceSpec::hamming(o.q, o.n);
    if (o.kind == "johnson") return SpaceSpec::johnson(o.n, o.w);
    if (o.kind == "permutation") return SpaceSpec::permutation(o.n);
    throw std::invalid_argument("unknown space: " + o.kind);
}

Json space_json(const SpaceSpec& s) {
    Json j;
    j["space"] = s.kind_name();
    j["n"] = s.n;
    if (s.kind == SpaceKind::hamming) j["q"] = s.q;
    if (s.kind == SpaceKind::johnson) j["w"] = s.w;
    return j;
}

// "a", "a:b", or "a:b:step"
std::vector<int> parse_int_range(const std::string& text) {
    std::vector<long> part;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ':')) part.push_back(std::stol(tok));
    if (part.empty() || part.size() > 3)
        throw std::invalid_argument("bad range (want a, a:b, or a:b:step): " + text);
    long lo = part[0];
    long hi = part.size() > 1 ? part[1] : lo;
    long step = part.size() > 2 ? part[2] : 1;
    if (step <= 0 || hi < lo) throw std::invalid_argument("bad range: " + text);
    std::vector<int> out;
    for (long v = lo; v <= hi; v += step) out.push_back(static_cast<int>(v));
    return out;
}

std::vector<double> parse_real_range(const std::string& text) {
    std::vector<double> part;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ':')) part.push_back(std::stod(tok));
    if (part.empty() || part.size() > 3)
        throw std::invalid_argument("bad range (want a, a:b, or a:b:step): " + text);
    double lo = part[0];
    double hi = part.size() > 1 ? part[1] : lo;
    double step = part.size() > 2 ? part[2] : 1.0;
    if (step <= 0.0 || hi < lo) throw std::invalid_argument("bad range: " + text);
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
    return out;
}

std::string ratio_string(const ExactRatio& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const char* check_name(BoundCheck c) {
    switch (c) {
        case BoundCheck::below: return "below";
        case BoundCheck::above: return "above";
        default: return "indeterminate";
    }
}

int verdict_code(Verdict v) { return v == Verdict::pass ? 0 : 1; }

int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// ---- subcommand payload builders ----------------------------------------

struct IoOpts {
    std::string format = "text";
    std::string output;
};

void add_io_options(CLI::App* cmd, IoOpts& io) {
    cmd->add_option("--format", io.format, "text | csv | json")->capture_default_str();
    cmd->add_option("--output", io.output, "write payload to this file instead of stdout");
}

int cmd_volume(const SpaceOpts& so, int r, bool by_shell, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    VolumeProfile prof = ball_volume(s, r);
    Json config = space_json(s);
    config["command"] = "volume";
    config["r"] = r;
    config["by-shell"] = by_shell;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["volume"] = to_decimal_string(prof.volume);
        Json shells = Json::array();
        for (std::size_t i = 0; i < prof.shell_volumes.size(); ++i)
            shells.push_back({{"rho", i}, {"size", to_decimal_string(prof.shell_volumes[i])}});
        doc["shells"] = shells;
        payload = doc.dump(2);
    } else if (fmt == Format::csv || by_shell) {
        std::ostringstream out;
        out << "rho,shell_volume,cumulative\n";
        BigCount cum = 0;
        for (std::size_t i = 0; i < prof.shell_volumes.size(); ++i) {
            cum += prof.shell_volumes[i];
            out << i << ',' << to_decimal_string(prof.shell_volumes[i]) << ','
                << to_decimal_string(cum) << '\n';
        }
        payload = out.str();
    } else {
        payload = to_decimal_string(prof.volume);
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

int cmd_intersect(const SpaceOpts& so, int r, int k, bool brute, std::uint64_t enum_cap,
                  const IoOpts& io) {
    SpaceSpec s = make_space(so);
    BigCount vol = brute ? intersection_volume_bruteforce(s, origin_point(s),
                                                          canonical_partner(s, k), r, enum_cap)
                         : intersection_volume(s, r, k, enum_cap);
    Json config = space_json(s);
    config["command"] = "intersect";
    config["r"] = r;
    config["k"] = k;
    config["brute"] = brute;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["intersection"] = to_decimal_string(vol);
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        payload = "k,intersection\n" + std::to_string(k) + "," + to_decimal_string(vol) + "\n";
    } else {
        payload = to_decimal_string(vol);
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

int cmd_decay(const SpaceOpts& so, int r, const std::string& k_range, const std::string& mode,
              const SampleBudget& budget, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    MeasureMode mm = mode == "mc" ? MeasureMode::monte_carlo : MeasureMode::exact;
    if (mode != "mc" && mode != "exact")
        throw std::invalid_argument("decay: --mode must be exact or mc");
    DecayReport rep = decay_profile(s, r, parse_int_range(k_range), mm, budget);
    bool pass = decay_pass(rep);

    Json config = space_json(s);
    config["command"] = "decay";
    config["r"] = r;
    config["k"] = k_range;
    config["mode"] = mode;
    config["samples"] = budget.samples;
    config["seed"] = budget.seed;
    config["jobs"] = budget.jobs;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        Json pts = Json::array();
        for (const DecayPoint& p : rep.points)
            pts.push_back({{"k", p.k},
                           {"ratio", p.ratio},
                           {"logRatio", p.log_ratio},
                           {"excluded", p.excluded}});
        doc["points"] = pts;
        doc["fit"] = {{"slope", rep.fitted_slope},
                      {"rSquared", rep.r_squared},
                      {"points", rep.fitted_points}};
        doc["pass"] = pass;
        if (!rep.note.empty()) doc["note"] = rep.note;
        payload = doc.dump(2);
    } else {
        std::ostringstream out;
        if (mm == MeasureMode::monte_carlo) out << config_comment(config) << '\n';
        out << "k,ratio,log_ratio,excluded\n";
        for (const DecayPoint& p : rep.points)
            out << p.k << ',' << fmt_double(p.ratio) << ',' << fmt_double(p.log_ratio) << ','
                << (p.excluded ? 1 : 0) << '\n';
        out << "# fit slope=" << fmt_double(rep.fitted_slope)
            << " r_squared=" << fmt_double(rep.r_squared) << " points=" << rep.fitted_points
            << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "decay: slope " << rep.fitted_slope << ", r^2 " << rep.r_squared << ", "
              << (pass ? "pass" : "fail") << '\n';
    return pass ? 0 : 1;
}

int cmd_growth(const SpaceOpts& so, int r, int t_max, double rate_floor, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    if (t_max < 0) t_max = r - 1;
    GrowthReport rep = verify_growth(s, r, t_max, rate_floor);

    Json config = space_json(s);
    config["command"] = "growth";
    config["r"] = r;
    config["t-max"] = t_max;
    config["rate-floor"] = rate_floor;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        Json pts = Json::array();
        for (const GrowthPoint& p : rep.rate_points)
            pts.push_back({{"t", p.t},
                           {"ratio", ratio_string(p.ratio)},
                           {"ratioValue", p.ratio.get_d()},
                           {"check", check_name(p.check)}});
        doc["points"] = pts;
        doc["fittedRate"] = rep.fitted_rate;
        doc["rateFloor"] = rep.rate_floor;
        doc["verdict"] = to_string(rep.verdict);
        if (!rep.note.empty()) doc["note"] = rep.note;
        payload = doc.dump(2);
    } else {
        std::ostringstream out;
        out << "t,ratio_num,ratio_den,ratio,check\n";
        for (const GrowthPoint& p : rep.rate_points)
            out << p.t << ',' << p.ratio.get_num().get_str() << ','
                << p.ratio.get_den().get_str() << ',' << fmt_double(p.ratio.get_d()) << ','
                << check_name(p.check) << '\n';
        out << "# fitted_rate=" << fmt_double(rep.fitted_rate)
            << " rate_floor=" << fmt_double(rep.rate_floor)
            << " verdict=" << to_string(rep.verdict) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "growth: fitted rate " << rep.fitted_rate << ", "
              << to_string(rep.verdict) << '\n';
    return verdict_code(rep.verdict);
}

int cmd_dispersal(const SpaceOpts& so, int r, int k, double alpha, bool alpha_given,
                  const std::string& mode, const SampleBudget& budget, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    if (mode != "mc" && mode != "exact")
        throw std::invalid_argument("dispersal: --mode must be exact or mc");
    if (!alpha_given) alpha = default_alpha(s, r);
    MeasureMode mm = mode == "mc" ? MeasureMode::monte_carlo : MeasureMode::exact;
    DispersalReport rep = verify_dispersal(s, r, k, alpha, mm, budget);

    Json config = space_json(s);
    config["command"] = "dispersal";
    config["r"] = r;
    config["k"] = k;
    config["alpha"] = alpha;
    config["mode"] = mode;
    config["samples"] = budget.samples;
    config["seed"] = budget.seed;
    config["jobs"] = budget.jobs;
    Format fmt = parse_format(io.format);

    const double threshold = 2.0 * alpha * k;
    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        Json pts = Json::array();
        for (const OffsetMean& m : rep.per_offset_means)
            pts.push_back({{"i", m.i},
                           {"mean", m.mean},
                           {"stderr", m.stderr_},
                           {"mode", m.kind == MeasureMode::exact ? "exact" : "mc"}});
        doc["offsets"] = pts;
        doc["threshold"] = threshold;
        doc["verdict"] = to_string(rep.verdict);
        if (!rep.note.empty()) doc["note"] = rep.note;
        payload = doc.dump(2);
    } else {
        std::ostringstream out;
        if (mm == MeasureMode::monte_carlo) out << config_comment(config) << '\n';
        out << "i,mean,stderr,threshold\n";
        for (const OffsetMean& m : rep.per_offset_means)
            out << m.i << ',' << fmt_double(m.mean) << ',' << fmt_double(m.stderr_) << ','
                << fmt_double(threshold) << '\n';
        out << "# verdict=" << to_string(rep.verdict) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "dispersal: " << to_string(rep.verdict) << '\n';
    return verdict_code(rep.verdict);
}

double default_claimed_k(const SpaceSpec& s, int r, int k) {
    switch (s.kind) {
        case SpaceKind::hamming: return 400.0 * k;
        case SpaceKind::johnson: return 8.0 * r;
        default: return 72.0 * r;
    }
}

int cmd_subgaussian(const SpaceOpts& so, int r, int k, int i, double claimed,
                    bool claimed_given, const SampleBudget& budget, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    if (!claimed_given) claimed = default_claimed_k(s, r, k);
    SubgaussianReport rep = verify_subgaussian(s, r, k, i, claimed, budget);

    Json config = space_json(s);
    config["command"] = "subgaussian";
    config["r"] = r;
    config["k"] = k;
    config["i"] = i;
    config["claimed-k"] = claimed;
    config["samples"] = budget.samples;
    config["seed"] = budget.seed;
    config["jobs"] = budget.jobs;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        Json rows = Json::array();
        for (const ThresholdCheck& c : rep.checks)
            rows.push_back({{"t", c.t},
                            {"frequency", c.frequency},
                            {"bound", c.bound},
                            {"stderr", c.stderr_},
                            {"ok", c.ok}});
        doc["thresholds"] = rows;
        doc["mean"] = rep.empirical_tail.mean;
        doc["variance"] = rep.empirical_tail.variance;
        doc["fittedK"] = rep.fitted_k;
        doc["claimedK"] = rep.claimed_k;
        doc["verdict"] = to_string(rep.verdict);
        payload = doc.dump(2);
    } else {
        std::ostringstream out;
        out << config_comment(config) << '\n';
        out << "t,frequency,bound,stderr,ok\n";
        for (const ThresholdCheck& c : rep.checks)
            out << c.t << ',' << fmt_double(c.frequency) << ',' << fmt_double(c.bound) << ','
                << fmt_double(c.stderr_) << ',' << (c.ok ? 1 : 0) << '\n';
        out << "# fitted_k=" << fmt_double(rep.fitted_k)
            << " claimed_k=" << fmt_double(rep.claimed_k)
            << " verdict=" << to_string(rep.verdict) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "subgaussian: fitted K " << rep.fitted_k << " vs claimed " << claimed << ", "
              << to_string(rep.verdict) << '\n';
    return verdict_code(rep.verdict);
}

int cmd_graph(const SpaceOpts& so, int r, int audit_t, const GraphCaps& caps,
              const IoOpts& io) {
    SpaceSpec s = make_space(so);
    BallGraph g = build_ball_graph(s, r, caps);

    Json config = space_json(s);
    config["command"] = "graph";
    config["r"] = r;
    if (audit_t >= 0) config["audit-t"] = audit_t;
    Format fmt = parse_format(io.format);

    Json doc;
    doc["config"] = config;
    doc["vertices"] = g.n_vertices;
    doc["maxDegree"] = g.max_degree;
    doc["minDegree"] = g.min_degree;
    doc["materialized"] = g.materialized;
    if (audit_t >= 0) {
        SparsityAudit audit = audit_sparsity(g, origin_point(s), audit_t);
        doc["audit"] = {{"t", audit.t},
                        {"sizeB", audit.size_b},
                        {"sizeI", audit.size_i},
                        {"maxDegInB", audit.max_deg_in_b},
                        {"impliedK", audit.implied_k},
                        {"gammaEdges", to_decimal_string(audit.gamma_edge_count)}};
    }

    std::string payload;
    if (fmt == Format::json) {
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        std::ostringstream out;
        out << "vertices,max_degree,min_degree,materialized\n"
            << g.n_vertices << ',' << g.max_degree << ',' << g.min_degree << ','
            << (g.materialized ? 1 : 0) << '\n';
        payload = out.str();
    } else {
        std::ostringstream out;
        out << "vertices " << g.n_vertices << "\nmax_degree " << g.max_degree
            << "\nmin_degree " << g.min_degree << "\nmaterialized "
            << (g.materialized ? "yes" : "no") << '\n';
        if (doc.contains("audit")) {
            const Json& a = doc["audit"];
            out << "audit t " << audit_t << "\nsize_b " << a["sizeB"] << "\nsize_i "
                << a["sizeI"] << "\nmax_deg_in_b " << a["maxDegInB"] << "\nimplied_k "
                << a["impliedK"] << "\ngamma_edges " << a["gammaEdges"].get<std::string>()
                << '\n';
        }
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

CodeMethod parse_method(const std::string& name) {
    if (name == "greedy") return CodeMethod::greedy_maximal;
    if (name == "degeneracy") return CodeMethod::degeneracy_order;
    if (name == "exact") return CodeMethod::exact_branch_bound;
    throw std::invalid_argument("unknown method: " + name + " (greedy | degeneracy | exact)");
}

int cmd_code(const SpaceOpts& so, int r, const std::string& method, std::uint64_t seed,
             const GraphCaps& caps, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    BallGraph g = build_ball_graph(s, r, caps);
    CodeResult res = construct_code(g, parse_method(method), seed);

    Json config = space_json(s);
    config["command"] = "code";
    config["r"] = r;
    config["method"] = method;
    config["seed"] = seed;
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["size"] = res.size;
        doc["sphereCoveringBound"] = res.sphere_covering_bound;
        doc["improvementFactor"] = res.improvement_factor;
        doc["verifiedIndependent"] = res.verified_independent;
        Json words = Json::array();
        for (std::uint32_t v : res.codewords)
            words.push_back(format_point(s, point_at_rank(s, v)));
        doc["codewords"] = words;
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        std::ostringstream out;
        out << "n,points,ball_volume,sphere_covering_bound,size,improvement_factor\n";
        out << s.n << ',' << to_decimal_string(s.point_count()) << ','
            << to_decimal_string(ball_volume(s, r).volume) << ','
            << fmt_double(res.sphere_covering_bound) << ',' << res.size << ','
            << fmt_double(res.improvement_factor) << '\n';
        payload = out.str();
    } else {
        std::ostringstream out;
        for (std::uint32_t v : res.codewords)
            out << format_point(s, point_at_rank(s, v)) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "code: " << res.size << " words via " << to_string(res.method)
              << ", sphere-covering floor " << res.sphere_covering_bound << " (x"
              << res.improvement_factor << ")\n";
    return 0;
}

int cmd_hardcore(const SpaceOpts& so, int r, double lambda, std::uint64_t steps,
                 std::uint64_t seed, bool with_exact, const GraphCaps& caps, const IoOpts& io) {
    SpaceSpec s = make_space(so);
    BallGraph g = build_ball_graph(s, r, caps);
    HardcoreEstimate est = hardcore_estimate(g, lambda, steps, seed);

    Json config = space_json(s);
    config["command"] = "hardcore";
    config["r"] = r;
    config["lambda"] = lambda;
    config["steps"] = steps;
    config["seed"] = seed;
    config["exact"] = with_exact;
    Format fmt = parse_format(io.format);

    Json doc;
    doc["config"] = config;
    doc["estimate"] = {{"occupancy", est.mean_occupancy}, {"stderr", est.std_error},
                       {"steps", est.steps},             {"burnIn", est.burn_in},
                       {"batches", est.batches},         {"batchSpread", est.batch_spread}};
    int rc = 0;
    if (with_exact) {
        PartitionResult ex = count_independent_sets_exact(g, lambda);
        doc["exact"] = {{"partitionFunction", ex.partition_function},
                        {"occupancy", ex.occupancy},
                        {"logCount", ex.log_count}};
        double gap = std::abs(est.mean_occupancy - ex.occupancy);
        bool ok = gap <= 3.0 * est.std_error;
        doc["withinThreeSigma"] = ok;
        rc = ok ? 0 : 1;
    }

    std::string payload;
    if (fmt == Format::json) {
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        std::ostringstream out;
        out << config_comment(config) << '\n';
        out << "occupancy,stderr,exact_occupancy,within_3sigma\n";
        out << fmt_double(est.mean_occupancy) << ',' << fmt_double(est.std_error) << ',';
        if (with_exact)
            out << fmt_double(doc["exact"]["occupancy"].get<double>()) << ','
                << (doc["withinThreeSigma"].get<bool>() ? 1 : 0);
        else
            out << ',';
        out << '\n';
        payload = out.str();
    } else {
        std::ostringstream out;
        out << config_comment(config) << '\n';
        out << "occupancy " << fmt_double(est.mean_occupancy) << "\nstderr "
            << fmt_double(est.std_error) << "\nbatch_spread " << fmt_double(est.batch_spread)
            << '\n';
        if (with_exact) {
            out << "exact_occupancy " << fmt_double(doc["exact"]["occupancy"].get<double>())
                << "\nexact_log_count " << fmt_double(doc["exact"]["logCount"].get<double>())
                << "\nwithin_3sigma " << (rc == 0 ? "yes" : "no") << '\n';
        }
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "hardcore: occupancy " << est.mean_occupancy << " +- " << est.std_error
              << '\n';
    return rc;
}

struct ListDecodeOpts {
    int q = 2;
    int n = 10;
    double p = 0.3;
    double epsilon = 0.05;
    double c = 0.1;
    int L = -1;                   // -1: auto
    std::uint64_t messages = 0;   // 0: auto
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

ListDecodeParams resolve_params(const ListDecodeOpts& o) {
    ListDecodeParams params = derive_list_params(o.q, o.n, o.p, o.epsilon, o.c);
    if (o.L > 0) params.L = o.L;
    if (o.messages > 0) params.message_count = BigCount(static_cast<unsigned long>(o.messages));
    return params;
}

Json listdecode_config(const ListDecodeOpts& o, const char* mode) {
    Json config;
    config["command"] = "listdecode";
    config["mode"] = mode;
    config["q"] = o.q;
    config["n"] = o.n;
    config["p"] = o.p;
    config["epsilon"] = o.epsilon;
    config["c"] = o.c;
    if (o.L > 0) config["L"] = o.L;
    if (o.messages > 0) config["messages"] = o.messages;
    config["trials"] = o.trials;
    config["seed"] = o.seed;
    return config;
}

int cmd_listdecode_mu(const ListDecodeOpts& o, const IoOpts& io) {
    ExactRatio mu = compute_mu(o.q, o.n, o.p);
    Json config;
    config["command"] = "listdecode";
    config["mode"] = "mu";
    config["q"] = o.q;
    config["n"] = o.n;
    config["p"] = o.p;
    Format fmt = parse_format(io.format);
    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["mu"] = ratio_string(mu);
        doc["value"] = mu.get_d();
        payload = doc.dump(2);
    } else {
        payload = ratio_string(mu);
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

int cmd_listdecode_event(const ListDecodeOpts& o, int ell, const IoOpts& io) {
    ListDecodeParams params = resolve_params(o);
    ExactRatio exact = event_probability(o.q, o.n, o.p, params.L, ell);
    Json config = listdecode_config(o, "event");
    config["ell"] = ell;
    Format fmt = parse_format(io.format);

    Json doc;
    doc["config"] = config;
    doc["L"] = params.L;
    doc["ell"] = ell;
    doc["exact"] = ratio_string(exact);
    doc["value"] = exact.get_d();
    int rc = 0;
    if (ell >= 1) {
        EventBounds b = lemma_bounds(params, ell);
        doc["powerBound"] = b.power_bound;
        doc["growthBound"] = b.growth_bound;
        doc["minBound"] = b.minimum;
        bool within = exact.get_d() <= b.minimum;
        doc["withinBound"] = within;
        rc = within ? 0 : 1;
    }

    std::string payload;
    if (fmt == Format::json) {
        payload = doc.dump(2);
    } else {
        std::ostringstream out;
        out << "exact " << doc["exact"].get<std::string>() << "\nvalue "
            << fmt_double(doc["value"].get<double>()) << '\n';
        if (doc.contains("minBound"))
            out << "power_bound " << fmt_double(doc["powerBound"].get<double>())
                << "\ngrowth_bound " << fmt_double(doc["growthBound"].get<double>())
                << "\nwithin_bound " << (rc == 0 ? "yes" : "no") << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    return rc;
}

std::string witness_csv_row(const WitnessStats& st) {
    std::ostringstream out;
    out << st.params.q << ',' << st.params.n << ',' << fmt_double(st.params.p) << ','
        << fmt_double(st.params.epsilon) << ',' << st.params.L << ','
        << st.mu.get_num().get_str() << ',' << st.mu.get_den().get_str() << ',' << st.trials
        << ',' << fmt_double(st.prob_not_list_decodable) << ',' << fmt_double(st.prob_std_error)
        << ',' << fmt_double(st.chebyshev_zero_bound) << '\n';
    return out.str();
}

constexpr const char* witness_csv_header =
    "q,n,p,epsilon,L,mu_num,mu_den,trials,prob_fail,stderr,chebyshev_bound\n";

int cmd_listdecode_experiment(const ListDecodeOpts& o, const IoOpts& io) {
    ListDecodeParams params = resolve_params(o);
    WitnessStats st = witness_experiment(params, o.trials, o.seed);
    Json config = listdecode_config(o, "experiment");
    Format fmt = parse_format(io.format);

    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["mu"] = ratio_string(st.mu);
        doc["radius"] = params.radius;
        doc["L"] = params.L;
        doc["messageCount"] = to_decimal_string(params.message_count);
        doc["expectedWitnesses"] = {{"exact", ratio_string(st.expected_witnesses)},
                                    {"value", st.expected_witnesses.get_d()}};
        doc["witnessVariance"] = {{"exact", ratio_string(st.witness_variance)},
                                  {"value", st.witness_variance.get_d()}};
        doc["chebyshevZeroBound"] = st.chebyshev_zero_bound;
        doc["meanWitnesses"] = st.mean_witnesses;
        doc["witnessStdError"] = st.witness_std_error;
        doc["probNotListDecodable"] = st.prob_not_list_decodable;
        doc["probStdError"] = st.prob_std_error;
        Json hist;
        for (auto& [w, count] : st.witness_histogram) hist[std::to_string(w)] = count;
        doc["histogram"] = hist;
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        payload = config_comment(config) + "\n" + witness_csv_header + witness_csv_row(st);
    } else {
        std::ostringstream out;
        out << config_comment(config) << '\n';
        out << "mu " << ratio_string(st.mu) << "\nmessage_count "
            << to_decimal_string(params.message_count) << "\nL " << params.L
            << "\nexpected_witnesses " << fmt_double(st.expected_witnesses.get_d())
            << "\nmean_witnesses " << fmt_double(st.mean_witnesses) << "\nwitness_stderr "
            << fmt_double(st.witness_std_error) << "\nprob_not_list_decodable "
            << fmt_double(st.prob_not_list_decodable) << "\nprob_stderr "
            << fmt_double(st.prob_std_error) << "\nchebyshev_zero_bound "
            << fmt_double(st.chebyshev_zero_bound) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    std::cerr << "listdecode: P(W>=1) = " << st.prob_not_list_decodable << " +- "
              << st.prob_std_error << '\n';
    return 0;
}

int cmd_spherical(int n, double theta, bool check, double overlap_sep, bool overlap_given,
                  std::uint64_t samples, std::uint64_t seed, const IoOpts& io) {
    Json config;
    config["command"] = "spherical";
    config["n"] = n;
    config["theta"] = theta;
    Format fmt = parse_format(io.format);

    if (check) {
        config["mode"] = "check";
        config["samples"] = samples;
        config["seed"] = seed;
        CapIntersectionReport rep = verify_cap_intersection(n, theta, samples, seed);
        std::string payload;
        if (fmt == Format::json) {
            Json doc;
            doc["config"] = config;
            doc["sTheta"] = rep.s_theta;
            doc["qTheta"] = rep.q_theta;
            doc["bound"] = rep.bound;
            doc["meanOverlap"] = rep.mean_overlap;
            doc["stderr"] = rep.std_error;
            doc["acceptanceRate"] = rep.acceptance_rate;
            doc["verdict"] = to_string(rep.verdict);
            payload = doc.dump(2);
        } else {
            std::ostringstream out;
            out << config_comment(config) << '\n';
            out << "s_theta " << fmt_double(rep.s_theta) << "\nq_theta "
                << fmt_double(rep.q_theta) << "\nbound " << fmt_double(rep.bound)
                << "\nmean_overlap " << fmt_double(rep.mean_overlap) << "\nstderr "
                << fmt_double(rep.std_error) << "\nverdict " << to_string(rep.verdict) << '\n';
            payload = out.str();
        }
        emit(payload, io.output, config, fmt);
        std::cerr << "spherical: overlap " << rep.mean_overlap << " vs bound " << rep.bound
                  << ", " << to_string(rep.verdict) << '\n';
        return verdict_code(rep.verdict);
    }

    if (overlap_given) {
        config["mode"] = "overlap";
        config["separation"] = overlap_sep;
        config["samples"] = samples;
        config["seed"] = seed;
        double est = cap_overlap_mc(n, theta, overlap_sep, samples, seed);
        std::string payload;
        if (fmt == Format::json) {
            Json doc;
            doc["config"] = config;
            doc["overlap"] = est;
            payload = doc.dump(2);
        } else {
            payload = fmt_double(est);
        }
        emit(payload, io.output, config, fmt);
        return 0;
    }

    config["mode"] = "table";
    SphericalBounds b = bound_table(n, theta);
    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["sTheta"] = b.s_theta;
        doc["qTheta"] = b.q_theta;
        doc["cTheta"] = b.c_theta;
        doc["gklpConstant"] = b.gklp_constant;
        doc["coveringBound"] = b.covering_bound;
        doc["jjpBound"] = b.jjp_bound;
        doc["gklpBound"] = b.gklp_bound;
        payload = doc.dump(2);
    } else if (fmt == Format::csv) {
        std::ostringstream out;
        out << "n,theta,s_theta,q_theta,c_theta,gklp,covering,jjp,gklp_bound\n";
        out << n << ',' << fmt_double(theta) << ',' << fmt_double(b.s_theta) << ','
            << fmt_double(b.q_theta) << ',' << fmt_double(b.c_theta) << ','
            << fmt_double(b.gklp_constant) << ',' << fmt_double(b.covering_bound) << ','
            << fmt_double(b.jjp_bound) << ',' << fmt_double(b.gklp_bound) << '\n';
        payload = out.str();
    } else {
        std::ostringstream out;
        out << "s_theta " << fmt_double(b.s_theta) << "\nq_theta " << fmt_double(b.q_theta)
            << "\nc_theta " << fmt_double(b.c_theta) << "\ngklp_constant "
            << fmt_double(b.gklp_constant) << "\ncovering_bound "
            << fmt_double(b.covering_bound) << "\njjp_bound " << fmt_double(b.jjp_bound)
            << "\ngklp_bound " << fmt_double(b.gklp_bound) << '\n';
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

struct SweepOpts {
    std::string kind = "code";
    SpaceOpts space;
    std::string n_range = "8:16:2";
    double p = 0.25;
    std::string method = "greedy";
    std::string theta_range = "0.5";
    ListDecodeOpts ld;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100'000;
};

int cmd_sweep(const SweepOpts& o, const GraphCaps& caps, const IoOpts& io) {
    Format fmt = parse_format(io.format);
    Json config;
    config["command"] = "sweep";
    config["kind"] = o.kind;
    std::ostringstream out;

    if (o.kind == "code") {
        config["space"] = o.space.kind;
        config["q"] = o.space.q;
        config["n"] = o.n_range;
        config["p"] = o.p;
        config["method"] = o.method;
        config["seed"] = o.seed;
        out << config_comment(config) << '\n';
        out << "n,points,ball_volume,sphere_covering_bound,size,improvement_factor\n";
        for (int n : parse_int_range(o.n_range)) {
            SpaceOpts so = o.space;
            so.n = n;
            so.w = n / 2;
            SpaceSpec s = make_space(so);
            int r = static_cast<int>(std::floor(o.p * n + 1e-9));
            BallGraph g = build_ball_graph(s, r, caps);
            CodeResult res = construct_code(g, parse_method(o.method), o.seed);
            out << n << ',' << to_decimal_string(s.point_count()) << ','
                << to_decimal_string(ball_volume(s, r).volume) << ','
                << fmt_double(res.sphere_covering_bound) << ',' << res.size << ','
                << fmt_double(res.improvement_factor) << '\n';
        }
    } else if (o.kind == "spherical") {
        config["n"] = o.n_range;
        config["theta"] = o.theta_range;
        out << "n,theta,s_theta,q_theta,c_theta,gklp,covering,jjp,gklp_bound\n";
        for (int n : parse_int_range(o.n_range))
            for (double theta : parse_real_range(o.theta_range)) {
                SphericalBounds b = bound_table(n, theta);
                out << n << ',' << fmt_double(theta) << ',' << fmt_double(b.s_theta) << ','
                    << fmt_double(b.q_theta) << ',' << fmt_double(b.c_theta) << ','
                    << fmt_double(b.gklp_constant) << ',' << fmt_double(b.covering_bound)
                    << ',' << fmt_double(b.jjp_bound) << ',' << fmt_double(b.gklp_bound)
                    << '\n';
            }
    } else if (o.kind == "listdecode") {
        config["q"] = o.ld.q;
        config["n"] = o.n_range;
        config["p"] = o.ld.p;
        config["epsilon"] = o.ld.epsilon;
        config["c"] = o.ld.c;
        if (o.ld.L > 0) config["L"] = o.ld.L;
        config["trials"] = o.ld.trials;
        config["seed"] = o.ld.seed;
        out << config_comment(config) << '\n';
        out << witness_csv_header;
        for (int n : parse_int_range(o.n_range)) {
            ListDecodeOpts ld = o.ld;
            ld.n = n;
            WitnessStats st = witness_experiment(resolve_params(ld), ld.trials, ld.seed);
            out << witness_csv_row(st);
        }
    } else {
        throw std::invalid_argument("sweep: --kind must be code, spherical, or listdecode");
    }

    // sweeps are tables; csv and text coincide, json wraps the same rows
    std::string payload;
    if (fmt == Format::json) {
        Json doc;
        doc["config"] = config;
        doc["table"] = out.str();
        payload = doc.dump(2);
    } else {
        payload = out.str();
    }
    emit(payload, io.output, config, fmt);
    return 0;
}

// Config-file mode: the JSON object holds "command" plus option values keyed
// by long-option name; scalars only, ranges as their string spelling.
std::vector<std::string> args_from_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    Json doc = Json::parse(in);
    if (!doc.contains("command"))
        throw std::invalid_argument("config file lacks a \"command\" entry");
    std::vector<std::string> args;
    args.push_back(doc["command"].get<std::string>());
    for (auto& [key, value] : doc.items()) {
        if (key == "command") continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
        } else if (value.is_string()) {
            args.push_back("--" + key);
            args.push_back(value.get<std::string>());
        } else if (value.is_number_float()) {
            args.push_back("--" + key);
            args.push_back(fmt_double(value.get<double>()));
        } else {
            args.push_back("--" + key);
            args.push_back(value.dump());
        }
    }
    return args;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact and statistical geometry of balls in discrete metric spaces"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "run one command described by a JSON config file");

    SpaceOpts so;
    IoOpts io;
    int r = 0, k = 0, i = 0, t_max = -1, audit_t = -1, ell = -1, sph_n = 10, opt_L = -1;
    bool by_shell = false, brute = false, with_exact = false, check = false, mu_only = false;
    double rate_floor = 0.01, alpha = 0.0, claimed = 0.0, lambda = 1.0, theta = 0.0;
    double overlap_sep = 0.0;
    std::string mode = "exact", method = "greedy", k_range;
    SampleBudget budget;
    budget.jobs = default_jobs();
    GraphCaps caps;
    std::uint64_t steps = 200'000, seed = 0, samples = 100'000, trials = 1000, messages = 0;
    ListDecodeOpts ld;
    SweepOpts sweep;

    int rc = 0;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--samples", budget.samples, "Monte Carlo sample count")
            ->envname("BALLVOL_SAMPLES")
            ->capture_default_str();
        cmd->add_option("--seed", budget.seed, "PRNG seed")->capture_default_str();
        cmd->add_option("--enum-cap", budget.enum_cap, "enumeration budget")
            ->envname("BALLVOL_ENUM_CAP")
            ->capture_default_str();
        cmd->add_option("--jobs", budget.jobs, "worker threads (result-independent)")
            ->envname("BALLVOL_JOBS")
            ->capture_default_str();
    };
    auto add_caps = [&](CLI::App* cmd) {
        cmd->add_option("--max-vertices", caps.max_vertices, "graph vertex cap")
            ->envname("BALLVOL_MAX_VERTICES")
            ->capture_default_str();
        cmd->add_option("--max-adjacency", caps.max_adjacency_entries,
                        "materialized adjacency entry cap")
            ->capture_default_str();
    };

    // volume
    {
        auto* cmd = app.add_subcommand("volume", "exact ball volume, optionally per shell");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_flag("--by-shell", by_shell, "list shell volumes");
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_volume(so, r, by_shell, io); });
    }
    // intersect
    {
        auto* cmd = app.add_subcommand("intersect", "exact two-ball intersection volume");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_option("--k", k, "center distance")->required();
        cmd->add_flag("--brute", brute, "force full enumeration");
        cmd->add_option("--enum-cap", budget.enum_cap, "enumeration budget")
            ->envname("BALLVOL_ENUM_CAP")
            ->capture_default_str();
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_intersect(so, r, k, brute, budget.enum_cap, io); });
    }
    // decay
    {
        auto* cmd = app.add_subcommand(
            "decay", "intersection/ball ratio against center distance, with a line fit");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_option("--k", k_range, "center distances, start:end:step")->required();
        cmd->add_option("--mode", mode, "exact | mc")->capture_default_str();
        add_budget(cmd);
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_decay(so, r, k_range, mode, budget, io); });
    }
    // growth
    {
        auto* cmd = app.add_subcommand(
            "growth", "certify vol(r-t)/vol(r) <= 2 exp(-c t) and fit the rate c");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_option("--t-max", t_max, "largest shrink t (default r-1)");
        cmd->add_option("--rate-floor", rate_floor, "minimum acceptable rate")
            ->capture_default_str();
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_growth(so, r, t_max, rate_floor, io); });
    }
    // dispersal
    {
        auto* cmd = app.add_subcommand(
            "dispersal", "check the expected boundary drift on shells near the ball surface");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_option("--k", k, "center distance")->required();
        auto* aopt = cmd->add_option("--alpha", alpha, "dispersal constant (default per space)");
        cmd->add_option("--mode", mode, "exact | mc")->capture_default_str();
        add_budget(cmd);
        add_io_options(cmd, io);
        cmd->callback([&, aopt] {
            rc = cmd_dispersal(so, r, k, alpha, aopt->count() > 0, mode, budget, io);
        });
    }
    // subgaussian
    {
        auto* cmd = app.add_subcommand(
            "subgaussian", "empirical drift tails against the claimed subgaussian bound");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "ball radius")->required();
        cmd->add_option("--k", k, "center distance")->required();
        cmd->add_option("--i", i, "shell offset (samples from S(a, r-i))")
            ->capture_default_str();
        auto* copt =
            cmd->add_option("--claimed-k", claimed, "subgaussian constant (default per space)");
        add_budget(cmd);
        add_io_options(cmd, io);
        cmd->callback([&, copt] {
            rc = cmd_subgaussian(so, r, k, i, claimed, copt->count() > 0, budget, io);
        });
    }
    // graph
    {
        auto* cmd = app.add_subcommand("graph", "build the distance-r ball graph and report it");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "edge radius")->required();
        cmd->add_option("--audit-t", audit_t, "also audit neighborhood sparsity at this t");
        add_caps(cmd);
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_graph(so, r, audit_t, caps, io); });
    }
    // code
    {
        auto* cmd = app.add_subcommand("code", "construct a distance-(r+1) code greedily");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "packing radius")->required();
        cmd->add_option("--method", method, "greedy | degeneracy | exact")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "randomized tie-breaking when nonzero")
            ->capture_default_str();
        add_caps(cmd);
        add_io_options(cmd, io);
        cmd->callback([&] { rc = cmd_code(so, r, method, seed, caps, io); });
    }
    // hardcore
    {
        auto* cmd = app.add_subcommand(
            "hardcore", "Glauber estimate of hard-core occupancy on the ball graph");
        add_space_options(cmd, so);
        cmd->add_option("--r", r, "edge radius")->required();
        cmd->add_option("--lambda", lambda, "fugacity")->required();
        cmd->add_option("--steps", steps, "chain length (>= 100 N)")->capture_default_str();
        cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
        cmd->add_flag("--exact", with_exact,
                      "also compute the exact occupancy (N <= 40) and compare");
        add_caps(cmd);
        add_io_options(cmd, io);
        cmd->callback(
            [&] { rc = cmd_hardcore(so, r, lambda, steps, seed, with_exact, caps, io); });
    }
    // listdecode
    {
        auto* cmd = app.add_subcommand(
            "listdecode", "random-code witness counting and the covariance-lemma bounds");
        cmd->add_option("--q", ld.q, "alphabet size")->capture_default_str();
        cmd->add_option("--n", ld.n, "block length")->required();
        cmd->add_option("--p", ld.p, "error fraction")->capture_default_str();
        cmd->add_option("--epsilon", ld.epsilon, "rate slack")->capture_default_str();
        cmd->add_option("--c", ld.c, "ball-growth decay rate")->capture_default_str();
        cmd->add_option("--L", opt_L, "list size override");
        cmd->add_option("--messages", messages, "message count override");
        cmd->add_option("--trials", trials, "sampled codes")->capture_default_str();
        cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
        cmd->add_flag("--mu", mu_only, "print exact mu and stop");
        cmd->add_option("--ell", ell, "exact event probability at this overlap, with bounds");
        add_io_options(cmd, io);
        cmd->callback([&] {
            ld.L = opt_L;
            ld.messages = messages;
            ld.trials = trials;
            ld.seed = seed;
            if (mu_only)
                rc = cmd_listdecode_mu(ld, io);
            else if (ell >= 0)
                rc = cmd_listdecode_event(ld, ell, io);
            else
                rc = cmd_listdecode_experiment(ld, io);
        });
    }
    // spherical
    {
        auto* cmd = app.add_subcommand(
            "spherical", "cap areas, code-size bound table, and the intersection check");
        cmd->add_option("--n", sph_n, "ambient dimension")->required();
        cmd->add_option("--theta", theta, "cap angle in radians, in (0, pi/2)")->required();
        cmd->add_flag("--check", check, "Monte Carlo mean-intersection bound check");
        auto* oopt = cmd->add_option("--overlap", overlap_sep,
                                     "estimate two-cap overlap at this separation");
        cmd->add_option("--samples", samples, "Monte Carlo sample count")
            ->envname("BALLVOL_SAMPLES")
            ->capture_default_str();
        cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
        add_io_options(cmd, io);
        cmd->callback([&, oopt] {
            rc = cmd_spherical(sph_n, theta, check, overlap_sep, oopt->count() > 0, samples,
                               seed, io);
        });
    }
    // sweep
    {
        auto* cmd = app.add_subcommand("sweep", "comparison tables over parameter ranges");
        cmd->add_option("--kind", sweep.kind, "code | spherical | listdecode")
            ->capture_default_str();
        cmd->add_option("--space", sweep.space.kind, "space for code sweeps")
            ->capture_default_str();
        cmd->add_option("--q", sweep.space.q, "alphabet size")->capture_default_str();
        cmd->add_option("--n", sweep.n_range, "n range, start:end:step")->capture_default_str();
        cmd->add_option("--p", sweep.p, "radius fraction (code) / error fraction (listdecode)")
            ->capture_default_str();
        cmd->add_option("--method", sweep.method, "code construction method")
            ->capture_default_str();
        cmd->add_option("--theta", sweep.theta_range, "theta range for spherical sweeps")
            ->capture_default_str();
        cmd->add_option("--epsilon", sweep.ld.epsilon, "rate slack (listdecode)")
            ->capture_default_str();
        cmd->add_option("--c", sweep.ld.c, "decay rate (listdecode)")->capture_default_str();
        cmd->add_option("--L", opt_L, "list size override (listdecode)");
        cmd->add_option("--trials", sweep.ld.trials, "sampled codes per point")
            ->capture_default_str();
        cmd->add_option("--seed", sweep.seed, "PRNG seed")->capture_default_str();
        add_caps(cmd);
        add_io_options(cmd, io);
        cmd->callback([&] {
            sweep.ld.q = sweep.space.q;
            sweep.ld.p = sweep.p;
            sweep.ld.L = opt_L;
            sweep.ld.seed = sweep.seed;
            rc = cmd_sweep(sweep, caps, io);
        });
    }

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            if (app.get_subcommands().size() > 0)
                throw std::invalid_argument("--config replaces the command line; "
                                            "drop the other arguments");
            std::vector<std::string> args = args_from_config(config_path);
            std::vector<const char*> cargv;
            cargv.push_back(argv[0]);
            for (const std::string& a : args) cargv.push_back(a.c_str());
            return run(static_cast<int>(cargv.size()), cargv.data());
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
