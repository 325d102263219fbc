// Command-line front end: domain ingestion, subcommand dispatch, report files.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoperim/isoperim.hpp"

namespace {

using namespace isoperim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw Error("cannot parse number list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error("empty number list");
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content << "\n";
    else
        atomic_write_file(out_path, content + "\n");
}

struct CommonOpts {
    std::string domain_path;
    std::string out_path;
    std::string format = "json";
    int quad_order = 64;
    std::size_t series_n = 256;
    double tol = 1e-9;
    std::uint64_t seed = 1;
};

int run_verify(const CommonOpts& opts, double p) {
    const Domain d = load_domain(opts.domain_path);
    const DeficitReport rep = deficit(d, p, opts.tol, opts.quad_order);
    emit(to_json(rep).dump(), opts.out_path);
    return rep.verdict == Verdict::fails ? kExitViolation : kExitOk;
}

int run_scan(const CommonOpts& opts, const std::string& p_list) {
    const Domain d = load_domain(opts.domain_path);
    ScanResult scan;
    scan.name = "p_scan";
    scan.param_names = {"p"};
    bool violation = false;
    for (double p : parse_list(p_list)) {
        const DeficitReport rep = deficit(d, p, opts.tol, opts.quad_order);
        scan.rows.push_back(ScanRow{{p}, rep.lhs, rep.rhs, rep.deficit, rep.verdict});
        violation = violation || rep.verdict == Verdict::fails;
    }
    finalize_scan(scan);
    if (!opts.out_path.empty()) {
        atomic_write_file(opts.out_path, scan_csv(scan));
        std::cout << scan_summary_json(scan).dump() << "\n";
    } else if (opts.format == "csv") {
        std::cout << scan_csv(scan);
    } else {
        std::cout << scan_summary_json(scan).dump() << "\n";
    }
    return violation ? kExitViolation : kExitOk;
}

int run_replay(const CommonOpts& opts, double p) {
    const Domain d = load_domain(opts.domain_path);
    const ProofReplayReport rep = replay_proof(d, p, opts.series_n);
    emit(to_json(rep).dump(), opts.out_path);
    const double slack = std::fmax(opts.tol, 1e-6);
    const bool ok = rep.chain[0] <= rep.chain[1] + slack && rep.chain[1] <= rep.chain[2] + slack;
    return ok ? kExitOk : kExitViolation;
}

int run_hs(const CommonOpts& opts, const std::string& tf_path, double p,
           const std::string& eps_list, double ball_radius, bool has_q, double q) {
    if (has_q) {
        // CKN exponent algebra: (p, q) -> (alpha, gamma, r) plus admissibility.
        bool admissible = false;
        double alpha = 0.0, gamma = 0.0, r = 0.0;
        try {
            const ExponentTriple e = exponent_map(p, q);
            alpha = e.alpha;
            gamma = e.gamma;
            r = e.r;
            admissible = ckn_admissible(e);
        } catch (const RangeError&) {
            admissible = false;
        }
        emit(JsonValue::object({
                 {"p", JsonValue::number(p)},
                 {"q", JsonValue::number(q)},
                 {"alpha", JsonValue::number(alpha)},
                 {"gamma", JsonValue::number(gamma)},
                 {"r", JsonValue::number(r)},
                 {"admissible", JsonValue::boolean(admissible)},
             })
                 .dump(),
             opts.out_path);
        return kExitOk;
    }
    if (!eps_list.empty()) {
        const auto steps = extremal_sequence(p, ball_radius, parse_list(eps_list));
        if (!opts.out_path.empty()) {
            atomic_write_file(opts.out_path, extremal_csv(p, steps));
        } else {
            std::cout << extremal_csv(p, steps);
        }
        for (const ExtremalStep& s : steps)
            if (s.ratio >= 1.0) return kExitViolation;
        return kExitOk;
    }
    if (tf_path.empty()) throw Error("hs: needs --testfunction or --eps");
    const TestFunction u = load_test_function(tf_path);
    const HsRatio hr = hs_ratio(u, p, opts.quad_order);
    emit(JsonValue::object({
             {"p", JsonValue::number(p)},
             {"lhs", JsonValue::number(hr.lhs)},
             {"rhs", JsonValue::number(hr.rhs)},
             {"ratio", JsonValue::number(hr.ratio)},
         })
             .dump(),
         opts.out_path);
    return hr.ratio <= 1.0 + 1e-7 ? kExitOk : kExitViolation;
}

int run_green(const CommonOpts& opts, double beta, const std::string& x_spec) {
    const Domain d = load_domain(opts.domain_path);
    Vec2 x{0.0, 0.0};
    if (!x_spec.empty()) {
        const auto xs = parse_list(x_spec);
        if (xs.size() != 2) throw Error("green: --x expects \"x,y\"");
        x = Vec2{xs[0], xs[1]};
    }
    GreenFunction g = [&]() {
        if (d.is_disk() && d.as_disk().center.norm() == 0.0)
            return disk_green(d.as_disk().radius, x);
        if (x.norm() != 0.0)
            throw Error("green: off-origin singularities are only supported on centered disks");
        return star_green(d, opts.series_n);
    }();
    const FlucherBound bound = flucher_bound(g, beta);
    emit(to_json(bound, beta, g.singularity(), g.representation()).dump(), opts.out_path);
    return bound.lhs <= bound.rhs + 1e-7 ? kExitOk : kExitViolation;
}

int finish_scan_command(const CommonOpts& opts, const ScanResult& scan) {
    if (!opts.out_path.empty()) {
        atomic_write_file(opts.out_path, scan_csv(scan));
        std::cout << scan_summary_json(scan).dump() << "\n";
    } else if (opts.format == "csv") {
        std::cout << scan_csv(scan);
    } else {
        std::cout << scan_summary_json(scan).dump() << "\n";
    }
    for (const ScanRow& row : scan.rows)
        if (row.verdict == Verdict::fails) return kExitViolation;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for the weighted isoperimetric inequality "
                 "(|Omega|/pi)^((p+1)/2) <= (1/2pi) \\int |x|^p dsigma and its "
                 "Hardy-Sobolev and Green's-function companions"};
    app.require_subcommand(1);

    CommonOpts opts;
    double p_value = 0.0;
    std::string p_list;
    double beta = 0.0;
    double radius = 1.0;
    double amp = 0.1;
    int harmonics = 4;
    int samples = 100;
    std::string tf_path;
    std::string eps_list;
    std::string offsets;
    std::string x_spec;

    const auto add_common = [&](CLI::App* cmd, bool needs_domain) {
        if (needs_domain)
            cmd->add_option("--domain", opts.domain_path, "domain JSON file")->required();
        cmd->add_option("--quad-order", opts.quad_order, "quadrature panels per boundary loop");
        cmd->add_option("--series-n", opts.series_n, "conformal series order (power of two)");
        cmd->add_option("--tol", opts.tol, "verdict tolerance");
        cmd->add_option("--seed", opts.seed, "random seed");
        cmd->add_option("--out", opts.out_path, "output report path (atomic write)");
        cmd->add_option("--format", opts.format, "stdout payload: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "deficit report for one domain and exponent");
    add_common(verify, true);
    verify->add_option("--p", p_value, "perimeter exponent")->required();

    CLI::App* scan = app.add_subcommand("scan", "deficit across a list of exponents");
    add_common(scan, true);
    scan->add_option("--p", p_list, "comma-separated exponent list")->required();

    CLI::App* replay = app.add_subcommand("replay", "conformal proof replay report");
    add_common(replay, true);
    replay->add_option("--p", p_value, "perimeter exponent")->required();

    CLI::App* hs = app.add_subcommand("hs", "Hardy-Sobolev ratio for a gauge test function");
    add_common(hs, false);
    hs->add_option("--testfunction", tf_path, "test function JSON file");
    hs->add_option("--p", p_value, "exponent in (-1,1]")->required();
    double q_value = 0.0;
    CLI::Option* q_opt = hs->add_option("--q", q_value, "volume exponent (CKN exponent map mode)");
    hs->add_option("--eps", eps_list, "annular-ramp ladder (emits CSV)");
    hs->add_option("--r", radius, "ball radius for the ramp ladder");

    CLI::App* green = app.add_subcommand("green", "Green's-function area bound");
    add_common(green, true);
    green->add_option("--beta", beta, "weight exponent, beta <= 2")->required();
    green->add_option("--x", x_spec, "singularity \"x,y\" (centered disks only)");

    CLI::App* search_cmd = app.add_subcommand("search", "perturbative scans and counterexamples");
    CLI::App* two_ball = search_cmd->add_subcommand("two-ball", "two-ball separation threshold");
    add_common(two_ball, false);
    two_ball->add_option("--r", radius, "ball radius")->required();
    two_ball->add_option("--p", p_value, "exponent in [-1,0)")->required();
    CLI::App* perturb = search_cmd->add_subcommand("perturb", "random star perturbation scan");
    add_common(perturb, false);
    perturb->add_option("--p", p_value, "exponent")->required();
    perturb->add_option("--harmonics", harmonics, "number of Fourier harmonics");
    perturb->add_option("--amp", amp, "perturbation amplitude");
    perturb->add_option("--n", samples, "number of samples");
    CLI::App* translate = search_cmd->add_subcommand("translate", "off-center disk scan");
    add_common(translate, false);
    translate->add_option("--r", radius, "disk radius")->required();
    translate->add_option("--p", p_value, "exponent")->required();
    translate->add_option("--offsets", offsets, "comma-separated center offsets")->required();
    search_cmd->require_subcommand(1);

    CLI::App* thresholds = app.add_subcommand("thresholds", "two-ball threshold summary");
    add_common(thresholds, false);
    thresholds->add_option("--r", radius, "ball radius")->required();
    thresholds->add_option("--p", p_value, "exponent in [-1,0)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(opts, p_value);
        if (scan->parsed()) return run_scan(opts, p_list);
        if (replay->parsed()) return run_replay(opts, p_value);
        if (hs->parsed())
            return run_hs(opts, tf_path, p_value, eps_list, radius, q_opt->count() > 0, q_value);
        if (green->parsed()) return run_green(opts, beta, x_spec);
        if (search_cmd->parsed()) {
            if (two_ball->parsed()) {
                const TwoBallThreshold th = two_ball_threshold(radius, p_value, opts.quad_order);
                std::cout << JsonValue::object({
                                 {"r", JsonValue::number(radius)},
                                 {"p", JsonValue::number(p_value)},
                                 {"separation", JsonValue::number(th.separation)},
                                 {"bracket", JsonValue::array({JsonValue::number(th.bracket_lo),
                                                               JsonValue::number(th.bracket_hi)})},
                             })
                                 .dump()
                          << "\n";
                if (!opts.out_path.empty()) atomic_write_file(opts.out_path, scan_csv(th.trace));
                return kExitOk;
            }
            if (perturb->parsed())
                return finish_scan_command(
                    opts, perturbation_scan(p_value, harmonics, amp, samples, opts.seed,
                                            opts.quad_order));
            if (translate->parsed())
                return finish_scan_command(
                    opts, translate_scan(radius, p_value, parse_list(offsets), opts.quad_order));
        }
        if (thresholds->parsed()) {
            const TwoBallThreshold th = two_ball_threshold(radius, p_value, opts.quad_order);
            emit(JsonValue::object({
                     {"r", JsonValue::number(radius)},
                     {"p", JsonValue::number(p_value)},
                     {"separation", JsonValue::number(th.separation)},
                     {"bracket", JsonValue::array({JsonValue::number(th.bracket_lo),
                                                   JsonValue::number(th.bracket_hi)})},
                 })
                     .dump(),
                 opts.out_path);
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
