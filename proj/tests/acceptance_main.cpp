// Acceptance suite: one pass/fail line per criterion, exit code = failure count.
//
// Every tolerance is pinned here; the suite runs at desk scale on one core.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "isoperim/isoperim.hpp"

using namespace isoperim;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

// Random star-shaped polygon around `center` (vertices sorted by angle).
Domain random_star_polygon(SplitMix64& rng, const Vec2& center) {
    const int nv = 5 + static_cast<int>(rng.uniform() * 7.0);
    std::vector<Vec2> vertices;
    for (int i = 0; i < nv; ++i) {
        const double angle = kTwoPi * (i + 0.2 + 0.6 * rng.uniform()) / nv;
        const double radius = rng.uniform(0.5, 1.5);
        vertices.push_back(center + Vec2{radius * std::cos(angle), radius * std::sin(angle)});
    }
    return Domain::polygon(std::move(vertices));
}

// Random smooth star translated so the origin lies strictly outside.
Domain random_translated_star(SplitMix64& rng) {
    const Domain star = random_star(rng, 5, 0.3, 0.2);
    const FourierStar& fs = star.as_fourier_star();
    double reach = fs.a0;
    for (std::size_t k = 0; k < fs.cos_coef.size(); ++k)
        reach += std::abs(fs.cos_coef[k]) + std::abs(fs.sin_coef[k]);
    const double dist = rng.uniform(2.2, 5.0) * reach;
    const double dir = rng.uniform(0.0, kTwoPi);
    return translated(star, Vec2{dist * std::cos(dir), dist * std::sin(dir)});
}

void criterion_1_centered_ball_equality() {
    bool pass = true;
    std::string detail;
    for (double radius : {0.5, 1.0, 3.0})
        for (double p : {-1.0, -0.5, 0.0, 1.0, 2.5}) {
            const DeficitReport rep = deficit(Domain::disk(Vec2{0, 0}, radius), p);
            if (std::abs(rep.deficit) > 1e-9) {
                pass = false;
                detail = "R=" + fmt(radius) + " p=" + fmt(p) + " deficit=" + fmt(rep.deficit);
            }
        }
    report(1, "centered-ball equality |deficit| <= 1e-9", pass, detail);
}

void criterion_2_main_inequality_property_suite() {
    bool pass = true;
    std::string detail;
    double worst = 1.0;

    SplitMix64 rng(20240101);
    for (int i = 0; i < 200; ++i) {
        const Domain d = random_star(rng, 6, 0.4, 0.2);
        for (double p : {-1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
            const double value = deficit(d, p).deficit;
            worst = std::fmin(worst, value);
            if (value < -1e-7) {
                pass = false;
                detail = "origin-star i=" + std::to_string(i) + " p=" + fmt(p) +
                         " deficit=" + fmt(value);
            }
        }
    }
    SplitMix64 rng2(20240202);
    for (int i = 0; i < 200; ++i) {
        const Domain d = (i % 2 == 0)
                             ? random_star_polygon(
                                   rng2, Vec2{rng2.uniform(3.0, 6.0), rng2.uniform(-2.0, 2.0)})
                             : random_translated_star(rng2);
        if (contains_origin(d) != OriginLocation::outside) {
            pass = false;
            detail = "generator produced a domain containing the origin at i=" +
                     std::to_string(i);
            continue;
        }
        for (double p : {0.0, 0.5, 1.0, 2.0}) {
            const double value = deficit(d, p).deficit;
            worst = std::fmin(worst, value);
            if (value < -1e-7) {
                pass = false;
                detail = "origin-free i=" + std::to_string(i) + " p=" + fmt(p) +
                         " deficit=" + fmt(value);
            }
        }
    }
    report(2, "main inequality on 200+200 random domains, min deficit = " + fmt(worst), pass,
           detail);
}

void criterion_3_two_ball_counterexample() {
    bool pass = true;
    std::string detail;
    const TwoBallThreshold th = two_ball_threshold(1.0, -0.5);
    if (std::abs(th.separation - 27.94) > 0.5) {
        pass = false;
        detail = "s* = " + fmt(th.separation);
    }
    const Domain far_apart = Domain::union_of(
        {Domain::disk(Vec2{0, 0}, 1.0), Domain::disk(Vec2{100, 0}, 1.0)});
    const DeficitReport rep = deficit(far_apart, -0.5);
    if (!(rep.deficit <= -0.08)) {
        pass = false;
        detail += " deficit(s=100) = " + fmt(rep.deficit);
    }
    if (rep.verdict != Verdict::out_of_hypothesis) {
        pass = false;
        detail += " verdict != out_of_hypothesis";
    }
    report(3, "two-ball threshold s* = " + fmt(th.separation) + " (27.94 +- 0.5), deficit(100) = " +
               fmt(rep.deficit),
           pass, detail);
}

std::vector<Domain> conformal_test_domains() {
    std::vector<Domain> out;
    SplitMix64 rng(555);
    for (int i = 0; i < 10; ++i) out.push_back(random_star(rng, 4, 0.15, 0.5));
    return out;
}

void criterion_4_conformal_replay() {
    bool pass = true;
    std::string detail;

    const ConformalData moebius =
        riemann_map(invert_complement(Domain::disk(Vec2{0.5, 0}, 1.0)).domain, 256);
    if (std::abs(std::abs(moebius.lambda) - 1.0) > 1e-6 ||
        std::abs(moebius.a[0] - Complex(0.5, 0.0)) > 1e-6) {
        pass = false;
        detail = "Moebius |lambda| = " + fmt(std::abs(moebius.lambda)) +
                 ", a0 = " + fmt(moebius.a[0].real());
    }

    const double p_cycle[4] = {-0.5, 0.0, 0.5, 1.0};
    int index = 0;
    for (const Domain& omega : conformal_test_domains()) {
        const double p = p_cycle[index++ % 4];
        const ProofReplayReport rep = replay_proof(omega, p, 256);
        const double exact_area = area(omega);
        const double exact_perimeter = weighted_perimeter(omega, p);
        if (std::abs(rep.area_limit - exact_area) > 1e-5 * exact_area) {
            pass = false;
            detail = "A_r limit off by " + fmt(rep.area_limit - exact_area);
        }
        if (std::abs(rep.perimeter_limit - exact_perimeter) > 1e-5 * exact_perimeter) {
            pass = false;
            detail = "S_r limit off by " + fmt(rep.perimeter_limit - exact_perimeter);
        }
        if (!(rep.chain[0] <= rep.chain[1] + 1e-6 && rep.chain[1] <= rep.chain[2] + 1e-6)) {
            pass = false;
            detail = "chain not monotone: " + fmt(rep.chain[0]) + ", " + fmt(rep.chain[1]) +
                     ", " + fmt(rep.chain[2]);
        }
    }
    report(4, "conformal replay: Moebius structure, A_r/S_r limits, chain monotone", pass,
           detail);
}

void criterion_5_step_bounds() {
    bool pass = true;
    std::string detail;
    for (const Domain& omega : conformal_test_domains()) {
        const ConformalData cd = riemann_map(invert_complement(omega).domain, 256);
        if (!(area(omega) <= kPi * std::norm(cd.lambda) + 1e-6)) {
            pass = false;
            detail = "|Omega| > pi |lambda|^2: " +
                     fmt(area(omega) - kPi * std::norm(cd.lambda));
        }
        for (double p : {-0.5, 0.0, 1.0}) {
            const double lambda_pow = std::pow(std::abs(cd.lambda), p + 1.0);
            const double normalized = weighted_perimeter(omega, p) / kTwoPi;
            if (!(lambda_pow <= normalized + 1e-6)) {
                pass = false;
                detail = "|lambda|^{p+1} > perimeter/2pi at p=" + fmt(p);
            }
        }
    }
    report(5, "Step 2/3 bounds |Omega| <= pi|lambda|^2 <= weighted perimeter route", pass, detail);
}

void criterion_6_hardy_sobolev_constant() {
    bool pass = true;
    std::string detail;

    const TestFunction tent(Domain::disk(Vec2{0, 0}, 1.0), {{0.0, 1.0}, {1.0, 0.0}});
    const double tent_ratio = hs_ratio(tent, 0.0).ratio;
    if (std::abs(tent_ratio - 2.0 / std::sqrt(6.0)) > 1e-9) {
        pass = false;
        detail = "tent ratio = " + fmt(tent_ratio);
    }

    const auto ladder = extremal_sequence(0.0, 1.0, {0.5, 0.1, 0.02, 0.005});
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i].ratio < 1.0)) {
            pass = false;
            detail = "ladder ratio reached 1 at eps=" + fmt(ladder[i].eps);
        }
        if (i > 0 && !(ladder[i].ratio > ladder[i - 1].ratio)) {
            pass = false;
            detail = "ladder not strictly increasing at eps=" + fmt(ladder[i].eps);
        }
    }
    if (!(ladder.back().ratio >= 0.995)) {
        pass = false;
        detail = "final ladder ratio = " + fmt(ladder.back().ratio);
    }

    SplitMix64 rng(777);
    double max_ratio = 0.0;
    for (int i = 0; i < 100; ++i) {
        Domain base = random_star(rng, 4, 0.3, 0.2);
        const double v0 = rng.uniform(0.5, 2.0);
        const double v1 = rng.uniform(0.1, 0.9) * v0;
        const double s1 = rng.uniform(0.2, 0.8);
        const double s2 = rng.uniform(1.05, 2.0);
        const TestFunction u(std::move(base), {{0.0, v0}, {s1, v1}, {s2, 0.0}});
        for (double p : {0.0, 0.5, 1.0}) {
            const double ratio = hs_ratio(u, p).ratio;
            max_ratio = std::fmax(max_ratio, ratio);
            if (ratio > 1.0 + 1e-7) {
                pass = false;
                detail = "ratio " + fmt(ratio) + " at i=" + std::to_string(i) + " p=" + fmt(p);
            }
        }
    }
    report(6, "Hardy-Sobolev constant: tent = 2/sqrt(6), ladder -> 1, grid max ratio = " +
               fmt(max_ratio),
           pass, detail);
}

void criterion_7_coarea_and_layer_cake() {
    bool pass = true;
    std::string detail;
    SplitMix64 rng(888);
    for (int i = 0; i < 100; ++i) {
        Domain base = random_star(rng, 4, 0.3, 0.2);
        const double v0 = rng.uniform(0.5, 2.0);
        const double v1 = rng.uniform(0.1, 0.9) * v0;
        const double s1 = rng.uniform(0.2, 0.8);
        const double s2 = rng.uniform(1.05, 2.0);
        const TestFunction u(std::move(base), {{0.0, v0}, {s1, v1}, {s2, 0.0}});
        for (double p : {0.0, 0.5, 1.0}) {
            const auto [lhs, rhs] = coarea_check(u, p);
            if (std::abs(lhs - rhs) > 1e-6 * rhs) {
                pass = false;
                detail = "coarea mismatch " + fmt(lhs - rhs) + " at i=" + std::to_string(i);
            }
            const LayerCakeChain chain = layer_cake_check(u, p);
            if (!(chain.lhs <= chain.minkowski_bound + 1e-7 &&
                  chain.minkowski_bound <= chain.perimeter_bound + 1e-7)) {
                pass = false;
                detail = "layer-cake ordering broken at i=" + std::to_string(i) + " p=" + fmt(p);
            }
        }
    }
    report(7, "coarea agreement (1e-6 rel) and layer-cake ordering on 100 gauge functions", pass,
           detail);
}

void criterion_8_green_identities_and_flucher() {
    bool pass = true;
    std::string detail;
    const std::vector<double> t_list{0.0, 0.1, 0.5, 1.0};

    std::vector<GreenFunction> greens;
    greens.push_back(disk_green(1.0, Vec2{0, 0}));
    greens.push_back(disk_green(2.0, Vec2{0, 0}));
    greens.push_back(disk_green(1.0, Vec2{0.5, 0}));
    SplitMix64 rng(999);
    for (int i = 0; i < 10; ++i) greens.push_back(star_green(random_star(rng, 4, 0.15, 0.5), 256));

    for (std::size_t gi = 0; gi < greens.size(); ++gi) {
        for (const LevelIdentity& id : level_identities(greens[gi], t_list)) {
            if (std::abs(id.flux - 1.0) > 1e-7) {
                pass = false;
                detail = "flux " + fmt(id.flux) + " at g=" + std::to_string(gi) +
                         " t=" + fmt(id.t);
            }
            if (std::abs(id.dirichlet_energy - id.t) > 1e-6) {
                pass = false;
                detail = "energy " + fmt(id.dirichlet_energy) + " at g=" + std::to_string(gi) +
                         " t=" + fmt(id.t);
            }
        }
    }

    for (double beta : {0.0, 0.5, 1.0, 2.0}) {
        const FlucherBound b = flucher_bound(disk_green(2.0, Vec2{0, 0}), beta);
        if (std::abs(b.rhs - b.lhs) > 1e-8) {
            pass = false;
            detail = "centered-disk slack " + fmt(b.rhs - b.lhs) + " at beta=" + fmt(beta);
        }
    }
    const FlucherBound off = flucher_bound(disk_green(1.0, Vec2{0.5, 0}), 0.0);
    if (std::abs(off.rhs - 5.0 * kPi / 3.0) > 1e-8 || !(off.rhs >= kPi)) {
        pass = false;
        detail = "off-center rhs = " + fmt(off.rhs);
    }
    report(8, "Green level identities (flux=1, energy=t) and Flucher bound cases", pass, detail);
}

void criterion_9_ckn_lattice() {
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 13; ++i) {
        const double p = -0.5 + 2.5 * i / 12.0;
        for (int j = 0; j < 25; ++j) {
            const double q = -1.0 + 5.0 * j / 24.0;
            bool mapped;
            try {
                mapped = ckn_admissible(exponent_map(p, q));
            } catch (const RangeError&) {
                mapped = false;
            }
            const bool direct = (-2.0 < p - 1.0) && (p - 1.0 <= q) && (q <= 2.0 * p);
            if (mapped != direct) {
                pass = false;
                detail = "disagreement at p=" + fmt(p) + " q=" + fmt(q);
            }
        }
    }
    report(9, "CKN exponent lattice 13x25: exact boolean agreement", pass, detail);
}

void criterion_10_determinism() {
    bool pass = true;
    std::string detail;

    const ScanResult a = perturbation_scan(0.5, 5, 0.2, 40, 424242);
    const ScanResult b = perturbation_scan(0.5, 5, 0.2, 40, 424242);
    if (scan_csv(a) != scan_csv(b) ||
        scan_summary_json(a).dump() != scan_summary_json(b).dump()) {
        pass = false;
        detail = "perturbation scan reports differ";
    }

    const TwoBallThreshold t1 = two_ball_threshold(1.0, -0.5);
    const TwoBallThreshold t2 = two_ball_threshold(1.0, -0.5);
    if (scan_csv(t1.trace) != scan_csv(t2.trace)) {
        pass = false;
        detail = "two-ball traces differ";
    }

    const std::string r1 = to_json(deficit(Domain::disk(Vec2{0.25, 0}, 1.5), 0.75)).dump();
    const std::string r2 = to_json(deficit(Domain::disk(Vec2{0.25, 0}, 1.5), 0.75)).dump();
    if (r1 != r2) {
        pass = false;
        detail = "deficit reports differ";
    }
    report(10, "byte-identical reports for identical config + seed", pass, detail);
}

} // namespace

int main() {
    criterion_1_centered_ball_equality();
    criterion_2_main_inequality_property_suite();
    criterion_3_two_ball_counterexample();
    criterion_4_conformal_replay();
    criterion_5_step_bounds();
    criterion_6_hardy_sobolev_constant();
    criterion_7_coarea_and_layer_cake();
    criterion_8_green_identities_and_flucher();
    criterion_9_ckn_lattice();
    criterion_10_determinism();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
