#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isoperim/geometry.hpp"
#include "isoperim/measures.hpp"

namespace isoperim {

// splitmix64: small, fully specified, reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Random star domain about the origin: a0 = 1, harmonics k = 1..K uniform in
// [-amp/k, amp/k], rejection-sampled until min rho > min_ratio * a0.
inline Domain random_star(SplitMix64& rng, int harmonics, double amp, double min_ratio = 0.0) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> cos_c(harmonics), sin_c(harmonics);
        for (int k = 1; k <= harmonics; ++k) {
            const double bound = amp / static_cast<double>(k);
            cos_c[k - 1] = rng.uniform(-bound, bound);
            sin_c[k - 1] = rng.uniform(-bound, bound);
        }
        FourierStar candidate{Vec2{0, 0}, 1.0, cos_c, sin_c};
        if (candidate.min_radius() > std::fmax(min_ratio, 1e-6))
            return Domain::fourier_star(Vec2{0, 0}, 1.0, std::move(cos_c), std::move(sin_c));
    }
    throw NotFoundError("random_star: rejection sampling failed; amplitude too large");
}

struct ScanRow {
    std::vector<double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
    Verdict verdict = Verdict::holds;
};

struct ScanResult {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<ScanRow> rows;
    std::uint64_t seed = 0;
    double min_deficit = 0.0;
    std::size_t argmin = 0;
    // Values of the leading parameter where the deficit changes sign
    // (linear interpolation between adjacent grid points).
    std::vector<double> crossings;
};

// Recomputes min/argmin and the sign-change crossings of a populated scan.
inline void finalize_scan(ScanResult& scan) {
    if (scan.rows.empty()) return;
    scan.min_deficit = scan.rows[0].deficit;
    scan.argmin = 0;
    for (std::size_t i = 1; i < scan.rows.size(); ++i) {
        if (scan.rows[i].deficit < scan.min_deficit) {
            scan.min_deficit = scan.rows[i].deficit;
            scan.argmin = i;
        }
    }
    for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
        const double d0 = scan.rows[i].deficit, d1 = scan.rows[i + 1].deficit;
        // Roundoff-level deficits (equality cases) are not sign changes.
        const double floor0 = 1e-12 * (std::abs(scan.rows[i].lhs) + std::abs(scan.rows[i].rhs));
        const double floor1 =
            1e-12 * (std::abs(scan.rows[i + 1].lhs) + std::abs(scan.rows[i + 1].rhs));
        if ((d0 < 0.0) != (d1 < 0.0) && std::abs(d0) > floor0 && std::abs(d1) > floor1 &&
            !scan.rows[i].params.empty()) {
            const double x0 = scan.rows[i].params[0], x1 = scan.rows[i + 1].params[0];
            scan.crossings.push_back(x0 + (x1 - x0) * (0.0 - d0) / (d1 - d0));
        }
    }
}

// n random Fourier perturbations of the unit disk, each rescaled to area pi,
// with the deficit recorded per sample.
inline ScanResult perturbation_scan(double p, int harmonics, double amp, int n,
                                    std::uint64_t seed, int quad_order = 64) {
    SplitMix64 rng(seed);
    ScanResult scan;
    scan.name = "perturbation";
    scan.param_names = {"index"};
    scan.seed = seed;
    for (int i = 0; i < n; ++i) {
        Domain d = random_star(rng, harmonics, amp);
        d = scaled(d, std::sqrt(kPi / area(d)));
        const DeficitReport rep = deficit(d, p, 1e-9, quad_order);
        scan.rows.push_back(
            ScanRow{{static_cast<double>(i)}, rep.lhs, rep.rhs, rep.deficit, rep.verdict});
    }
    finalize_scan(scan);
    return scan;
}

// Deficit of B_R((c, 0)) over a list of offsets c.
inline ScanResult translate_scan(double radius, double p, const std::vector<double>& offsets,
                                 int quad_order = 64) {
    ScanResult scan;
    scan.name = "translate";
    scan.param_names = {"offset"};
    for (double c : offsets) {
        if (c < 0.0) throw PreconditionError("translate_scan: offsets must be >= 0");
        if (p < 0.0 && c >= radius)
            throw PreconditionError("translate_scan: p < 0 requires offset < radius");
        const DeficitReport rep = deficit(Domain::disk(Vec2{c, 0.0}, radius), p, 1e-9, quad_order);
        scan.rows.push_back(ScanRow{{c}, rep.lhs, rep.rhs, rep.deficit, rep.verdict});
    }
    finalize_scan(scan);
    return scan;
}

struct TwoBallThreshold {
    double separation = 0.0; // s* where the deficit changes sign
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    ScanResult trace; // every (s, deficit) evaluation, in order
};

// Two disjoint balls B_r(0) and B_r((s,0)) with -1 <= p < 0: bisection on the
// separation s > 2r for the sign change of the deficit. Brackets start at
// 2.5 r and double.
inline TwoBallThreshold two_ball_threshold(double r, double p, int quad_order = 64) {
    if (!(p >= -1.0 && p < 0.0))
        throw RangeError("two_ball_threshold: requires p in [-1, 0)");
    if (!(r > 0.0)) throw PreconditionError("two_ball_threshold: radius must be positive");

    TwoBallThreshold out;
    out.trace.name = "two_ball";
    out.trace.param_names = {"separation"};

    const auto eval = [&](double s) {
        const Domain d = Domain::union_of(
            {Domain::disk(Vec2{0, 0}, r), Domain::disk(Vec2{s, 0.0}, r)});
        const DeficitReport rep = deficit(d, p, 1e-9, quad_order);
        out.trace.rows.push_back(ScanRow{{s}, rep.lhs, rep.rhs, rep.deficit, rep.verdict});
        return rep.deficit;
    };

    double lo = 2.5 * r;
    if (eval(lo) < 0.0)
        throw NotFoundError("two_ball_threshold: deficit already negative at s = 2.5 r");
    double hi = 2.0 * lo;
    double d_hi = eval(hi);
    while (d_hi >= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6 * r)
            throw NotFoundError("two_ball_threshold: no sign change for s <= 1e6 r");
        d_hi = eval(hi);
    }
    while (hi - lo > 1e-6 * r) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    out.separation = 0.5 * (lo + hi);
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    finalize_scan(out.trace);
    out.trace.crossings = {out.separation};
    return out;
}

} // namespace isoperim
