#include "xxnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xxnet/chain.hpp"
#include "xxnet/errors.hpp"
#include "xxnet/lpa.hpp"
#include "xxnet/metrics.hpp"
#include "xxnet/numeric.hpp"
#include "xxnet/parallel.hpp"

namespace xxnet {

double sector_field_midpoint(int n, int k) {
    if (k < 0 || k > n) throw ValidationError("sector_field_midpoint: k outside [0, n]");
    const double hi = k == 0 ? 1.0 : cospi_ratio(k, n + 1);
    const double lo = k == n ? -1.0 : cospi_ratio(k + 1, n + 1);
    return 0.5 * (hi + lo);
}

ScanSeries scan_over_k(int n, int k_lo, int k_hi, const ScanOptions& options) {
    if (k_lo < 0 || k_hi > n || k_lo > k_hi) throw ValidationError("scan_over_k: bad k range");
    ScanSeries series;
    series.n = n;
    series.records.resize(static_cast<std::size_t>(k_hi - k_lo + 1));
    parallel_for(series.records.size(), [&](std::size_t t) {
        const int k = k_lo + static_cast<int>(t);
        ScanRecord rec;
        rec.k = k;
        rec.b_mid = sector_field_midpoint(n, k);
        const WeightedNetwork net = build_network(n, k, options.tau);
        const NodeMetrics nm = node_metrics(net);
        const DegreeStats ds = degree_stats(net);
        rec.mean_degree = ds.mean;
        rec.sigma_degree = ds.sigma;
        rec.mean_strength =
            std::accumulate(nm.strength.begin(), nm.strength.end(), 0.0) / net.n;
        int defined = 0;
        double ysum = 0.0;
        for (int v = 0; v < net.n; ++v)
            if (nm.disparity_defined[static_cast<std::size_t>(v)]) {
                ysum += nm.disparity[static_cast<std::size_t>(v)];
                ++defined;
            }
        rec.disparity_defined = defined > 0;
        rec.mean_disparity = defined > 0 ? ysum / defined : 0.0;
        if (options.weighted_communities)
            rec.n_c_weighted = community_census(lpa_detect(net, {.weighted = true})).n_c;
        if (options.unweighted_communities)
            rec.n_c_unweighted = community_census(lpa_detect(net, {.weighted = false})).n_c;
        series.records[t] = rec;
    });
    return series;
}

std::vector<double> central_diff(const std::vector<double>& values) {
    if (values.size() < 3) throw ValidationError("central_diff: need at least 3 values");
    std::vector<double> d(values.size());
    d.front() = values[1] - values[0];
    d.back() = values[values.size() - 1] - values[values.size() - 2];
    for (std::size_t t = 1; t + 1 < values.size(); ++t) d[t] = 0.5 * (values[t + 1] - values[t - 1]);
    return d;
}

TransitionSet find_transitions(const ScanSeries& scan, int n_peaks) {
    if (n_peaks < 1) throw ValidationError("find_transitions: n_peaks must be >= 1");
    const std::size_t len = scan.records.size();
    if (len < 3) throw ValidationError("find_transitions: scan too short");
    std::vector<double> mean_d(len);
    for (std::size_t t = 0; t < len; ++t) mean_d[t] = scan.records[t].mean_degree;
    std::vector<double> slope = central_diff(mean_d);
    for (double& v : slope) v = std::abs(v);

    constexpr double kHeightFloor = 0.05;  // plateaus are exactly flat; skip rounding wiggle
    std::vector<std::size_t> candidates;
    for (std::size_t t = 1; t + 1 < len; ++t)
        if (slope[t] >= slope[t - 1] && slope[t] >= slope[t + 1] && slope[t] > kHeightFloor)
            candidates.push_back(t);
    // rank by height: residual ripple between transitions sits well below the
    // genuine steps, so anything under a quarter of the tallest peak is noise
    double tallest = 0.0;
    for (std::size_t c : candidates) tallest = std::max(tallest, slope[c]);
    std::erase_if(candidates, [&](std::size_t c) { return slope[c] < 0.25 * tallest; });
    // minimum separation of 2 in k: keep the taller of close pairs
    std::vector<std::size_t> kept;
    for (std::size_t c : candidates) {
        if (!kept.empty() && scan.records[c].k - scan.records[kept.back()].k < 2) {
            if (slope[c] > slope[kept.back()]) kept.back() = c;
        } else {
            kept.push_back(c);
        }
    }
    if (static_cast<int>(kept.size()) < n_peaks)
        throw ValidationError("find_transitions: found " + std::to_string(kept.size()) +
                              " peaks, requested " + std::to_string(n_peaks));
    // m = 1 at the largest k (smallest field); fields then increase with m
    std::sort(kept.begin(), kept.end(),
              [&](std::size_t a, std::size_t b) { return scan.records[a].k > scan.records[b].k; });
    kept.resize(static_cast<std::size_t>(n_peaks));
    TransitionSet out;
    out.n = scan.n;
    for (std::size_t t = 0; t < kept.size(); ++t) {
        const ScanRecord& rec = scan.records[kept[t]];
        out.peaks.push_back({static_cast<int>(t) + 1, rec.k, rec.b_mid, slope[kept[t]]});
    }
    return out;
}

double scaling_exponent(const std::vector<double>& sizes, const std::vector<double>& values) {
    if (sizes.size() != values.size()) throw ValidationError("scaling_exponent: size mismatch");
    if (sizes.size() < 4) throw ValidationError("scaling_exponent: need at least 4 sizes");
    std::vector<double> x, y;
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        if (sizes[t] <= 0.0 || values[t] <= 0.0)
            throw ValidationError("scaling_exponent: non-positive input");
        x.push_back(std::log(sizes[t]));
        y.push_back(std::log(values[t]));
    }
    const double xm = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
    const double ym = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        sxx += (x[t] - xm) * (x[t] - xm);
        sxy += (x[t] - xm) * (y[t] - ym);
    }
    return sxy / sxx;
}

ClusteringProfile clustering_profile(int n, double b, int n_center, double tau) {
    if (!(b > 0.0 && b < 1.0))
        throw ValidationError("clustering_profile: field must lie in (0, 1)");
    if (n_center < 1 || n_center > n)
        throw ValidationError("clustering_profile: n_center outside [1, n]");
    ClusteringProfile prof;
    prof.n = n;
    prof.b = b;
    prof.k = sector_for_field_floor(n, b);
    const WeightedNetwork net = build_network(n, prof.k, tau);
    const NodeMetrics nm = node_metrics(net);
    const int start = (n - n_center) / 2 + 1;  // 1-based, centre-aligned window
    double acc = 0.0;
    for (int site = start; site < start + n_center; ++site) {
        prof.sites.push_back(site);
        prof.centered_positions.push_back(site - 0.5 * (n + 1));
        const double c = nm.weighted_clustering[static_cast<std::size_t>(site - 1)];
        prof.values.push_back(c);
        acc += c;
    }
    prof.mean_central = acc / n_center;
    return prof;
}

namespace {

// Topographic prominence of the interior maximum at `pos`: height minus the
// higher of the two saddles toward strictly higher ground (or toward the
// boundary when no higher ground exists on that side).
double peak_prominence(const std::vector<double>& v, std::size_t pos) {
    const double h = v[pos];
    double saddle = -1e300;
    for (int dir : {-1, +1}) {
        double low = h;
        double side = -1e300;
        for (std::ptrdiff_t t = static_cast<std::ptrdiff_t>(pos) + dir;
             t >= 0 && t < static_cast<std::ptrdiff_t>(v.size()); t += dir) {
            low = std::min(low, v[static_cast<std::size_t>(t)]);
            if (v[static_cast<std::size_t>(t)] > h) {
                side = low;
                break;
            }
            if (t == 0 || t == static_cast<std::ptrdiff_t>(v.size()) - 1) side = low;
        }
        saddle = std::max(saddle, side);
    }
    return h - saddle;
}

}  // namespace

ProfilePeaks profile_peaks(const WeightedNetwork& net) {
    const NodeMetrics nm = node_metrics(net);
    ProfilePeaks out;
    const ProfileExtrema s_ext = profile_extrema(nm.strength);
    out.strength_maxima = s_ext.maxima;
    if (out.strength_maxima.size() < 2) return out;
    const double lo_pos = out.strength_maxima.front();
    const double hi_pos = out.strength_maxima.back();

    const std::vector<double>& y = nm.disparity;
    double y_min = 1e300, y_max = -1e300;
    for (std::size_t t = 0; t < y.size(); ++t) {
        if (!nm.disparity_defined[t]) continue;
        y_min = std::min(y_min, y[t]);
        y_max = std::max(y_max, y[t]);
    }
    const double floor = 0.05 * (y_max - y_min);
    const ProfileExtrema y_ext = profile_extrema(y);
    for (double pos : y_ext.maxima) {
        if (pos <= lo_pos || pos >= hi_pos) continue;
        const auto idx = static_cast<std::size_t>(pos - 1.0 + 0.5);  // representative sample
        if (peak_prominence(y, idx) >= floor) out.disparity_peaks.push_back(pos);
    }
    return out;
}

PeriodPrediction period_prediction(Rational mean_community_size) {
    long long p = mean_community_size.num;
    long long q = mean_community_size.den;
    if (q == 0) throw ValidationError("period_prediction: zero denominator");
    if (q < 0) {
        q = -q;
        p = -p;
    }
    const long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p <= q) throw ValidationError("period_prediction: mean community size must exceed 1");
    PeriodPrediction pred;
    pred.p = p;
    pred.q = q;
    pred.f = static_cast<double>(p % q) / static_cast<double>(q);
    pred.group_size = p;
    return pred;
}

std::optional<int> detect_period(const std::vector<double>& values, double rel_tol) {
    if (values.size() < 3) throw ValidationError("detect_period: need at least 3 values");
    const int max_period = static_cast<int>(values.size()) / 3;
    for (int p = 1; p <= max_period; ++p) {
        bool ok = true;
        for (std::size_t t = 0; t + static_cast<std::size_t>(p) < values.size() && ok; ++t) {
            const double a = values[t];
            const double b = values[t + static_cast<std::size_t>(p)];
            const double scale = std::max(std::abs(a), std::abs(b));
            if (std::abs(a - b) > rel_tol * scale) ok = false;
        }
        if (ok) return p;
    }
    return std::nullopt;
}

}  // namespace xxnet
