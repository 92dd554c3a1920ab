#pragma once

#include <optional>
#include <vector>

#include "xxnet/network.hpp"

namespace xxnet {

/// One row of a k-scan: aggregate network observables of the (n, k) state.
struct ScanRecord {
    int k = 0;
    double b_mid = 0.0;  // midpoint of the sector's field interval
    double mean_degree = 0.0;
    double sigma_degree = 0.0;
    double mean_strength = 0.0;
    double mean_disparity = 0.0;  // over nodes with defined disparity
    bool disparity_defined = false;
    int n_c_weighted = -1;    // -1 when communities were not requested
    int n_c_unweighted = -1;
};

struct ScanOptions {
    double tau = 1e-10;
    bool weighted_communities = false;
    bool unweighted_communities = false;
};

struct ScanSeries {
    int n = 0;
    std::vector<ScanRecord> records;  // k strictly increasing
};

/// Midpoint of the sector-k field interval (B_{k+1}, B_k), with virtual
/// boundaries B_0 = 1 and B_{n+1} = -1.
double sector_field_midpoint(int n, int k);

/// Scans sectors k = k_lo..k_hi. Fails as a whole if any record fails.
ScanSeries scan_over_k(int n, int k_lo, int k_hi, const ScanOptions& options = {});

/// Second-order central differences, one-sided at the ends.
std::vector<double> central_diff(const std::vector<double>& values);

/// One entanglement-topological instability: the sector where the average
/// degree changes steepest, indexed by m with fields increasing in m.
struct TransitionPeak {
    int m = 0;
    int k_peak = 0;
    double b_m = 0.0;
    double height = 0.0;  // |Delta <d>| at the peak
};

struct TransitionSet {
    int n = 0;
    std::vector<TransitionPeak> peaks;
};

/// The n_peaks largest-k local maxima of |Delta <d>| over the scan, with a
/// minimum separation of 2 in k and a height floor of 0.05 to skip flat
/// plateaus. Peaks are indexed m = 1.. from the largest k (smallest field)
/// down, so b_m increases with m. Throws if fewer peaks exist.
TransitionSet find_transitions(const ScanSeries& scan, int n_peaks);

/// Least-squares slope of log(values) against log(sizes).
double scaling_exponent(const std::vector<double>& sizes, const std::vector<double>& values);

/// Weighted-clustering profile of the chain centre at field b (the sector is
/// the floor convention k = floor((n+1) arccos(b)/pi)).
struct ClusteringProfile {
    int n = 0;
    int k = 0;
    double b = 0.0;
    std::vector<int> sites;               // 1-based, the n_center central spins
    std::vector<double> centered_positions;  // site - (n+1)/2
    std::vector<double> values;           // weighted clustering per site
    double mean_central = 0.0;
};

ClusteringProfile clustering_profile(int n, double b, int n_center, double tau = 1e-10);

/// Peak structure of the per-node strength and disparity profiles of one
/// network, counted the way the figures read: strength maxima are raw
/// interior extrema (plateau rule), while disparity peaks keep only
/// prominent maxima (topographic prominence at least 5% of the profile
/// range) located strictly between the outermost strength maxima. The
/// restriction drops the boundary disparity bumps and the low-amplitude
/// ripple around the chain centre, which sit on top of the k-1 main peaks.
struct ProfilePeaks {
    std::vector<double> strength_maxima;  // positions, 1-based
    std::vector<double> disparity_peaks;
};

ProfilePeaks profile_peaks(const WeightedNetwork& net);

/// Exact rational, reduced, denominator positive.
struct Rational {
    long long num = 0;
    long long den = 1;
};

/// Predicted period of the size-periodic network structure for mean
/// community size s_c = p/q: the period equals p, the larger-community
/// fraction is f = (p mod q)/q, and the smallest self-similar spin group
/// has S = p spins.
struct PeriodPrediction {
    long long p = 0;
    long long q = 0;
    double f = 0.0;
    long long group_size = 0;  // S
};

PeriodPrediction period_prediction(Rational mean_community_size);

/// Smallest period p such that the series matches itself shifted by p within
/// the relative tolerance at every overlapping point; nullopt if none up to
/// size/3 works.
std::optional<int> detect_period(const std::vector<double>& values, double rel_tol = 1e-3);

}  // namespace xxnet
