#pragma once

#include <vector>

namespace xxnet {

/// Open-boundary XX chain in a transverse field. The coupling J is fixed to 1.
struct ChainSpec {
    int n = 1;      // number of spins, n >= 1
    double b = 0.0; // magnetic field

    void validate() const;
};

/// Ground-state level-crossing fields B_k = cos(k pi / (n+1)), k = 1..n,
/// strictly decreasing in k.
std::vector<double> level_crossing_fields(int n);

/// Crossing field B_k for a single k in [1, n].
double level_crossing_field(int n, int k);

/// Sector index of the ground state at field b. Rejects fields within
/// `tol` of a level crossing, where the ground state is degenerate.
/// b >= B_1 gives k = 0; b <= B_n gives k = n.
int sector_for_field(int n, double b, double tol = 1e-12);

/// The floor convention k = floor((n+1) arccos(b) / pi) used for
/// field-parameterised scans. At an exact crossing B_k this resolves to k
/// itself (the lower-field side); values within 1e-9 of an integer are
/// snapped to it so the choice does not depend on rounding direction.
int sector_for_field_floor(int n, double b);

/// Ground-state energy in sector k:
/// e_g^k = -(n - 2k) b - 2 sum_{l=1..k} cos(pi l / (n+1)).
double ground_energy(int n, int k, double b);

}  // namespace xxnet
