#include "xxnet/chain.hpp"

#include <algorithm>
#include <cmath>

#include "xxnet/errors.hpp"
#include "xxnet/numeric.hpp"

namespace xxnet {

void ChainSpec::validate() const {
    if (n < 1) throw ValidationError("chain must have at least one spin");
    if (!std::isfinite(b)) throw ValidationError("magnetic field must be finite");
}

double level_crossing_field(int n, int k) {
    if (n < 1) throw ValidationError("level_crossing_field: n must be >= 1");
    if (k < 1 || k > n) throw ValidationError("level_crossing_field: k outside [1, n]");
    return cospi_ratio(k, n + 1);
}

std::vector<double> level_crossing_fields(int n) {
    if (n < 1) throw ValidationError("level_crossing_fields: n must be >= 1");
    std::vector<double> fields(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) fields[static_cast<std::size_t>(k - 1)] = cospi_ratio(k, n + 1);
    return fields;
}

int sector_for_field(int n, double b, double tol) {
    ChainSpec{n, b}.validate();
    if (b >= 1.0) return 0;
    if (b <= -1.0) return n;
    const double x = (n + 1) * std::acos(b) / M_PI;
    int k = static_cast<int>(std::floor(x));
    k = std::clamp(k, 0, n);
    // degenerate if b sits on the crossing just above or below
    for (int kc : {k, k + 1}) {
        if (kc >= 1 && kc <= n && std::abs(b - cospi_ratio(kc, n + 1)) <= tol)
            throw DegenerateFieldError("field coincides with level crossing B_" + std::to_string(kc));
    }
    if (k == 0 && b < cospi_ratio(1, n + 1)) k = 1;  // guard against floor rounding at the top edge
    return k;
}

int sector_for_field_floor(int n, double b) {
    ChainSpec{n, b}.validate();
    if (b >= 1.0) return 0;
    if (b <= -1.0) return n;
    const double x = (n + 1) * std::acos(b) / M_PI;
    const double r = std::round(x);
    int k = (std::abs(x - r) < 1e-9) ? static_cast<int>(r) : static_cast<int>(std::floor(x));
    return std::clamp(k, 0, n);
}

double ground_energy(int n, int k, double b) {
    if (n < 1) throw ValidationError("ground_energy: n must be >= 1");
    if (k < 0 || k > n) throw ValidationError("ground_energy: k outside [0, n]");
    double hop = 0.0;
    for (int l = 1; l <= k; ++l) hop += cospi_ratio(l, n + 1);
    return -(n - 2.0 * k) * b - 2.0 * hop;
}

}  // namespace xxnet
