#include "xxnet/sector_state.hpp"

#include <cmath>

#include "xxnet/errors.hpp"
#include "xxnet/numeric.hpp"

namespace xxnet {

SectorState build_sector_state(int n, int k) {
    if (n < 1) throw ValidationError("build_sector_state: n must be >= 1");
    if (k < 0 || k > n) throw ValidationError("build_sector_state: k outside [0, n]");
    SectorState st;
    st.n = n;
    st.k = k;
    st.s.resize(n, k);
    const double norm = std::sqrt(2.0 / (n + 1));
    for (int m = 1; m <= k; ++m)
        for (int l = 1; l <= n; ++l)
            st.s(l - 1, m - 1) = norm * sinpi_ratio(static_cast<std::int64_t>(m) * l, n + 1);
    st.g.noalias() = st.s * st.s.transpose();
    return st;
}

}  // namespace xxnet
