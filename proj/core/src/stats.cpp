#include "ballvol/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>

namespace ballvol {

LinearFit linear_fit(const std::vector<std::pair<double, double>>& xy) {
    LinearFit f;
    f.points = static_cast<long>(xy.size());
    if (xy.size() < 2) return f;
    KahanSum sx, sy;
    for (auto& [x, y] : xy) {
        sx.add(x);
        sy.add(y);
    }
    double n = static_cast<double>(xy.size());
    double mx = sx.value() / n, my = sy.value() / n;
    KahanSum sxx, sxy, syy;
    for (auto& [x, y] : xy) {
        sxx.add((x - mx) * (x - mx));
        sxy.add((x - mx) * (y - my));
        syy.add((y - my) * (y - my));
    }
    if (sxx.value() == 0.0) return f;
    f.slope = sxy.value() / sxx.value();
    f.intercept = my - f.slope * mx;
    // r^2 = explained/total; a flat response counts as a perfect fit
    f.r_squared = syy.value() == 0.0 ? 1.0 : (f.slope * sxy.value()) / syy.value();
    return f;
}

double chi_square_p_value(double stat, long dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_p_value: dof must be >= 1");
    if (stat <= 0.0) return 1.0;
    return boost::math::gamma_q(static_cast<double>(dof) / 2.0, stat / 2.0);
}

double frequency_stderr(double p, long n) {
    if (n <= 0) return 0.0;
    double v = p * (1.0 - p);
    return v <= 0.0 ? 0.0 : std::sqrt(v / static_cast<double>(n));
}

}  // namespace ballvol
