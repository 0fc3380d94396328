#ifndef POLYBOUNCE_QUADRATURE_HPP
#define POLYBOUNCE_QUADRATURE_HPP

#include <functional>

namespace polybounce {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]; the interval with the
// largest |K15 - G7| is bisected until the summed estimate is below abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    int max_intervals = 4000);

} // namespace polybounce

#endif
