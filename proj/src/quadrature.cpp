#include "polybounce/quadrature.hpp"

#include "polybounce/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace polybounce {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b, value, error;
};

Piece gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    return {a, b, kron * h, std::fabs((kron - gauss) * h)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                                    int max_intervals) {
    if (!(b > a)) throw DomainError("integrate_adaptive: empty interval");
    std::vector<Piece> pieces{gauss_kronrod(f, a, b)};
    auto by_error = [](const Piece& x, const Piece& y) { return x.error < y.error; };
    auto total = [&](double Piece::*field) {
        double t = 0.0;
        for (const auto& p : pieces) t += p.*field;
        return t;
    };
    while (total(&Piece::error) > abs_tol) {
        if (static_cast<int>(pieces.size()) >= max_intervals)
            throw NumericalFailure("integrate_adaptive: interval budget exhausted");
        std::pop_heap(pieces.begin(), pieces.end(), by_error);
        const Piece worst = pieces.back();
        pieces.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        pieces.push_back(gauss_kronrod(f, worst.a, mid));
        std::push_heap(pieces.begin(), pieces.end(), by_error);
        pieces.push_back(gauss_kronrod(f, mid, worst.b));
        std::push_heap(pieces.begin(), pieces.end(), by_error);
    }
    // Sum small-to-large for a stable total.
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return std::fabs(x.value) < std::fabs(y.value); });
    return {total(&Piece::value), total(&Piece::error), static_cast<int>(pieces.size())};
}

} // namespace polybounce
