#include "polybounce/lattice.hpp"

#include "polybounce/errors.hpp"
#include "polybounce/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace polybounce {

namespace {

constexpr std::uint64_t kInverseIterationSeed = 0x5eed2011ULL;

// LU factorization with partial pivoting of a tridiagonal matrix (LAPACK gttrf
// layout) followed by the solve; rhs is overwritten. Returns false on an exact
// zero pivot.
bool solve_tridiagonal(std::vector<double> dl, std::vector<double> d, std::vector<double> du,
                       std::vector<double>& b) {
    const int n = static_cast<int>(d.size());
    if (n == 1) {
        if (d[0] == 0.0) return false;
        b[0] /= d[0];
        return true;
    }
    std::vector<double> du2(n, 0.0);
    std::vector<int> ipiv(n);
    for (int i = 0; i < n - 1; ++i) {
        if (std::fabs(d[i]) >= std::fabs(dl[i])) {
            if (d[i] == 0.0) return false;
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
            ipiv[i] = i;
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i < n - 2) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            ipiv[i] = i + 1;
        }
    }
    if (d[n - 1] == 0.0) return false;

    for (int i = 0; i < n - 1; ++i) {
        if (ipiv[i] == i) {
            b[i + 1] -= dl[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - dl[i] * b[i];
        }
    }
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    return true;
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
}

} // namespace

DimensionlessParams DimensionlessParams::from_s(double s) {
    if (!std::isfinite(s) || s < 1.0) throw DomainError("DimensionlessParams: s must be finite and >= 1");
    return DimensionlessParams{s, s * s * s};
}

double TridiagonalOperator::gershgorin_lower() const { return diagonal.front() - 2.0 * std::fabs(off_diagonal); }

double TridiagonalOperator::gershgorin_upper() const { return diagonal.back() + 2.0 * std::fabs(off_diagonal); }

int TridiagonalOperator::sturm_count(double sigma) const {
    const double e2 = off_diagonal * off_diagonal;
    int count = 0;
    double q = diagonal[0] - sigma;
    for (int i = 0;; ++i) {
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
        if (i + 1 == dimension) break;
        q = diagonal[i + 1] - sigma - e2 / q;
    }
    return count;
}

double truncation_estimate(const DimensionlessParams& params, int n_levels) {
    const double a = specfun::airy_zero(n_levels);
    const double s2 = params.s * params.s;
    const double eps_est = -a / (2.0 * s2) - a * a / (120.0 * s2 * s2);
    const double two_ups = 2.0 * params.upsilon;
    return std::ceil(two_ups * eps_est) + std::ceil(10.0 * std::cbrt(two_ups)) + 50.0;
}

TridiagonalOperator build_hamiltonian_with_dimension(const DimensionlessParams& params, int dimension) {
    if (dimension < 1) throw DomainError("build_hamiltonian: dimension must be >= 1");
    TridiagonalOperator H;
    H.params = params;
    H.dimension = dimension;
    H.diagonal.resize(dimension);
    for (int mu = 1; mu <= dimension; ++mu) H.diagonal[mu - 1] = 1.0 + mu / (2.0 * params.upsilon);
    return H;
}

TridiagonalOperator build_hamiltonian(const DimensionlessParams& params, int n_levels, double dimension_cap) {
    if (n_levels < 1) throw DomainError("build_hamiltonian: n_levels must be >= 1");
    const double n = truncation_estimate(params, n_levels);
    if (n > dimension_cap)
        throw UnsupportedScale("lattice dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dimension_cap));
    return build_hamiltonian_with_dimension(params, static_cast<int>(n));
}

std::vector<double> eigenvalues_sturm(const TridiagonalOperator& H, int k) {
    if (k < 1 || k > H.dimension) throw DomainError("eigenvalues_sturm: k must lie in [1, N]");
    std::vector<double> out;
    out.reserve(k);
    const double glo = H.gershgorin_lower();
    const double ghi = H.gershgorin_upper();
    double lo_start = glo;
    for (int i = 1; i <= k; ++i) {
        double lo = lo_start;
        double hi = ghi;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (H.sturm_count(mid) >= i)
                hi = mid;
            else
                lo = mid;
        }
        const double ev = 0.5 * (lo + hi);
        out.push_back(ev);
        lo_start = lo;
    }
    return out;
}

PolymerState eigenvector_inverse_iteration(const TridiagonalOperator& H, double epsilon) {
    const int n = H.dimension;
    std::mt19937_64 rng(kInverseIterationSeed);
    std::vector<double> x(n);
    for (double& v : x) v = 0.5 + static_cast<double>(rng() >> 11) * 0x1p-53;
    normalize(x);

    double shift = epsilon;
    const std::vector<double> off(n > 1 ? n - 1 : 0, H.off_diagonal);
    std::vector<double> diag(n);

    PolymerState state;
    state.params = H.params;
    state.energy = epsilon;
    state.samples.assign(n + 1, 0.0);

    auto iterate = [&]() {
        for (int attempt = 0; attempt < 8; ++attempt) {
            for (int i = 0; i < n; ++i) diag[i] = H.diagonal[i] - shift;
            std::vector<double> b = x;
            if (solve_tridiagonal(off, diag, off, b)) {
                x = b;
                normalize(x);
                return;
            }
            shift += 1e-13;
        }
        throw NumericalFailure("eigenvector_inverse_iteration: singular shifted system");
    };

    for (int step = 0; step < 2; ++step) iterate();
    auto load = [&]() {
        const double sign = x[0] < 0.0 ? -1.0 : 1.0;
        for (int mu = 1; mu <= n; ++mu) state.samples[mu] = sign * x[mu - 1];
    };
    load();
    for (int extra = 0; extra < 6 && eigen_residual(H, state) > 1e-8; ++extra) {
        iterate();
        load();
    }
    if (eigen_residual(H, state) > 1e-8)
        throw NumericalFailure("eigenvector_inverse_iteration: residual above 1e-8; shift not close to an eigenvalue");

    state.level = H.sturm_count(epsilon + 1e-9);
    return state;
}

double eigen_residual(const TridiagonalOperator& H, const PolymerState& state) {
    double sum = 0.0;
    for (int mu = 1; mu <= H.dimension; ++mu) {
        const double r = (H.d(mu) - state.energy) * state.psi(mu) +
                         H.off_diagonal * (state.psi(mu + 1) + state.psi(mu - 1));
        sum += r * r;
    }
    return std::sqrt(sum);
}

std::vector<PolymerState> lattice_states(const DimensionlessParams& params, int count) {
    const TridiagonalOperator H = build_hamiltonian(params, count);
    const std::vector<double> evs = eigenvalues_sturm(H, count);
    std::vector<PolymerState> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        PolymerState st = eigenvector_inverse_iteration(H, evs[i]);
        st.level = i + 1;
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace polybounce
