#include "blab/trig_interp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blab/spectral.hpp"

namespace blab {

namespace {

inline int mode_of(int j, int n, bool last_axis) {
    if (last_axis) return j;
    return j <= n / 2 ? j : j - n;
}

/// e^{i k_m (x + L/2)} for one axis, folding in the Hermitian weight on
/// the last axis (1 for the self-conjugate planes, 2 otherwise).
std::vector<std::complex<double>> phase_matrix(const Grid& g, int axis, bool last_axis, int dim,
                                               const std::vector<double>& coords) {
    const int n = g.points_per_axis();
    std::vector<std::complex<double>> E(coords.size() * dim);
    for (size_t p = 0; p < coords.size(); ++p) {
        const double xs = coords[p] + 0.5 * g.period();
        for (int j = 0; j < dim; ++j) {
            const int m = mode_of(j, n, last_axis);
            const double theta = 2.0 * std::numbers::pi * m * xs / g.period();
            double w = 1.0;
            if (last_axis && j != 0 && j != n / 2) w = 2.0;
            E[p * dim + j] = w * std::complex<double>(std::cos(theta), std::sin(theta));
        }
    }
    (void)axis;
    return E;
}

}  // namespace

TrigInterpolator::TrigInterpolator(const Field& scalar) : grid_(scalar.grid()) {
    if (scalar.components() != 1) throw std::invalid_argument("TrigInterpolator: scalar field required");
    auto& ws = workspace_for(grid_);
    coef_.resize(static_cast<size_t>(ws.spectral_size()));
    ws.forward(scalar.component(0), coef_);
    const double scale = 1.0 / static_cast<double>(grid_.cells());
    for (auto& c : coef_) c *= scale;
    const int d = grid_.dim();
    const int n = grid_.points_per_axis();
    dims_ = {1, 1, 1};
    for (int a = 0; a < d - 1; ++a) dims_[a] = n;
    dims_[d - 1] = n / 2 + 1;
}

TrigInterpolator::TrigInterpolator(Grid g, std::vector<std::complex<double>> coef, std::array<int, 3> dims)
    : grid_(g), coef_(std::move(coef)), dims_(dims) {}

TrigInterpolator TrigInterpolator::derivative(int axis) const {
    if (axis < 1 || axis > grid_.dim()) throw std::invalid_argument("TrigInterpolator::derivative: axis out of range");
    const int a = axis - 1;
    const int n = grid_.points_per_axis();
    const int half = n / 2;
    const double k1 = 2.0 * std::numbers::pi / grid_.period();
    std::vector<std::complex<double>> out(coef_.size());
    std::int64_t idx = 0;
    for (int j0 = 0; j0 < dims_[0]; ++j0)
        for (int j1 = 0; j1 < dims_[1]; ++j1)
            for (int j2 = 0; j2 < dims_[2]; ++j2, ++idx) {
                const int j = (a == 0) ? j0 : (a == 1 ? j1 : j2);
                const int m = mode_of(j, n, a == grid_.dim() - 1);
                out[idx] = (std::abs(m) == half) ? 0.0 : coef_[idx] * std::complex<double>(0.0, k1 * m);
            }
    return TrigInterpolator(grid_, std::move(out), dims_);
}

TrigInterpolator TrigInterpolator::second_derivative(int axis) const {
    if (axis < 1 || axis > grid_.dim())
        throw std::invalid_argument("TrigInterpolator::second_derivative: axis out of range");
    const int a = axis - 1;
    const int n = grid_.points_per_axis();
    const double k1 = 2.0 * std::numbers::pi / grid_.period();
    std::vector<std::complex<double>> out(coef_.size());
    std::int64_t idx = 0;
    for (int j0 = 0; j0 < dims_[0]; ++j0)
        for (int j1 = 0; j1 < dims_[1]; ++j1)
            for (int j2 = 0; j2 < dims_[2]; ++j2, ++idx) {
                const int j = (a == 0) ? j0 : (a == 1 ? j1 : j2);
                const int m = mode_of(j, n, a == grid_.dim() - 1);
                out[idx] = -coef_[idx] * (k1 * m) * (k1 * m);
            }
    return TrigInterpolator(grid_, std::move(out), dims_);
}

double TrigInterpolator::operator()(const Point& x) const {
    const int d = grid_.dim();
    const int n = grid_.points_per_axis();
    const double k1 = 2.0 * std::numbers::pi / grid_.period();
    // per-axis phase tables
    std::array<std::vector<std::complex<double>>, 3> ph;
    for (int a = 0; a < d; ++a) {
        ph[a].resize(dims_[a]);
        const double xs = x[a] + 0.5 * grid_.period();
        for (int j = 0; j < dims_[a]; ++j) {
            const int m = mode_of(j, n, a == d - 1);
            const double theta = k1 * m * xs;
            double w = 1.0;
            if (a == d - 1 && j != 0 && j != n / 2) w = 2.0;
            ph[a][j] = w * std::complex<double>(std::cos(theta), std::sin(theta));
        }
    }
    std::complex<double> acc = 0.0;
    std::int64_t idx = 0;
    for (int j0 = 0; j0 < dims_[0]; ++j0) {
        const auto p0 = (d >= 1) ? ph[0][j0] : std::complex<double>(1.0);
        for (int j1 = 0; j1 < dims_[1]; ++j1) {
            const auto p01 = (d >= 2) ? p0 * ph[1][j1] : p0;
            for (int j2 = 0; j2 < dims_[2]; ++j2, ++idx) {
                const auto p = (d >= 3) ? p01 * ph[2][j2] : p01;
                acc += coef_[idx] * p;
            }
        }
    }
    return acc.real();
}

std::vector<double> TrigInterpolator::eval_tensor(const std::vector<std::vector<double>>& axes) const {
    const int d = grid_.dim();
    if (std::ssize(axes) != d) throw std::invalid_argument("TrigInterpolator::eval_tensor: need one axis list per dim");
    std::array<std::vector<std::complex<double>>, 3> E;
    std::array<int, 3> P{1, 1, 1};
    for (int a = 0; a < d; ++a) {
        P[a] = static_cast<int>(axes[a].size());
        E[a] = phase_matrix(grid_, a, a == d - 1, dims_[a], axes[a]);
    }
    // contract from the last axis towards the first
    std::vector<std::complex<double>> cur(coef_.begin(), coef_.end());
    std::array<int, 3> shape{dims_[0], dims_[1], dims_[2]};
    for (int a = d - 1; a >= 0; --a) {
        const int s0 = shape[0], s1 = shape[1], s2 = shape[2];
        const int sa = (a == 0) ? s0 : (a == 1 ? s1 : s2);
        const int pa = P[a];
        std::array<int, 3> nshape = shape;
        nshape[a] = pa;
        std::vector<std::complex<double>> next(static_cast<size_t>(nshape[0]) * nshape[1] * nshape[2], 0.0);
        const auto& Ea = E[a];
        auto at = [](const std::array<int, 3>& sh, int i0, int i1, int i2) {
            return (static_cast<std::int64_t>(i0) * sh[1] + i1) * sh[2] + i2;
        };
        for (int i0 = 0; i0 < (a == 0 ? pa : s0); ++i0)
            for (int i1 = 0; i1 < (a == 1 ? pa : s1); ++i1)
                for (int i2 = 0; i2 < (a == 2 ? pa : s2); ++i2) {
                    std::complex<double> acc = 0.0;
                    for (int j = 0; j < sa; ++j) {
                        const int k0 = (a == 0) ? j : i0;
                        const int k1 = (a == 1) ? j : i1;
                        const int k2 = (a == 2) ? j : i2;
                        const int p = (a == 0) ? i0 : (a == 1 ? i1 : i2);
                        acc += cur[at(shape, k0, k1, k2)] * Ea[static_cast<size_t>(p) * sa + j];
                    }
                    next[at(nshape, i0, i1, i2)] = acc;
                }
        cur = std::move(next);
        shape = nshape;
    }
    std::vector<double> out(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) out[i] = cur[i].real();
    return out;
}

}  // namespace blab
