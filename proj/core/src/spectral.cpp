#include "blab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace blab {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

SpectralWorkspace::SpectralWorkspace(const Grid& grid) : grid_(grid) {
    const int d = grid_.dim();
    const int n = grid_.points_per_axis();
    int fft_dims[3] = {1, 1, 1};
    for (int a = 0; a < d; ++a) fft_dims[a] = n;
    for (int a = 0; a < 3; ++a) dims_[a] = 1;
    for (int a = 0; a < d - 1; ++a) dims_[a] = n;
    dims_[d - 1] = n / 2 + 1;
    spec_size_ = 1;
    for (int a = 0; a < d; ++a) spec_size_ *= dims_[a];

    real_buf_ = fftw_alloc_real(static_cast<size_t>(grid_.cells()));
    cplx_buf_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(static_cast<size_t>(spec_size_)));
    if (!real_buf_ || !cplx_buf_) throw std::bad_alloc();

    std::lock_guard lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_r2c(d, fft_dims, real_buf_, reinterpret_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_c2r(d, fft_dims, reinterpret_cast<fftw_complex*>(cplx_buf_), real_buf_, FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("SpectralWorkspace: fftw plan creation failed");
}

SpectralWorkspace::~SpectralWorkspace() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(real_buf_);
    fftw_free(cplx_buf_);
}

void SpectralWorkspace::forward(std::span<const double> real, std::span<std::complex<double>> spec) {
    if (std::ssize(real) != grid_.cells() || std::ssize(spec) != spec_size_)
        throw std::invalid_argument("SpectralWorkspace::forward: size mismatch");
    std::memcpy(real_buf_, real.data(), real.size_bytes());
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(spec.data(), cplx_buf_, spec.size_bytes());
}

void SpectralWorkspace::inverse(std::span<const std::complex<double>> spec, std::span<double> real) {
    if (std::ssize(real) != grid_.cells() || std::ssize(spec) != spec_size_)
        throw std::invalid_argument("SpectralWorkspace::inverse: size mismatch");
    std::memcpy(cplx_buf_, spec.data(), spec.size_bytes());
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / static_cast<double>(grid_.cells());
    for (std::int64_t i = 0; i < grid_.cells(); ++i) real[i] = real_buf_[i] * scale;
}

std::array<int, 3> SpectralWorkspace::modes_at(std::int64_t sidx) const {
    const int d = grid_.dim();
    const int n = grid_.points_per_axis();
    std::array<int, 3> m{0, 0, 0};
    for (int a = d - 1; a >= 0; --a) {
        int j = static_cast<int>(sidx % dims_[a]);
        sidx /= dims_[a];
        m[a] = (a == d - 1) ? j : (j <= n / 2 ? j : j - n);
    }
    return m;
}

double SpectralWorkspace::wavenumber(int, int mode) const {
    return 2.0 * std::numbers::pi * mode / grid_.period();
}

template <typename F>
void SpectralWorkspace::for_each_entry(F&& f) const {
    const int d = grid_.dim();
    const int n = grid_.points_per_axis();
    const int half = n / 2;
    std::int64_t idx = 0;
    int m[3] = {0, 0, 0};
    const int d0 = dims_[0], d1 = dims_[1], d2 = dims_[2];
    for (int j0 = 0; j0 < d0; ++j0) {
        m[0] = (d == 1) ? j0 : (j0 <= half ? j0 : j0 - n);
        for (int j1 = 0; j1 < d1; ++j1) {
            m[1] = (d == 2) ? j1 : (j1 <= half ? j1 : j1 - n);
            for (int j2 = 0; j2 < d2; ++j2) {
                m[2] = j2;
                f(idx++, m);
            }
        }
    }
}

std::span<const double> SpectralWorkspace::k_squared() {
    if (k2_.empty()) {
        k2_.resize(static_cast<size_t>(spec_size_));
        const double k1 = 2.0 * std::numbers::pi / grid_.period();
        const int d = grid_.dim();
        for_each_entry([&](std::int64_t idx, const int* m) {
            double s = 0.0;
            for (int a = 0; a < d; ++a) s += static_cast<double>(m[a]) * m[a];
            k2_[idx] = k1 * k1 * s;
        });
    }
    return k2_;
}

void SpectralWorkspace::apply_derivative(std::span<std::complex<double>> spec, int axis) const {
    const double k1 = 2.0 * std::numbers::pi / grid_.period();
    const int half = grid_.points_per_axis() / 2;
    for_each_entry([&](std::int64_t idx, const int* m) {
        if (std::abs(m[axis]) == half) {
            spec[idx] = 0.0;  // Nyquist zeroed so odd derivatives stay real
        } else {
            spec[idx] *= std::complex<double>(0.0, k1 * m[axis]);
        }
    });
}

void SpectralWorkspace::apply_laplacian(std::span<std::complex<double>> spec) const {
    const double k1 = 2.0 * std::numbers::pi / grid_.period();
    const int d = grid_.dim();
    for_each_entry([&](std::int64_t idx, const int* m) {
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += static_cast<double>(m[a]) * m[a];
        spec[idx] *= -k1 * k1 * s;
    });
}

void SpectralWorkspace::apply_dealias(std::span<std::complex<double>> spec) const {
    const int cutoff = grid_.points_per_axis() / 3;
    const int d = grid_.dim();
    for_each_entry([&](std::int64_t idx, const int* m) {
        for (int a = 0; a < d; ++a) {
            if (std::abs(m[a]) > cutoff) {
                spec[idx] = 0.0;
                return;
            }
        }
    });
}

SpectralWorkspace& workspace_for(const Grid& grid) {
    struct Key {
        int d, n;
        double L;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = std::hash<int>()(k.d) * 31 + std::hash<int>()(k.n);
            return h * 31 + std::hash<double>()(k.L);
        }
    };
    thread_local std::unordered_map<Key, std::unique_ptr<SpectralWorkspace>, KeyHash> cache;
    Key key{grid.dim(), grid.points_per_axis(), grid.period()};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<SpectralWorkspace>(grid)).first;
    return *it->second;
}

namespace {

Field apply_spectral(const Field& f, const char* who, void (*op)(SpectralWorkspace&, std::span<std::complex<double>>)) {
    f.require_finite(who);
    auto& ws = workspace_for(f.grid());
    Field out(f.grid(), f.components(), f.time_tag(), false);
    std::vector<std::complex<double>> spec(static_cast<size_t>(ws.spectral_size()));
    for (int c = 0; c < f.components(); ++c) {
        ws.forward(f.component(c), spec);
        op(ws, spec);
        ws.inverse(spec, out.component(c));
    }
    return out;
}

}  // namespace

Field spectral_derivative(const Field& f, int axis) {
    if (axis < 1 || axis > f.grid().dim()) throw std::invalid_argument("spectral_derivative: axis out of range");
    f.require_finite("spectral_derivative");
    auto& ws = workspace_for(f.grid());
    Field out(f.grid(), f.components(), f.time_tag(), false);
    std::vector<std::complex<double>> spec(static_cast<size_t>(ws.spectral_size()));
    for (int c = 0; c < f.components(); ++c) {
        ws.forward(f.component(c), spec);
        ws.apply_derivative(spec, axis - 1);
        ws.inverse(spec, out.component(c));
    }
    return out;
}

Field laplacian(const Field& f) {
    return apply_spectral(f, "laplacian",
                          [](SpectralWorkspace& ws, std::span<std::complex<double>> s) { ws.apply_laplacian(s); });
}

Field gradient(const Field& f) {
    if (f.components() != 1) throw std::invalid_argument("gradient: scalar input required");
    f.require_finite("gradient");
    auto& ws = workspace_for(f.grid());
    const int d = f.grid().dim();
    Field out(f.grid(), d, f.time_tag(), true);
    std::vector<std::complex<double>> spec(static_cast<size_t>(ws.spectral_size()));
    std::vector<std::complex<double>> work(static_cast<size_t>(ws.spectral_size()));
    ws.forward(f.component(0), spec);
    for (int a = 0; a < d; ++a) {
        work = spec;
        ws.apply_derivative(work, a);
        ws.inverse(work, out.component(a));
    }
    return out;
}

double gradient_defect(const Field& u) {
    const int d = u.grid().dim();
    if (u.components() != d) throw std::invalid_argument("gradient_defect: d-component field required");
    double worst = 0.0;
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            Field ui(u.grid(), 1, u.time_tag());
            Field uj(u.grid(), 1, u.time_tag());
            std::copy(u.component(i - 1).begin(), u.component(i - 1).end(), ui.component(0).begin());
            std::copy(u.component(j - 1).begin(), u.component(j - 1).end(), uj.component(0).begin());
            Field dij = spectral_derivative(uj, i);
            Field dji = spectral_derivative(ui, j);
            worst = std::max(worst, max_abs_diff(dij, dji));
        }
    }
    return worst;
}

bool verify_gradient(const Field& u, double tol) {
    if (u.grid().dim() == 1) return u.components() == 1;
    return gradient_defect(u) <= tol * (1.0 + u.max_abs());
}

Field finite_difference_derivative(const Field& f, int axis) {
    if (axis < 1 || axis > f.grid().dim()) throw std::invalid_argument("finite_difference_derivative: axis out of range");
    const Grid& g = f.grid();
    const int n = g.points_per_axis();
    Field out(g, f.components(), f.time_tag(), false);
    // stride of one step along `axis` in the row-major flat layout
    std::int64_t stride = 1;
    for (int a = g.dim() - 1; a > axis - 1; --a) stride *= n;
    const std::int64_t axis_span = stride * n;
    const double inv2h = 1.0 / (2.0 * g.spacing());
    for (int c = 0; c < f.components(); ++c) {
        auto in = f.component(c);
        auto ov = out.component(c);
        for (std::int64_t i = 0; i < g.cells(); ++i) {
            const std::int64_t base = (i / axis_span) * axis_span;
            const std::int64_t off = i - base;
            const std::int64_t fwd = base + (off + stride) % axis_span;
            const std::int64_t bwd = base + (off - stride + axis_span) % axis_span;
            ov[i] = (in[fwd] - in[bwd]) * inv2h;
        }
    }
    return out;
}

}  // namespace blab
