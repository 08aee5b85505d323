#include "blab/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blab/rng.hpp"

namespace blab {

namespace {

double sq(double x) { return x * x; }

double norm2(const Point& x) { return sq(x[0]) + sq(x[1]) + sq(x[2]); }

/// integral over the unit ball of exp(-1/(1-|y|^2)), by midpoint quadrature
double bump_ball_integral(int d) {
    static double cache[4] = {0, 0, 0, 0};
    if (cache[d] != 0.0) return cache[d];
    const int nq = (d == 1) ? 20001 : (d == 2 ? 1201 : 301);
    const double hq = 2.0 / nq;
    double total = 0.0;
    auto val = [](double r2) { return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0; };
    if (d == 1) {
        for (int i = 0; i < nq; ++i) total += val(sq(-1.0 + (i + 0.5) * hq));
    } else if (d == 2) {
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j) total += val(sq(-1.0 + (i + 0.5) * hq) + sq(-1.0 + (j + 0.5) * hq));
    } else {
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                for (int k = 0; k < nq; ++k)
                    total += val(sq(-1.0 + (i + 0.5) * hq) + sq(-1.0 + (j + 0.5) * hq) + sq(-1.0 + (k + 0.5) * hq));
    }
    cache[d] = total * std::pow(hq, d);
    return cache[d];
}

void validate(const NoiseModel& m) {
    if (!(m.width > 0.0)) throw std::invalid_argument("NoiseModel: width must be positive");
    if (!(m.amplitude >= 0.0)) throw std::invalid_argument("NoiseModel: amplitude must be nonnegative");
}

}  // namespace

double rho_eval(const NoiseModel& model, int d, const Point& x) {
    validate(model);
    const double s = model.width;
    const double r2 = norm2(x);
    if (model.kind == NoiseModel::Kind::gaussian) {
        return model.amplitude * std::pow(2.0 * std::numbers::pi * s * s, -0.5 * d) * std::exp(-r2 / (2.0 * s * s));
    }
    const double u2 = r2 / (s * s);
    if (u2 >= 1.0) return 0.0;
    const double norm = std::pow(s, d) * bump_ball_integral(d);
    return model.amplitude / norm * std::exp(-1.0 / (1.0 - u2));
}

double rho_star2(const NoiseModel& model, int d, const Point& x) {
    validate(model);
    const double s = model.width;
    if (model.kind == NoiseModel::Kind::gaussian) {
        return sq(model.amplitude) * std::pow(4.0 * std::numbers::pi * s * s, -0.5 * d) *
               std::exp(-norm2(x) / (4.0 * s * s));
    }
    if (norm2(x) >= sq(2.0 * s)) return 0.0;  // supports of rho(y), rho(x-y) disjoint
    const int nq = (d == 1) ? 4001 : (d == 2 ? 501 : 121);
    const double hq = 2.0 * s / nq;
    double total = 0.0;
    Point y{0, 0, 0};
    if (d == 1) {
        for (int i = 0; i < nq; ++i) {
            y[0] = -s + (i + 0.5) * hq;
            total += rho_eval(model, d, y) * rho_eval(model, d, {x[0] - y[0], 0, 0});
        }
    } else if (d == 2) {
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j) {
                y = {-s + (i + 0.5) * hq, -s + (j + 0.5) * hq, 0};
                total += rho_eval(model, d, y) * rho_eval(model, d, {x[0] - y[0], x[1] - y[1], 0});
            }
    } else {
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                for (int k = 0; k < nq; ++k) {
                    y = {-s + (i + 0.5) * hq, -s + (j + 0.5) * hq, -s + (k + 0.5) * hq};
                    total += rho_eval(model, d, y) * rho_eval(model, d, {x[0] - y[0], x[1] - y[1], x[2] - y[2]});
                }
    }
    return total * std::pow(hq, d);
}

double rho_l2_squared(const NoiseModel& model, int d) { return rho_star2(model, d, {0, 0, 0}); }

double variance_constant(const NoiseModel& model, int d, double L) {
    validate(model);
    if (!(L >= 1.0)) throw std::invalid_argument("variance_constant: L >= 1 required");
    double total = rho_star2(model, d, {0, 0, 0});
    for (int shell = 1; shell < 64; ++shell) {
        double term = 0.0;
        const int lo = -shell, hi = shell;
        for (int i = lo; i <= hi; ++i) {
            for (int j = (d >= 2 ? lo : 0); j <= (d >= 2 ? hi : 0); ++j) {
                for (int k = (d >= 3 ? lo : 0); k <= (d >= 3 ? hi : 0); ++k) {
                    if (std::max({std::abs(i), std::abs(j), std::abs(k)}) != shell) continue;
                    term += rho_star2(model, d, {L * i, L * j, L * k});
                }
            }
        }
        total += term;
        if (term < 1e-16 * total) break;
    }
    return total;
}

NoiseWorkspace::NoiseWorkspace(const NoiseModel& model, const Grid& grid) : model_(model), grid_(grid) {
    validate(model);
    if (!(model.width < grid.period() / 8.0))
        throw std::invalid_argument("NoiseModel: width must be < L/8 so the periodization is grid-dominated");

    // periodized mollifier sampled on the grid
    const int d = grid.dim();
    const double L = grid.period();
    int images = 1;
    if (model.kind == NoiseModel::Kind::gaussian) {
        // images until the next shell is below 1e-20 of the peak
        while (std::exp(-sq((images - 0.5) * L) / (2.0 * sq(model.width))) > 1e-20) ++images;
    }
    std::vector<double> rho_per(static_cast<size_t>(grid.cells()));
    double sumsq = 0.0;
    for (std::int64_t idx = 0; idx < grid.cells(); ++idx) {
        const Point x = grid.point_at(idx);
        double v = 0.0;
        for (int i = -images; i <= images; ++i) {
            for (int j = (d >= 2 ? -images : 0); j <= (d >= 2 ? images : 0); ++j) {
                for (int k = (d >= 3 ? -images : 0); k <= (d >= 3 ? images : 0); ++k) {
                    v += rho_eval(model, d, {x[0] + L * i, x[1] + (d >= 2 ? L * j : 0.0), x[2] + (d >= 3 ? L * k : 0.0)});
                }
            }
        }
        rho_per[static_cast<size_t>(idx)] = v;
        sumsq += v * v;
    }
    const double hd = std::pow(grid.spacing(), d);
    variance_rate_ = hd * sumsq;

    auto& ws = workspace_for(grid);
    std::vector<std::complex<double>> rho_hat(static_cast<size_t>(ws.spectral_size()));
    ws.forward(rho_per, rho_hat);
    conv_mult_.resize(rho_hat.size());
    for (size_t i = 0; i < rho_hat.size(); ++i) conv_mult_[i] = hd * rho_hat[i].real();
}

void NoiseWorkspace::sample_spectral(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, double dt,
                                     SpectralWorkspace& ws, std::span<std::complex<double>> dV_hat) const {
    if (!(dt > 0.0)) throw std::invalid_argument("NoiseWorkspace::sample_spectral: dt must be positive");
    const double scale = std::sqrt(dt / std::pow(grid_.spacing(), grid_.dim()));
    std::vector<double> white(static_cast<size_t>(grid_.cells()));
    for (std::int64_t c = 0; c < grid_.cells(); ++c)
        white[static_cast<size_t>(c)] = scale * gaussian_at(stream_key, step, substep, static_cast<std::uint32_t>(c));
    ws.forward(white, dV_hat);
    for (std::int64_t i = 0; i < ws.spectral_size(); ++i) dV_hat[static_cast<size_t>(i)] *= conv_mult_[static_cast<size_t>(i)];
}

NoiseIncrement NoiseWorkspace::sample(std::uint64_t stream_key, std::uint64_t step, double dt,
                                      SpectralWorkspace& ws) const {
    std::vector<std::complex<double>> dV_hat(static_cast<size_t>(ws.spectral_size()));
    sample_spectral(stream_key, step, 0, dt, ws, dV_hat);
    NoiseIncrement inc{Field(grid_, 1), Field(grid_, grid_.dim(), 0.0, true), dt};
    ws.inverse(dV_hat, inc.dV.component(0));
    std::vector<std::complex<double>> work(dV_hat.size());
    for (int a = 0; a < grid_.dim(); ++a) {
        work = dV_hat;
        ws.apply_derivative(work, a);
        ws.inverse(work, inc.dgradV.component(a));
    }
    return inc;
}

NoiseIncrement sample_increment(const NoiseModel& model, const Grid& grid, double dt, std::uint64_t step) {
    NoiseWorkspace nws(model, grid);
    return nws.sample(derive_stream_key(model.seed, 0), step, dt, workspace_for(grid));
}

}  // namespace blab
