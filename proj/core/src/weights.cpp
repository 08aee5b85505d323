#include "blab/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "blab/spectral.hpp"
#include "blab/trig_interp.hpp"

namespace blab {

WeightSpec WeightSpec::power(double ell, double K) {
    if (!(K >= 0.0)) throw std::invalid_argument("WeightSpec: K must be >= 0");
    return WeightSpec{Kind::power, ell, K};
}

WeightSpec WeightSpec::log_weight() { return WeightSpec{Kind::log, 0.0, 0.0}; }

double WeightSpec::operator()(const Point& x) const {
    const double bracket = std::sqrt(1.0 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (kind == Kind::power) return std::pow(bracket + K, ell);
    return std::pow(std::log(bracket + 1.0), 0.75);
}

ExponentTriple::ExponentTriple(double m_, double ell_, double eps_, int d_) : m(m_), ell(ell_), eps(eps_), d(d_) {
    std::ostringstream err;
    const double m_lo = 2.0 * d / (d + 4.0);
    if (m_lo >= 1.0) {
        err << "exponent window (2d/(d+4), 1) = (" << m_lo << ", 1) is empty at d = " << d;
        throw std::invalid_argument(err.str());
    }
    if (!(m > m_lo && m < 1.0)) {
        err << "m = " << m << " outside (" << m_lo << ", 1)";
        throw std::invalid_argument(err.str());
    }
    const double ell_hi = (1.0 + 2.0 / d) * m - 1.0;
    if (!(ell > m / 2.0 && ell < ell_hi)) {
        err << "ell = " << ell << " outside (" << m / 2.0 << ", " << ell_hi << ")";
        throw std::invalid_argument(err.str());
    }
    if (!(eps > 0.0 && eps < ell - m / 2.0)) {
        err << "eps = " << eps << " outside (0, " << ell - m / 2.0 << ")";
        throw std::invalid_argument(err.str());
    }
}

namespace {

void scan_field_over_weight(const Field& f, const WeightSpec& w, double& best) {
    const Grid& g = f.grid();
    for (std::int64_t idx = 0; idx < g.cells(); ++idx) {
        const double wv = w(g.point_at(idx));
        for (int c = 0; c < f.components(); ++c) {
            const double v = std::abs(f(c, idx)) / wv;
            if (v > best) best = v;
        }
    }
}

}  // namespace

double weighted_sup_norm(const Field& f, const WeightSpec& w, int order) {
    if (order < 0 || order > 2) throw std::invalid_argument("weighted_sup_norm: order must be 0, 1, or 2");
    double best = 0.0;
    scan_field_over_weight(f, w, best);
    if (order >= 1) {
        for (int a = 1; a <= f.grid().dim(); ++a) scan_field_over_weight(spectral_derivative(f, a), w, best);
    }
    if (order >= 2) {
        for (int a = 1; a <= f.grid().dim(); ++a) {
            Field da = spectral_derivative(f, a);
            for (int b = a; b <= f.grid().dim(); ++b) scan_field_over_weight(spectral_derivative(da, b), w, best);
        }
    }
    return best;
}

double weighted_holder_seminorm(const Field& f, const WeightSpec& w, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("weighted_holder_seminorm: alpha must be in (0,1)");
    const Grid& g = f.grid();
    const int d = g.dim();
    const int n = g.points_per_axis();
    const double h = g.spacing();

    // integer step directions: axes, face diagonals, body diagonals
    std::vector<std::array<int, 3>> dirs;
    for (int a = 0; a < d; ++a) {
        std::array<int, 3> e{0, 0, 0};
        e[a] = 1;
        dirs.push_back(e);
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int sb : {1, -1}) {
                std::array<int, 3> e{0, 0, 0};
                e[a] = 1;
                e[b] = sb;
                dirs.push_back(e);
            }
    if (d == 3)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) dirs.push_back({1, s1, s2});

    // weight values, cached per point
    std::vector<double> wv(static_cast<size_t>(g.cells()));
    for (std::int64_t idx = 0; idx < g.cells(); ++idx) wv[static_cast<size_t>(idx)] = w(g.point_at(idx));

    double best = 0.0;
    std::array<int, 3> j{0, 0, 0};
    for (const auto& dir : dirs) {
        double dirlen = 0.0;
        for (int a = 0; a < d; ++a) dirlen += static_cast<double>(dir[a]) * dir[a];
        dirlen = std::sqrt(dirlen);
        const int tmax = static_cast<int>(std::floor(1.0 / (h * dirlen)));
        for (int t = 1; t <= tmax; ++t) {
            const double dist = t * h * dirlen;
            const double denom_dist = std::pow(dist, alpha);
            for (std::int64_t idx = 0; idx < g.cells(); ++idx) {
                j = g.unflatten(idx);
                bool wraps = false;
                std::array<int, 3> jn = j;
                for (int a = 0; a < d; ++a) {
                    jn[a] = j[a] + t * dir[a];
                    if (jn[a] < 0 || jn[a] >= n) wraps = true;
                }
                if (wraps) continue;
                const std::int64_t nidx = g.flat(std::span<const int>(jn.data(), static_cast<size_t>(d)));
                double diff2 = 0.0;
                for (int c = 0; c < f.components(); ++c) diff2 += (f(c, nidx) - f(c, idx)) * (f(c, nidx) - f(c, idx));
                const double num = std::sqrt(diff2);
                const double denom_w = std::min(wv[static_cast<size_t>(idx)], wv[static_cast<size_t>(nidx)]);
                const double v = num / (denom_w * denom_dist);
                if (v > best) best = v;
            }
        }
    }
    return best;
}

double weighted_holder_norm(const Field& f, const WeightSpec& w, double alpha) {
    return std::max(weighted_sup_norm(f, w, 0), weighted_holder_seminorm(f, w, alpha));
}

double oscillation(const Field& f, std::span<const Point> S) {
    if (S.empty()) throw std::invalid_argument("oscillation: empty point set");
    if (f.components() != 1) throw std::invalid_argument("oscillation: scalar field required");
    TrigInterpolator interp(f);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& p : S) {
        const double v = interp(p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

}  // namespace blab
