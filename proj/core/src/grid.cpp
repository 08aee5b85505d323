#include "blab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace blab {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int d, double L, int n) : d_(d), L_(L), n_(n) {
    if (d < 1 || d > 3) throw std::invalid_argument("Grid: dimension must be 1, 2, or 3");
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("Grid: period L must be positive and finite");
    if (n < 8 || !is_power_of_two(n))
        throw std::invalid_argument("Grid: n must be a power of two with n >= 8, got " + std::to_string(n));
    h_ = L_ / n_;  // exact: n is a power of two
    cells_ = 1;
    for (int i = 0; i < d_; ++i) cells_ *= n_;
}

int Grid::index_of(double x) const {
    double j = std::round((x + 0.5 * L_) / h_);
    return wrap(static_cast<int>(j));
}

std::int64_t Grid::flat(std::span<const int> j) const {
    std::int64_t idx = 0;
    for (int a = 0; a < d_; ++a) idx = idx * n_ + wrap(j[a]);
    return idx;
}

std::array<int, 3> Grid::unflatten(std::int64_t idx) const {
    std::array<int, 3> j{0, 0, 0};
    for (int a = d_ - 1; a >= 0; --a) {
        j[a] = static_cast<int>(idx % n_);
        idx /= n_;
    }
    return j;
}

Point Grid::point_at(std::int64_t idx) const {
    auto j = unflatten(idx);
    Point x{0.0, 0.0, 0.0};
    for (int a = 0; a < d_; ++a) x[a] = coord(j[a]);
    return x;
}

double Grid::wrap_coord(double x) const {
    double y = std::fmod(x + 0.5 * L_, L_);
    if (y < 0) y += L_;
    return y - 0.5 * L_;
}

}  // namespace blab
