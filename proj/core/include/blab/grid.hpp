#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace blab {

/// A point in R^d. Only the first d coordinates are meaningful.
using Point = std::array<double, 3>;

inline Point make_point(double x, double y = 0.0, double z = 0.0) { return {x, y, z}; }

/// Periodic lattice on [-L/2, L/2)^d with n points per axis.
///
/// n is required to be a power of two, so h = L/n is exact in binary
/// floating point and h*n == L holds bit-for-bit.
class Grid {
  public:
    Grid(int d, double L, int n);

    int dim() const { return d_; }
    double period() const { return L_; }
    int points_per_axis() const { return n_; }
    double spacing() const { return h_; }
    std::int64_t cells() const { return cells_; }

    /// Coordinate of index j along any axis: j*h - L/2, j in [0, n).
    double coord(int j) const { return j * h_ - 0.5 * L_; }

    /// Index of the grid point closest to coordinate x (periodic).
    int index_of(double x) const;

    /// Row-major flat index; axis 1 is the slowest-varying.
    std::int64_t flat(std::span<const int> j) const;
    std::array<int, 3> unflatten(std::int64_t idx) const;
    Point point_at(std::int64_t idx) const;

    /// Wrap an axis index into [0, n).
    int wrap(int j) const {
        j %= n_;
        return j < 0 ? j + n_ : j;
    }

    /// Torus representative of x in [-L/2, L/2).
    double wrap_coord(double x) const;

    bool operator==(const Grid& other) const {
        return d_ == other.d_ && n_ == other.n_ && L_ == other.L_;
    }

  private:
    int d_;
    double L_;
    int n_;
    double h_;
    std::int64_t cells_;
};

}  // namespace blab
