#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "h2/errors.hpp"

namespace h2 {

/// Default number of boundary samples used to certify a self-map.
inline constexpr int kSelfMapGrid = 4096;

/**
 * Linear fractional map z -> (a z + b) / (c z + d).
 *
 * Coefficients are stored as given (no normalization); two quadruples that
 * differ by a nonzero factor describe the same map. The constructor rejects
 * maps with |ad - bc| <= 1e-14 * scale^2, where scale is the largest
 * coefficient modulus. `validated` additionally certifies that the map sends
 * the closed disk into itself.
 */
template <typename Real>
class LinearFractionalMap {
 public:
  using Scalar = std::complex<Real>;
  using CoeffMatrix = Eigen::Matrix<Scalar, 2, 2>;

  static constexpr Real kDegenerateTol = Real(1e-14);
  static constexpr Real kPoleTol = Real(1e-14);

  LinearFractionalMap(Scalar a, Scalar b, Scalar c, Scalar d) : a_(a), b_(b), c_(c), d_(d) {
    const Real s = scale();
    if (!(s > Real(0)) || std::abs(a_ * d_ - b_ * c_) <= kDegenerateTol * s * s) {
      throw DegenerateMapError("linear fractional map is degenerate (ad - bc = 0)");
    }
  }

  explicit LinearFractionalMap(const CoeffMatrix& m) : LinearFractionalMap(m(0, 0), m(0, 1), m(1, 0), m(1, 1)) {}

  static LinearFractionalMap identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

  /// Multiplication z -> alpha z.
  static LinearFractionalMap scaling(Scalar alpha) { return {alpha, Scalar(0), Scalar(0), Scalar(1)}; }

  /// Throws DomainError unless the map is a self-map of the disk.
  static LinearFractionalMap validated(Scalar a, Scalar b, Scalar c, Scalar d, int grid_size = kSelfMapGrid);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }

  CoeffMatrix matrix() const {
    CoeffMatrix m;
    m << a_, b_, c_, d_;
    return m;
  }

  Real scale() const { return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)}); }

  Scalar determinant() const { return a_ * d_ - b_ * c_; }

  /// Same map with coefficients divided by scale().
  LinearFractionalMap normalized() const {
    const Real s = scale();
    return {a_ / s, b_ / s, c_ / s, d_ / s};
  }

  LinearFractionalMap scaled(Scalar t) const { return {t * a_, t * b_, t * c_, t * d_}; }

  bool has_pole() const { return std::abs(c_) > kPoleTol * scale(); }

  /// Pole -d/c; only meaningful when has_pole().
  Scalar pole() const { return -d_ / c_; }

  Scalar operator()(Scalar z) const {
    const Scalar den = c_ * z + d_;
    if (std::abs(den) <= kPoleTol * scale()) {
      throw PoleError("linear fractional map evaluated at its pole");
    }
    return (a_ * z + b_) / den;
  }

  Scalar derivative(Scalar z) const {
    const Scalar den = c_ * z + d_;
    if (std::abs(den) <= kPoleTol * scale()) {
      throw PoleError("derivative evaluated at the pole");
    }
    return determinant() / (den * den);
  }

  /// True when the coefficient quadruples are proportional.
  bool projectively_equal(const LinearFractionalMap& other, Real tol = Real(1e-12)) const {
    const LinearFractionalMap x = normalized();
    const LinearFractionalMap y = other.normalized();
    // 2x2 minors of the 4x2 matrix [x | y] vanish iff the columns are parallel.
    const Scalar xs[4] = {x.a_, x.b_, x.c_, x.d_};
    const Scalar ys[4] = {y.a_, y.b_, y.c_, y.d_};
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (std::abs(xs[i] * ys[j] - xs[j] * ys[i]) > tol) return false;
      }
    }
    return true;
  }

 private:
  Scalar a_, b_, c_, d_;
};

using Lft = LinearFractionalMap<double>;
using cplx = std::complex<double>;

template <typename Real>
std::complex<Real> lft_eval(const LinearFractionalMap<Real>& m, std::complex<Real> z) {
  return m(z);
}

/// Largest |phi(e^{it})| over `grid_size` equispaced boundary points.
template <typename Real>
Real boundary_sup(const LinearFractionalMap<Real>& m, int grid_size = kSelfMapGrid) {
  Real sup = 0;
  for (int k = 0; k < grid_size; ++k) {
    const Real t = Real(2) * std::numbers::pi_v<Real> * Real(k) / Real(grid_size);
    sup = std::max(sup, std::abs(m(std::polar(Real(1), t))));
  }
  return sup;
}

/**
 * Self-map test: no pole in the closed disk and the boundary image stays in
 * the closed disk up to 1e-12 on a grid of `grid_size` points.
 */
template <typename Real>
bool lft_is_self_map(const LinearFractionalMap<Real>& m, int grid_size = kSelfMapGrid) {
  if (grid_size < 256) throw DomainError("self-map grid needs at least 256 points");
  if (m.has_pole() && std::abs(m.pole()) <= Real(1)) return false;
  return boundary_sup(m, grid_size) <= Real(1) + Real(1e-12);
}

template <typename Real>
LinearFractionalMap<Real> LinearFractionalMap<Real>::validated(Scalar a, Scalar b, Scalar c, Scalar d,
                                                              int grid_size) {
  LinearFractionalMap m(a, b, c, d);
  if (!lft_is_self_map(m, grid_size)) {
    throw DomainError("linear fractional map is not a self-map of the unit disk");
  }
  return m;
}

/// max(1, sup |phi'| on the unit circle): how far C_phi spreads Fourier modes.
template <typename Real>
Real boundary_spread(const LinearFractionalMap<Real>& m, int grid_size = kSelfMapGrid) {
  Real s = 1;
  for (int k = 0; k < grid_size; ++k) {
    const Real t = Real(2) * std::numbers::pi_v<Real> * Real(k) / Real(grid_size);
    s = std::max(s, std::abs(m.derivative(std::polar(Real(1), t))));
  }
  return s;
}

enum class FixedPointKind { Interior, Boundary, Exterior };

template <typename Real>
struct FixedPoint {
  std::complex<Real> z;
  FixedPointKind kind;
};

template <typename Real>
struct FixedPointSet {
  bool identity = false;
  std::vector<FixedPoint<Real>> points;

  bool has_boundary() const {
    return std::any_of(points.begin(), points.end(),
                       [](const FixedPoint<Real>& p) { return p.kind == FixedPointKind::Boundary; });
  }
};

inline constexpr double kBoundaryFixedPointTol = 1e-10;

/**
 * Finite fixed points: roots of c z^2 + (d - a) z - b = 0.
 *
 * A discriminant below 1e-12 of the coefficient scale is treated as a double
 * root; parabolic maps (double boundary fixed point) are otherwise only
 * resolved to sqrt(eps).
 */
template <typename Real>
FixedPointSet<Real> lft_fixed_points(const LinearFractionalMap<Real>& map) {
  using Scalar = std::complex<Real>;
  const LinearFractionalMap<Real> m = map.normalized();
  const Real tol = Real(1e-14);
  const Scalar qa = m.c();
  const Scalar qb = m.d() - m.a();
  const Scalar qc = -m.b();

  FixedPointSet<Real> out;
  std::vector<Scalar> roots;
  if (std::abs(qa) <= tol) {
    if (std::abs(qb) <= tol) {
      out.identity = std::abs(qc) <= tol;
      return out;
    }
    roots.push_back(-qc / qb);
  } else {
    const Scalar disc = qb * qb - Real(4) * qa * qc;
    const Real disc_scale = std::norm(qb) + Real(4) * std::abs(qa * qc);
    if (std::abs(disc) <= Real(1e-12) * disc_scale) {
      roots.push_back(-qb / (Real(2) * qa));
    } else {
      const Scalar sq = std::sqrt(disc);
      // Pick the sign that avoids cancellation, recover the other root from the product.
      const Scalar q = (std::real(std::conj(qb) * sq) >= Real(0)) ? Scalar(-0.5) * (qb + sq) : Scalar(-0.5) * (qb - sq);
      roots.push_back(q / qa);
      if (std::abs(q) > tol) {
        roots.push_back(qc / q);
      } else {
        roots.push_back(Scalar(0));
      }
    }
  }
  for (const Scalar& z : roots) {
    const Real r = std::abs(z);
    FixedPointKind kind = FixedPointKind::Interior;
    if (std::abs(r - Real(1)) <= Real(kBoundaryFixedPointTol)) {
      kind = FixedPointKind::Boundary;
    } else if (r > Real(1)) {
      kind = FixedPointKind::Exterior;
    }
    out.points.push_back({z, kind});
  }
  return out;
}

/// Composition m1 o m2 via the coefficient matrix product.
template <typename Real>
LinearFractionalMap<Real> lft_compose(const LinearFractionalMap<Real>& m1, const LinearFractionalMap<Real>& m2) {
  return LinearFractionalMap<Real>(typename LinearFractionalMap<Real>::CoeffMatrix(m1.matrix() * m2.matrix()));
}

/**
 * Cowen's adjoint data for a linear fractional symbol:
 * sigma(z) = (conj(a) z - conj(c)) / (-conj(b) z + conj(d)),
 * g(z) = 1 / (-conj(b) z + conj(d)), h(z) = c z + d.
 */
template <typename Real>
struct CowenTriple {
  using Scalar = std::complex<Real>;

  LinearFractionalMap<Real> sigma;
  Scalar g_num;       // g(z) = g_num / (g_den_coeff z + g_den_const)
  Scalar g_den_coeff;
  Scalar g_den_const;
  Scalar h0, h1;      // h(z) = h1 z + h0

  Scalar g(Scalar z) const {
    const Scalar den = g_den_coeff * z + g_den_const;
    if (std::abs(den) == Real(0)) throw PoleError("g evaluated at its pole");
    return g_num / den;
  }
  Scalar h(Scalar z) const { return h1 * z + h0; }
};

template <typename Real>
CowenTriple<Real> cowen_triple(const LinearFractionalMap<Real>& m) {
  using std::conj;
  using Scalar = std::complex<Real>;
  return CowenTriple<Real>{
      LinearFractionalMap<Real>(conj(m.a()), -conj(m.c()), -conj(m.b()), conj(m.d())),
      Scalar(1),
      -conj(m.b()),
      conj(m.d()),
      m.d(),
      m.c(),
  };
}

/// Parses "re", "imi", "re+imi" or "re-imi" (no spaces; "i" alone is the unit).
std::complex<double> parse_complex(std::string_view text);

/// Parses "a,b,c,d" into a raw (unvalidated) map.
Lft parse_lft(std::string_view text);

/// Round-trip (%.17g) rendering in the same literal syntax.
std::string format_complex(std::complex<double> z);

std::string format_lft(const Lft& m);

}  // namespace h2
