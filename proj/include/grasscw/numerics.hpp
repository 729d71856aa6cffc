#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "covering.hpp"
#include "incidence.hpp"

namespace grasscw {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Tolerances {
  double rank = 1e-7;
  double involution = 1e-8;
  double margin = 1e-6;
};

inline const Tolerances default_tolerances{};

inline Matrix signed_matrix(const SignedInvolution& w) {
  const int n = w.size();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(w.image(i), i) = w.sign(i);
  return m;
}

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Symmetric orthogonal matrix with square one.
class OrthogonalInvolution {
 public:
  static constexpr double invariant_tolerance = 1e-9;

  explicit OrthogonalInvolution(Matrix g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) throw not_involution("matrix is not square");
    const auto id = Matrix::Identity(g_.rows(), g_.cols());
    if (max_abs(g_ * g_.transpose() - id) > invariant_tolerance || max_abs(g_ * g_ - id) > invariant_tolerance ||
        max_abs(g_ - g_.transpose()) > invariant_tolerance)
      throw not_involution("matrix is not an orthogonal involution");
  }
  explicit OrthogonalInvolution(const SignedInvolution& w) : g_(signed_matrix(w)) {}

  int size() const { return static_cast<int>(g_.rows()); }
  const Matrix& matrix() const { return g_; }

 private:
  Matrix g_;
};

namespace detail {

inline Matrix pi_unchecked(const Matrix& z) {
  const auto n = z.rows();
  Eigen::LLT<Matrix> llt(Matrix::Identity(n, n) + z.transpose() * z);
  if (llt.info() != Eigen::Success) throw cholesky_failure("1 + Z^T Z is not positive definite");
  const Matrix theta = llt.matrixU();
  Matrix g = theta * z * theta.triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n));
  return (g + g.transpose()) / 2;
}

}  // namespace detail

inline OrthogonalInvolution project_pi(const Matrix& z, const Tolerances& tol = default_tolerances) {
  const auto n = z.rows();
  if (z.cols() != n) throw not_involution("matrix is not square");
  if (max_abs(z * z - Matrix::Identity(n, n)) > tol.involution * std::max(1.0, max_abs(z)))
    throw not_involution("Z*Z differs from the identity");
  return OrthogonalInvolution(detail::pi_unchecked(z));
}

// Bruhat cell membership by column-wise elimination with upper triangular
// row and column operations.
inline SignedInvolution cell_of(const OrthogonalInvolution& gi, const Tolerances& tol = default_tolerances) {
  Matrix m = gi.matrix();
  const int n = static_cast<int>(m.rows());
  const double scale = std::max(1.0, max_abs(m));
  const double zero = tol.rank * scale;
  std::vector<int> perm(n), signs(n);
  for (int c = 0; c < n; ++c) {
    int r = -1;
    for (int i = n - 1; i >= 0; --i) {
      const double x = std::abs(m(i, c));
      if (x > zero / 10 && x < zero * 10) throw rank_ambiguous("entry near the rank tolerance in column " + std::to_string(c + 1));
      if (x >= zero * 10) {
        r = i;
        break;
      }
    }
    if (r < 0) throw rank_ambiguous("no pivot in column " + std::to_string(c + 1));
    perm[c] = r;
    signs[c] = m(r, c) > 0 ? 1 : -1;
    for (int rr = 0; rr < r; ++rr) m.row(rr) -= m(rr, c) / m(r, c) * m.row(r);
    for (int cc = c + 1; cc < n; ++cc) m.col(cc) -= m(r, cc) / m(r, c) * m.col(c);
    for (int cc = c + 1; cc < n; ++cc) m(r, cc) = 0;
  }
  try {
    return SignedInvolution::from_zero_based(perm, signs);
  } catch (const error&) {
    throw rank_ambiguous("pivot pattern is not a signed involution");
  }
}

namespace detail {

inline Matrix upper_inverse(const Matrix& u) {
  return u.triangularView<Eigen::Upper>().solve(Matrix::Identity(u.rows(), u.cols()));
}

inline Matrix null_space(const Matrix& a, double rel = 1e-9) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cut = rel * std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

}  // namespace detail

// Symmetric positive definite A with unit diagonal, zero on rises of w, and
// A = alpha^T alpha for an upper triangular alpha with g = alpha w alpha^-1.
inline Matrix normal_form(const OrthogonalInvolution& gi, const SignedInvolution& w,
                          const Tolerances& tol = default_tolerances) {
  if (!(cell_of(gi, tol) == w)) throw wrong_cell("matrix does not lie in the cell of " + format(w));
  const Matrix& g = gi.matrix();
  const Matrix ws = signed_matrix(w);
  const int n = w.size();
  std::vector<std::pair<int, int>> slots;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a <= b; ++a) slots.push_back({a, b});
  Matrix eqs(n * n, static_cast<Eigen::Index>(slots.size()));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    Matrix e = Matrix::Zero(n, n);
    e(slots[s].first, slots[s].second) = 1;
    const Matrix r = g * e - e * ws;
    eqs.col(static_cast<Eigen::Index>(s)) = Eigen::Map<const Vector>(r.data(), n * n);
  }
  const Matrix kernel = detail::null_space(eqs);
  Matrix alpha;
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal;
  bool ok = false;
  for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
    Vector coef(kernel.cols());
    for (Eigen::Index c = 0; c < coef.size(); ++c) coef(c) = normal(rng);
    const Vector x = kernel * coef;
    alpha = Matrix::Zero(n, n);
    for (std::size_t s = 0; s < slots.size(); ++s) alpha(slots[s].first, slots[s].second) = x(static_cast<Eigen::Index>(s));
    for (int j = 0; j < n; ++j)
      if (w.image(j) >= j && alpha(j, j) < 0) {
        alpha.col(j) *= -1;
        if (w.image(j) != j) alpha.col(w.image(j)) *= -1;
      }
    const double dmin = alpha.diagonal().minCoeff();
    ok = dmin > tol.rank * max_abs(alpha);
  }
  if (!ok) throw wrong_cell("no positive triangular conjugator found");
  // Gram-type sweep; columns with w(j) < j are fixed by their partner.
  Matrix b = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int p = w.image(j);
    if (p < j) {
      b.col(j) = w.sign(p) * g * b.col(p);
      continue;
    }
    Vector col = alpha.col(j);
    std::vector<int> rises;
    for (int i = 0; i < j; ++i)
      if (w.image(i) < w.image(j)) rises.push_back(i);
    if (!rises.empty()) {
      Matrix span(n, static_cast<Eigen::Index>(rises.size()));
      for (std::size_t r = 0; r < rises.size(); ++r) span.col(static_cast<Eigen::Index>(r)) = b.col(rises[r]);
      col -= span * span.colPivHouseholderQr().solve(col);
    }
    b.col(j) = col / col.norm();
  }
  Matrix a = b.transpose() * b;
  return (a + a.transpose()) / 2;
}

inline OrthogonalInvolution reconstruct(const Matrix& a, const SignedInvolution& w) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) throw cholesky_failure("normal form is not positive definite");
  const Matrix r = llt.matrixU();
  Matrix g = r * signed_matrix(w) * detail::upper_inverse(r);
  g = (g + g.transpose()) / 2;
  return OrthogonalInvolution(std::move(g));
}

inline Matrix rotation_T(const Vector& u, const Vector& v) {
  const double uv = u.dot(v);
  if (1 + uv <= 1e-8) throw antipodal_input("rotation between antipodal vectors");
  const auto n = u.size();
  const Vector s = u + v;
  // T(x) = x - <u+v,x>/(1+<u,v>) (u+v) + 2<u,x> v, column by column.
  return Matrix::Identity(n, n) - s * s.transpose() / (1 + uv) + 2 * v * u.transpose();
}

namespace detail {

// Local path matrix on the support, t in [0,1).
inline Matrix local_lambda(const SignedCover& c, double t) {
  const double s = std::sqrt(std::max(0.0, 1 - t * t));
  const int ei = c.lower.sign(c.i), ej = c.lower.sign(c.j);
  const double al = c.params.alpha, be = c.params.beta;
  Matrix m;
  switch (c.type) {
    case RiseType::ff: {
      const double x = t;
      m.resize(2, 2);
      m << 1, -al * x, 0, s;
      break;
    }
    case RiseType::fe: {
      const double x = ei * ej * t;
      m.resize(3, 3);
      m << 1, -x * al, x * x * al, 0, s, -s * x, 0, 0, s;
      break;
    }
    case RiseType::ef: {
      const double x = t;
      m.resize(3, 3);
      m << 1, x * al * be, 0, 0, 1, x * be, 0, 0, s;
      break;
    }
    case RiseType::ee_noncrossing: {
      const double x = -ei * ej * t;
      m.resize(4, 4);
      m << 1, -x * al, 0, 0, 0, s, 0, 0, 0, 0, 1, -x * be, 0, 0, 0, s;
      break;
    }
    case RiseType::ed: {
      const double x = t;
      m.resize(4, 4);
      m << 1, 0, 0, -al * x, 0, 1, -x * be, 0, 0, 0, s, 0, 0, 0, 0, s;
      break;
    }
    case RiseType::ee_crossing: {
      const double gs = c.params.gamma * al * be * ei;
      const double d = ej * gs, big_e = -al * be * gs * ei;
      const double e = t * d * be;
      const double g = d * s;
      const double f = -std::sqrt((1 - e * e) / (1 + e * e));
      const double q = e * e - 1;
      m.resize(4, 4);
      m << 1, big_e * e, big_e * f / q, 0, 0, 1, -e * f / q, d * e, 0, 0, 1, d * f, 0, 0, 0, d * g;
      break;
    }
  }
  return m;
}

}  // namespace detail

inline Matrix lambda_matrix(const SignedCover& c, double t) {
  const int n = c.lower.size();
  const Matrix local = detail::local_lambda(c, t);
  Matrix m = Matrix::Identity(n, n);
  for (std::size_t r = 0; r < c.support.size(); ++r)
    for (std::size_t q = 0; q < c.support.size(); ++q)
      m(c.support[r], c.support[q]) = local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(q));
  return m;
}

// Orthonormal basis (vectorized, column-major) of the tangent space of the
// cell through g: symmetric matrices of the form eta g - g eta, eta upper.
inline Matrix tangent_basis(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  const int m = n * (n + 1) / 2;
  Matrix gens(n * n, m);
  Matrix asym(n * (n - 1) / 2, m);
  int col = 0;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a <= b; ++a, ++col) {
      Matrix x = -g.col(a) * Eigen::RowVectorXd::Unit(n, b);
      x.row(a) += g.row(b);
      gens.col(col) = Eigen::Map<const Vector>(x.data(), n * n);
      int r = 0;
      for (int q = 0; q < n; ++q)
        for (int p = 0; p < q; ++p, ++r) asym(r, col) = x(p, q) - x(q, p);
    }
  const Matrix coeffs = detail::null_space(asym);
  const Matrix span = gens * coeffs;
  Eigen::JacobiSVD<Matrix> svd(span, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-9) ++rank;
  return svd.matrixU().leftCols(rank);
}

struct PathPoint {
  double t = 0;
  OrthogonalInvolution g;
  std::vector<Matrix> frame;
};

namespace detail {

inline std::vector<Matrix> unvec_columns(const Matrix& cols, int n) {
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < cols.cols(); ++c) out.push_back(Eigen::Map<const Matrix>(cols.col(c).data(), n, n));
  return out;
}

inline Matrix path_point(const SignedCover& c, double t) {
  const Matrix lam = lambda_matrix(c, t);
  return pi_unchecked(lam * signed_matrix(c.upper) * upper_inverse(lam));
}

}  // namespace detail

// g_t = pi(lambda_t w lambda_t^-1); the endpoint t = 1 is the limit v.
inline PathPoint lambda_path(const SignedCover& c, double t) {
  if (t < 0 || t > 1) throw bad_cover("path parameter outside [0,1]");
  if (c.support.empty() || !classify_rise(c.lower, c.i, c.j)) throw bad_cover("not a covering pair");
  Matrix g = t >= 1 ? signed_matrix(c.lower) : detail::path_point(c, t);
  PathPoint p{t, OrthogonalInvolution(g), {}};
  p.frame = detail::unvec_columns(tangent_basis(g), c.lower.size());
  return p;
}

// Canonical tangent frame of the cell at its center: one vector per
// q-inversion class, in canonical order.
inline Matrix center_frame(const SignedInvolution& w) {
  const int n = w.size();
  const Matrix ws = signed_matrix(w);
  const auto classes = qinversions(w);
  Matrix f(n * n, static_cast<Eigen::Index>(classes.size()));
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto c = detail::class_matrix(w, classes[k]);
    Matrix rho = Matrix::Zero(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) rho(a, b) = static_cast<double>(c[a][b]);
    const Matrix x = rho * ws - ws * rho;
    f.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Vector>(x.data(), n * n);
  }
  return f;
}

namespace detail {

// Gram-Schmidt that keeps the orientation of the column span.
inline Matrix orthonormalize(Matrix f) {
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    for (Eigen::Index p = 0; p < c; ++p) f.col(c) -= f.col(p).dot(f.col(c)) * f.col(p);
    const double nrm = f.col(c).norm();
    if (nrm < 1e-12) throw degenerate_frame("frame collapsed during transport");
    f.col(c) /= nrm;
  }
  return f;
}

inline Matrix minus_basis(const SignedInvolution& w) {
  const int n = w.size();
  const Matrix ws = signed_matrix(w);
  const auto idx = minus_index_set(w);
  Matrix e(n, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    e.col(static_cast<Eigen::Index>(a)) = Vector::Unit(n, idx[a]) - ws.col(idx[a]);
  return e;
}

inline double det_sign_margin(const Matrix& m, int& sign) {
  const double d = m.determinant();
  sign = d > 0 ? 1 : -1;
  return std::abs(d);
}

}  // namespace detail

struct TransportOptions {
  double step = 1e-3;
  double stop = 1e-3;
  Tolerances tol{};
};

struct TransportResult {
  int incid = 0;
  int orid = 0;
  double margin = 0;
};

// Carries the canonical frame of the upper cell and the ordered basis of its
// (-1)-eigenspace along the path to the lower cell and compares both with
// the canonical data there. The outward path velocity is appended last.
inline TransportResult transport_orientation(const SignedCover& c, const TransportOptions& opt = {}) {
  const int n = c.lower.size();
  const double end = std::numbers::pi / 2 - opt.stop;
  const int steps = std::max(8, static_cast<int>(std::ceil(end / opt.step)));
  auto at = [&](double phi) { return detail::path_point(c, std::sin(phi)); };

  Matrix frame = detail::orthonormalize(center_frame(c.upper));
  Matrix minus = detail::orthonormalize(detail::minus_basis(c.upper));
  double margin = 1;
  const Matrix id = Matrix::Identity(n, n);
  Matrix g;
  for (int s = 1; s <= steps; ++s) {
    g = at(end * s / steps);
    const Matrix tb = tangent_basis(g);
    if (tb.cols() != frame.cols()) throw degenerate_frame("tangent dimension changed along the path");
    const Matrix moved = tb * (tb.transpose() * frame);
    margin = std::min(margin, std::abs((frame.transpose() * moved).determinant()));
    frame = detail::orthonormalize(moved);
    minus = detail::orthonormalize((id - g) / 2 * minus);
  }
  const Matrix before = at(end - 1e-4);
  Matrix nu_m = g - before;
  Vector nu = Eigen::Map<const Vector>(nu_m.data(), n * n);
  nu.normalize();
  const Matrix tb = tangent_basis(g);
  Matrix ref(n * n, frame.cols());
  const Matrix lower_frame = center_frame(c.lower);
  if (lower_frame.cols() + 1 != frame.cols()) throw bad_cover("dimensions do not differ by one");
  ref.leftCols(lower_frame.cols()) = lower_frame;
  ref.col(frame.cols() - 1) = nu;
  const Matrix projected = tb * (tb.transpose() * ref);
  const Matrix coef = projected.colPivHouseholderQr().solve(frame);
  TransportResult r;
  margin = std::min(margin, detail::det_sign_margin(coef, r.incid));

  const int tail = 20;
  for (int s = 1; s < tail; ++s) {
    const double phi = end + (std::numbers::pi / 2 - 1e-7 - end) * s / (tail - 1);
    minus = detail::orthonormalize((id - at(phi)) / 2 * minus);
  }
  minus = detail::orthonormalize((id - signed_matrix(c.lower)) / 2 * minus);
  const Matrix lower_minus = detail::minus_basis(c.lower);
  const Matrix mc = lower_minus.colPivHouseholderQr().solve(minus);
  margin = std::min(margin, detail::det_sign_margin(mc, r.orid));
  r.margin = margin;
  if (margin < opt.tol.margin) throw degenerate_frame("decision margin below threshold");
  return r;
}

// Richardson curves through model covers (support = all indices).
struct CircleParam {
  double s;
  double c;
};

struct CrossingParam {
  double e;
  double f;
  double g;
};

using RichardsonParam = std::variant<CircleParam, CrossingParam>;

class RichardsonCurve {
 public:
  static RichardsonCurve through(const SignedCover& c) {
    const int n = c.lower.size();
    if (static_cast<int>(c.support.size()) != n) throw bad_cover("Richardson curves need a model cover");
    const Matrix v = signed_matrix(c.lower);
    const std::vector<double> specials = c.type == RiseType::ee_crossing
                                             ? std::vector<double>{-1, 0, 1}
                                             : std::vector<double>{0, std::numbers::pi / 2, std::numbers::pi,
                                                                   3 * std::numbers::pi / 2};
    std::vector<double> samples;
    const int count = 60;
    for (int s = 0; s < count; ++s) {
      if (c.type == RiseType::ee_crossing)
        samples.push_back(-0.95 + 1.9 * s / (count - 1));
      else
        samples.push_back(0.05 + (2 * std::numbers::pi - 0.1) * s / (count - 1));
    }
    const int shapes = c.type == RiseType::ee_crossing ? 8 : 2;
    for (int shape = 0; shape < shapes; ++shape)
      for (int mask = 0; mask < (1 << n); ++mask)
        for (int neg : {1, -1}) {
          RichardsonCurve rc;
          rc.type_ = c.type;
          rc.shape_ = shape;
          rc.diag_ = Vector::Ones(n);
          for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) rc.diag_(b) = -1;
          rc.neg_ = neg;
          bool hits = false;
          for (double x : specials) hits = hits || max_abs(rc.point(x) - v) < 1e-9;
          if (!hits) continue;
          for (double x : samples) {
            try {
              if (cell_of(OrthogonalInvolution(rc.point(x))) == c.upper) return rc;
            } catch (const rank_ambiguous&) {
            }
          }
        }
    throw bad_cover("no Richardson curve through " + format(c.lower) + " and " + format(c.upper));
  }

  // Angle on the circle, or e in [-1,1] for crossing rises.
  Matrix point(double x) const {
    if (type_ == RiseType::ee_crossing) {
      const int eps = shape_ & 1 ? -1 : 1, dlt = shape_ & 2 ? -1 : 1, sig = shape_ & 4 ? -1 : 1;
      const double root = std::sqrt(std::max(0.0, (1 - x * x) / (1 + x * x)));
      return crossing(x, sig * x * root, eps * dlt * sig * root, eps, dlt);
    }
    return circle(std::sin(x), std::cos(x));
  }

  OrthogonalInvolution at(const RichardsonParam& p) const {
    if (const auto* cp = std::get_if<CircleParam>(&p)) {
      if (type_ == RiseType::ee_crossing) throw off_curve("crossing rises take (e,f,g)");
      if (std::abs(cp->s * cp->s + cp->c * cp->c - 1) > 1e-8) throw off_curve("s^2 + c^2 != 1");
      return OrthogonalInvolution(circle(cp->s, cp->c));
    }
    const auto& xp = std::get<CrossingParam>(p);
    if (type_ != RiseType::ee_crossing) throw off_curve("circle parameters expected");
    const int eps = shape_ & 1 ? -1 : 1, dlt = shape_ & 2 ? -1 : 1;
    const double e = xp.e;
    if (std::abs(e) > 1) throw off_curve("|e| > 1");
    const double root = std::sqrt((1 - e * e) / (1 + e * e));
    if (std::abs(std::abs(xp.f) - std::abs(e) * root) > 1e-8 || std::abs(xp.f - eps * dlt * e * xp.g) > 1e-8 ||
        std::abs(std::abs(xp.g) - root) > 1e-8)
      throw off_curve("(e,f,g) not on the crossing curve");
    return OrthogonalInvolution(crossing(e, xp.f, xp.g, eps, dlt));
  }

  RiseType type() const { return type_; }

 private:
  Matrix conjugate(Matrix q) const {
    const auto d = diag_.asDiagonal();
    return neg_ * (d * q * d);
  }

  Matrix circle(double s, double c) const {
    const double sg = shape_ ? -1 : 1;
    Matrix q;
    switch (type_) {
      case RiseType::ff:
        q.resize(2, 2);
        q << c, s, s, -c;
        break;
      case RiseType::fe:
        q.resize(3, 3);
        q << c * c, s * c, s, s * c, s * s, -c, s, -c, 0;
        q *= sg;
        break;
      case RiseType::ef:
        q.resize(3, 3);
        q << 0, -c, s, -c, s * s, s * c, s, s * c, c * c;
        q *= sg;
        break;
      case RiseType::ee_noncrossing:
        q.resize(4, 4);
        q << 0, 0, s, c, 0, 0, c, -s, s, c, 0, 0, c, -s, 0, 0;
        break;
      case RiseType::ed:
        q.resize(4, 4);
        q << 0, c, s, 0, c, 0, 0, -sg * s, s, 0, 0, sg * c, 0, -sg * s, sg * c, 0;
        break;
      case RiseType::ee_crossing: break;
    }
    return conjugate(q);
  }

  Matrix crossing(double e, double f, double g, int eps, int dlt) const {
    const double t = 1 - e * e;
    Matrix q(4, 4);
    q << 0, e, f, g, e, dlt * t, -dlt * e * f, -eps * f, f, -dlt * e * f, -dlt * t, eps * e, g, -eps * f, eps * e, 0;
    return conjugate(q);
  }

  RiseType type_ = RiseType::ff;
  int shape_ = 0;
  Vector diag_;
  int neg_ = 1;
};

inline OrthogonalInvolution richardson_curve(const SignedCover& c, const RichardsonParam& p) {
  return RichardsonCurve::through(c).at(p);
}

// b w b^-1 projected, b upper triangular with entries in [-1,1] and diagonal
// bounded away from zero.
template <class Rng>
Matrix random_conjugate(const SignedInvolution& w, Rng& rng) {
  const int n = w.size();
  std::uniform_real_distribution<double> off(-1, 1), diag(0.25, 1);
  Matrix b = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    b(r, r) = diag(rng);
    for (int c = r + 1; c < n; ++c) b(r, c) = off(rng);
  }
  return b * signed_matrix(w) * detail::upper_inverse(b);
}

// All covers whose support is the full index set, n = 2, 3, 4.
inline std::vector<SignedCover> model_covers() {
  std::vector<SignedCover> out;
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto& c : covering_pairs(n, k))
        if (static_cast<int>(c.support.size()) == n) out.push_back(std::move(c));
  return out;
}

}  // namespace grasscw
