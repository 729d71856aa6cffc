#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "covering.hpp"

namespace grasscw {

inline int model_incidence(RiseType t, const SignParams& p) {
  switch (t) {
    case RiseType::ff: return -p.alpha;
    case RiseType::fe: return 1;
    case RiseType::ef: return -p.alpha;
    case RiseType::ee_noncrossing: return p.alpha * p.beta;
    case RiseType::ee_crossing: return 1;
    case RiseType::ed: return -p.alpha;
  }
  return 0;
}

// eps_i, eps_j are the signs of the lower involution at the rise indices.
inline int model_orid(RiseType t, const SignParams& p, int eps_i, int eps_j) {
  switch (t) {
    case RiseType::ff: return (eps_i == 1 && p.alpha == -1) ? -1 : 1;
    case RiseType::fe: return (eps_i == 1 && p.beta == -1) ? -1 : 1;
    case RiseType::ef: return (eps_j == -1 && p.beta == 1) ? -1 : 1;
    case RiseType::ee_crossing: return (p.alpha * p.beta == -1 && p.gamma * eps_i == -1) ? -1 : 1;
    case RiseType::ed: return p.beta == -1 ? -1 : 1;
    case RiseType::ee_noncrossing: return 1;
  }
  return 1;
}

namespace detail {

inline int permutation_sign(const std::vector<int>& order) {
  int s = 1;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (order[a] > order[b]) s = -s;
  return s;
}

inline std::vector<bool> membership(int n, const std::vector<int>& d) {
  std::vector<bool> in(n, false);
  for (int x : d) in[x] = true;
  return in;
}

inline void require_stable(const SignedInvolution& w, const std::vector<bool>& in) {
  for (int x = 0; x < w.size(); ++x)
    if (in[x] != in[w.image(x)]) throw d_not_stable("index set not closed under the involution");
}

// Sign of a square integer matrix's determinant (fraction-free elimination).
inline int determinant_sign(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return (m[n - 1][n - 1] > 0 ? 1 : -1) * sign;
}

}  // namespace detail

// Sign of the shuffle taking the canonical q-inversion order to the blocked
// order (inside D, outside D, mixed), each block in canonical order.
inline int shuffle_sign_sigma(const SignedInvolution& w, const std::vector<int>& support) {
  const auto in = detail::membership(w.size(), support);
  detail::require_stable(w, in);
  const auto classes = qinversions(w);
  std::vector<int> order;
  for (int block = 0; block < 3; ++block)
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const bool a = in[classes[c].first], b = in[classes[c].second];
      const int blk = (a && b) ? 0 : (!a && !b) ? 1 : 2;
      if (blk == block) order.push_back(static_cast<int>(c));
    }
  return detail::permutation_sign(order);
}

// Basis index set of the (-1)-eigenspace: i < w(i), or fixed with sign -1.
inline std::vector<int> minus_index_set(const SignedInvolution& w) {
  std::vector<int> out;
  for (int i = 0; i < w.size(); ++i)
    if (w.image(i) > i || (w.image(i) == i && w.sign(i) < 0)) out.push_back(i);
  return out;
}

inline int shuffle_sign_rho(const SignedInvolution& w, const std::vector<int>& support) {
  const auto in = detail::membership(w.size(), support);
  detail::require_stable(w, in);
  const auto idx = minus_index_set(w);
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t a = 0; a < idx.size(); ++a)
      if (in[idx[a]] == (pass == 0)) order.push_back(static_cast<int>(a));
  return detail::permutation_sign(order);
}

namespace detail {

using IntMat = std::vector<std::vector<std::int64_t>>;

// Symmetric matrix S_ij + s_i s_j S_{w(i),w(j)} for a class representative.
inline IntMat class_matrix(const SignedInvolution& w, IndexPair q) {
  const int n = w.size();
  IntMat c(n, std::vector<std::int64_t>(n, 0));
  const auto [i, j] = q;
  c[i][j] = c[j][i] = 1;
  int p = w.image(i), r = w.image(j);
  if (std::minmax(p, r) != std::minmax(i, j)) {
    const int s = w.sign(i) * w.sign(j);
    c[p][r] += s;
    c[r][p] += s;
  }
  return c;
}

inline std::vector<IndexPair> mixed_classes(const SignedInvolution& w, const std::vector<bool>& in) {
  std::vector<IndexPair> out;
  for (auto q : qinversions(w))
    if (in[q.first] != in[q.second]) out.push_back(q);
  return out;
}

}  // namespace detail

// Sign of C -> sigma C + C sigma^{-1} (sigma = lower * upper) on the mixed
// q-inversion block, in canonical class bases of upper and lower.
inline int xi_sign(const SignedCover& cover) {
  const auto& v = cover.lower;
  const auto& w = cover.upper;
  const int n = v.size();
  const auto in = detail::membership(n, cover.support);
  const auto mw = detail::mixed_classes(w, in);
  const auto mv = detail::mixed_classes(v, in);
  if (mw.size() != mv.size()) throw singular_xi("mixed blocks differ in size");
  if (mw.empty()) return 1;
  // sigma(e_x) = v(w(e_x)): sigma[x] = image, ssign[x] = sign.
  std::vector<int> sig(n), ssg(n);
  for (int x = 0; x < n; ++x) {
    sig[x] = v.image(w.image(x));
    ssg[x] = w.sign(x) * v.sign(w.image(x));
  }
  std::vector<int> vclass(n * n, -1);
  std::vector<int> vcoef(n * n, 0);
  const auto vq = qinversions(v);
  for (std::size_t c = 0; c < vq.size(); ++c) {
    const auto [a, b] = vq[c];
    vclass[a * n + b] = static_cast<int>(c);
    vcoef[a * n + b] = 1;
    const int pa = v.image(b), pb = v.image(a);
    vclass[pa * n + pb] = static_cast<int>(c);
    vcoef[pa * n + pb] = v.sign(a) * v.sign(b);
  }
  std::vector<int> mv_pos(vq.size(), -1);
  for (std::size_t c = 0; c < mv.size(); ++c)
    mv_pos[std::find(vq.begin(), vq.end(), mv[c]) - vq.begin()] = static_cast<int>(c);

  detail::IntMat m(mv.size(), std::vector<std::int64_t>(mw.size(), 0));
  for (std::size_t col = 0; col < mw.size(); ++col) {
    const auto c = detail::class_matrix(w, mw[col]);
    // X = sigma C sigma^T + ... ; (sigma C)_{sig(x), y} = ssg[x] C_{x,y}.
    detail::IntMat x(n, std::vector<std::int64_t>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!c[a][b]) continue;
        x[sig[a]][b] += ssg[a] * c[a][b];
        x[a][sig[b]] += ssg[b] * c[a][b];
      }
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const std::int64_t val = x[a][b];
        if (!val) continue;
        if (a == b) throw singular_xi("diagonal term in mixed block image");
        const int pa = v.image(a), pb = v.image(b);
        const int s = v.sign(a) * v.sign(b);
        // Subtract val * C^v_{a,b}; its support is {(a,b),(v(a),v(b))}.
        x[a][b] -= val;
        x[b][a] -= val;
        if (std::minmax(pa, pb) != std::minmax(a, b)) {
          x[pa][pb] -= s * val;
          x[pb][pa] -= s * val;
        }
        if (vclass[a * n + b] >= 0) {
          const int pos = mv_pos[vclass[a * n + b]];
          if (pos < 0) throw singular_xi("mixed image leaks into another block");
          m[pos][col] += vcoef[a * n + b] * val;
        }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (x[a][b]) throw singular_xi("image not invariant under the lower involution");
  }
  const int s = detail::determinant_sign(m);
  if (s == 0) throw singular_xi("degenerate determinant");
  return s;
}

struct IncidenceRecord {
  SignedCover cover;
  int incid = 0;
  int orid = 0;
  int sigma_v = 1;
  int sigma_w = 1;
  int xi = 1;
  int model_incid = 1;
  int model_orid = 1;
  int rho_v = 1;
  int rho_w = 1;
  // (-1)^(dim lower - dim of the lower restricted to the support): moves the
  // boundary normal from the end of the local model frame to the end of the
  // full frame.
  int normal_shift = 1;
};

inline IncidenceRecord incidence_record(const SignedCover& c) {
  IncidenceRecord r;
  r.cover = c;
  const auto& v = c.lower;
  r.sigma_v = shuffle_sign_sigma(v, c.support);
  r.sigma_w = shuffle_sign_sigma(c.upper, c.support);
  r.xi = xi_sign(c);
  r.model_incid = model_incidence(c.type, c.params);
  r.model_orid = model_orid(c.type, c.params, v.sign(c.i), v.sign(c.j));
  r.rho_v = shuffle_sign_rho(v, c.support);
  r.rho_w = shuffle_sign_rho(c.upper, c.support);
  const int local_dim = cell_dim(restrict_to(v, c.support));
  r.normal_shift = ((cell_dim(v) - local_dim) % 2) ? -1 : 1;
  r.incid = r.model_incid * r.sigma_w * r.sigma_v * r.xi * r.normal_shift;
  r.orid = r.model_orid * r.rho_v * r.rho_w;
  return r;
}

inline int incidence(const SignedInvolution& v, const SignedInvolution& w) {
  const auto c = rise_of(v, w);
  return c ? incidence_record(*c).incid : 0;
}

inline int orid(const SignedInvolution& v, const SignedInvolution& w) {
  const auto c = rise_of(v, w);
  if (!c) throw not_covering(format(v) + " is not covered by " + format(w));
  return incidence_record(*c).orid;
}

}  // namespace grasscw
