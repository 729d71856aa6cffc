#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "involution.hpp"

namespace grasscw {

enum class RiseType { ff, fe, ef, ee_noncrossing, ee_crossing, ed };

inline constexpr std::array<RiseType, 6> all_rise_types{
    RiseType::ff, RiseType::fe, RiseType::ef,
    RiseType::ee_noncrossing, RiseType::ee_crossing, RiseType::ed};

inline std::string to_string(RiseType t) {
  switch (t) {
    case RiseType::ff: return "ff";
    case RiseType::fe: return "fe";
    case RiseType::ef: return "ef";
    case RiseType::ee_noncrossing: return "ee-noncrossing";
    case RiseType::ee_crossing: return "ee-crossing";
    case RiseType::ed: return "ed";
  }
  return "?";
}

inline int support_size(RiseType t) {
  switch (t) {
    case RiseType::ff: return 2;
    case RiseType::fe:
    case RiseType::ef: return 3;
    default: return 4;
  }
}

inline bool has_beta(RiseType t) { return t != RiseType::ff; }
inline bool has_gamma(RiseType t) { return t == RiseType::ee_crossing; }

// d: w(i) < i (deficiency), e: w(i) > i (excedance), f: w(i) = i (fixed point).
enum class Letter { d, e, f };

inline Letter wtype(const SignedInvolution& w, int i) {
  if (i < 0 || i >= w.size()) throw index_out_of_range("index " + std::to_string(i + 1));
  if (w.image(i) < i) return Letter::d;
  if (w.image(i) > i) return Letter::e;
  return Letter::f;
}

// A free rise (i,j) of a suitable type, or nullopt.
inline std::optional<RiseType> classify_rise(const SignedInvolution& v, int i, int j) {
  const int n = v.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw index_out_of_range("rise index outside 1.." + std::to_string(n));
  if (!(i < j) || !(v.image(i) < v.image(j))) return std::nullopt;
  for (int k = i + 1; k < j; ++k)
    if (v.image(i) < v.image(k) && v.image(k) < v.image(j)) return std::nullopt;
  const Letter a = wtype(v, i), b = wtype(v, j);
  if (a == Letter::f && b == Letter::f) return RiseType::ff;
  if (a == Letter::f && b == Letter::e) return RiseType::fe;
  if (a == Letter::e && b == Letter::f) return RiseType::ef;
  if (a == Letter::e && b == Letter::d) return RiseType::ed;
  if (a == Letter::e && b == Letter::e)
    return v.image(i) < j ? RiseType::ee_crossing : RiseType::ee_noncrossing;
  return std::nullopt;
}

// The sorted index set {i, j, v(i), v(j)} of a rise.
inline std::vector<int> rise_support(const SignedInvolution& v, int i, int j) {
  std::vector<int> d{i, j, v.image(i), v.image(j)};
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// Unsigned covering operation as a 0-based permutation of {0..n-1}.
inline std::vector<int> covering_operation(const SignedInvolution& v, int i, int j, RiseType type) {
  const auto actual = classify_rise(v, i, j);
  if (!actual || *actual != type) throw type_mismatch("rise does not have type " + to_string(type));
  std::vector<int> co(v.size());
  for (int x = 0; x < v.size(); ++x) co[x] = x;
  auto cycle = [&](std::vector<int> c) {
    for (std::size_t a = 0; a < c.size(); ++a) co[c[a]] = c[(a + 1) % c.size()];
  };
  const int vi = v.image(i), vj = v.image(j);
  switch (type) {
    case RiseType::ff: cycle({i, j}); break;
    case RiseType::fe: cycle({i, j, vj}); break;
    case RiseType::ef: cycle({i, j, vi}); break;
    case RiseType::ee_noncrossing: cycle({i, j}); cycle({vi, vj}); break;
    case RiseType::ee_crossing: cycle({i, j, vj, vi}); break;
    case RiseType::ed: cycle({i, j}); cycle({vi, vj}); break;
  }
  return co;
}

struct SignParams {
  int alpha = 1;
  int beta = 1;
  int gamma = 0;  // nonzero only for crossing rises
  bool operator==(const SignParams&) const = default;
};

// One nonzero entry of the signed covering operation restricted to its
// support: entry (row, col) of the support-local matrix (0-based) equals
// sign * alpha^a * beta^b * gamma^c.
struct PatternEntry {
  int row;
  int col;
  int sign;
  int a;
  int b;
  int c;
};

inline std::vector<PatternEntry> sign_pattern(RiseType t) {
  switch (t) {
    case RiseType::ff: return {{1, 0, 1, 1, 0, 0}, {0, 1, -1, 1, 0, 0}};
    case RiseType::fe: return {{1, 0, 1, 0, 1, 0}, {0, 2, 1, 1, 0, 0}, {2, 1, 1, 1, 1, 0}};
    case RiseType::ef: return {{2, 0, 1, 1, 0, 0}, {1, 2, 1, 0, 1, 0}, {0, 1, 1, 1, 1, 0}};
    case RiseType::ee_noncrossing:
      return {{1, 0, 1, 0, 1, 0}, {0, 1, -1, 0, 1, 0}, {3, 2, 1, 1, 0, 0}, {2, 3, -1, 1, 0, 0}};
    case RiseType::ee_crossing:
      return {{3, 2, 1, 1, 0, 0}, {1, 3, 1, 0, 1, 0}, {2, 0, 1, 0, 0, 1}, {0, 1, -1, 1, 1, 1}};
    case RiseType::ed:
      return {{3, 0, 1, 1, 0, 0}, {0, 3, -1, 1, 0, 0}, {2, 1, 1, 0, 1, 0}, {1, 2, -1, 0, 1, 0}};
  }
  return {};
}

inline int pattern_value(const PatternEntry& e, const SignParams& p) {
  int v = e.sign;
  if (e.a) v *= p.alpha;
  if (e.b) v *= p.beta;
  if (e.c) v *= p.gamma;
  return v;
}

struct SignedCover {
  SignedInvolution lower;
  SignedInvolution upper;
  int i = 0;
  int j = 0;
  RiseType type = RiseType::ff;
  SignParams params;
  std::vector<int> support;
};

// upper = lower * signed covering operation; nullopt when the product is not
// a signed involution.
inline std::optional<SignedInvolution> apply_signed_operation(const SignedInvolution& v,
                                                              const std::vector<int>& support,
                                                              RiseType t, const SignParams& p) {
  std::vector<int> perm = v.perm(), signs = v.signs();
  for (const auto& e : sign_pattern(t)) {
    const int col = support[e.col], row = support[e.row];
    perm[col] = v.image(row);
    signs[col] = pattern_value(e, p) * v.sign(row);
  }
  for (int x = 0; x < v.size(); ++x) {
    if (perm[perm[x]] != x || signs[perm[x]] != signs[x]) return std::nullopt;
  }
  return SignedInvolution::from_zero_based(std::move(perm), std::move(signs));
}

inline std::vector<SignParams> sign_choices(RiseType t) {
  std::vector<SignParams> out;
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      if (!has_beta(t) && b < 0) continue;
      if (has_gamma(t)) {
        for (int c : {1, -1}) out.push_back({a, b, c});
      } else {
        out.push_back({a, has_beta(t) ? b : 1, 0});
      }
    }
  return out;
}

inline std::vector<SignedCover> signed_covers(const SignedInvolution& v) {
  std::vector<SignedCover> out;
  const int n = v.size();
  const int d = cell_dim(v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto t = classify_rise(v, i, j);
      if (!t) continue;
      const auto support = rise_support(v, i, j);
      for (const auto& p : sign_choices(*t)) {
        auto w = apply_signed_operation(v, support, *t, p);
        if (!w || cell_dim(*w) != d + 1) continue;
        out.push_back({v, std::move(*w), i, j, *t, p, support});
      }
    }
  return out;
}

inline std::optional<SignedCover> rise_of(const SignedInvolution& v, const SignedInvolution& w) {
  if (v.size() != w.size() || cell_dim(w) != cell_dim(v) + 1) return std::nullopt;
  for (auto& c : signed_covers(v))
    if (c.upper == w) return c;
  return std::nullopt;
}

inline std::vector<SignedCover> covering_pairs(int n, int k) {
  std::vector<SignedCover> out;
  for (const auto& v : enumerate_cells(n, k)) {
    auto cs = signed_covers(v);
    out.insert(out.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
  }
  return out;
}

}  // namespace grasscw
