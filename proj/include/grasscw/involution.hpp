#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grasscw {

// A signed permutation matrix with square one: e_i -> sign(i) * e_{image(i)}.
// Indices are 0-based throughout the library; make() takes the 1-based form.
class SignedInvolution {
 public:
  SignedInvolution() = default;

  static SignedInvolution make(const std::vector<int>& perm_one_based,
                               const std::vector<int>& signs) {
    std::vector<int> p(perm_one_based.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_one_based[i] - 1;
    return from_zero_based(std::move(p), signs);
  }

  static SignedInvolution from_zero_based(std::vector<int> perm, std::vector<int> signs) {
    const auto n = perm.size();
    if (signs.size() != n) throw not_involution("perm and signs differ in length");
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= n)
        throw not_involution("entry out of range at index " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(perm[perm[i]]) != i)
        throw not_involution("w(w(i)) != i at index " + std::to_string(i + 1));
      if (signs[i] != 1 && signs[i] != -1)
        throw bad_sign("sign not +-1 at index " + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (signs[i] != signs[perm[i]])
        throw sign_mismatch("signs differ on the cycle through " + std::to_string(i + 1));
    }
    SignedInvolution w;
    w.perm_ = std::move(perm);
    w.signs_ = std::move(signs);
    return w;
  }

  static SignedInvolution identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return from_zero_based(std::move(p), std::vector<int>(n, 1));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int image(int i) const { return perm_[i]; }
  int sign(int i) const { return signs_[i]; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  auto operator<=>(const SignedInvolution&) const = default;
  bool operator==(const SignedInvolution&) const = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

enum class Orientation { none, plus, minus };

inline Orientation flip(Orientation o) {
  if (o == Orientation::plus) return Orientation::minus;
  if (o == Orientation::minus) return Orientation::plus;
  return o;
}

inline Orientation orient_times(Orientation o, int s) { return s < 0 ? flip(o) : o; }

struct CellId {
  SignedInvolution involution;
  Orientation orientation = Orientation::none;

  auto operator<=>(const CellId&) const = default;
  bool operator==(const CellId&) const = default;
};

struct GrassmannIndex {
  int n;
  int k;
  bool operator==(const GrassmannIndex&) const = default;
};

inline GrassmannIndex grassmann_index(const SignedInvolution& w) {
  int k = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w.image(i) > i) ++k;
    if (w.image(i) == i && w.sign(i) < 0) ++k;
  }
  return {w.size(), k};
}

using IndexPair = std::pair<int, int>;

// Inversion classes under (i,j) ~ (w(j),w(i)), lexicographically smallest
// representative, sorted. This order fixes the chart orientation of a cell.
inline std::vector<IndexPair> qinversions(const SignedInvolution& w) {
  std::vector<IndexPair> reps;
  const int n = w.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.image(i) > w.image(j)) {
        IndexPair a{i, j};
        IndexPair b{w.image(j), w.image(i)};
        reps.push_back(std::min(a, b));
      }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

// Rise classes under (i,j) ~ (w(i),w(j)).
inline std::vector<IndexPair> qrises(const SignedInvolution& w) {
  std::vector<IndexPair> reps;
  const int n = w.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.image(i) < w.image(j)) {
        IndexPair a{i, j};
        IndexPair b{w.image(i), w.image(j)};
        reps.push_back(std::min(a, b));
      }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

inline int cell_dim(const SignedInvolution& w) { return static_cast<int>(qinversions(w).size()); }

inline SignedInvolution complement(const SignedInvolution& w) {
  std::vector<int> s = w.signs();
  for (auto& x : s) x = -x;
  return SignedInvolution::from_zero_based(w.perm(), std::move(s));
}

// Restriction to an index set closed under w, renumbered 0..|D|-1 in order.
inline SignedInvolution restrict_to(const SignedInvolution& w, const std::vector<int>& support) {
  std::vector<int> pos(w.size(), -1);
  for (std::size_t a = 0; a < support.size(); ++a) pos[support[a]] = static_cast<int>(a);
  std::vector<int> p, s;
  for (int d : support) {
    if (pos[w.image(d)] < 0) throw d_not_stable("support not closed under the involution");
    p.push_back(pos[w.image(d)]);
    s.push_back(w.sign(d));
  }
  return SignedInvolution::from_zero_based(std::move(p), std::move(s));
}

namespace detail {

inline std::string join_cycle(const std::vector<int>& elems, bool underline) {
  bool wide = std::any_of(elems.begin(), elems.end(), [](int x) { return x + 1 >= 10; });
  std::string s = "(";
  if (underline) s += '~';
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (wide && a > 0) s += ',';
    s += std::to_string(elems[a] + 1);
  }
  if (wide && elems.size() == 1) s += ',';
  s += ')';
  return s;
}

}  // namespace detail

// Cycle notation: cycles ordered by smallest element, positive fixed points
// omitted, '~' marks a negative cycle, "()" for the all-positive identity.
inline std::string format(const SignedInvolution& w) {
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    const int j = w.image(i);
    if (j < i) continue;
    if (j == i && w.sign(i) > 0) continue;
    std::vector<int> elems{i};
    if (j != i) elems.push_back(j);
    s += detail::join_cycle(elems, w.sign(i) < 0);
  }
  return s.empty() ? "()" : s;
}

inline std::string format(const CellId& c) {
  std::string s = format(c.involution);
  if (c.orientation == Orientation::plus) s += "^+";
  if (c.orientation == Orientation::minus) s += "^-";
  return s;
}

// Inverse of format(); the ambient dimension is not encoded in the string.
inline CellId parse(std::string_view text, int n) {
  std::vector<int> perm(n), signs(n, 1);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  bool any = false;
  auto expect = [&](char ch) {
    if (pos >= text.size() || text[pos] != ch)
      throw parse_error(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  while (pos < text.size() && text[pos] == '(') {
    const std::size_t open = pos;
    expect('(');
    bool underline = false;
    if (pos < text.size() && text[pos] == '~') {
      underline = true;
      ++pos;
    }
    const std::size_t body_start = pos;
    while (pos < text.size() && text[pos] != ')') ++pos;
    if (pos >= text.size()) throw parse_error("unterminated cycle", open);
    std::string_view body = text.substr(body_start, pos - body_start);
    ++pos;
    std::vector<int> elems;
    if (body.find(',') != std::string_view::npos) {
      std::size_t a = 0;
      while (a < body.size()) {
        std::size_t b = body.find(',', a);
        if (b == std::string_view::npos) b = body.size();
        std::string_view tok = body.substr(a, b - a);
        if (!tok.empty()) {
          int v = 0;
          for (char ch : tok) {
            if (ch < '0' || ch > '9') throw parse_error("bad digit", body_start + a);
            v = v * 10 + (ch - '0');
          }
          elems.push_back(v - 1);
        }
        a = b + 1;
      }
    } else {
      for (std::size_t a = 0; a < body.size(); ++a) {
        char ch = body[a];
        if (ch < '1' || ch > '9') throw parse_error("bad digit", body_start + a);
        elems.push_back(ch - '1');
      }
    }
    if (elems.empty() && !underline && body.empty() && !any && pos == 2) {
      any = true;
      continue;
    }
    if (elems.empty() || elems.size() > 2) throw parse_error("cycle must have one or two entries", open);
    for (int e : elems) {
      if (e < 0 || e >= n) throw parse_error("index outside 1.." + std::to_string(n), open);
      if (seen[e]) throw parse_error("index repeated", open);
      seen[e] = true;
    }
    if (elems.size() == 2) {
      if (elems[0] == elems[1]) throw parse_error("degenerate cycle", open);
      perm[elems[0]] = elems[1];
      perm[elems[1]] = elems[0];
    } else if (!underline) {
      throw parse_error("positive fixed points are implicit", open);
    }
    for (int e : elems) signs[e] = underline ? -1 : 1;
    any = true;
  }
  if (!any) throw parse_error("expected '('", pos);
  CellId c{SignedInvolution::from_zero_based(perm, signs), Orientation::none};
  if (pos < text.size()) {
    expect('^');
    if (pos >= text.size()) throw parse_error("missing orientation", pos);
    if (text[pos] == '+') c.orientation = Orientation::plus;
    else if (text[pos] == '-') c.orientation = Orientation::minus;
    else throw parse_error("orientation must be + or -", pos);
    ++pos;
  }
  if (pos != text.size()) throw parse_error("trailing characters", pos);
  return c;
}

// All signed involutions of size n with k-dimensional (-1)-eigenspace,
// sorted by (cell_dim, format).
inline std::vector<SignedInvolution> enumerate_cells(int n, int k) {
  std::vector<SignedInvolution> out;
  if (k < 0 || k > n) return out;
  std::vector<int> perm(n, -1);
  std::function<void(int)> rec = [&](int i) {
    while (i < n && perm[i] >= 0) ++i;
    if (i == n) {
      std::vector<int> reps;
      for (int a = 0; a < n; ++a)
        if (perm[a] >= a) reps.push_back(a);
      const int m = static_cast<int>(reps.size());
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> s(n, 1);
        for (int b = 0; b < m; ++b)
          if (mask & (1 << b)) s[reps[b]] = s[perm[reps[b]]] = -1;
        auto w = SignedInvolution::from_zero_based(perm, s);
        if (grassmann_index(w).k == k) out.push_back(std::move(w));
      }
      return;
    }
    perm[i] = i;
    rec(i + 1);
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] >= 0) continue;
      perm[i] = j;
      perm[j] = i;
      rec(i + 1);
      perm[j] = -1;
    }
    perm[i] = -1;
  };
  rec(0);
  std::vector<std::pair<std::pair<int, std::string>, SignedInvolution>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.push_back({{cell_dim(w), format(w)}, std::move(w)});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace grasscw
