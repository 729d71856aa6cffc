#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "incidence.hpp"
#include "smith.hpp"

namespace grasscw {

enum class Variant { plain, oriented, projective };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::oriented: return "oriented";
    case Variant::projective: return "projective";
  }
  return "?";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "oriented") return Variant::oriented;
  if (s == "projective") return Variant::projective;
  throw bad_variant("unknown variant '" + s + "'");
}

struct Term {
  std::int64_t coef;
  CellId cell;
  bool operator==(const Term&) const = default;
};

struct ChainComplex {
  Variant variant = Variant::plain;
  int n = 0;
  int k = 0;
  std::vector<std::vector<CellId>> cells;
  // boundaries[d]: rows index (d-1)-cells, columns index d-cells.
  std::vector<IntMatrix> boundaries;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }

  int index_of(int dim, const CellId& c) const {
    const auto& list = cells[dim];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == c) return static_cast<int>(i);
    return -1;
  }

  std::vector<Term> boundary_of(int dim, int col) const {
    std::vector<Term> out;
    if (dim == 0) return out;
    const auto& m = boundaries[dim];
    for (int r = 0; r < m.rows; ++r)
      if (m(r, col)) out.push_back({m(r, col), cells[dim - 1][r]});
    return out;
  }
};

namespace detail {

inline CellId projective_rep(const SignedInvolution& w) {
  const auto c = complement(w);
  return {format(c) < format(w) ? c : w, Orientation::none};
}

}  // namespace detail

inline ChainComplex build_complex(int n, int k, Variant variant) {
  if (variant == Variant::projective && n != 2 * k)
    throw bad_variant("projective variant requires n = 2k");
  ChainComplex cx;
  cx.variant = variant;
  cx.n = n;
  cx.k = k;
  const auto involutions = enumerate_cells(n, k);
  int top = -1;
  for (const auto& w : involutions) top = std::max(top, cell_dim(w));
  cx.cells.assign(top + 1, {});
  std::map<CellId, std::pair<int, int>> where;
  for (const auto& w : involutions) {
    const int d = cell_dim(w);
    std::vector<CellId> ids;
    if (variant == Variant::oriented) {
      ids = {{w, Orientation::plus}, {w, Orientation::minus}};
    } else if (variant == Variant::plain) {
      ids = {{w, Orientation::none}};
    } else {
      auto rep = detail::projective_rep(w);
      if (rep.involution == w) ids = {rep};
    }
    for (auto& id : ids) {
      where[id] = {d, static_cast<int>(cx.cells[d].size())};
      cx.cells[d].push_back(id);
    }
  }
  cx.boundaries.resize(top + 1);
  for (int d = 0; d <= top; ++d)
    cx.boundaries[d] = IntMatrix(d ? static_cast<int>(cx.cells[d - 1].size()) : 0,
                                 static_cast<int>(cx.cells[d].size()));
  auto add = [&](const CellId& src, const CellId& dst, std::int64_t coef) {
    auto s = where.find(src);
    auto t = where.find(dst);
    if (s == where.end() || t == where.end()) return;
    cx.boundaries[s->second.first](t->second.second, s->second.second) += coef;
  };
  for (const auto& c : covering_pairs(n, k)) {
    const auto rec = incidence_record(c);
    switch (variant) {
      case Variant::oriented:
        for (auto o : {Orientation::plus, Orientation::minus})
          add({c.upper, o}, {c.lower, orient_times(o, rec.orid)}, rec.incid);
        break;
      case Variant::plain:
        add({c.upper, Orientation::none}, {c.lower, Orientation::none}, rec.incid);
        break;
      case Variant::projective:
        if (detail::projective_rep(c.upper).involution == c.upper)
          add({c.upper, Orientation::none}, detail::projective_rep(c.lower), rec.incid);
        break;
    }
  }
  return cx;
}

struct DSquaredDefect {
  int dim;
  CellId source;
  CellId target;
  std::int64_t value;
};

inline std::vector<DSquaredDefect> verify_d_squared(const ChainComplex& c) {
  std::vector<DSquaredDefect> out;
  for (int d = 2; d <= c.top_dim(); ++d) {
    const auto p = multiply(c.boundaries[d - 1], c.boundaries[d]);
    for (int r = 0; r < p.rows; ++r)
      for (int col = 0; col < p.cols; ++col)
        if (p(r, col)) out.push_back({d, c.cells[d][col], c.cells[d - 2][r], p(r, col)});
  }
  return out;
}

enum class Coefficients { integers, mod2 };

struct HomologyGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;
};

struct HomologyResult {
  Coefficients coefficients = Coefficients::integers;
  std::vector<HomologyGroup> groups;

  std::vector<int> betti() const {
    std::vector<int> b;
    for (const auto& g : groups) b.push_back(g.free_rank);
    return b;
  }
};

inline HomologyResult homology(const ChainComplex& c, Coefficients coeff) {
  if (!verify_d_squared(c).empty()) throw complex_invalid("boundary does not square to zero");
  HomologyResult h;
  h.coefficients = coeff;
  const int top = c.top_dim();
  std::vector<int> rank(top + 2, 0);
  std::vector<std::vector<BigInt>> factors(top + 2);
  for (int d = 1; d <= top; ++d) {
    if (coeff == Coefficients::mod2) {
      rank[d] = rank_mod2(c.boundaries[d]);
    } else {
      factors[d] = smith_normal_form(c.boundaries[d]);
      rank[d] = static_cast<int>(factors[d].size());
    }
  }
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.free_rank = static_cast<int>(c.cells[d].size()) - rank[d] - rank[d + 1];
    for (const auto& f : factors[d + 1])
      if (f > 1) g.torsion.push_back(f);
    h.groups.push_back(std::move(g));
  }
  return h;
}

inline int euler_characteristic(const ChainComplex& c) {
  int chi = 0;
  for (int d = 0; d <= c.top_dim(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<int>(c.cells[d].size());
  return chi;
}

namespace detail {

struct LineCell {
  int p;
  int q;
  bool underline;
  Orientation o;
};

inline LineCell line_cell(const CellId& c) {
  const auto& w = c.involution;
  if (grassmann_index(w).k != 1) throw not_rank1_cell(format(c) + " is not a cell of projective space");
  for (int i = 0; i < w.size(); ++i) {
    if (w.image(i) > i) return {i, w.image(i), w.sign(i) < 0, c.orientation};
    if (w.image(i) == i && w.sign(i) < 0) return {i, i, true, c.orientation};
  }
  throw not_rank1_cell(format(c));
}

// (pq) or underlined (pq); p == q gives the 0-cell with a negative fixed point.
inline CellId make_line_cell(int n, int p, int q, bool underline, Orientation o) {
  std::vector<int> perm(n), s(n, 1);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (p == q) {
    s[p] = -1;
  } else {
    perm[p] = q;
    perm[q] = p;
    if (underline) s[p] = s[q] = -1;
  }
  return {SignedInvolution::from_zero_based(perm, s), o};
}

inline std::vector<Term> normalize(std::vector<Term> t) {
  std::map<CellId, std::int64_t> acc;
  for (auto& x : t) acc[x.cell] += x.coef;
  std::vector<Term> out;
  for (auto& [c, v] : acc)
    if (v) out.push_back({v, c});
  return out;
}

}  // namespace detail

struct TensorTerm {
  std::int64_t coef;
  CellId left;
  CellId right;
};

inline std::vector<TensorTerm> rp_coproduct(const CellId& c) {
  const auto lc = detail::line_cell(c);
  const int n = c.involution.size();
  std::vector<TensorTerm> out;
  if (lc.p == lc.q) return out;
  for (int r = lc.p + 1; r < lc.q; ++r) {
    auto mk = [&](int a, int b, bool u) { return detail::make_line_cell(n, a, b, u, lc.o); };
    if (!lc.underline) {
      out.push_back({1, mk(lc.p, r, false), mk(r, lc.q, false)});
      out.push_back({1, mk(lc.p, r, true), mk(r, lc.q, true)});
    } else {
      out.push_back({1, mk(lc.p, r, true), mk(r, lc.q, false)});
      out.push_back({1, mk(lc.p, r, false), mk(r, lc.q, true)});
    }
  }
  return out;
}

// Closed-form boundary of a projective-space cell as stated with uniform
// signs; see rp_closed_form_alternating for the variant with (-1)^(q-p).
inline std::vector<Term> rp_closed_form(const CellId& c) {
  const auto lc = detail::line_cell(c);
  const int n = c.involution.size();
  const auto e = lc.o, ne = flip(lc.o);
  auto mk = [&](int a, int b, bool u, Orientation o) { return detail::make_line_cell(n, a, b, u, o); };
  std::vector<Term> t;
  if (lc.p == lc.q) return t;
  if (lc.q == lc.p + 1) {
    const int s = lc.underline ? -1 : 1;
    t.push_back({s, mk(lc.q, lc.q, true, ne)});
    t.push_back({-s, mk(lc.p, lc.p, true, e)});
    return detail::normalize(t);
  }
  if (!lc.underline) {
    t.push_back({1, mk(lc.p + 1, lc.q, false, e)});
    t.push_back({1, mk(lc.p + 1, lc.q, true, ne)});
    t.push_back({-1, mk(lc.p, lc.q - 1, false, e)});
    t.push_back({-1, mk(lc.p, lc.q - 1, true, e)});
  } else {
    t.push_back({1, mk(lc.p + 1, lc.q, false, ne)});
    t.push_back({1, mk(lc.p + 1, lc.q, true, e)});
    t.push_back({1, mk(lc.p, lc.q - 1, false, e)});
    t.push_back({1, mk(lc.p, lc.q - 1, true, e)});
  }
  return detail::normalize(t);
}

inline std::vector<Term> rp_closed_form_alternating(const CellId& c) {
  const auto lc = detail::line_cell(c);
  const int n = c.involution.size();
  const auto e = lc.o, ne = flip(lc.o);
  auto mk = [&](int a, int b, bool u, Orientation o) { return detail::make_line_cell(n, a, b, u, o); };
  std::vector<Term> t;
  if (lc.p == lc.q) return t;
  if (lc.q == lc.p + 1) {
    if (!lc.underline) {
      t.push_back({1, mk(lc.q, lc.q, true, ne)});
      t.push_back({-1, mk(lc.p, lc.p, true, e)});
    } else {
      t.push_back({-1, mk(lc.q, lc.q, true, e)});
      t.push_back({1, mk(lc.p, lc.p, true, e)});
    }
    return detail::normalize(t);
  }
  const int s = (lc.q - lc.p) % 2 ? -1 : 1;
  if (!lc.underline) {
    t.push_back({s, mk(lc.p + 1, lc.q, false, e)});
    t.push_back({1, mk(lc.p + 1, lc.q, true, ne)});
    t.push_back({-1, mk(lc.p, lc.q - 1, false, e)});
    t.push_back({-1, mk(lc.p, lc.q - 1, true, e)});
  } else {
    t.push_back({1, mk(lc.p + 1, lc.q, false, ne)});
    t.push_back({s, mk(lc.p + 1, lc.q, true, e)});
    t.push_back({1, mk(lc.p, lc.q - 1, false, e)});
    t.push_back({1, mk(lc.p, lc.q - 1, true, e)});
  }
  return detail::normalize(t);
}

using TensorSum = std::map<std::pair<CellId, CellId>, std::int64_t>;

// Cells x of a k = 1 complex where (d(x)1 + 1d(x)) Delta(x) != Delta(d(x)).
inline std::vector<CellId> coproduct_defects(const ChainComplex& c) {
  if (c.k != 1) throw not_rank1_cell("coproduct needs k = 1");
  auto bd = [&](const CellId& x) {
    const int d = cell_dim(x.involution);
    return d == 0 ? std::vector<Term>{} : c.boundary_of(d, c.index_of(d, x));
  };
  std::vector<CellId> bad;
  for (int d = 0; d <= c.top_dim(); ++d)
    for (const auto& x : c.cells[d]) {
      TensorSum lhs, rhs;
      for (const auto& t : rp_coproduct(x)) {
        for (const auto& a : bd(t.left)) lhs[{a.cell, t.right}] += t.coef * a.coef;
        for (const auto& b : bd(t.right)) lhs[{t.left, b.cell}] += t.coef * b.coef;
      }
      for (const auto& y : bd(x))
        for (const auto& t : rp_coproduct(y.cell)) rhs[{t.left, t.right}] += y.coef * t.coef;
      std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
      if (lhs != rhs) bad.push_back(x);
    }
  return bad;
}

inline std::vector<Term> drop_orientation(const std::vector<Term>& t) {
  std::vector<Term> out;
  for (auto x : t) {
    x.cell.orientation = Orientation::none;
    out.push_back(x);
  }
  return detail::normalize(out);
}

inline std::string format_terms(const std::vector<Term>& terms) {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += ' ';
    s += t.coef < 0 ? '-' : '+';
    const auto mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) s += std::to_string(mag);
    s += format(t.cell);
  }
  return s;
}

// Rows "cell -> terms", dimension-descending; oriented complexes list the
// positively oriented cells only (the other rows follow by symmetry).
inline std::string format_tables(const ChainComplex& c) {
  std::ostringstream os;
  os << "# " << to_string(c.variant) << " n=" << c.n << " k=" << c.k << '\n';
  for (int d = c.top_dim(); d >= 1; --d) {
    os << "dim " << d << '\n';
    for (std::size_t col = 0; col < c.cells[d].size(); ++col) {
      const auto& cell = c.cells[d][col];
      if (cell.orientation == Orientation::minus) continue;
      os << format(cell) << " -> " << format_terms(c.boundary_of(d, static_cast<int>(col))) << '\n';
    }
  }
  return os.str();
}

inline nlohmann::json to_json(const SignedInvolution& w) {
  return {{"cycles", format(w)}, {"signs", w.signs()}, {"dim", cell_dim(w)}};
}

inline nlohmann::json export_json(const ChainComplex& c) {
  nlohmann::json j;
  j["variant"] = to_string(c.variant);
  j["n"] = c.n;
  j["k"] = c.k;
  j["cells"] = nlohmann::json::array();
  for (int d = 0; d <= c.top_dim(); ++d)
    for (const auto& cell : c.cells[d]) j["cells"].push_back({{"cell", format(cell)}, {"dim", d}});
  j["boundaries"] = nlohmann::json::array();
  for (int d = c.top_dim(); d >= 1; --d) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t col = 0; col < c.cells[d].size(); ++col) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : c.boundary_of(d, static_cast<int>(col)))
        terms.push_back({{"coef", t.coef}, {"target", format(t.cell)}});
      rows.push_back({{"cell", format(c.cells[d][col])}, {"terms", terms}});
    }
    j["boundaries"].push_back({{"dim", d}, {"rows", rows}});
  }
  return j;
}

}  // namespace grasscw
