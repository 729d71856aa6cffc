#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"

namespace grasscw {

// Reference boundary rows in the text layout of format_tables.
struct GoldenRow {
  int dim = 0;
  CellId source;
  std::vector<Term> terms;
};

inline Term parse_term(const std::string& tok, int n) {
  if (tok.empty() || (tok[0] != '+' && tok[0] != '-')) throw parse_error("term must start with a sign", 0);
  std::size_t pos = 1;
  std::int64_t mag = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) mag = mag * 10 + (tok[pos++] - '0');
  if (pos == 1) mag = 1;
  return {tok[0] == '-' ? -mag : mag, parse(std::string_view(tok).substr(pos), n)};
}

inline std::vector<GoldenRow> read_golden(std::istream& in, int n) {
  std::vector<GoldenRow> rows;
  std::string line;
  int dim = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("dim ", 0) == 0) {
      dim = std::stoi(line.substr(4));
      continue;
    }
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) throw parse_error("missing ' -> ' in fixture row", 0);
    GoldenRow r;
    r.dim = dim;
    r.source = parse(line.substr(0, arrow), n);
    std::istringstream ts(line.substr(arrow + 4));
    std::string tok;
    while (ts >> tok) r.terms.push_back(parse_term(tok, n));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<GoldenRow> load_golden(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw error("cannot open fixture " + path);
  return read_golden(in, n);
}

struct GoldenReport {
  int rows = 0;
  bool exact = false;
  bool match = false;
  // Cells whose orientation labels had to be swapped to reconcile all rows.
  std::vector<SignedInvolution> flipped;
  std::vector<std::string> problems;
};

namespace detail {

class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  // Records a xor b = rel; false on contradiction.
  bool unite(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace detail

// Compares oriented boundary rows with the computed complex, exactly and then
// modulo one global relabelling w^+ <-> w^- per cell.
inline GoldenReport compare_golden(const ChainComplex& c, const std::vector<GoldenRow>& rows) {
  GoldenReport rep;
  rep.rows = static_cast<int>(rows.size());
  std::map<SignedInvolution, std::size_t> ids;
  auto id_of = [&](const SignedInvolution& w) {
    auto [it, fresh] = ids.emplace(w, ids.size());
    return it->second;
  };
  struct Constraint {
    std::size_t a, b;
    int rel;
    std::string where;
  };
  std::vector<Constraint> constraints;
  bool exact = true;
  for (const auto& row : rows) {
    const int d = cell_dim(row.source.involution);
    if (row.dim >= 0 && row.dim != d) rep.problems.push_back(format(row.source) + ": listed under dim " + std::to_string(row.dim));
    const int col = d <= c.top_dim() ? c.index_of(d, row.source) : -1;
    if (col < 0) {
      rep.problems.push_back(format(row.source) + ": not a cell of the complex");
      continue;
    }
    std::map<SignedInvolution, std::map<Orientation, std::int64_t>> mine, gold;
    for (const auto& t : c.boundary_of(d, col)) mine[t.cell.involution][t.cell.orientation] += t.coef;
    for (const auto& t : row.terms) gold[t.cell.involution][t.cell.orientation] += t.coef;
    std::map<SignedInvolution, bool> targets;
    for (auto& [w, m] : mine) targets[w] = true;
    for (auto& [w, m] : gold) targets[w] = true;
    const auto src = id_of(row.source.involution);
    for (auto& [w, unused] : targets) {
      auto& a = mine[w];
      auto& b = gold[w];
      auto coef = [](std::map<Orientation, std::int64_t>& m, Orientation o) {
        auto it = m.find(o);
        return it == m.end() ? std::int64_t{0} : it->second;
      };
      const bool same = coef(a, Orientation::plus) == coef(b, Orientation::plus) &&
                        coef(a, Orientation::minus) == coef(b, Orientation::minus);
      const bool swapped = coef(a, Orientation::plus) == coef(b, Orientation::minus) &&
                           coef(a, Orientation::minus) == coef(b, Orientation::plus);
      const std::string where = format(row.source) + " -> " + format(w);
      if (!same) exact = false;
      if (same && swapped) continue;
      if (!same && !swapped) {
        rep.problems.push_back(where + ": coefficients differ");
        continue;
      }
      constraints.push_back({src, id_of(w), swapped ? 1 : 0, where});
    }
  }
  rep.exact = exact && rep.problems.empty();
  detail::ParityUnionFind uf(ids.size());
  for (const auto& k : constraints)
    if (!uf.unite(k.a, k.b, k.rel)) rep.problems.push_back(k.where + ": no consistent orientation relabelling");
  rep.match = rep.problems.empty();
  if (rep.match && !rep.exact) {
    // Anchor each component so that its representative keeps its label.
    for (const auto& [w, id] : ids)
      if (uf.find(id).second) rep.flipped.push_back(w);
  }
  return rep;
}

}  // namespace grasscw
