#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <grasscw/complex.hpp>
#include <grasscw/golden.hpp>
#include <grasscw/numerics.hpp>

using namespace grasscw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gaussian_binomial(n - 1, k - 1);
  auto b = gaussian_binomial(n - 1, k);
  std::vector<int> out(std::max(a.size(), b.size() + k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  return out;
}

Outcome censuses() {
  const auto t0 = Clock::now();
  Outcome o;
  auto check = [&](int n, int k, std::vector<std::size_t> want) {
    std::vector<std::size_t> got;
    for (const auto& w : enumerate_cells(n, k)) {
      const auto d = static_cast<std::size_t>(cell_dim(w));
      if (got.size() <= d) got.resize(d + 1, 0);
      ++got[d];
    }
    if (got != want) {
      o.pass = false;
      o.detail += " (" + std::to_string(n) + "," + std::to_string(k) + ") differs";
    }
  };
  check(3, 1, {3, 4, 2});
  check(5, 1, {5, 8, 6, 4, 2});
  check(4, 2, {6, 12, 12, 8, 4});
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 1;
  o.detail += " " + std::to_string(s) + " s";
  return o;
}

Outcome golden() {
  const auto t0 = Clock::now();
  Outcome o;
  for (auto [n, k, file] : {std::tuple{5, 1, "rp4_oriented.txt"}, std::tuple{4, 2, "g24_oriented.txt"}}) {
    const auto rows = load_golden(std::string(GRASSCW_FIXTURE_DIR) + "/" + file, n);
    const auto rep = compare_golden(build_complex(n, k, Variant::oriented), rows);
    o.pass = o.pass && rep.match;
    o.detail += " (" + std::to_string(n) + "," + std::to_string(k) + ") " + std::to_string(rep.rows) + " rows " +
                (rep.exact ? "exact" : rep.match ? "after " + std::to_string(rep.flipped.size()) + " flips" : "mismatch");
  }
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 5;
  o.detail += ", " + std::to_string(s) + " s";
  return o;
}

Outcome d_squared() {
  const auto t0 = Clock::now();
  Outcome o;
  int complexes = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto v : {Variant::plain, Variant::oriented, Variant::projective}) {
        if (v == Variant::projective && n != 2 * k) continue;
        ++complexes;
        if (!verify_d_squared(build_complex(n, k, v)).empty()) {
          o.pass = false;
          o.detail += " " + to_string(v) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
  const double s = seconds_since(t0);
  o.pass = o.pass && s < 60;
  o.detail += " " + std::to_string(complexes) + " complexes, " + std::to_string(s) + " s";
  return o;
}

Outcome closed_form() {
  Outcome o;
  int rows = 0, bad = 0;
  std::string first;
  for (int n = 2; n <= 6; ++n) {
    const auto c = build_complex(n, 1, Variant::plain);
    for (int d = 1; d <= c.top_dim(); ++d)
      for (int col = 0; col < static_cast<int>(c.cells[d].size()); ++col) {
        ++rows;
        const auto& cell = c.cells[d][col];
        if (detail::normalize(c.boundary_of(d, col)) != drop_orientation(rp_closed_form(cell))) {
          if (!bad++) first = " first at n=" + std::to_string(n) + " " + format(cell);
        }
      }
  }
  o.pass = bad == 0;
  o.detail = " " + std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows agree" + first;
  return o;
}

Outcome homology_oracles() {
  Outcome o;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      if (homology(build_complex(n, k, Variant::plain), Coefficients::mod2).betti() != gaussian_binomial(n, k)) {
        o.pass = false;
        o.detail += " mod2(" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
  for (int n = 1; n <= 6; ++n) {
    const auto h = homology(build_complex(n, 1, Variant::plain), Coefficients::integers);
    const int m = n - 1;
    bool ok = static_cast<int>(h.groups.size()) == m + 1;
    for (int d = 0; ok && d <= m; ++d) {
      const int free = d == 0 || (d == m && m % 2) ? 1 : 0;
      const bool two = d > 0 && d < m && d % 2;
      ok = h.groups[d].free_rank == free && h.groups[d].torsion == (two ? std::vector<BigInt>{2} : std::vector<BigInt>{});
    }
    if (!ok) {
      o.pass = false;
      o.detail += " RP(" + std::to_string(m) + ")";
    }
  }
  const auto s = homology(build_complex(3, 1, Variant::oriented), Coefficients::integers);
  const bool sphere = s.groups.size() == 3 && s.groups[0].free_rank == 1 && s.groups[0].torsion.empty() &&
                      s.groups[1].free_rank == 0 && s.groups[1].torsion.empty() && s.groups[2].free_rank == 1 &&
                      s.groups[2].torsion.empty();
  if (!sphere) {
    o.pass = false;
    o.detail += " sphere";
  }
  if (o.pass) o.detail = " Gaussian binomials n<=6, RP^m pattern m<=5, S^2";
  return o;
}

Outcome sign_tables() {
  const auto t0 = Clock::now();
  Outcome o;
  double margin = 1;
  int checked = 0, bad = 0;
  for (const auto& c : model_covers()) {
    ++checked;
    try {
      const auto r = transport_orientation(c);
      margin = std::min(margin, r.margin);
      if (r.incid != model_incidence(c.type, c.params) ||
          r.orid != model_orid(c.type, c.params, c.lower.sign(c.i), c.lower.sign(c.j)))
        ++bad;
    } catch (const error&) {
      ++bad;
    }
  }
  const double s = seconds_since(t0);
  o.pass = bad == 0 && margin > 1e-6 && s < 30;
  o.detail = " " + std::to_string(checked - bad) + "/" + std::to_string(checked) + " model covers, margin " +
             std::to_string(margin) + ", " + std::to_string(s) + " s";
  return o;
}

Outcome cross_oracle() {
  Outcome o;
  for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}}) {
    int checked = 0, bad = 0;
    for (const auto& c : covering_pairs(n, k)) {
      ++checked;
      const auto rec = incidence_record(c);
      try {
        const auto r = transport_orientation(c);
        if (r.incid != rec.incid || r.orid != rec.orid) ++bad;
      } catch (const error&) {
        ++bad;
      }
    }
    o.pass = o.pass && bad == 0;
    o.detail += " (" + std::to_string(n) + "," + std::to_string(k) + ") " + std::to_string(checked - bad) + "/" +
                std::to_string(checked);
  }
  return o;
}

Outcome projection() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  double drift = 0;
  int bad = 0, total = 0;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= std::min(n, 2); ++k) {
      const auto cells = enumerate_cells(n, k);
      std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
      for (int s = 0; s < 1000; ++s) {
        ++total;
        const auto& w = cells[pick(rng)];
        try {
          const auto g = project_pi(random_conjugate(w, rng));
          const double d = max_abs(project_pi(g.matrix()).matrix() - g.matrix());
          drift = std::max(drift, d);
          if (d > default_tolerances.involution || !(cell_of(g) == w)) ++bad;
        } catch (const error&) {
          ++bad;
        }
      }
    }
  o.pass = bad == 0;
  o.detail = " " + std::to_string(total - bad) + "/" + std::to_string(total) + " samples, max drift " +
             std::to_string(drift);
  return o;
}

Outcome projective_variant() {
  Outcome o;
  for (auto [n, k] : {std::pair{2, 1}, {4, 2}}) {
    const auto c = build_complex(n, k, Variant::projective);
    const bool ok = verify_d_squared(c).empty() && homology(c, Coefficients::mod2).betti().at(0) == 1;
    o.pass = o.pass && ok;
    o.detail += " (" + std::to_string(n) + "," + std::to_string(k) + ") " + (ok ? "ok" : "failed");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cell censuses", censuses},
      {"golden differentials", golden},
      {"boundary squares to zero", d_squared},
      {"projective-space closed form", closed_form},
      {"homology oracles", homology_oracles},
      {"model sign tables", sign_tables},
      {"combinatorial vs numeric incidences", cross_oracle},
      {"projection idempotence and cell preservation", projection},
      {"projective variant", projective_variant},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string(" threw: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << name << ":" << r.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
