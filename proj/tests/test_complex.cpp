#include <gtest/gtest.h>

#include <grasscw/complex.hpp>

using namespace grasscw;

namespace {

// Coefficients of the Gaussian binomial [n choose k]_q.
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

// Homology of real projective space of dimension m: (free rank, 2-torsion).
std::vector<std::pair<int, bool>> projective_space_homology(int m) {
  std::vector<std::pair<int, bool>> h(m + 1, {0, false});
  h[0] = {1, false};
  for (int i = 1; i < m; ++i) h[i] = {0, i % 2 == 1};
  if (m > 0) h[m] = {m % 2 ? 1 : 0, false};
  return h;
}

SignedInvolution inv(const char* text, int n) { return parse(text, n).involution; }

}  // namespace

TEST(Complex, CellsPerDimension) {
  const auto c = build_complex(4, 2, Variant::plain);
  std::vector<std::size_t> sizes;
  for (const auto& d : c.cells) sizes.push_back(d.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 12, 12, 8, 4}));
  const auto o = build_complex(3, 1, Variant::oriented);
  EXPECT_EQ(o.cells[2].size(), 4u);
  EXPECT_EQ(euler_characteristic(build_complex(5, 1, Variant::plain)), 1);
  EXPECT_EQ(euler_characteristic(build_complex(4, 2, Variant::plain)), 2);
  EXPECT_EQ(euler_characteristic(build_complex(4, 1, Variant::plain)), 0);
}

TEST(Complex, BoundarySquaresToZero) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto v : {Variant::plain, Variant::oriented, Variant::projective}) {
        if (v == Variant::projective && n != 2 * k) continue;
        EXPECT_TRUE(verify_d_squared(build_complex(n, k, v)).empty()) << n << ' ' << k << ' ' << to_string(v);
      }
}

TEST(Complex, ProjectiveNeedsHalfDimension) {
  EXPECT_THROW(build_complex(5, 2, Variant::projective), bad_variant);
  EXPECT_THROW(parse_variant("twisted"), bad_variant);
}

TEST(Homology, ModTwoBettiAreGaussianBinomials) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto h = homology(build_complex(n, k, Variant::plain), Coefficients::mod2);
      EXPECT_EQ(h.betti(), gaussian_binomial(n, k)) << n << ' ' << k;
    }
}

TEST(Homology, ProjectiveSpacePattern) {
  for (int n = 1; n <= 6; ++n) {
    const auto h = homology(build_complex(n, 1, Variant::plain), Coefficients::integers);
    const auto want = projective_space_homology(n - 1);
    ASSERT_EQ(h.groups.size(), want.size());
    for (std::size_t d = 0; d < want.size(); ++d) {
      EXPECT_EQ(h.groups[d].free_rank, want[d].first) << "n=" << n << " H" << d;
      EXPECT_EQ(h.groups[d].torsion, want[d].second ? std::vector<BigInt>{2} : std::vector<BigInt>{});
    }
  }
}

TEST(Homology, OrientedProjectivePlaneIsSphere) {
  const auto h = homology(build_complex(3, 1, Variant::oriented), Coefficients::integers);
  ASSERT_EQ(h.groups.size(), 3u);
  EXPECT_EQ(h.groups[0].free_rank, 1);
  EXPECT_EQ(h.groups[1].free_rank, 0);
  EXPECT_TRUE(h.groups[1].torsion.empty());
  EXPECT_EQ(h.groups[2].free_rank, 1);
}

TEST(Homology, OrientedGrassmannianRationalBetti) {
  // oriented 2-planes in R^4 form S^2 x S^2
  const auto h = homology(build_complex(4, 2, Variant::oriented), Coefficients::integers);
  EXPECT_EQ(h.betti(), (std::vector<int>{1, 0, 2, 0, 1}));
}

TEST(Homology, RejectsBrokenComplex) {
  auto c = build_complex(3, 1, Variant::plain);
  c.boundaries[2](0, 0) += 1;
  c.boundaries[1](0, 0) += 1;
  EXPECT_THROW(homology(c, Coefficients::integers), complex_invalid);
}

TEST(Homology, ProjectiveQuotientConnected) {
  for (int k : {1, 2}) {
    const auto h = homology(build_complex(2 * k, k, Variant::projective), Coefficients::mod2);
    EXPECT_EQ(h.groups[0].free_rank, 1);
  }
}

TEST(Duality, ComplementGivesIsomorphicComplex) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto a = build_complex(n, k, Variant::plain);
      const auto b = build_complex(n, n - k, Variant::plain);
      ASSERT_EQ(a.top_dim(), b.top_dim());
      for (int d = 1; d <= a.top_dim(); ++d)
        for (int col = 0; col < static_cast<int>(a.cells[d].size()); ++col) {
          const auto src = a.cells[d][col];
          const CellId image{complement(src.involution), Orientation::none};
          std::vector<Term> mapped;
          for (auto t : a.boundary_of(d, col)) mapped.push_back({t.coef, {complement(t.cell.involution), Orientation::none}});
          std::sort(mapped.begin(), mapped.end(), [](auto& x, auto& y) { return x.cell < y.cell; });
          auto other = b.boundary_of(d, b.index_of(d, image));
          std::sort(other.begin(), other.end(), [](auto& x, auto& y) { return x.cell < y.cell; });
          EXPECT_EQ(mapped, other) << format(src);
        }
    }
}

TEST(ProjectiveSpace, Coproduct) {
  const CellId c{inv("(14)", 5), Orientation::none};
  const auto d = rp_coproduct(c);
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(format(d[0].left), "(12)");
  EXPECT_EQ(format(d[0].right), "(24)");
  EXPECT_EQ(format(d[1].left), "(~12)");
  EXPECT_EQ(format(d[1].right), "(~24)");
  const auto u = rp_coproduct({inv("(~13)", 4), Orientation::none});
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(format(u[0].left), "(~12)");
  EXPECT_EQ(format(u[0].right), "(23)");
  EXPECT_TRUE(rp_coproduct({inv("(12)", 3), Orientation::none}).empty());
  EXPECT_THROW(rp_coproduct({inv("(12)(34)", 4), Orientation::none}), not_rank1_cell);
}

// The sign (-1)^(q-p) on the first term is what makes d^2 = 0; the uniform
// version agrees whenever q - p is even.
TEST(ProjectiveSpace, AlternatingClosedFormMatchesComplex) {
  for (int n = 2; n <= 6; ++n)
    for (auto v : {Variant::plain, Variant::oriented}) {
      const auto c = build_complex(n, 1, v);
      for (int d = 1; d <= c.top_dim(); ++d)
        for (int col = 0; col < static_cast<int>(c.cells[d].size()); ++col) {
          const auto& cell = c.cells[d][col];
          auto want = rp_closed_form_alternating(cell);
          if (v == Variant::plain) want = drop_orientation(want);
          auto got = detail::normalize(c.boundary_of(d, col));
          EXPECT_EQ(got, want) << format(cell);
        }
    }
}

TEST(ProjectiveSpace, UniformClosedFormForSmallCells) {
  const auto c = build_complex(3, 1, Variant::plain);
  for (int d = 1; d <= c.top_dim(); ++d)
    for (int col = 0; col < static_cast<int>(c.cells[d].size()); ++col)
      EXPECT_EQ(detail::normalize(c.boundary_of(d, col)), drop_orientation(rp_closed_form(c.cells[d][col])));
}

TEST(Output, TablesAndJson) {
  const auto c = build_complex(3, 1, Variant::oriented);
  const auto text = format_tables(c);
  EXPECT_NE(text.find("dim 2\n"), std::string::npos);
  EXPECT_NE(text.find("(12)^+ -> "), std::string::npos);
  EXPECT_EQ(text.find("^- ->"), std::string::npos);
  const auto j = export_json(c);
  EXPECT_EQ(j["variant"], "oriented");
  EXPECT_EQ(j["cells"].size(), 18u);
  EXPECT_EQ(j["boundaries"][0]["dim"], 2);
  EXPECT_EQ(format_terms({{2, {inv("(14)", 4), Orientation::none}}, {-1, {inv("(~1)", 4), Orientation::plus}}}),
            "+2(14) -(~1)^+");
}
