#pragma once

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "complex.hpp"
#include "golden.hpp"
#include "numerics.hpp"

namespace grasscw::cli {

enum exit_code : int { ok = 0, failed = 1, usage = 2 };

struct Options {
  int n = 3;
  int k = 1;
  std::string variant = "plain";
  std::string format = "text";
  std::string coeff = "integers";
  std::uint64_t seed = 1;
  int samples = 200;
  std::string fixtures;
};

namespace detail {

inline void check_nk(const Options& o) {
  if (o.n < 1 || o.n > 9) throw CLI::ValidationError("--n", "n must lie in 1..9");
  if (o.k < 0 || o.k > o.n) throw CLI::ValidationError("--k", "k must lie in 0..n");
}

inline int cmd_cells(const Options& o, std::ostream& out) {
  const auto cells = enumerate_cells(o.n, o.k);
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& w : cells) j.push_back(to_json(w));
    out << j.dump(1) << '\n';
    return ok;
  }
  for (const auto& w : cells) out << cell_dim(w) << ' ' << format(w) << '\n';
  return ok;
}

inline int cmd_covers(const Options& o, std::ostream& out) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : covering_pairs(o.n, o.k)) {
    const auto r = incidence_record(c);
    if (o.format == "json") {
      j.push_back({{"lower", format(c.lower)},
                   {"upper", format(c.upper)},
                   {"rise", {c.i + 1, c.j + 1}},
                   {"type", to_string(c.type)},
                   {"alpha", c.params.alpha},
                   {"beta", c.params.beta},
                   {"gamma", c.params.gamma},
                   {"incid", r.incid},
                   {"orid", r.orid}});
      continue;
    }
    out << format(c.lower) << " < " << format(c.upper) << "  rise (" << c.i + 1 << ',' << c.j + 1 << ") "
        << to_string(c.type) << "  incid " << r.incid << "  orid " << r.orid << '\n';
  }
  if (o.format == "json") out << j.dump(1) << '\n';
  return ok;
}

inline int cmd_complex(const Options& o, std::ostream& out) {
  const auto c = build_complex(o.n, o.k, parse_variant(o.variant));
  if (o.format == "json")
    out << export_json(c).dump(1) << '\n';
  else
    out << format_tables(c);
  return ok;
}

inline std::string group_text(const HomologyGroup& g) {
  std::string s = g.free_rank ? (g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank)) : "";
  for (const auto& t : g.torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return s.empty() ? "0" : s;
}

inline int cmd_homology(const Options& o, std::ostream& out) {
  const auto c = build_complex(o.n, o.k, parse_variant(o.variant));
  const auto coeff = o.coeff == "mod2" ? Coefficients::mod2 : Coefficients::integers;
  const auto h = homology(c, coeff);
  if (o.format == "json") {
    nlohmann::json j;
    j["betti"] = h.betti();
    j["coefficients"] = o.coeff;
    j["euler_characteristic"] = euler_characteristic(c);
    for (const auto& g : h.groups) {
      std::vector<std::string> tors;
      for (const auto& t : g.torsion) tors.push_back(t.str());
      j["torsion"].push_back(tors);
    }
    out << j.dump(1) << '\n';
    return ok;
  }
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    out << "H" << d << " = ";
    if (coeff == Coefficients::mod2)
      out << (h.groups[d].free_rank ? "F2^" + std::to_string(h.groups[d].free_rank) : "0");
    else
      out << group_text(h.groups[d]);
    out << '\n';
  }
  out << "betti";
  for (int b : h.betti()) out << ' ' << b;
  out << "\neuler " << euler_characteristic(c) << '\n';
  return ok;
}

struct Tally {
  int checked = 0;
  int bad = 0;
  double margin = 1;
};

inline Tally transport_tally(int n, int k, std::ostream& out) {
  Tally t;
  for (const auto& c : covering_pairs(n, k)) {
    const auto r = incidence_record(c);
    ++t.checked;
    try {
      const auto num = transport_orientation(c);
      t.margin = std::min(t.margin, num.margin);
      if (num.incid != r.incid || num.orid != r.orid) {
        ++t.bad;
        out << "  mismatch " << format(c.lower) << " < " << format(c.upper) << '\n';
      }
    } catch (const error& e) {
      ++t.bad;
      out << "  " << format(c.lower) << " < " << format(c.upper) << ": " << e.what() << '\n';
    }
  }
  return t;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  bool pass = true;
  for (auto v : {Variant::plain, Variant::oriented, Variant::projective}) {
    if (v == Variant::projective && o.n != 2 * o.k) continue;
    const auto c = build_complex(o.n, o.k, v);
    const auto defects = verify_d_squared(c);
    out << "d^2 = 0 (" << to_string(v) << "): " << (defects.empty() ? "ok" : "FAILED") << '\n';
    for (std::size_t i = 0; i < defects.size() && i < 10; ++i)
      out << "  " << format(defects[i].source) << " -> " << defects[i].value << " " << format(defects[i].target) << '\n';
    pass = pass && defects.empty();
  }
  const std::string fixture = o.n == 5 && o.k == 1   ? "rp4_oriented.txt"
                              : o.n == 4 && o.k == 2 ? "g24_oriented.txt"
                                                     : "";
  if (!fixture.empty()) {
    const auto path = (std::filesystem::path(o.fixtures) / fixture).string();
    const auto rep = compare_golden(build_complex(o.n, o.k, Variant::oriented), load_golden(path, o.n));
    out << "golden tables (" << rep.rows << " rows): "
        << (rep.exact ? "exact" : rep.match ? "match after relabelling" : "FAILED") << '\n';
    for (const auto& w : rep.flipped) out << "  relabelled " << format(w) << '\n';
    for (const auto& p : rep.problems) out << "  " << p << '\n';
    pass = pass && rep.match;
  }
  if (o.n <= 5) {
    const auto t = transport_tally(o.n, o.k, out);
    out << "numeric transport: " << t.checked - t.bad << "/" << t.checked << " covers agree, margin " << t.margin
        << '\n';
    pass = pass && t.bad == 0;
  } else {
    out << "numeric transport: skipped for n > 5\n";
  }
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? ok : failed;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  const auto cells = enumerate_cells(o.n, o.k);
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
  int bad = 0;
  double worst = 0;
  for (int s = 0; s < o.samples; ++s) {
    const auto& w = cells[pick(rng)];
    try {
      const auto g = project_pi(random_conjugate(w, rng));
      const auto gg = project_pi(g.matrix());
      worst = std::max(worst, max_abs(gg.matrix() - g.matrix()));
      if (!(cell_of(g) == w) || max_abs(gg.matrix() - g.matrix()) > 1e-6) ++bad;
    } catch (const error& e) {
      ++bad;
      out << "  " << format(w) << ": " << e.what() << '\n';
    }
  }
  out << "projection: " << o.samples - bad << "/" << o.samples << " samples idempotent and cell preserving, max drift "
      << worst << '\n';
  return bad ? failed : ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Signed-involution cell complexes of real Grassmannians"};
  app.require_subcommand(1);
  Options o;
#ifdef GRASSCW_FIXTURE_DIR
  o.fixtures = GRASSCW_FIXTURE_DIR;
#endif
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "ambient dimension")->required();
    sub->add_option("--k", o.k, "subspace dimension")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto variant = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "complex variant")
        ->check(CLI::IsMember({"plain", "oriented", "projective"}));
  };
  auto* cells = app.add_subcommand("cells", "list cells by dimension");
  common(cells);
  auto* covers = app.add_subcommand("covers", "list covering pairs with incidence data");
  common(covers);
  auto* cx = app.add_subcommand("complex", "print boundary tables");
  common(cx);
  variant(cx);
  auto* hom = app.add_subcommand("homology", "homology of a complex");
  common(hom);
  variant(hom);
  hom->add_option("--coeff", o.coeff, "coefficients")->check(CLI::IsMember({"integers", "mod2"}));
  auto* ver = app.add_subcommand("verify", "run the consistency checks");
  common(ver);
  ver->add_option("--fixtures", o.fixtures, "directory with reference tables");
  ver->add_option("--seed", o.seed, "random seed");
  auto* orc = app.add_subcommand("oracle", "numeric projection checks on random points");
  common(orc);
  orc->add_option("--seed", o.seed, "random seed");
  orc->add_option("--samples", o.samples, "number of random points")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    detail::check_nk(o);
    if ((hom->parsed() || cx->parsed()) && o.variant == "projective" && o.n != 2 * o.k)
      throw CLI::ValidationError("--variant", "projective requires n = 2k");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nhint: run with --help for usage\n";
    return usage;
  }
  try {
    if (cells->parsed()) return detail::cmd_cells(o, out);
    if (covers->parsed()) return detail::cmd_covers(o, out);
    if (cx->parsed()) return detail::cmd_complex(o, out);
    if (hom->parsed()) return detail::cmd_homology(o, out);
    if (ver->parsed()) return detail::cmd_verify(o, out);
    if (orc->parsed()) return detail::cmd_oracle(o, out);
  } catch (const bad_variant& e) {
    err << "error: " << e.what() << "\nhint: check --variant\n";
    return usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return failed;
  }
  return usage;
}

}  // namespace grasscw::cli
