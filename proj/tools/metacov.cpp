// metacov: command-line front end for the metacov library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metacov/bounds.hpp"
#include "metacov/covers.hpp"
#include "metacov/derham.hpp"
#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/lowindex.hpp"
#include "metacov/report.hpp"
#include "metacov/stratification.hpp"

using namespace metacov;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

KnotRecord resolve_knot(const std::string& arg) {
  const KnotTable& table = KnotTable::shipped();
  if (table.contains(arg)) return table.get(arg);
  if (arg.rfind("PD", 0) == 0 || arg.rfind("[", 0) == 0) {
    KnotRecord rec;
    rec.name = "custom";
    try {
      rec.diagram = parse_pd(arg);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    return rec;
  }
  throw UsageError("unknown knot '" + arg + "'");
}

struct Prepared {
  KnotRecord rec;
  GroupPresentation pres;
  LaurentPoly delta;
};

Prepared prepare(const std::string& knot) {
  Prepared p;
  p.rec = resolve_knot(knot);
  p.pres = simplify(wirtinger(p.rec.diagram));
  p.delta = alexander_poly(p.pres);
  return p;
}

std::vector<RootInfo> roots_at(const Prepared& k, std::uint32_t p) {
  return roots_of_delta_modp(alexander_modp(k.pres, p).delta);
}

int cmd_alexander(const std::string& knot, std::optional<std::uint32_t> mod, const std::string& format) {
  const Prepared k = prepare(knot);
  if (format == "json") {
    nlohmann::json j;
    j["knot"] = k.rec.name;
    j["delta"] = k.delta.to_string();
    const PropsReport props = check_props(k.delta, k.rec.diagram.crossing_count());
    j["props"] = {{"delta_at_one", to_string(props.delta_at_one)}, {"palindromic", props.palindromic},
                  {"degree_bound", props.degree_bound}, {"enough_terms", props.enough_terms}, {"ok", props.ok()}};
    nlohmann::json modp = nlohmann::json::object();
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (mod && p != *mod) continue;
      const CongruenceReport cr = check_congruence(k.pres, p);
      modp[std::to_string(p)] = {{"factorization", render_modp(k.delta, p)},
                                 {"nontrivial", nontrivial_modp(k.delta, p)},
                                 {"congruence_ok", cr.ok}};
    }
    j["modp"] = modp;
    std::cout << j.dump(2) << '\n';
    return props.ok() ? kOk : kFailure;
  }
  std::cout << (mod ? render_modp(k.delta, *mod) : k.delta.to_string()) << '\n';
  return kOk;
}

int cmd_rep(const std::string& knot, std::uint32_t p) {
  const Prepared k = prepare(knot);
  std::vector<RootInfo> roots;
  try {
    roots = roots_at(k, p);
  } catch (const std::domain_error& e) {
    std::cout << k.rec.name << " p=" << p << ": " << e.what() << '\n';
    return kFailure;
  }
  int status = kOk;
  nlohmann::json out = nlohmann::json::array();
  for (const RootInfo& r : roots) {
    const AffineRep rep = build_rep(k.pres, p, r.factor);
    const RepReport v = verify_rep(rep, k.pres);
    nlohmann::json j = rep_to_json(rep);
    j["factor"] = r.factor.to_string();
    j["verified"] = {{"relators", v.relators_ok}, {"image_order", v.image_order},
                     {"expected_order", v.expected_order}, {"nonabelian", v.nonabelian},
                     {"spanning", v.spanning}, {"meridian_alpha", v.meridian_alpha},
                     {"longitude_translation", v.longitude_translation}, {"ok", v.ok()}};
    if (!v.ok()) status = kFailure;
    out.push_back(std::move(j));
  }
  std::cout << out.dump(2) << '\n';
  return status;
}

int cmd_cover(const std::string& knot, std::uint32_t p, std::size_t budget) {
  const Prepared k = prepare(knot);
  std::vector<RootInfo> roots;
  try {
    roots = roots_at(k, p);
  } catch (const std::domain_error&) {
    std::cout << k.rec.name << " p=" << p << ": ∅\n";
    return kOk;
  }
  Budget b;
  b.max_degree = budget;
  const auto exps = abelianization_map(k.pres);
  int status = kOk;
  for (const RootInfo& r : roots) {
    const AffineRep rep = build_rep(k.pres, p, r.factor);
    std::cout << "root " << r.factor.to_string() << " (d=" << r.degree << ", n=" << r.order << ")\n";
    try {
      const CoverHomology ker = cover_homology(k.pres, kernel_table(rep), CoverKind::kernel, b);
      const CoverHomology pre = cover_homology(k.pres, preimage_table(rep), CoverKind::preimage, b, false);
      const CoverHomology cyc = cover_homology(k.pres, cyclic_table(exps, r.order), CoverKind::cyclic, b, false);
      std::cout << "  kernel   degree " << ker.degree << ": " << ker.h1.to_string() << ", boundary "
                << ker.boundary_components;
      if (ker.peripheral_computed)
        std::cout << ", peripheral rank " << ker.peripheral_rank << ", non-peripheral " << ker.nonperipheral_rank;
      std::cout << "\n  preimage degree " << pre.degree << ": " << pre.h1.to_string() << "\n  cyclic   degree "
                << cyc.degree << ": " << cyc.h1.to_string() << '\n';
      const Theorem3Verdict v = check_theorem3(ker.h1.free_rank(), cyc.h1.free_rank(), rep.field_order(), r.order,
                                               k.rec.diagram.crossing_count(), cyc.rs_generators);
      std::cout << "  betti bounds " << v.lower << " <= " << v.beta << " <= " << v.upper << (v.ok() ? "" : "  FAIL")
                << "\n  torsion ratio: " << to_string(torsion_ratio_check(ker.h1, cyc.h1, rep.field_order())) << '\n';
      if (!v.ok() || ker.boundary_components != rep.field_order()) status = kFailure;
    } catch (const BudgetExceeded& e) {
      std::cout << "  skipped: " << e.what() << '\n';
    }
  }
  return status;
}

int cmd_cyclic(const std::string& knot, std::size_t max_n) {
  const Prepared k = prepare(knot);
  const auto exps = abelianization_map(k.pres);
  int status = kOk;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const CyclicInvariants f = fox_cyclic_invariants(k.delta, n);
    const CoverHomology c = cover_homology(k.pres, cyclic_table(exps, n), CoverKind::cyclic, Budget{}, false);
    const bool agree = f.betti == c.h1.free_rank() && f.torsion_order == c.h1.torsion_order();
    std::cout << "n=" << n << "  formula (betti " << f.betti << ", torsion " << to_string(f.torsion_order)
              << ")  RS " << c.h1.to_string() << (agree ? "" : "  MISMATCH") << '\n';
    if (!agree) status = kFailure;
  }
  return status;
}

int cmd_stratify(const std::string& knot, std::uint32_t p) {
  const Prepared k = prepare(knot);
  std::vector<RootInfo> roots;
  try {
    roots = roots_at(k, p);
  } catch (const std::domain_error& e) {
    std::cout << k.rec.name << " p=" << p << ": " << e.what() << '\n';
    return kFailure;
  }
  int status = kOk;
  for (const RootInfo& r : roots) {
    const AffineRep rep = build_rep(k.pres, p, r.factor);
    const HironakaResult h = hironaka_betti(k.pres, rep, k.delta);
    std::cout << "root " << r.factor.to_string() << ": betti " << h.betti << " (cyclic " << h.betti_cyclic
              << ", r " << h.r << ", " << h.evaluated << " Galois orbits, max corank " << h.max_corank << ")\n";
    const FiberedVerdict fv = fibered_shortcut_check(k.rec.fibered, k.rec.genus, h, rep.field_order());
    if (fv.applicable)
      std::cout << "  fibered bound " << fv.bound << (fv.ok() ? " holds" : " FAILS") << '\n';
    if (!fv.ok()) status = kFailure;
  }
  return status;
}

int cmd_bounds(const std::string& knot) {
  const Prepared k = prepare(knot);
  const BoundReport r = bound_report(k.rec, k.delta);
  std::cout << to_json(r).dump(2) << '\n';
  return r.ok() ? kOk : kFailure;
}

int cmd_table(RunConfig config, const std::string& diff_file) {
  for (const auto& name : config.knots)
    if (!KnotTable::shipped().contains(name)) throw UsageError("unknown knot '" + name + "'");
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<TableCell> cells = compute_table(config);
  std::cout << render(cells, config.format);
  int status = kOk;
  for (const TableCell& c : cells) {
    if (!c.error.empty()) status = kFailure;
    for (const RootResult& r : c.roots)
      if (!r.ok()) status = kFailure;
  }
  if (!diff_file.empty()) {
    const Golden golden = load_golden(diff_file);
    for (const CellDiff& d : diff_against_golden(cells, golden)) {
      const char* tag = "";
      switch (d.status) {
        case CellDiff::Status::match: tag = "match"; break;
        case CellDiff::Status::mismatch: tag = "MISMATCH"; status = kFailure; break;
        case CellDiff::Status::skipped: tag = "skipped"; break;
        case CellDiff::Status::not_asserted: tag = "info"; break;
      }
      std::cerr << "diff " << d.knot << " p=" << d.p << ": " << tag << (d.detail.empty() ? "" : " ") << d.detail
                << '\n';
    }
  }
  return status;
}

int cmd_minimal(const std::vector<std::string>& knots, std::size_t cap) {
  for (const auto& k : knots) {
    const MinimalReport m = minimal_report(resolve_knot(k), cap);
    std::cout << m.line << '\n';
  }
  return kOk;
}

int cmd_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };
  const Prepared fig8 = prepare("4_1");
  const Prepared trefoil = prepare("3_1");
  check(fig8.delta.to_string() == "t^2 - 3*t + 1", "Alexander polynomial of 4_1");
  check(trefoil.delta.to_string() == "t^2 - t + 1", "Alexander polynomial of 3_1");
  check(render_modp(trefoil.delta, 3) == "((t + 1)^2, 3)", "3_1 modulo 3");
  const auto roots = roots_at(fig8, 11);
  bool rep_ok = !roots.empty();
  for (const RootInfo& r : roots) {
    const RepReport v = verify_rep(build_rep(fig8.pres, 11, r.factor), fig8.pres);
    rep_ok = rep_ok && v.ok() && v.image_order == 55;
  }
  check(rep_ok, "4_1 representations at p = 11 have image order 55");
  const CyclicInvariants c = fox_cyclic_invariants(fig8.delta, 3);
  check(c.betti == 1 && c.torsion_order == 16, "4_1 threefold cyclic cover");
  check(minimal_report(trefoil.rec, 4).line == "3_1, 3: Yes, ((t + 1)^2, 3)", "3_1 minimal cover line");
  return failures == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite metabelian covers of knot complements"};
  app.require_subcommand(1);

  std::string knot;
  std::optional<std::uint32_t> mod;
  std::string format = "paper-table";
  std::size_t budget = Budget{}.max_degree;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial and its reductions");
  alex->add_option("knot", knot, "knot name or PD code")->required();
  alex->add_option("--mod", mod, "prime modulus");
  alex->add_option("--format", format, "text or json");

  std::uint32_t prime = 0;
  auto* rep = app.add_subcommand("rep", "metabelian representations at a prime");
  rep->add_option("knot", knot)->required();
  rep->add_option("--mod", prime)->required();

  auto* cover = app.add_subcommand("cover", "homology of the covers at a prime");
  cover->add_option("knot", knot)->required();
  cover->add_option("--mod", prime)->required();
  cover->add_option("--budget", budget, "largest cover degree");

  std::size_t max_n = 10;
  auto* cyclic = app.add_subcommand("cyclic", "cyclic covers by formula and by rewriting");
  cyclic->add_option("knot", knot)->required();
  cyclic->add_option("-n,--max-n", max_n);

  auto* strat = app.add_subcommand("stratify", "betti numbers through twisted Jacobian ranks");
  strat->add_option("knot", knot)->required();
  strat->add_option("--mod", prime)->required();

  auto* bounds = app.add_subcommand("bounds", "index bounds and the good prime");
  bounds->add_option("knot", knot)->required();

  RunConfig config;
  std::string diff_file;
  std::vector<std::string> table_knot_list;
  bool no_peripheral = false;
  auto* table = app.add_subcommand("table", "reproduce the homology table");
  table->add_option("--knots", table_knot_list)->delimiter(',');
  table->add_option("--primes", config.primes)->delimiter(',');
  table->add_option("--budget", budget);
  table->add_option("--format", format, "json, csv or paper-table");
  table->add_option("--diff", diff_file, "golden file to compare against");
  table->add_option("--workers", config.workers);
  table->add_option("--seed", config.seed);
  table->add_flag("--no-peripheral", no_peripheral);

  std::vector<std::string> minimal_knots;
  std::size_t cap = 8;
  auto* minimal = app.add_subcommand("minimal", "minimal degree of a non-cyclic cover");
  minimal->add_option("knots", minimal_knots)->required();
  minimal->add_option("--cap", cap);

  auto* self = app.add_subcommand("selftest", "quick consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (mod && *mod < 2) throw UsageError("--mod must be a prime");
    if (*alex) return cmd_alexander(knot, mod, format == "json" ? "json" : "text");
    if (*rep) return cmd_rep(knot, prime);
    if (*cover) return cmd_cover(knot, prime, budget);
    if (*cyclic) return cmd_cyclic(knot, max_n);
    if (*strat) return cmd_stratify(knot, prime);
    if (*bounds) return cmd_bounds(knot);
    if (*table) {
      config.knots = table_knot_list;
      config.budget.max_degree = budget;
      config.peripheral = !no_peripheral;
      try {
        config.format = parse_format(format);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return cmd_table(config, diff_file);
    }
    if (*minimal) {
      if (cap > 10) throw UsageError("cap above 10 is not supported");
      return cmd_minimal(minimal_knots, cap);
    }
    if (*self) return cmd_selftest();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
