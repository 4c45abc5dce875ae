#include "metacov/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "metacov/fox.hpp"

namespace metacov {

namespace {

const std::vector<std::uint32_t> kWitnessPrimes = {2, 3, 5, 7, 11, 13};

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string root_status(const RootResult& r) {
  if (r.skipped) return "skipped";
  return r.ok() ? "ok" : "FAIL";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "paper-table" || name == "paper") return OutputFormat::paper_table;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv, paper-table)");
}

void RunConfig::validate() const {
  if (primes.empty()) throw std::invalid_argument("prime range is empty");
  for (std::uint32_t p : primes)
    if (!is_small_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (budget.max_degree == 0) throw std::invalid_argument("budget must be positive");
  if (workers == 0) throw std::invalid_argument("worker count must be positive");
}

const std::vector<std::string>& table_knots() {
  static const std::vector<std::string> knots = {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"};
  return knots;
}

bool RootResult::ok() const {
  if (skipped) return rep.ok();
  bool good = rep.ok() && fox_agrees && theorem3.ok() && boundary == static_cast<std::size_t>(cover_degree / n);
  if (hironaka) good = good && hironaka->betti == kernel_h1.free_rank();
  if (fibered) good = good && fibered->ok();
  return good;
}

TableCell compute_cell(const KnotRecord& rec, std::uint32_t p, const RunConfig& config) {
  TableCell cell;
  cell.knot = rec.name;
  cell.p = p;
  try {
    const GroupPresentation wirt = wirtinger(rec.diagram);
    const GroupPresentation pres = simplify(wirt);
    const LaurentPoly delta = alexander_poly(pres);
    const ModPAlexander modp = alexander_modp(pres, p);
    std::vector<RootInfo> roots;
    try {
      roots = roots_of_delta_modp(modp.delta);
    } catch (const std::domain_error&) {
      cell.trivial = true;
      return cell;
    }
    const std::vector<std::int64_t> exps = abelianization_map(pres);
    for (const RootInfo& info : roots) {
      const auto start = std::chrono::steady_clock::now();
      RootResult r;
      r.factor = info.factor.to_string();
      r.d = info.degree;
      r.n = info.order;
      const AffineRep rep = build_rep(pres, p, info.factor);
      r.rep = verify_rep(rep, pres);
      const std::uint64_t q = rep.field_order();
      r.cover_degree = r.n * q;
      if (r.cover_degree > config.budget.max_degree) {
        r.skipped = true;
        r.skip_reason = "degree " + std::to_string(r.cover_degree) + " > budget " +
                        std::to_string(config.budget.max_degree);
        cell.roots.push_back(std::move(r));
        continue;
      }
      try {
        const CoverHomology kernel =
            cover_homology(pres, kernel_table(rep), CoverKind::kernel, config.budget, config.peripheral);
        const CoverHomology cyclic =
            cover_homology(pres, cyclic_table(exps, r.n), CoverKind::cyclic, config.budget, false);
        r.kernel_h1 = kernel.h1;
        r.cyclic_h1 = cyclic.h1;
        r.boundary = kernel.boundary_components;
        r.peripheral_computed = kernel.peripheral_computed;
        r.peripheral_rank = kernel.peripheral_rank;
        r.nonperipheral_rank = kernel.nonperipheral_rank;
        r.fox = fox_cyclic_invariants(delta, r.n);
        r.fox_agrees = r.fox.betti == cyclic.h1.free_rank() && r.fox.torsion_order == cyclic.h1.torsion_order();
        r.theorem3 = check_theorem3(kernel.h1.free_rank(), cyclic.h1.free_rank(), q, r.n,
                                    rec.diagram.crossing_count(), cyclic.rs_generators);
        r.torsion = torsion_ratio_check(kernel.h1, cyclic.h1, q);
      } catch (const BudgetExceeded& e) {
        r.skipped = true;
        r.skip_reason = e.what();
        cell.roots.push_back(std::move(r));
        continue;
      }
      try {
        r.hironaka = hironaka_betti(pres, rep, delta, config.strat);
        r.fibered = fibered_shortcut_check(rec.fibered, rec.genus, *r.hironaka, q);
      } catch (const BudgetExceeded&) {
      }
      r.seconds = seconds_since(start);
      cell.roots.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

std::vector<TableCell> compute_table(const RunConfig& config) {
  config.validate();
  const KnotTable& table = KnotTable::shipped();
  const std::vector<std::string>& knots = config.knots.empty() ? table_knots() : config.knots;
  std::vector<std::pair<const KnotRecord*, std::uint32_t>> jobs;
  for (const std::string& k : knots)
    for (std::uint32_t p : config.primes) jobs.emplace_back(&table.get(k), p);

  std::vector<TableCell> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = compute_cell(*jobs[i].first, jobs[i].second, config);
  };
  const std::size_t n = std::min(config.workers, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::json to_json(const TableCell& cell) {
  nlohmann::json j;
  j["knot"] = cell.knot;
  j["p"] = cell.p;
  if (!cell.error.empty()) j["error"] = cell.error;
  j["trivial"] = cell.trivial;
  nlohmann::json roots = nlohmann::json::array();
  for (const RootResult& r : cell.roots) {
    nlohmann::json jr{{"factor", r.factor}, {"d", r.d}, {"n", r.n}, {"degree", r.cover_degree},
                      {"rep_ok", r.rep.ok()}, {"image_order", r.rep.image_order}};
    if (r.skipped) {
      jr["skipped"] = r.skip_reason;
    } else {
      jr["kernel_h1"] = r.kernel_h1.to_string();
      jr["cyclic_h1"] = r.cyclic_h1.to_string();
      jr["boundary_components"] = r.boundary;
      if (r.peripheral_computed)
        jr["peripheral"] = {{"rank", r.peripheral_rank}, {"nonperipheral", r.nonperipheral_rank}};
      jr["fox"] = {{"betti", r.fox.betti}, {"torsion_order", to_string(r.fox.torsion_order)}, {"agrees", r.fox_agrees}};
      jr["theorem3"] = {{"lower", r.theorem3.lower}, {"upper", r.theorem3.upper}, {"upper_r", r.theorem3.upper_r},
                        {"ok", r.theorem3.ok()}};
      jr["torsion_ratio"] = to_string(r.torsion);
      if (r.hironaka) jr["hironaka_betti"] = r.hironaka->betti;
      if (r.fibered && r.fibered->applicable) jr["fibered_bound"] = r.fibered->bound;
      jr["ok"] = r.ok();
    }
    roots.push_back(std::move(jr));
  }
  j["roots"] = roots;
  return j;
}

std::string render(const std::vector<TableCell>& cells, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const TableCell& c : cells) arr.push_back(to_json(c));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "knot,p,factor,d,n,degree,status,kernel_h1,cyclic_h1,boundary,hironaka_betti,torsion_ratio\n";
      for (const TableCell& c : cells) {
        if (!c.error.empty()) {
          os << c.knot << ',' << c.p << ",,,,,error,,,,,\n";
          continue;
        }
        if (c.trivial) {
          os << c.knot << ',' << c.p << ",,,,,trivial,,,,,\n";
          continue;
        }
        for (const RootResult& r : c.roots) {
          os << c.knot << ',' << c.p << ",\"" << r.factor << "\"," << r.d << ',' << r.n << ',' << r.cover_degree << ','
             << root_status(r) << ',';
          if (r.skipped) {
            os << ",,,,\n";
            continue;
          }
          os << '"' << r.kernel_h1.to_string() << "\",\"" << r.cyclic_h1.to_string() << "\"," << r.boundary << ','
             << (r.hironaka ? std::to_string(r.hironaka->betti) : std::string()) << ',' << to_string(r.torsion)
             << '\n';
        }
      }
      break;
    case OutputFormat::paper_table: {
      std::size_t root_width = 22;
      for (const TableCell& c : cells)
        for (const RootResult& r : c.roots) root_width = std::max(root_width, r.factor.size() + 2);
      const int rw = static_cast<int>(root_width);
      os << std::left << std::setw(6) << "knot" << std::setw(4) << "p" << std::setw(rw) << "root"
         << std::setw(34) << "H1(X_rho)" << "H1(X_n)\n";
      for (const TableCell& c : cells) {
        auto head = [&] {
          std::ostringstream h;
          h << std::left << std::setw(6) << c.knot << std::setw(4) << c.p;
          return h.str();
        };
        if (!c.error.empty()) {
          os << head() << "error: " << c.error << '\n';
        } else if (c.trivial) {
          os << head() << "∅\n";
        } else {
          for (const RootResult& r : c.roots) {
            os << head() << std::setw(rw) << r.factor;
            if (r.skipped)
              os << "skipped (" << r.skip_reason << ")\n";
            else
              os << std::setw(34) << r.kernel_h1.to_string() << r.cyclic_h1.to_string()
                 << (r.ok() ? "" : "  [check failed]") << '\n';
          }
        }
      }
      break;
    }
  }
  return os.str();
}

const GoldenCell* Golden::find(const std::string& knot, std::uint32_t p) const {
  for (const GoldenCell& c : cells)
    if (c.knot == knot && c.p == p) return &c;
  return nullptr;
}

Golden load_golden(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open golden file " + file.string());
  const nlohmann::json j = nlohmann::json::parse(in);
  Golden g;
  for (const auto& jc : j.at("cells")) {
    GoldenCell c;
    c.knot = jc.at("knot").get<std::string>();
    c.p = jc.at("p").get<std::uint32_t>();
    c.empty = jc.value("empty", false);
    c.reproducible = jc.value("reproducible", false);
    for (const auto& jr : jc.value("roots", nlohmann::json::array())) {
      GoldenRoot r;
      r.upper_text = jr.at("upper").get<std::string>();
      r.lower_text = jr.at("lower").get<std::string>();
      r.upper = AbelianGroup::parse(r.upper_text);
      r.lower = AbelianGroup::parse(r.lower_text);
      c.roots.push_back(std::move(r));
    }
    g.cells.push_back(std::move(c));
  }
  for (const auto& jm : j.value("minimal", nlohmann::json::array()))
    g.minimal.push_back({jm.at("knot").get<std::string>(), jm.at("line").get<std::string>()});
  return g;
}

std::vector<CellDiff> diff_against_golden(const std::vector<TableCell>& cells, const Golden& golden) {
  std::vector<CellDiff> out;
  for (const TableCell& cell : cells) {
    const GoldenCell* gc = golden.find(cell.knot, cell.p);
    if (!gc) continue;
    CellDiff d{cell.knot, cell.p, CellDiff::Status::match, {}};
    std::ostringstream why;
    if (!cell.error.empty()) {
      d.status = CellDiff::Status::mismatch;
      why << "error: " << cell.error;
    } else if (gc->empty || cell.trivial) {
      if (gc->empty != cell.trivial) {
        d.status = CellDiff::Status::mismatch;
        why << (gc->empty ? "expected no root" : "expected roots, found none");
      }
    } else {
      std::vector<bool> seen(gc->roots.size(), false);
      bool any_skipped = false;
      for (const RootResult& r : cell.roots) {
        if (r.skipped) {
          any_skipped = true;
          continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < gc->roots.size(); ++i)
          if (gc->roots[i].upper == r.kernel_h1 && gc->roots[i].lower == r.cyclic_h1) seen[i] = found = true;
        if (!found) {
          d.status = CellDiff::Status::mismatch;
          why << "root " << r.factor << ": got " << r.kernel_h1.to_string() << " / " << r.cyclic_h1.to_string() << "; ";
        }
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i] && d.status == CellDiff::Status::match) {
          d.status = any_skipped ? CellDiff::Status::skipped : CellDiff::Status::mismatch;
          why << "unmatched " << gc->roots[i].upper_text << " / " << gc->roots[i].lower_text << "; ";
        }
    }
    if (!gc->reproducible) {
      why << (d.status == CellDiff::Status::match ? "agrees" : "differs") << " (not asserted)";
      d.status = CellDiff::Status::not_asserted;
    }
    d.detail = why.str();
    out.push_back(std::move(d));
  }
  return out;
}

MinimalReport minimal_report(const KnotRecord& rec, std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();
  MinimalReport m;
  m.knot = rec.name;
  const GroupPresentation pres = simplify(wirtinger(rec.diagram));
  const LaurentPoly delta = alexander_poly(pres);
  m.md = minimal_noncyclic_degree(pres, cap);
  if (!delta.canonical().is_monomial()) m.best = best_witness(delta, kWitnessPrimes);
  if (m.md.degree) {
    m.matches = m.best && m.best->index == Integer(static_cast<unsigned long>(*m.md.degree));
    std::size_t rest = *m.md.degree;
    for (std::uint32_t p = 2; rest > 1; ++p) {
      if (rest % p != 0) continue;
      while (rest % p == 0) rest /= p;
      m.factorizations.push_back(render_modp(delta, p));
    }
  }
  m.line = minimal_line(m.knot, m.md, m.matches, m.factorizations);
  m.seconds = seconds_since(start);
  return m;
}

}  // namespace metacov
