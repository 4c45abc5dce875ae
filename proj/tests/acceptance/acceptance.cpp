// Acceptance checks. Each criterion prints exactly one PASS/FAIL line on
// stdout; per-item diagnostics go to stderr.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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

constexpr double kAlexanderSeconds = 1.0;
constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kCellSeconds = 60.0;
constexpr double kTableSeconds = 15 * 60.0;
constexpr double kMinimalSeconds = 10 * 60.0;
constexpr std::size_t kCoverBudget = 3000;
constexpr std::size_t kMinimalCap = 8;
constexpr std::size_t kLemmaTrials = 1000;
constexpr std::size_t kMaxCyclicN = 10;
const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13};

const std::map<std::string, std::vector<std::uint32_t>> kTableCells = {
    {"3_1", {2, 3, 5, 7, 13}}, {"4_1", {2, 3, 5, 11}}, {"5_1", {2, 5, 11}}, {"5_2", {3, 5, 7, 11, 13}},
    {"6_1", {3, 5, 7}},        {"6_2", {2, 5}},        {"6_3", {2, 3}}};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      std::cerr << "  FAIL " << what << '\n';
    }
  }
  void note(const std::string& what) { std::cerr << "  " << what << '\n'; }
  Outcome outcome(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks_ - failures_ << "/" << checks_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    return {failures_ == 0 && checks_ > 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

GroupPresentation simplified(const std::string& name) { return simplify(wirtinger(builtin_knot(name))); }

std::vector<RootInfo> roots_or_empty(const GroupPresentation& s, std::uint32_t p) {
  try {
    return roots_of_delta_modp(alexander_modp(s, p).delta);
  } catch (const std::domain_error&) {
    return {};
  }
}

// The cells of criterion 3, computed once per process.
struct TableRun {
  std::vector<TableCell> cells;
  std::vector<double> cell_seconds;
  double total_seconds = 0;
};

const TableRun& table_run() {
  static const TableRun run = [] {
    RunConfig config;
    config.budget.max_degree = kCoverBudget;
    config.strat.max_cyclic_degree = 1000;
    config.strat.max_evaluations = 100000;
    TableRun r;
    const auto start = Clock::now();
    for (const auto& [knot, primes] : kTableCells) {
      const KnotRecord& rec = KnotTable::shipped().get(knot);
      for (std::uint32_t p : primes) {
        const auto t0 = Clock::now();
        r.cells.push_back(compute_cell(rec, p, config));
        r.cell_seconds.push_back(seconds_since(t0));
      }
    }
    r.total_seconds = seconds_since(start);
    return r;
  }();
  return run;
}

std::string cell_name(const TableCell& c) { return c.knot + " p=" + std::to_string(c.p); }

// Criterion 1
Outcome alexander_and_factorizations() {
  Checker ck;
  const auto start = Clock::now();
  const LaurentPoly d41 = alexander_poly(wirtinger(builtin_knot("4_1")));
  const LaurentPoly d31 = alexander_poly(wirtinger(builtin_knot("3_1")));
  const double elapsed = seconds_since(start);
  ck.expect(associates(d41, LaurentPoly::from_ints({1, -3, 1})), "4_1: got " + d41.to_string());
  ck.expect(associates(d31, LaurentPoly::from_ints({1, -1, 1})), "3_1: got " + d31.to_string());
  ck.expect(elapsed < kAlexanderSeconds, "runtime " + fmt_seconds(elapsed));

  const Golden golden = load_golden(data_directory() / "golden.json");
  std::size_t matched = 0;
  for (const GoldenMinimal& m : golden.minimal) {
    // "K, d: Yes, (f1, p1), (f2, p2)" -> the factorization list after the verdict
    const auto verdict_end = m.line.find(", ", m.line.find(':'));
    const std::string published = m.line.substr(verdict_end + 2);
    std::vector<std::string> ours;
    std::size_t pos = 0;
    const LaurentPoly delta = alexander_poly(wirtinger(builtin_knot(m.knot)));
    while ((pos = published.find(", ", pos)) != std::string::npos) {
      std::size_t end = pos + 2;
      while (end < published.size() && std::isdigit(static_cast<unsigned char>(published[end]))) ++end;
      if (end < published.size() && published[end] != ')') {
        pos += 2;
        continue;
      }
      const std::uint32_t p = static_cast<std::uint32_t>(std::stoul(published.substr(pos + 2, end - pos - 2)));
      ours.push_back(render_modp(delta, p));
      pos = end;
    }
    std::string joined;
    for (const std::string& s : ours) joined += (joined.empty() ? "" : ", ") + s;
    const bool ok = joined == published;
    if (ok) ++matched;
    ck.expect(ok, m.knot + ": published " + published + ", computed " + joined);
    if (!ok)
      for (const std::string& other : KnotTable::shipped().names()) {
        if (other == m.knot) continue;
        const LaurentPoly od = alexander_poly(wirtinger(builtin_knot(other)));
        std::string alt;
        for (std::size_t i = 0, start = 0; i < ours.size(); ++i) {
          const std::size_t comma = ours[i].rfind(", ");
          const auto p = static_cast<std::uint32_t>(std::stoul(ours[i].substr(comma + 2)));
          alt += (start++ ? ", " : "") + render_modp(od, p);
        }
        if (alt == published) ck.note("published " + m.knot + " factorizations match " + other);
      }
  }
  return ck.outcome(std::to_string(matched) + "/" + std::to_string(golden.minimal.size()) +
                    " factorization entries verbatim, Alexander polynomials in " + fmt_seconds(elapsed));
}

// Criterion 2
Outcome figure_eight_worked_example() {
  Checker ck;
  const auto start = Clock::now();
  const GroupPresentation w = wirtinger(builtin_knot("4_1"));
  std::set<std::uint32_t> root_values;
  const auto roots = roots_or_empty(simplify(w), 11);
  for (const RootInfo& r : roots)
    if (r.degree == 1) root_values.insert((11 - r.factor.coeff(0)) % 11);
  ck.expect(root_values == std::set<std::uint32_t>{5, 9}, "roots of Delta mod 11");

  // Fiber presentation <t, x, y | t x t^-1 = x y x, t y t^-1 = y x>.
  GroupPresentation fiber;
  fiber.num_generators = 3;
  fiber.relators = {{1, 2, -1, -2, -3, -2}, {1, 3, -1, -2, -3}};
  const PolyModP factor(11, {6, 1});
  const auto field = make_field(11, factor);
  const FiniteField& f = *field;
  const AffineRep target(field, {1, 0, 0}, {f.zero(), f.from_int(1), f.from_int(3)});
  const RepReport target_report = verify_rep(target, fiber);
  ck.expect(target_report.relators_ok, "t -> 5z, x -> z+1, y -> z+3 satisfies the fiber relators");

  const AffineRep built = build_rep(fiber, 11, factor);
  bool conjugate = false;
  for (std::uint32_t a = 1; a < 11 && !conjugate; ++a)
    for (std::uint32_t b = 0; b < 11 && !conjugate; ++b)
      conjugate = built.conjugated({f.from_int(a), f.from_int(b)}).translations() == target.translations();
  ck.expect(conjugate, "computed fiber representation is conjugate to the worked example");

  std::uint64_t order = 0;
  for (const RootInfo& r : roots) {
    const RepReport rep = verify_rep(build_rep(w, 11, r.factor), w);
    ck.expect(rep.ok(), "Wirtinger representation at " + r.factor.to_string() + " verifies");
    ck.expect(rep.image_order == 55, "image order " + std::to_string(rep.image_order));
    order = rep.image_order;
  }
  const double elapsed = seconds_since(start);
  ck.expect(elapsed < kWorkedExampleSeconds, "runtime " + fmt_seconds(elapsed));
  return ck.outcome("image order " + std::to_string(order) + " in " + fmt_seconds(elapsed));
}

// Criterion 3
Outcome homology_table() {
  Checker ck;
  const TableRun& run = table_run();
  const Golden golden = load_golden(data_directory() / "golden.json");
  const std::vector<CellDiff> diffs = diff_against_golden(run.cells, golden);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < run.cells.size(); ++i) {
    const TableCell& c = run.cells[i];
    const GoldenCell* g = golden.find(c.knot, c.p);
    ck.expect(g && g->reproducible, cell_name(c) + " is marked reproducible in the golden file");
    const auto it = std::find_if(diffs.begin(), diffs.end(),
                                 [&](const CellDiff& d) { return d.knot == c.knot && d.p == c.p; });
    const bool ok = it != diffs.end() && it->status == CellDiff::Status::match;
    if (ok) ++matched;
    ck.expect(ok, cell_name(c) + ": " + (it == diffs.end() ? "no golden cell" : it->detail));
    ck.expect(run.cell_seconds[i] < kCellSeconds, cell_name(c) + " took " + fmt_seconds(run.cell_seconds[i]));
    for (const RootResult& r : c.roots) ck.expect(!r.skipped, cell_name(c) + " root " + r.factor + " skipped");
  }
  ck.expect(run.total_seconds < kTableSeconds, "table total " + fmt_seconds(run.total_seconds));
  return ck.outcome(std::to_string(matched) + "/" + std::to_string(run.cells.size()) + " cells match, total " +
                    fmt_seconds(run.total_seconds));
}

// Criterion 4
Outcome hironaka_agreement() {
  Checker ck;
  std::size_t compared = 0;
  for (const TableCell& c : table_run().cells)
    for (const RootResult& r : c.roots) {
      if (r.skipped) continue;
      ck.expect(r.hironaka.has_value(), cell_name(c) + " root " + r.factor + ": stratification not computed");
      if (!r.hironaka) continue;
      ++compared;
      ck.expect(r.hironaka->betti == r.kernel_h1.free_rank(),
                cell_name(c) + " root " + r.factor + ": stratification " + std::to_string(r.hironaka->betti) +
                    " vs SNF " + std::to_string(r.kernel_h1.free_rank()));
    }
  return ck.outcome(std::to_string(compared) + " covers compared");
}

// Criterion 5
Outcome sandwich_and_boundary() {
  Checker ck;
  std::size_t covers = 0;
  for (const TableCell& c : table_run().cells)
    for (const RootResult& r : c.roots) {
      if (r.skipped) continue;
      ++covers;
      const std::string id = cell_name(c) + " root " + r.factor;
      ck.expect(r.theorem3.ok(), id + ": " + std::to_string(r.theorem3.lower) + " <= " +
                                     std::to_string(r.theorem3.beta) + " <= " + std::to_string(r.theorem3.upper));
      const std::uint64_t q = r.cover_degree / r.n;
      ck.expect(r.boundary == q, id + ": boundary " + std::to_string(r.boundary) + " vs p^d " + std::to_string(q));
    }
  return ck.outcome(std::to_string(covers) + " covers");
}

// Criterion 6
Outcome fox_cyclic_formulas() {
  Checker ck;
  const Budget budget{5000, 40'000'000};
  for (const std::string& name : KnotTable::shipped().names()) {
    const GroupPresentation s = simplified(name);
    const LaurentPoly delta = alexander_poly(s);
    const auto ab = abelianization_map(s);
    for (std::size_t n = 1; n <= kMaxCyclicN; ++n) {
      const AbelianGroup h = cover_homology(s, cyclic_table(ab, n), CoverKind::cyclic, budget, false).h1;
      const CyclicInvariants fox = fox_cyclic_invariants(delta, n);
      ck.expect(h.free_rank() == fox.betti && h.torsion_order() == fox.torsion_order,
                name + " n=" + std::to_string(n) + ": RS " + h.to_string() + ", formula betti " +
                    std::to_string(fox.betti) + " torsion " + to_string(fox.torsion_order));
    }
  }
  const GroupPresentation s = simplified("4_1");
  const AbelianGroup h3 = cover_homology(s, cyclic_table(abelianization_map(s), 3), CoverKind::cyclic, budget, false).h1;
  ck.expect(h3 == AbelianGroup::parse("[0, 4^2]") && fox_cyclic_invariants(alexander_poly(s), 3).torsion_order == 16,
            "4_1 n=3: " + h3.to_string());
  return ck.outcome("corpus x n <= " + std::to_string(kMaxCyclicN));
}

// Criterion 7
Outcome torsion_ratio_verdicts() {
  Checker ck;
  RunConfig config;
  config.budget.max_degree = kCoverBudget;
  config.peripheral = false;
  const KnotRecord& fig8 = KnotTable::shipped().get("4_1");
  for (std::uint32_t p : kPrimes) {
    const TableCell c = compute_cell(fig8, p, config);
    for (const RootResult& r : c.roots) {
      if (r.skipped) continue;
      ck.expect(r.torsion == TorsionVerdict::holds, cell_name(c) + " root " + r.factor + ": " + to_string(r.torsion));
    }
  }
  const TableCell c = compute_cell(KnotTable::shipped().get("5_2"), 3, config);
  for (const RootResult& r : c.roots)
    ck.expect(r.torsion == TorsionVerdict::fails, cell_name(c) + " root " + r.factor + ": " + to_string(r.torsion) +
                                                      " (" + r.kernel_h1.to_string() + " vs " +
                                                      r.cyclic_h1.to_string() + ")");
  return ck.outcome();
}

// Criterion 8
Outcome minimal_degrees() {
  Checker ck;
  const Golden golden = load_golden(data_directory() / "golden.json");
  const auto start = Clock::now();
  std::size_t matched = 0;
  for (const GoldenMinimal& m : golden.minimal) {
    const MinimalReport r = minimal_report(KnotTable::shipped().get(m.knot), kMinimalCap);
    auto head = [](const std::string& line) { return line.substr(0, line.find(',', line.find(':'))); };
    const bool ok = head(r.line) == head(m.line);
    if (ok) ++matched;
    ck.expect(ok, m.knot + ": published '" + head(m.line) + "', computed '" + head(r.line) + "'");
    ck.note(r.line + "  (" + fmt_seconds(r.seconds) + ")");
    if (!ok) {
      const std::string tail = m.line.substr(m.line.find(','));
      for (const std::string& other : KnotTable::shipped().names()) {
        if (other == m.knot || other == "unknot") continue;
        const MinimalReport o = minimal_report(KnotTable::shipped().get(other), kMinimalCap);
        if (o.line.substr(o.line.find(',')) == tail) ck.note("published " + m.knot + " line is reproduced verbatim by " + other);
      }
    }
  }
  const double elapsed = seconds_since(start);
  ck.expect(elapsed < kMinimalSeconds, "total " + fmt_seconds(elapsed));
  return ck.outcome(std::to_string(matched) + "/" + std::to_string(golden.minimal.size()) + " knots in " +
                    fmt_seconds(elapsed));
}

// Criterion 9
Outcome property_suites() {
  Checker ck;
  std::mt19937_64 rng(7);
  std::size_t violations = 0;
  for (std::size_t i = 0; i < kLemmaTrials; ++i) {
    const Lemma31Result r = lemma31_bound_check(random_lemma31_matrix(1 + i % 7, rng));
    if (!r.ok) ++violations;
  }
  ck.expect(violations == 0, std::to_string(violations) + " determinant bound violations");

  std::size_t reps = 0;
  for (const std::string& name : KnotTable::shipped().names()) {
    const KnotDiagram d = builtin_knot(name);
    const GroupPresentation w = wirtinger(d);
    const GroupPresentation s = simplify(w);
    const PropsReport props = check_props(alexander_poly(w), std::max<std::size_t>(d.crossing_count(), 1));
    ck.expect(props.ok(), name + ": Alexander polynomial properties");
    for (std::uint32_t p : kPrimes) {
      const CongruenceReport cong = check_congruence(w, p);
      ck.expect(cong.ok, name + " p=" + std::to_string(p) + ": congruence" +
                             (cong.mismatches.empty() ? "" : " " + cong.mismatches.front()));
      for (const RootInfo& r : roots_or_empty(s, p)) {
        const RepReport rep = verify_rep(build_rep(w, p, r.factor), w);
        ++reps;
        ck.expect(rep.ok(), name + " p=" + std::to_string(p) + " " + r.factor.to_string() + ": representation " +
                                (rep.failed_relator.empty() ? "" : "fails " + rep.failed_relator));
      }
    }
  }
  return ck.outcome(std::to_string(kLemmaTrials) + " random matrices, " + std::to_string(reps) + " representations");
}

// Criterion 10
Outcome index_bounds() {
  Checker ck;
  for (const std::string& name : KnotTable::shipped().names()) {
    if (name == "unknot") continue;
    const KnotRecord& rec = KnotTable::shipped().get(name);
    const BoundReport r = bound_report(rec, alexander_poly(wirtinger(rec.diagram)));
    ck.expect(r.ok(), name + ": " + (r.violations.empty() ? "" : r.violations.front()));
  }
  const KnotRecord& fig8 = KnotTable::shipped().get("4_1");
  const auto best = best_witness(alexander_poly(wirtinger(fig8.diagram)), kPrimes);
  const BoundEntry fibered = fibered_genus_bound(fig8.genus.value_or(-1));
  ck.expect(best && best->index == fibered.value && fibered.value == 4,
            "4_1 best index " + (best ? to_string(best->index) : std::string("none")) + " vs 2^(2g) " +
                to_string(fibered.value));
  return ck.outcome("4_1 attains 2^(2g) = 4");
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Alexander polynomials and mod-p factorizations", alexander_and_factorizations},
      {2, "figure-eight at p = 11", figure_eight_worked_example},
      {3, "homology table cells", homology_table},
      {4, "stratification betti = SNF free rank", hironaka_agreement},
      {5, "betti sandwich and boundary count", sandwich_and_boundary},
      {6, "cyclic cover closed forms", fox_cyclic_formulas},
      {7, "torsion ratio verdicts", torsion_ratio_verdicts},
      {8, "minimal non-cyclic degrees", minimal_degrees},
      {9, "property suites", property_suites},
      {10, "index bounds", index_bounds},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    std::cerr << "criterion " << c.id << ": " << c.title << '\n';
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.summary << ")"
              << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
