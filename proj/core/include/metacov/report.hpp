#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metacov/bounds.hpp"
#include "metacov/covers.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/lowindex.hpp"
#include "metacov/stratification.hpp"

namespace metacov {

enum class OutputFormat { json, csv, paper_table };
OutputFormat parse_format(const std::string& name);

struct RunConfig {
  std::vector<std::string> knots;                              // empty: the seven table knots
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  Budget budget;
  StratificationBudget strat;
  OutputFormat format = OutputFormat::paper_table;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool peripheral = true;
  void validate() const;  // throws std::invalid_argument
};

const std::vector<std::string>& table_knots();

// One root of Delta mod p and the covers it determines.
struct RootResult {
  std::string factor;
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t cover_degree = 0;  // n p^d
  bool skipped = false;
  std::string skip_reason;
  RepReport rep;
  AbelianGroup kernel_h1;
  AbelianGroup cyclic_h1;
  std::size_t boundary = 0;
  std::size_t peripheral_rank = 0;
  std::size_t nonperipheral_rank = 0;
  bool peripheral_computed = false;
  CyclicInvariants fox;
  bool fox_agrees = false;
  Theorem3Verdict theorem3;
  TorsionVerdict torsion = TorsionVerdict::both_free;
  std::optional<HironakaResult> hironaka;
  std::optional<FiberedVerdict> fibered;
  double seconds = 0;
  // Every check that was computed passed.
  bool ok() const;
};

struct TableCell {
  std::string knot;
  std::uint32_t p = 2;
  bool trivial = false;  // Delta_p has no nonzero root
  std::string error;
  std::vector<RootResult> roots;
};

TableCell compute_cell(const KnotRecord& rec, std::uint32_t p, const RunConfig& config);

// Cells in (knot, prime) order regardless of the worker count.
std::vector<TableCell> compute_table(const RunConfig& config);

std::string render(const std::vector<TableCell>& cells, OutputFormat format);
nlohmann::json to_json(const TableCell& cell);

struct GoldenRoot {
  AbelianGroup upper, lower;
  std::string upper_text, lower_text;
};

struct GoldenCell {
  std::string knot;
  std::uint32_t p = 2;
  bool empty = false;
  bool reproducible = false;
  std::vector<GoldenRoot> roots;
};

struct GoldenMinimal {
  std::string knot;
  std::string line;
};

struct Golden {
  std::vector<GoldenCell> cells;
  std::vector<GoldenMinimal> minimal;
  const GoldenCell* find(const std::string& knot, std::uint32_t p) const;
};

Golden load_golden(const std::filesystem::path& file);

struct CellDiff {
  std::string knot;
  std::uint32_t p = 2;
  enum class Status { match, mismatch, skipped, not_asserted } status = Status::not_asserted;
  std::string detail;
};

// Compares computed cells with golden cells marked reproducible.
std::vector<CellDiff> diff_against_golden(const std::vector<TableCell>& cells, const Golden& golden);

struct MinimalReport {
  std::string knot;
  MinimalDegree md;
  std::optional<IndexWitness> best;
  bool matches = false;
  std::vector<std::string> factorizations;
  std::string line;
  double seconds = 0;
};

MinimalReport minimal_report(const KnotRecord& rec, std::size_t cap);

}  // namespace metacov
