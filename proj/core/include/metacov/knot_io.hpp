#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metacov/presentation.hpp"

namespace metacov {

// Oriented knot diagram in PD form. Labels are renumbered 1..2n along the
// orientation, starting at the incoming under-edge of the first crossing, so
// each crossing (a, b, c, d) has c = a + 1 (mod 2n).
struct KnotDiagram {
  std::string name;
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;  // +1 when the over-strand runs d -> b

  std::size_t crossing_count() const { return crossings.size(); }
  int writhe() const;
};

KnotDiagram diagram_from_crossings(const std::vector<std::array<long, 4>>& raw, std::string name = {});
// Accepts "PD[X(1,4,2,5), ...]" (round or square brackets on X) or a JSON list of 4-tuples.
KnotDiagram parse_pd(std::string_view text);

struct FamilyTag {
  std::string kind;  // "twist", "pretzel" or "torus"
  std::vector<long> params;
};

struct KnotRecord {
  std::string name;
  KnotDiagram diagram;
  std::optional<bool> fibered;
  std::optional<int> genus;
  std::vector<FamilyTag> families;
};

class KnotTable {
 public:
  static KnotTable load(const std::filesystem::path& file);
  // Table named by METACOV_KNOT_TABLE, or the shipped data/knots.json.
  static const KnotTable& shipped();

  bool contains(const std::string& name) const { return records_.count(name) > 0; }
  const KnotRecord& get(const std::string& name) const;
  std::vector<std::string> names() const;  // Rolfsen order

 private:
  std::map<std::string, KnotRecord> records_;
};

KnotDiagram builtin_knot(const std::string& name);
std::filesystem::path data_directory();

GroupPresentation wirtinger(const KnotDiagram& diagram);
std::vector<std::size_t> over_arcs(const KnotDiagram& diagram);  // j(i) for each relator i
Word longitude_word(const KnotDiagram& diagram);
// Removes one generator by a conjugation relator and one redundant relator.
GroupPresentation simplify(const GroupPresentation& pres);

}  // namespace metacov
