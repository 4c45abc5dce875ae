#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metacov/covers.hpp"
#include "metacov/presentation.hpp"

namespace metacov {

struct SubgroupRecord {
  std::size_t index = 0;
  CosetTable table;
  bool is_cyclic_cover = false;
  std::size_t class_id = 0;    // position in enumeration order
  std::size_t class_size = 0;  // number of conjugate subgroups
};

struct LowIndexOptions {
  std::size_t cap = 8;  // refuse larger max_index
};

// One record per conjugacy class of subgroups of index <= max_index.
std::vector<SubgroupRecord> low_index_subgroups(const GroupPresentation& pres, std::size_t max_index,
                                                const LowIndexOptions& options = {});

// Visits classes of index exactly `index`; the visitor returns false to stop.
void for_each_subgroup_of_index(const GroupPresentation& pres, std::size_t index,
                                const std::function<bool(const SubgroupRecord&)>& visit);

bool is_cyclic_cover(const CosetTable& table);

// Number of conjugates of the point stabilizer of coset 0.
std::size_t conjugacy_class_size(const CosetTable& table);

struct MinimalDegree {
  std::optional<std::size_t> degree;  // empty: none up to cap
  std::size_t cap = 0;
};

MinimalDegree minimal_noncyclic_degree(const GroupPresentation& pres, std::size_t cap);

// Report line "3_1, 3: Yes, ((t + 1)^2, 3)".
std::string minimal_line(const std::string& knot, const MinimalDegree& md, bool matches,
                         const std::vector<std::string>& factorizations);

}  // namespace metacov
