#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metacov/integer.hpp"

namespace metacov {

// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, d_1 >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Accepts any list of cyclic orders; zeros add to the free rank and units are dropped.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders);

  // Reads "[0^4, 2^2]", "[0,3^2,5]", "[0^{11},9,11,31^2]" and "[]".
  static AbelianGroup parse(std::string_view text);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  Integer torsion_order() const;
  bool is_torsion_free() const { return torsion_.empty(); }

  // Prime-power cyclic factors with multiplicities, ordered by prime then exponent.
  std::vector<std::pair<Integer, std::size_t>> elementary_divisors() const;

  // Bracket notation over elementary divisors, e.g. "[0^9, 2^4, 7]".
  std::string to_string() const;

  bool operator==(const AbelianGroup& o) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace metacov
