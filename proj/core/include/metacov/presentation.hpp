#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metacov/abelian_group.hpp"
#include "metacov/integer.hpp"

namespace metacov {

// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }
inline bool is_inverse_letter(Letter l) { return l < 0; }
inline Letter make_letter(std::size_t generator, bool inverse = false) {
  const Letter l = static_cast<Letter>(generator + 1);
  return inverse ? -l : l;
}

Word inverse(const Word& w);
Word free_reduce(const Word& w);
Word concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w);

struct GroupPresentation {
  std::size_t num_generators = 0;
  std::vector<Word> relators;
  std::size_t meridian_index = 0;
  std::optional<Word> longitude;
  // Per-relator crossing sign (+1/-1) when the presentation comes from a diagram.
  std::vector<int> crossing_signs;

  // Throws std::invalid_argument on out-of-range letters.
  void validate() const;
};

// Exponent-sum matrix of the relators (rows) against generators (columns).
std::vector<std::vector<std::int64_t>> exponent_matrix(const GroupPresentation& pres);
AbelianGroup abelianization(const GroupPresentation& pres);
// Homomorphism H1 -> Z as per-generator images, normalized so the meridian
// maps to +1. Throws std::domain_error if H1 is not infinite cyclic.
std::vector<std::int64_t> abelianization_map(const GroupPresentation& pres);
std::int64_t exponent_sum(const Word& w, const std::vector<std::int64_t>& images);

}  // namespace metacov
