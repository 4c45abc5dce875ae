#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metacov/fox.hpp"
#include "metacov/integer.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/laurent.hpp"

namespace metacov {

struct Theorem1Bounds {
  Integer regular;             // 4^(2c^2 - c)
  Integer irregular;           // 4^(c^2 - 2c)
  Integer abstract_regular;    // 2^(4c^2)
  Integer abstract_irregular;  // 2^(2c^2)
};

Theorem1Bounds theorem1_bounds(std::size_t crossing_count);

struct GoodPrime {
  std::uint32_t p = 0;
  Integer window_low, window_high;  // [4^(c-1), 2 * 4^(c-1) - 2]
  Integer first_window_prime;
  bool below_window = false;        // p <= every prime of the window
  Integer sample_prime;             // smallest prime >= 4^(c-2)
  std::size_t sample_terms = 0;     // nonzero coefficients of Delta mod sample_prime
  bool sample_ok = false;
};

GoodPrime good_prime(const LaurentPoly& delta, std::size_t crossing_count);

struct Lemma31Result {
  Integer max_coefficient;
  Integer bound;  // 4^(n-1)
  bool ok = false;
};

// Throws std::invalid_argument unless entries lie in {0, 1, t, t-1}, each of
// 1, t, t-1 occurs at most once per row and no row is zero.
Lemma31Result lemma31_bound_check(const LaurentMatrix& m);
LaurentMatrix random_lemma31_matrix(std::size_t n, std::mt19937_64& rng);

struct BoundEntry {
  std::string source;
  Integer value;
};

std::vector<BoundEntry> family_bounds(const FamilySpec& family);
BoundEntry fibered_genus_bound(int genus);                 // 2^(2g)
BoundEntry fibered_crossing_bound(std::size_t crossings);  // 2^c
BoundEntry degree_bound(int degree);                       // 2^(2n^2)
BoundEntry large_prime_bound(int degree);                  // (2 * 4^(d-1) - 2)^d

struct IndexWitness {
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::uint64_t n = 0;
  Integer index;          // p^d
  Integer regular_index;  // n p^d
};

// Smallest p^d over nonzero roots of Delta mod p, ties broken by smaller p.
std::optional<IndexWitness> best_witness(const LaurentPoly& delta, const std::vector<std::uint32_t>& primes);
std::optional<IndexWitness> witness_at(const LaurentPoly& delta, std::uint32_t p);

struct BoundReport {
  std::string knot;
  std::size_t crossing_count = 0;
  Theorem1Bounds theorem1;
  GoodPrime good;
  std::optional<IndexWitness> good_witness;
  std::optional<IndexWitness> best;  // over the primes up to 13
  std::vector<BoundEntry> special;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

BoundReport bound_report(const KnotRecord& rec, const LaurentPoly& delta);
nlohmann::json to_json(const BoundReport& r);

}  // namespace metacov
