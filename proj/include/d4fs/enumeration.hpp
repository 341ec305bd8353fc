#ifndef D4FS_ENUMERATION_HPP
#define D4FS_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "d4fs/bigint.hpp"
#include "d4fs/conditions.hpp"
#include "d4fs/monomial.hpp"

namespace d4fs {

/// Count of admissible monomials per total degree 0..max_degree().
struct GradedTable {
  std::vector<BigInt> counts;

  int max_degree() const noexcept { return static_cast<int>(counts.size()) - 1; }
  const BigInt& at(int d) const { return counts.at(static_cast<std::size_t>(d)); }
  friend bool operator==(const GradedTable&, const GradedTable&) = default;
};

/// Per-degree color profiles that satisfy every DC row at level k by themselves,
/// both as the a side and as the b side of a window. Every degree slab of a
/// DC-admissible monomial is one of these.
std::vector<ColorCounts> slab_profiles(int k);

/// All monomials with degrees in [-max_depth, -1] satisfying DC(level) and IC,
/// sorted by ascending total degree, then monomial order. OpenMP-parallel over
/// the first window's profile.
std::vector<Monomial> enumerate_admissible(const HighestWeight& w, int max_depth);

/// Single-threaded reference for enumerate_admissible.
std::vector<Monomial> enumerate_admissible_serial(const HighestWeight& w, int max_depth);

/// Visits every admissible monomial (degrees in [-max_depth, -1]) in search order.
void for_each_admissible(const HighestWeight& w, int max_depth,
                         const std::function<void(const Monomial&)>& visit);

/// Ascending total degree, then monomial order.
bool graded_less(const Monomial& x, const Monomial& y) noexcept;

/// Graded dimensions up to total degree max_degree, by a window transfer DP.
/// OpenMP-parallel over target slab profiles within each layer.
GradedTable graded_dimensions(const HighestWeight& w, int max_degree);
GradedTable graded_dimensions_serial(const HighestWeight& w, int max_degree);

/// A solution of one critical equality, realized on degrees -window-1 and -window.
struct LeadingTerm {
  int condition;               // DC row id 1..10 that produced it first
  FrequencyProfile exponents;  // supported on that row's terms, total k+1
  Monomial monomial;
};

/// Realizes a parameter profile: b counts at degree -j-1, a counts at degree -j.
Monomial realize(const FrequencyProfile& exponents);

/// Every nonnegative solution of  row-sum = k+1  for one DC row at window j.
std::vector<FrequencyProfile> critical_solutions(const ConditionRow& row, int k, int j);

/// Leading terms at level k and window j, deduplicated as multisets and sorted ascending.
std::vector<LeadingTerm> leading_terms(int k, int j);

struct LeadingTermCount {
  BigInt count;
  BigInt formula;
  BigInt binomial_sum;
  bool consistent() const { return count == formula && formula == binomial_sum; }
};

/// (k+2)^2 (k+3)^2 (k+4) / 12
BigInt leading_term_formula(int k);
/// C(k+6,5) + 6 C(k+5,5) + 3 C(k+4,5)
BigInt leading_term_binomial_sum(int k);
LeadingTermCount count_leading_terms(int k);

struct WeylDimension {
  BigInt product;      // Weyl product over the positive roots of A3
  BigInt closed_form;  // (k+2)(k+3)^2(k+4)/12
  bool consistent() const { return product == closed_form; }
};

/// Dimension of the A3 module with highest weight (k+1) times the middle fundamental weight.
WeylDimension weyl_dim_vk(int k);

/// For a DC-violating monomial, a length k+1 submonomial on two adjacent
/// degrees realizing a leading term of the first violated (window, row),
/// taking a window j >= 1 whenever one is violated.
std::optional<LeadingTerm> violation_witness(const Monomial& m, int k);

/// Splits m into levels.size() submonomials, the i-th satisfying DC at levels[i].
/// Memoized over (degree, per-part profiles of the open window).
std::optional<std::vector<Monomial>> find_factorization(const Monomial& m, std::span<const int> levels);

}  // namespace d4fs

#endif  // D4FS_ENUMERATION_HPP
