#ifndef D4FS_CONDITIONS_HPP
#define D4FS_CONDITIONS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "d4fs/monomial.hpp"

namespace d4fs {

/// Lambda = k0 L0 + k1 L1 + k2 L2 + k3 L3 + k4 L4.
struct HighestWeight {
  std::array<int, 5> k{};

  int level() const noexcept { return k[0] + k[1] + 2 * k[2] + k[3] + k[4]; }

  static HighestWeight fundamental(int i);
  /// "k0,k1,k2,k3,k4"
  static HighestWeight parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Every dominant weight with level <= max_level, in lexicographic order of (k0..k4).
std::vector<HighestWeight> weights_up_to_level(int max_level);

enum class Slot { a, b };

struct SlotTerm {
  Slot slot;
  Color color;
  friend bool operator==(const SlotTerm&, const SlotTerm&) = default;
};

enum class Table { dc, ic, bound };

const char* table_name(Table t) noexcept;

/// Lower-case roman numeral for 1..10.
std::string roman(int id);

/// One frequency inequality  sum(terms) <= capacity.
/// DC capacity is level_coeff * k; IC capacity is sum weight_coeffs[i] * k_i.
struct ConditionRow {
  Table table;
  int id;  // 1-based
  std::vector<SlotTerm> terms;
  int level_coeff = 0;
  std::array<int, 5> weight_coeffs{};

  int capacity(int level) const noexcept { return level_coeff * level; }
  int capacity(const HighestWeight& w) const noexcept;
  int sum(const FrequencyProfile& p) const noexcept;
};

/// The ten difference conditions, (i)..(x).
std::span<const ConditionRow> dc_rows() noexcept;
/// The eight initial conditions, (i)..(viii); IC terms all use slot b (degree -1).
std::span<const ConditionRow> ic_rows() noexcept;

struct Violation {
  Table table;
  int row;  // 1-based row id; 0 for Table::bound
  int window;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  bool satisfied = true;
  std::vector<Violation> violations;  // sorted by (window, table, row)
};

/// Evaluates every DC row at every window with a nonzero profile.
Verdict satisfies_dc(const Monomial& m, int k);

/// Same predicate without collecting violations.
bool dc_holds(const Monomial& m, int k) noexcept;

/// IC rows on the degree -1 counts; violations carry window 0.
/// Throws std::invalid_argument if m has a factor of degree >= 0.
Verdict satisfies_ic(const Monomial& m, const HighestWeight& w);

bool ic_holds(const ColorCounts& degree_minus_one, const HighestWeight& w) noexcept;

/// x_2b(0)^k1 x_3b(0)^k2 x_4b(0)^k3 x_4(0)^k4 x_3(0)^k2 x_2(0)^k1.
Monomial ghost_monomial(const HighestWeight& w);

/// DC at level(w) and IC for w.
bool admissible(const Monomial& m, const HighestWeight& w);

}  // namespace d4fs

#endif  // D4FS_CONDITIONS_HPP
