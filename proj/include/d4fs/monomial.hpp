#ifndef D4FS_MONOMIAL_HPP
#define D4FS_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace d4fs {

/// The six colors of D4 with omega = omega_1, stored in ascending order so that
/// the underlying value compares like the color order c2 > c3 > c4 > c4b > c3b > c2b.
enum class Color : std::uint8_t { c2b = 0, c3b = 1, c4b = 2, c4 = 3, c3 = 4, c2 = 5 };

inline constexpr std::size_t kNumColors = 6;

/// All colors from lowest to highest.
inline constexpr std::array<Color, kNumColors> kColorsAscending = {
    Color::c2b, Color::c3b, Color::c4b, Color::c4, Color::c3, Color::c2};

constexpr std::size_t index(Color c) noexcept { return static_cast<std::size_t>(c); }
constexpr Color color_at(std::size_t i) noexcept { return static_cast<Color>(i); }

/// 1 for c2 (the highest color) through 6 for c2b.
constexpr int rank(Color c) noexcept { return 6 - static_cast<int>(c); }

/// c2 <-> c2b, c3 <-> c3b, c4 <-> c4b.
constexpr Color opposite(Color c) noexcept { return static_cast<Color>(5 - static_cast<int>(c)); }

constexpr auto operator<=>(Color a, Color b) noexcept {
  return static_cast<int>(a) <=> static_cast<int>(b);
}

/// Grammar token: "2", "3", "4", "4_", "3_", "2_".
std::string_view color_token(Color c) noexcept;

/// Per-color counts, indexed by index(Color).
using ColorCounts = std::array<int, kNumColors>;

/// A variable x_color(degree).
struct Variable {
  Color color;
  int degree;

  friend constexpr bool operator==(const Variable&, const Variable&) = default;
  friend constexpr std::strong_ordering operator<=>(const Variable& v, const Variable& w) noexcept {
    if (auto c = v.degree <=> w.degree; c != 0) return c;
    return v.color <=> w.color;
  }
};

/// A run of identical variables inside a monomial.
struct Run {
  Variable var;
  int multiplicity;

  friend constexpr bool operator==(const Run&, const Run&) = default;
};

/// Counts of one window j: a at degree -j, b at degree -j-1.
struct FrequencyProfile {
  int window = 0;
  ColorCounts a{};
  ColorCounts b{};

  bool empty() const noexcept;
  friend bool operator==(const FrequencyProfile&, const FrequencyProfile&) = default;
};

/// A finite multiset of variables, stored as runs sorted ascending
/// (greatest variable last). Immutable once built.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Variable> vars);
  Monomial(std::initializer_list<Variable> vars);

  static Monomial from_runs(std::vector<Run> runs);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }

  /// Number of factors counted with multiplicity.
  int length() const noexcept { return length_; }

  /// Signed sum of degrees.
  long long degree_sum() const noexcept;

  /// -degree_sum(): the grading of W(Lambda), positive for ordinary monomials.
  long long total_degree() const noexcept { return -degree_sum(); }

  int multiplicity(Variable v) const noexcept;

  /// Counts per color at one degree.
  ColorCounts counts_at(int degree) const noexcept;

  /// Lowest and highest degree present. Undefined on the empty monomial.
  int min_degree() const noexcept { return runs_.front().var.degree; }
  int max_degree() const noexcept { return runs_.back().var.degree; }

  /// Factors expanded from lowest to greatest.
  std::vector<Variable> variables() const;

  /// True if every factor of `sub` appears in *this at least as often.
  bool contains(const Monomial& sub) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Run> runs_;
  int length_ = 0;
};

/// Lexicographic comparison from the greatest variable down. When one monomial
/// is exhausted with all compared positions equal, the shorter one is smaller.
std::strong_ordering compare(const Monomial& m1, const Monomial& m2) noexcept;

inline std::strong_ordering operator<=>(const Monomial& m1, const Monomial& m2) noexcept {
  return compare(m1, m2);
}

/// Adds t to every degree.
Monomial shift(const Monomial& m, int t);

/// Multiset union.
Monomial multiply(const Monomial& m1, const Monomial& m2);

/// m raised to a nonnegative power.
Monomial power(const Monomial& m, int e);

FrequencyProfile window_profile(const Monomial& m, int j);

/// Every window j whose profile is nonzero, ascending.
std::vector<int> nonzero_windows(const Monomial& m);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses  factor*  with  factor := COLOR "(" INT ")" ("^" UINT)?
Monomial parse_monomial(std::string_view text);

/// Canonical text: lowest variable first, runs collapsed with "^".
std::string format_monomial(const Monomial& m);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace d4fs

#endif  // D4FS_MONOMIAL_HPP
