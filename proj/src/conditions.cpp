#include "d4fs/conditions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace d4fs {

HighestWeight HighestWeight::fundamental(int i) {
  if (i < 0 || i > 4) throw std::out_of_range("fundamental weight index must be 0..4");
  HighestWeight w;
  w.k[static_cast<std::size_t>(i)] = 1;
  return w;
}

HighestWeight HighestWeight::parse(const std::string& text) {
  HighestWeight w;
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 5) throw std::invalid_argument("weight needs exactly 5 entries: " + text);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight entry '" + item + "'");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("bad weight entry '" + item + "'");
    w.k[n++] = v;
  }
  if (n != 5) throw std::invalid_argument("weight needs exactly 5 entries: " + text);
  return w;
}

std::string HighestWeight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s;
}

std::vector<HighestWeight> weights_up_to_level(int max_level) {
  std::vector<HighestWeight> out;
  HighestWeight w;
  for (w.k[0] = 0; w.k[0] <= max_level; ++w.k[0])
    for (w.k[1] = 0; w.k[1] <= max_level; ++w.k[1])
      for (w.k[2] = 0; 2 * w.k[2] <= max_level; ++w.k[2])
        for (w.k[3] = 0; w.k[3] <= max_level; ++w.k[3])
          for (w.k[4] = 0; w.k[4] <= max_level; ++w.k[4])
            if (w.level() <= max_level) out.push_back(w);
  return out;
}

const char* table_name(Table t) noexcept {
  switch (t) {
    case Table::dc: return "dc";
    case Table::ic: return "ic";
    case Table::bound: return "bound";
  }
  return "?";
}

std::string roman(int id) {
  static const char* const names[] = {"-", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
  if (id < 0 || id > 10) throw std::out_of_range("row id");
  return names[id];
}

namespace {

using C = Color;

constexpr SlotTerm a(C c) { return {Slot::a, c}; }
constexpr SlotTerm b(C c) { return {Slot::b, c}; }

ConditionRow dc(int id, std::vector<SlotTerm> terms) {
  return {Table::dc, id, std::move(terms), 1, {}};
}

ConditionRow ic(int id, std::vector<SlotTerm> terms, std::array<int, 5> coeffs) {
  return {Table::ic, id, std::move(terms), 0, coeffs};
}

const std::vector<ConditionRow>& dc_table() {
  static const std::vector<ConditionRow> rows = {
      dc(1, {b(C::c2), a(C::c2b), a(C::c3b), a(C::c4b), a(C::c4), a(C::c3)}),
      dc(2, {b(C::c2), a(C::c3b), a(C::c4b), a(C::c4), a(C::c3), a(C::c2)}),
      dc(3, {b(C::c3), b(C::c2), a(C::c2b), a(C::c3b), a(C::c4b), a(C::c4)}),
      dc(4, {b(C::c3), b(C::c2), a(C::c2b), a(C::c4b), a(C::c4), a(C::c3)}),
      dc(5, {b(C::c4), b(C::c3), b(C::c2), a(C::c2b), a(C::c3b), a(C::c4)}),
      dc(6, {b(C::c4b), b(C::c3), b(C::c2), a(C::c2b), a(C::c3b), a(C::c4b)}),
      dc(7, {b(C::c4b), b(C::c4), b(C::c3), b(C::c2), a(C::c2b), a(C::c3b)}),
      dc(8, {b(C::c3b), b(C::c4b), b(C::c4), b(C::c2), a(C::c2b), a(C::c3b)}),
      dc(9, {b(C::c3b), b(C::c4b), b(C::c4), b(C::c3), b(C::c2), a(C::c2b)}),
      dc(10, {b(C::c2b), b(C::c3b), b(C::c4b), b(C::c4), b(C::c3), a(C::c2b)}),
  };
  return rows;
}

const std::vector<ConditionRow>& ic_table() {
  static const std::vector<ConditionRow> rows = {
      ic(1, {b(C::c2)}, {1, 0, 0, 0, 0}),
      ic(2, {b(C::c3), b(C::c2)}, {1, 0, 1, 0, 0}),
      ic(3, {b(C::c4), b(C::c3), b(C::c2)}, {1, 0, 1, 1, 0}),
      ic(4, {b(C::c4b), b(C::c3), b(C::c2)}, {1, 0, 1, 0, 1}),
      ic(5, {b(C::c4b), b(C::c4), b(C::c3), b(C::c2)}, {1, 0, 1, 1, 1}),
      ic(6, {b(C::c3b), b(C::c4b), b(C::c4), b(C::c2)}, {1, 0, 1, 1, 1}),
      ic(7, {b(C::c3b), b(C::c4b), b(C::c4), b(C::c3), b(C::c2)}, {1, 0, 2, 1, 1}),
      ic(8, {b(C::c2b), b(C::c3b), b(C::c4b), b(C::c4), b(C::c3)}, {1, 0, 2, 1, 1}),
  };
  return rows;
}

int row_sum(const ConditionRow& row, const ColorCounts& a_counts, const ColorCounts& b_counts) noexcept {
  int s = 0;
  for (const SlotTerm& t : row.terms) s += (t.slot == Slot::a ? a_counts : b_counts)[index(t.color)];
  return s;
}

}  // namespace

int ConditionRow::capacity(const HighestWeight& w) const noexcept {
  int c = 0;
  for (std::size_t i = 0; i < 5; ++i) c += weight_coeffs[i] * w.k[i];
  return c;
}

int ConditionRow::sum(const FrequencyProfile& p) const noexcept { return row_sum(*this, p.a, p.b); }

std::span<const ConditionRow> dc_rows() noexcept { return dc_table(); }
std::span<const ConditionRow> ic_rows() noexcept { return ic_table(); }

Verdict satisfies_dc(const Monomial& m, int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  Verdict v;
  for (int j : nonzero_windows(m)) {
    const FrequencyProfile p = window_profile(m, j);
    for (const ConditionRow& row : dc_table())
      if (row.sum(p) > row.capacity(k)) v.violations.push_back({Table::dc, row.id, j});
  }
  v.satisfied = v.violations.empty();
  return v;
}

bool dc_holds(const Monomial& m, int k) noexcept {
  const auto& runs = m.runs();
  // Runs are sorted by degree, so each degree's counts form one contiguous block.
  ColorCounts prev{}, cur{};
  int prev_degree = 0;
  bool have_prev = false;
  auto check = [k](const ColorCounts& a_counts, const ColorCounts& b_counts) {
    for (const ConditionRow& row : dc_table())
      if (row_sum(row, a_counts, b_counts) > k) return false;
    return true;
  };
  const ColorCounts zero{};
  std::size_t i = 0;
  while (i < runs.size()) {
    const int d = runs[i].var.degree;
    cur = zero;
    for (; i < runs.size() && runs[i].var.degree == d; ++i) cur[index(runs[i].var.color)] += runs[i].multiplicity;
    // Window -d has a = cur and b = the counts at degree d-1.
    if (have_prev && prev_degree == d - 1) {
      if (!check(cur, prev)) return false;
    } else {
      if (have_prev && !check(zero, prev)) return false;
      if (!check(cur, zero)) return false;
    }
    prev = cur;
    prev_degree = d;
    have_prev = true;
  }
  if (have_prev && !check(zero, prev)) return false;
  return true;
}

bool ic_holds(const ColorCounts& degree_minus_one, const HighestWeight& w) noexcept {
  const ColorCounts zero{};
  for (const ConditionRow& row : ic_table())
    if (row_sum(row, zero, degree_minus_one) > row.capacity(w)) return false;
  return true;
}

Verdict satisfies_ic(const Monomial& m, const HighestWeight& w) {
  if (!m.empty() && m.max_degree() >= 0)
    throw std::invalid_argument("initial conditions need all degrees <= -1");
  Verdict v;
  const FrequencyProfile p = window_profile(m, 0);
  for (const ConditionRow& row : ic_table())
    if (row.sum(p) > row.capacity(w)) v.violations.push_back({Table::ic, row.id, 0});
  v.satisfied = v.violations.empty();
  return v;
}

Monomial ghost_monomial(const HighestWeight& w) {
  const auto& k = w.k;
  return Monomial::from_runs({{{C::c2b, 0}, k[1]},
                              {{C::c3b, 0}, k[2]},
                              {{C::c4b, 0}, k[3]},
                              {{C::c4, 0}, k[4]},
                              {{C::c3, 0}, k[2]},
                              {{C::c2, 0}, k[1]}});
}

bool admissible(const Monomial& m, const HighestWeight& w) {
  if (!m.empty() && m.max_degree() >= 0)
    throw std::invalid_argument("admissibility needs all degrees <= -1");
  return dc_holds(m, w.level()) && ic_holds(m.counts_at(-1), w);
}

}  // namespace d4fs
