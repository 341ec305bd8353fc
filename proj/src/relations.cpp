#include "d4fs/relations.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "d4fs/enumeration.hpp"

namespace d4fs {

ColorPolynomial ColorPolynomial::term(const ColorCounts& exponents, BigInt coefficient) {
  ColorPolynomial p;
  p.add(exponents, coefficient);
  return p;
}

int ColorPolynomial::degree() const noexcept {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;
  return d;
}

void ColorPolynomial::add(const ColorCounts& exponents, const BigInt& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const char* operator_name(Operator op) noexcept {
  switch (op) {
    case Operator::E: return "E";
    case Operator::A: return "A";
    case Operator::B: return "B";
  }
  return "?";
}

const DerivationRule& DerivationRule::of(Operator op) {
  auto make = [](Operator o, std::initializer_list<std::pair<Color, Color>> edges) {
    DerivationRule r{o, {}};
    for (auto [from, to] : edges) r.image[index(from)] = to;
    return r;
  };
  static const DerivationRule e = make(Operator::E, {{Color::c2, Color::c3}, {Color::c3b, Color::c2b}});
  static const DerivationRule a = make(Operator::A, {{Color::c3, Color::c4}, {Color::c4b, Color::c3b}});
  static const DerivationRule b = make(Operator::B, {{Color::c3, Color::c4b}, {Color::c4, Color::c3b}});
  switch (op) {
    case Operator::E: return e;
    case Operator::A: return a;
    case Operator::B: return b;
  }
  throw std::invalid_argument("unknown operator");
}

ColorPolynomial apply_derivation(const DerivationRule& rule, const ColorPolynomial& p) {
  ColorPolynomial out;
  for (const auto& [exps, coeff] : p.terms()) {
    for (std::size_t c = 0; c < kNumColors; ++c) {
      if (exps[c] == 0 || !rule.image[c]) continue;
      ColorCounts next = exps;
      --next[c];
      ++next[index(*rule.image[c])];
      out.add(next, coeff * exps[c]);
    }
  }
  return out;
}

int LinearForm::evaluate(const FrequencyProfile& params) const noexcept {
  int s = 0;
  for (const SlotTerm& t : vars) s += (t.slot == Slot::a ? params.a : params.b)[index(t.color)];
  return s;
}

ColorCounts RelationRecipe::base_exponents(const FrequencyProfile& params) const noexcept {
  ColorCounts e{};
  for (const auto& [color, form] : base) e[index(color)] += form.evaluate(params);
  return e;
}

namespace {

using C = Color;
using Op = Operator;

constexpr SlotTerm a(C c) { return {Slot::a, c}; }
constexpr SlotTerm b(C c) { return {Slot::b, c}; }

LinearForm f(std::initializer_list<SlotTerm> vars) { return {std::vector<SlotTerm>(vars)}; }

const std::vector<RelationRecipe>& dc_recipe_table() {
  static const std::vector<RelationRecipe> recipes = {
      {Table::dc, 1,
       {{C::c3b, f({a(C::c2b), a(C::c3b)})}, {C::c4, f({a(C::c4)})}, {C::c2, f({b(C::c2), a(C::c4b), a(C::c3)})}},
       {{Op::E, f({a(C::c2b), a(C::c4b), a(C::c3)})}, {Op::B, f({a(C::c4b)})}}},
      {Table::dc, 2,
       {{C::c4, f({a(C::c3b), a(C::c4)})}, {C::c3, f({a(C::c4b)})}, {C::c2, f({b(C::c2), a(C::c3), a(C::c2)})}},
       {{Op::B, f({a(C::c4b), a(C::c3b)})}, {Op::E, f({a(C::c3)})}}},
      {Table::dc, 3,
       {{C::c4, f({a(C::c4), a(C::c2b), a(C::c3b)})}, {C::c3, f({b(C::c3), a(C::c4b)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({a(C::c2b), a(C::c3b), a(C::c4b)})}, {Op::E, f({a(C::c2b)})}}},
      {Table::dc, 4,
       {{C::c3b, f({a(C::c2b)})}, {C::c4b, f({a(C::c4b)})}, {C::c2, f({b(C::c3), b(C::c2), a(C::c3), a(C::c4)})}},
       {{Op::E, f({b(C::c3), a(C::c2b), a(C::c4), a(C::c3)})}, {Op::A, f({a(C::c4)})}}},
      {Table::dc, 5,
       {{C::c4, f({b(C::c4), a(C::c2b), a(C::c3b), a(C::c4)})}, {C::c3, f({b(C::c3)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({a(C::c2b), a(C::c3b)})}, {Op::E, f({a(C::c2b)})}}},
      {Table::dc, 6,
       {{C::c4b, f({b(C::c4b), a(C::c2b), a(C::c3b), a(C::c4b)})}, {C::c3, f({b(C::c3)})}, {C::c2, f({b(C::c2)})}},
       {{Op::A, f({a(C::c2b), a(C::c3b)})}, {Op::E, f({a(C::c2b)})}}},
      {Table::dc, 7,
       {{C::c4, f({b(C::c4), a(C::c2b), a(C::c3b)})}, {C::c3, f({b(C::c3), b(C::c4b)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({b(C::c4b), a(C::c2b), a(C::c3b)})}, {Op::E, f({a(C::c2b)})}}},
      {Table::dc, 8,
       {{C::c4, f({b(C::c3b), b(C::c4), a(C::c2b), a(C::c3b)})}, {C::c3, f({b(C::c4b)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({b(C::c4b), b(C::c3b), a(C::c2b), a(C::c3b)})}, {Op::E, f({a(C::c2b)})}}},
      {Table::dc, 9,
       {{C::c4, f({b(C::c4)})}, {C::c3b, f({b(C::c3b), a(C::c2b)})}, {C::c2, f({b(C::c4b), b(C::c3), b(C::c2)})}},
       {{Op::E, f({b(C::c4b), b(C::c3), a(C::c2b)})}, {Op::B, f({b(C::c4b)})}}},
      {Table::dc, 10,
       {{C::c3b, f({b(C::c2b), b(C::c3b), a(C::c2b)})}, {C::c4, f({b(C::c4)})}, {C::c2, f({b(C::c4b), b(C::c3)})}},
       {{Op::E, f({b(C::c2b), b(C::c4b), b(C::c3), a(C::c2b)})}, {Op::B, f({b(C::c4b)})}}},
  };
  return recipes;
}

const std::vector<RelationRecipe>& ic_recipe_table() {
  static const std::vector<RelationRecipe> recipes = {
      {Table::ic, 5,
       {{C::c4, f({b(C::c4)})}, {C::c3, f({b(C::c4b), b(C::c3)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({b(C::c4b)})}}},
      {Table::ic, 6,
       {{C::c4, f({b(C::c3b), b(C::c4)})}, {C::c3, f({b(C::c4b)})}, {C::c2, f({b(C::c2)})}},
       {{Op::B, f({b(C::c4b), b(C::c3b)})}}},
  };
  return recipes;
}

bool has_opposite_pair(const ColorCounts& e) noexcept {
  for (Color c : kColorsAscending)
    if (e[index(c)] > 0 && e[index(opposite(c))] > 0) return true;
  return false;
}

int total(const ColorCounts& c) noexcept {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

}  // namespace

std::span<const RelationRecipe> dc_recipes() noexcept { return dc_recipe_table(); }

const RelationRecipe& dc_recipe(int condition) {
  if (condition < 1 || condition > 10) throw std::out_of_range("DC condition must be 1..10");
  return dc_recipe_table()[static_cast<std::size_t>(condition - 1)];
}

const RelationRecipe& ic_recipe(int condition) {
  if (condition != 5 && condition != 6) throw std::out_of_range("IC relation recipes exist for rows 5 and 6");
  return ic_recipe_table()[static_cast<std::size_t>(condition - 5)];
}

ColorPolynomial apply_recipe(const RelationRecipe& recipe, const FrequencyProfile& params) {
  ColorPolynomial p = ColorPolynomial::term(recipe.base_exponents(params));
  for (const auto& [op, form] : recipe.word) {
    const DerivationRule& rule = DerivationRule::of(op);
    for (int n = form.evaluate(params); n > 0; --n) p = apply_derivation(rule, p);
  }
  return p;
}

ColorPolynomial derive_relation(const RelationRecipe& recipe, const FrequencyProfile& params, int k) {
  if (recipe.table != Table::dc) throw std::invalid_argument("derive_relation expects a DC recipe");
  const ConditionRow& row = dc_rows()[static_cast<std::size_t>(recipe.condition - 1)];
  FrequencyProfile support;
  for (const SlotTerm& t : row.terms)
    (t.slot == Slot::a ? support.a : support.b)[index(t.color)] = 1;
  for (std::size_t c = 0; c < kNumColors; ++c)
    if ((params.a[c] && !support.a[c]) || (params.b[c] && !support.b[c]) || params.a[c] < 0 || params.b[c] < 0)
      throw std::invalid_argument("parameters outside the condition's terms");
  if (row.sum(params) != k + 1) throw std::invalid_argument("parameters do not satisfy the critical equality");

  const ColorCounts base = recipe.base_exponents(params);
  if (total(base) != k + 1) throw RelationError("recipe base has the wrong degree");
  if (has_opposite_pair(base)) throw RelationError("recipe base contains an opposite color pair");
  ColorPolynomial p = apply_recipe(recipe, params);
  if (p.is_zero()) throw RelationError("operator word annihilates the base");
  return p;
}

MinimalTerm minimal_monomial(const ColorPolynomial& p, int j, int b_total, int a_total) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no minimal monomial");
  if (b_total < 0 || a_total < 0 || b_total + a_total != p.degree())
    throw std::invalid_argument("shape does not match the polynomial degree");

  std::optional<Monomial> best;
  BigInt coefficient = 0;
  int attaining = 0;
  for (const auto& [exps, coeff] : p.terms()) {
    ColorCounts lower{};
    bool term_attains = false;
    BigInt term_sum = 0;
    // Enumerates how many copies of each color sit at degree -j-1.
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
      if (c == kNumColors) {
        if (left != 0) return;
        std::vector<Run> runs;
        for (std::size_t i = 0; i < kNumColors; ++i) {
          if (lower[i]) runs.push_back({{color_at(i), -j - 1}, lower[i]});
          if (exps[i] - lower[i]) runs.push_back({{color_at(i), -j}, exps[i] - lower[i]});
        }
        Monomial m = Monomial::from_runs(std::move(runs));
        BigInt mult = 1;
        for (std::size_t i = 0; i < kNumColors; ++i) mult *= binomial(exps[i], lower[i]);
        if (!best || m < *best) {
          best = std::move(m);
          coefficient = 0;
          attaining = 0;
          term_attains = true;
          term_sum = coeff * mult;
        } else if (m == *best) {
          if (!term_attains) term_sum = 0;
          term_attains = true;
          term_sum += coeff * mult;
        }
        return;
      }
      for (int x = std::min(left, exps[c]); x >= 0; --x) {
        lower[c] = x;
        rec(c + 1, left - x);
      }
      lower[c] = 0;
    };
    rec(0, b_total);
    if (term_attains) {
      coefficient += term_sum;
      ++attaining;
    }
  }
  return {*best, coefficient, attaining};
}

namespace {

RelationRecord verify_instance(int condition, const FrequencyProfile& params, int k) {
  RelationRecord rec;
  rec.condition = condition;
  rec.params = params;
  rec.leading_term = realize(params);
  try {
    const ColorPolynomial p = derive_relation(dc_recipe(condition), params, k);
    int b_total = 0;
    for (int x : params.b) b_total += x;
    const MinimalTerm mt = minimal_monomial(p, params.window, b_total, k + 1 - b_total);
    rec.minimal = mt.monomial;
    rec.net_coefficient = mt.net_coefficient;
    rec.attaining_terms = mt.attaining_terms;
    rec.passed = mt.monomial == rec.leading_term && !mt.net_coefficient.is_zero();
    if (!rec.passed) rec.error = mt.monomial == rec.leading_term ? "net coefficient vanishes" : "minimal monomial differs";
  } catch (const RelationError& e) {
    rec.error = e.what();
  }
  return rec;
}

RelationReport verify_all(int k, bool parallel) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<std::pair<int, FrequencyProfile>> instances;
  for (const ConditionRow& row : dc_rows())
    for (const FrequencyProfile& p : critical_solutions(row, k, 1)) instances.emplace_back(row.id, p);

  RelationReport report;
  report.level = k;
  report.records.resize(instances.size());
  const long long n = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < n; ++i) {
    const auto& [cond, params] = instances[static_cast<std::size_t>(i)];
    report.records[static_cast<std::size_t>(i)] = verify_instance(cond, params, k);
  }
  std::set<Monomial> distinct;
  for (const RelationRecord& r : report.records) {
    if (!r.passed) ++report.failures;
    distinct.insert(r.leading_term);
  }
  report.distinct_leading_terms = distinct.size();
  return report;
}

}  // namespace

RelationReport verify_leading_terms(int k) { return verify_all(k, true); }
RelationReport verify_leading_terms_serial(int k) { return verify_all(k, false); }

bool known_to_vanish_on_fundamental(int i, const ColorCounts& counts) {
  // Colors x_c with x_c(-1) v_{Lambda_i} = 0.
  static const std::array<std::vector<Color>, 5> kill = {{
      {},
      {Color::c2b, Color::c3b, Color::c4b, Color::c4, Color::c3, Color::c2},
      {Color::c2},
      {Color::c2, Color::c3, Color::c4b},
      {Color::c2, Color::c3, Color::c4},
  }};
  if (i < 0 || i > 4) throw std::out_of_range("fundamental weight index must be 0..4");
  for (Color c : kill[static_cast<std::size_t>(i)])
    if (counts[index(c)] > 0) return true;
  const int n = total(counts);
  if (n >= 3) return true;  // three factors always contain a non-opposite pair
  if (n == 2) {
    for (Color c : kColorsAscending)
      if (counts[index(c)] == 1 && counts[index(opposite(c))] == 1) return false;
    return true;
  }
  return false;
}

bool annihilates_highest_weight_vector(const ColorCounts& counts, const HighestWeight& w) {
  std::vector<int> slots;
  for (int i = 0; i < 5; ++i) slots.insert(slots.end(), static_cast<std::size_t>(w.k[static_cast<std::size_t>(i)]), i);

  // Nonvanishing pieces a single slot can take: empty, one factor, or an opposite pair.
  std::vector<ColorCounts> pieces;
  pieces.push_back({});
  for (Color c : kColorsAscending) {
    ColorCounts one{};
    one[index(c)] = 1;
    pieces.push_back(one);
  }
  for (Color c : {Color::c2, Color::c3, Color::c4}) {
    ColorCounts pair{};
    pair[index(c)] = 1;
    pair[index(opposite(c))] = 1;
    pieces.push_back(pair);
  }

  std::set<std::pair<std::size_t, ColorCounts>> dead;
  std::function<bool(std::size_t, const ColorCounts&)> survives = [&](std::size_t s, const ColorCounts& left) {
    if (total(left) == 0) return true;
    if (s == slots.size()) return false;
    if (dead.count({s, left})) return false;
    for (const ColorCounts& piece : pieces) {
      bool fits = true;
      for (std::size_t c = 0; c < kNumColors; ++c) fits = fits && piece[c] <= left[c];
      if (!fits || known_to_vanish_on_fundamental(slots[s], piece)) continue;
      ColorCounts rest = left;
      for (std::size_t c = 0; c < kNumColors; ++c) rest[c] -= piece[c];
      if (survives(s + 1, rest)) return true;
    }
    dead.insert({s, left});
    return false;
  };
  return !survives(0, counts);
}

const char* ic_method_name(IcMethod m) noexcept {
  switch (m) {
    case IcMethod::annihilation: return "annihilation";
    case IcMethod::relation: return "relation";
    case IcMethod::delegated: return "delegated";
  }
  return "?";
}

namespace {

Monomial degree_minus_one(const ColorCounts& c) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < kNumColors; ++i)
    if (c[i]) runs.push_back({{color_at(i), -1}, c[i]});
  return Monomial::from_runs(std::move(runs));
}

void check_relation(IcRecord& rec, const ColorPolynomial& p, int length) {
  if (p.is_zero()) {
    rec.detail = "relation vanishes identically";
    return;
  }
  rec.minimal = minimal_monomial(p, 0, length, 0);
  if (rec.minimal->monomial != rec.monomial) {
    rec.detail = "minimal term differs";
  } else if (rec.minimal->net_coefficient.is_zero()) {
    rec.detail = "net coefficient vanishes";
  } else {
    rec.passed = true;
  }
}

}  // namespace

IcReport verify_ic_leading_terms(const HighestWeight& w) {
  if (w.level() < 1) throw std::invalid_argument("weight must have positive level");
  IcReport report;
  report.weight = w;
  HighestWeight without_l1 = w;
  without_l1.k[1] = 0;
  const int sub_level = without_l1.level();

  for (const ConditionRow& row : ic_rows()) {
    const int cap = row.capacity(w);
    for (const FrequencyProfile& params : critical_solutions(row, cap, 0)) {
      IcRecord rec;
      rec.row = row.id;
      rec.monomial = realize(params);
      if (row.id <= 4) {
        rec.method = IcMethod::annihilation;
        rec.passed = annihilates_highest_weight_vector(params.b, w);
        if (!rec.passed) rec.detail = "a nonvanishing tensor distribution exists";
      } else if (row.id <= 6) {
        rec.method = IcMethod::relation;
        const RelationRecipe& recipe = ic_recipe(row.id);
        const ColorCounts base = recipe.base_exponents(params);
        rec.base = degree_minus_one(base);
        if (!annihilates_highest_weight_vector(base, w)) {
          rec.detail = "relation base does not vanish";
        } else {
          check_relation(rec, apply_recipe(recipe, params), cap + 1);
        }
      } else {
        // Every factor kills v_{Lambda_1}, so m acts on the Lambda' = Lambda - k1 Lambda_1 tensor factor,
        // where the profile solves DC (ix)/(x) at level(Lambda') with a_c2b = 0.
        rec.method = IcMethod::delegated;
        const RelationRecipe& recipe = dc_recipe(row.id == 7 ? 9 : 10);
        rec.base = degree_minus_one(recipe.base_exponents(params));
        try {
          check_relation(rec, derive_relation(recipe, params, sub_level), sub_level + 1);
        } catch (const std::exception& e) {
          rec.detail = e.what();
        }
      }
      if (!rec.passed) ++report.failures;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace d4fs
