#include "d4fs/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace d4fs {

namespace {

bool window_ok(const ColorCounts& a_counts, const ColorCounts& b_counts, int k) noexcept {
  FrequencyProfile p;
  p.a = a_counts;
  p.b = b_counts;
  for (const ConditionRow& row : dc_rows())
    if (row.sum(p) > row.capacity(k)) return false;
  return true;
}

int total(const ColorCounts& c) noexcept {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

/// Slab profiles plus the window compatibility relation between consecutive degrees.
struct SlabSystem {
  std::vector<ColorCounts> slabs;           // slabs[0] is the zero profile
  std::vector<int> sizes;
  std::vector<std::vector<int>> below;      // below[p]: q with window (a = p, b = q) admissible
  std::vector<int> top;                     // slabs allowed at degree -1 by IC

  SlabSystem(const HighestWeight& w) : slabs(slab_profiles(w.level())) {
    const int k = w.level();
    const std::size_t n = slabs.size();
    sizes.resize(n);
    below.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      sizes[p] = total(slabs[p]);
      for (std::size_t q = 0; q < n; ++q)
        if (window_ok(slabs[p], slabs[q], k)) below[p].push_back(static_cast<int>(q));
      if (ic_holds(slabs[p], w)) top.push_back(static_cast<int>(p));
    }
  }
};

Monomial monomial_from_path(const SlabSystem& s, const std::vector<int>& path) {
  std::vector<Run> runs;
  for (std::size_t d = path.size(); d-- > 0;) {
    const ColorCounts& c = s.slabs[static_cast<std::size_t>(path[d])];
    for (std::size_t i = 0; i < kNumColors; ++i)
      if (c[i]) runs.push_back({{color_at(i), -static_cast<int>(d) - 1}, c[i]});
  }
  return Monomial::from_runs(std::move(runs));
}

/// path[0..depth) fixed; extends below degree -depth.
template <class Visit>
void descend(const SlabSystem& s, std::vector<int>& path, std::size_t depth, Visit& visit) {
  if (depth == path.size()) {
    visit(monomial_from_path(s, path));
    return;
  }
  for (int q : s.below[static_cast<std::size_t>(path[depth - 1])]) {
    path[depth] = q;
    descend(s, path, depth + 1, visit);
  }
}

void check_depth(int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("depth must be positive");
}

}  // namespace

std::vector<ColorCounts> slab_profiles(int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<ColorCounts> out;
  ColorCounts c{};
  const ColorCounts zero{};
  // Every color occurs in some a-only row sum, so each count is at most k.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == kNumColors) {
      if (window_ok(c, zero, k) && window_ok(zero, c, k)) out.push_back(c);
      return;
    }
    for (c[i] = 0; c[i] <= k; ++c[i]) rec(i + 1);
    c[i] = 0;
  };
  rec(0);
  return out;
}

bool graded_less(const Monomial& x, const Monomial& y) noexcept {
  if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
  return compare(x, y) < 0;
}

void for_each_admissible(const HighestWeight& w, int max_depth,
                         const std::function<void(const Monomial&)>& visit) {
  check_depth(max_depth);
  const SlabSystem s(w);
  std::vector<int> path(static_cast<std::size_t>(max_depth), 0);
  auto v = [&](const Monomial& m) { visit(m); };
  for (int p : s.top) {
    path[0] = p;
    descend(s, path, 1, v);
  }
}

std::vector<Monomial> enumerate_admissible_serial(const HighestWeight& w, int max_depth) {
  std::vector<Monomial> out;
  for_each_admissible(w, max_depth, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<Monomial> enumerate_admissible(const HighestWeight& w, int max_depth) {
  check_depth(max_depth);
  const SlabSystem s(w);
  // One task per first-window profile (slabs at degrees -1 and -2).
  std::vector<std::pair<int, int>> tasks;
  for (int p : s.top) {
    if (max_depth == 1) {
      tasks.emplace_back(p, -1);
    } else {
      for (int q : s.below[static_cast<std::size_t>(p)]) tasks.emplace_back(p, q);
    }
  }
  std::vector<std::vector<Monomial>> parts(tasks.size());
  const long long ntasks = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < ntasks; ++t) {
    std::vector<int> path(static_cast<std::size_t>(max_depth), 0);
    auto& local = parts[static_cast<std::size_t>(t)];
    auto collect = [&](const Monomial& m) { local.push_back(m); };
    path[0] = tasks[static_cast<std::size_t>(t)].first;
    if (max_depth == 1) {
      descend(s, path, 1, collect);
    } else {
      path[1] = tasks[static_cast<std::size_t>(t)].second;
      descend(s, path, 2, collect);
    }
  }
  std::vector<Monomial> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

namespace {

GradedTable graded_dp(const HighestWeight& w, int max_degree, bool parallel) {
  if (max_degree < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const SlabSystem s(w);
  const std::size_t n = s.slabs.size();
  const std::size_t width = static_cast<std::size_t>(max_degree) + 1;
  GradedTable table;
  table.counts.assign(width, 0);
  if (max_degree == 0) {
    table.counts[0] = 1;
    return table;
  }

  // state[p][t]: partial monomials whose lowest processed slab is p, total degree t.
  std::vector<std::vector<BigInt>> state(n, std::vector<BigInt>(width, 0));
  for (int p : s.top)
    if (s.sizes[static_cast<std::size_t>(p)] <= max_degree)
      state[static_cast<std::size_t>(p)][static_cast<std::size_t>(s.sizes[static_cast<std::size_t>(p)])] = 1;

  // Predecessor lists: above[q] = p with q in below[p].
  std::vector<std::vector<int>> above(n);
  for (std::size_t p = 0; p < n; ++p)
    for (int q : s.below[p]) above[static_cast<std::size_t>(q)].push_back(static_cast<int>(p));

  for (int d = 2; d <= max_degree; ++d) {
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(width, 0));
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long qi = 0; qi < nn; ++qi) {
      const std::size_t q = static_cast<std::size_t>(qi);
      const long long add = static_cast<long long>(d) * s.sizes[q];
      if (add > max_degree) continue;
      auto& row = next[q];
      for (int p : above[q]) {
        const auto& src = state[static_cast<std::size_t>(p)];
        for (std::size_t t = 0; t + static_cast<std::size_t>(add) < width; ++t)
          if (!src[t].is_zero()) row[t + static_cast<std::size_t>(add)] += src[t];
      }
    }
    state.swap(next);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t t = 0; t < width; ++t) table.counts[t] += state[p][t];
  return table;
}

}  // namespace

GradedTable graded_dimensions(const HighestWeight& w, int max_degree) { return graded_dp(w, max_degree, true); }

GradedTable graded_dimensions_serial(const HighestWeight& w, int max_degree) {
  return graded_dp(w, max_degree, false);
}

Monomial realize(const FrequencyProfile& exponents) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < kNumColors; ++i) {
    if (exponents.b[i]) runs.push_back({{color_at(i), -exponents.window - 1}, exponents.b[i]});
    if (exponents.a[i]) runs.push_back({{color_at(i), -exponents.window}, exponents.a[i]});
  }
  return Monomial::from_runs(std::move(runs));
}

std::vector<FrequencyProfile> critical_solutions(const ConditionRow& row, int k, int j) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<FrequencyProfile> out;
  FrequencyProfile p;
  p.window = j;
  const std::size_t n = row.terms.size();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    const SlotTerm& t = row.terms[i];
    auto& cell = (t.slot == Slot::a ? p.a : p.b)[index(t.color)];
    if (i + 1 == n) {
      cell = left;
      out.push_back(p);
      cell = 0;
      return;
    }
    for (int x = left; x >= 0; --x) {
      cell = x;
      rec(i + 1, left - x);
    }
    cell = 0;
  };
  rec(0, k + 1);
  return out;
}

std::vector<LeadingTerm> leading_terms(int k, int j) {
  std::map<Monomial, LeadingTerm> seen;
  for (const ConditionRow& row : dc_rows()) {
    for (const FrequencyProfile& p : critical_solutions(row, k, j)) {
      Monomial m = realize(p);
      seen.try_emplace(m, LeadingTerm{row.id, p, m});
    }
  }
  std::vector<LeadingTerm> out;
  out.reserve(seen.size());
  for (auto& [m, lt] : seen) out.push_back(std::move(lt));
  return out;
}

BigInt leading_term_formula(int k) {
  BigInt v = BigInt(k + 2) * (k + 2) * (k + 3) * (k + 3) * (k + 4);
  if (v % 12 != 0) throw std::logic_error("closed form not integral");
  return v / 12;
}

BigInt leading_term_binomial_sum(int k) {
  return binomial(k + 6, 5) + 6 * binomial(k + 5, 5) + 3 * binomial(k + 4, 5);
}

LeadingTermCount count_leading_terms(int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  return {BigInt(leading_terms(k, 1).size()), leading_term_formula(k), leading_term_binomial_sum(k)};
}

WeylDimension weyl_dim_vk(int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  // A3 in epsilon coordinates: positive roots e_i - e_j (i < j), rho = (3,2,1,0),
  // highest weight (k+1) * omega_2 = (k+1, k+1, 0, 0).
  const int lambda[4] = {k + 1, k + 1, 0, 0};
  const int rho[4] = {3, 2, 1, 0};
  BigInt num = 1, den = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      num *= (lambda[i] + rho[i]) - (lambda[j] + rho[j]);
      den *= rho[i] - rho[j];
    }
  if (num % den != 0) throw std::logic_error("Weyl product not integral");
  BigInt closed = BigInt(k + 2) * (k + 3) * (k + 3) * (k + 4);
  if (closed % 12 != 0) throw std::logic_error("closed form not integral");
  return {num / den, closed / 12};
}

std::optional<LeadingTerm> violation_witness(const Monomial& m, int k) {
  const Verdict v = satisfies_dc(m, k);
  if (v.satisfied) return std::nullopt;
  // Prefer a positive window so ordinary monomials get a witness from leading_terms(k, j >= 1).
  auto pick = std::find_if(v.violations.begin(), v.violations.end(), [](const Violation& x) { return x.window >= 1; });
  const Violation& first = pick != v.violations.end() ? *pick : v.violations.front();
  const ConditionRow& row = dc_rows()[static_cast<std::size_t>(first.row - 1)];
  const FrequencyProfile have = window_profile(m, first.window);
  FrequencyProfile take;
  take.window = first.window;
  int left = k + 1;
  for (const SlotTerm& t : row.terms) {
    const int avail = (t.slot == Slot::a ? have.a : have.b)[index(t.color)];
    const int x = std::min(avail, left);
    (t.slot == Slot::a ? take.a : take.b)[index(t.color)] = x;
    left -= x;
  }
  return LeadingTerm{row.id, take, realize(take)};
}

namespace {

class FactorSearch {
 public:
  FactorSearch(const Monomial& m, std::span<const int> levels) : levels_(levels.begin(), levels.end()) {
    top_ = m.max_degree();
    for (int d = m.max_degree(); d >= m.min_degree(); --d) slabs_.push_back(m.counts_at(d));
    const std::size_t parts = levels_.size();
    upper_.assign(parts, ColorCounts{});
    cur_.assign(parts, ColorCounts{});
    // assigned_[i][di] : part i's counts at degree index di
    assigned_.assign(parts, std::vector<ColorCounts>(slabs_.size(), ColorCounts{}));
  }

  std::optional<std::vector<Monomial>> run() {
    if (!degree(0)) return std::nullopt;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      std::vector<Run> runs;
      for (std::size_t di = 0; di < slabs_.size(); ++di)
        for (std::size_t c = 0; c < kNumColors; ++c)
          if (assigned_[i][di][c])
            runs.push_back({{color_at(c), top_ - static_cast<int>(di)}, assigned_[i][di][c]});
      out.push_back(Monomial::from_runs(std::move(runs)));
    }
    return out;
  }

 private:
  bool degree(std::size_t di) {
    if (di == slabs_.size()) return true;
    return color(di, 0);
  }

  bool color(std::size_t di, std::size_t ci) {
    if (ci == kNumColors) {
      auto saved_upper = upper_;
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        assigned_[i][di] = cur_[i];
        upper_[i] = cur_[i];
        cur_[i] = ColorCounts{};
      }
      if (degree(di + 1)) return true;
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        cur_[i] = upper_[i];
        upper_[i] = saved_upper[i];
      }
      return false;
    }
    std::vector<int> key = memo_key(di, ci);
    if (failed_.count(key)) return false;
    if (split(di, ci, 0, slabs_[di][ci])) return true;
    failed_.insert(std::move(key));
    return false;
  }

  /// Distributes `left` copies of color ci among parts pi.. .
  bool split(std::size_t di, std::size_t ci, std::size_t pi, int left) {
    if (pi + 1 == levels_.size() || left == 0) {
      if (left > 0 && !place(pi, ci, left)) return false;
      const bool ok = color(di, ci + 1);
      if (!ok && left > 0) cur_[pi][ci] -= left;
      return ok;
    }
    for (int x = left; x >= 0; --x) {
      if (x > 0 && !place(pi, ci, x)) continue;
      if (split(di, ci, pi + 1, left - x)) return true;
      cur_[pi][ci] -= x;
    }
    return false;
  }

  /// Adds x copies of color ci to part pi at the current degree if both windows touching it stay admissible.
  bool place(std::size_t pi, std::size_t ci, int x) {
    cur_[pi][ci] += x;
    const ColorCounts zero{};
    if (window_ok(upper_[pi], cur_[pi], levels_[pi]) && window_ok(cur_[pi], zero, levels_[pi])) return true;
    cur_[pi][ci] -= x;
    return false;
  }

  std::vector<int> memo_key(std::size_t di, std::size_t ci) const {
    std::vector<int> key{static_cast<int>(di), static_cast<int>(ci)};
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      key.insert(key.end(), upper_[i].begin(), upper_[i].end());
      key.insert(key.end(), cur_[i].begin(), cur_[i].end());
    }
    return key;
  }

  std::vector<int> levels_;
  int top_ = 0;
  std::vector<ColorCounts> slabs_;
  std::vector<ColorCounts> upper_, cur_;
  std::vector<std::vector<ColorCounts>> assigned_;
  std::set<std::vector<int>> failed_;
};

}  // namespace

std::optional<std::vector<Monomial>> find_factorization(const Monomial& m, std::span<const int> levels) {
  for (int l : levels)
    if (l < 0) throw std::invalid_argument("levels must be nonnegative");
  if (m.empty()) return std::vector<Monomial>(levels.size());
  if (levels.empty()) return std::nullopt;
  return FactorSearch(m, levels).run();
}

}  // namespace d4fs
