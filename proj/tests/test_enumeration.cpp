#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "d4fs/enumeration.hpp"
#include "oracle.hpp"

using namespace d4fs;

namespace {

Monomial M(const char* s) { return parse_monomial(s); }
const char* kLevelThree = "3(-1) 3_(-1) 2(-2) 3(-2) 2(-3) 3(-3) 3_(-3) 3(-4)^2";

/// Length k+1, on degrees {-j-1,-j}, every factor in the support of one DC row.
bool oracle_leading_term(const Monomial& m, int k) {
  if (m.length() != k + 1) return false;
  const int top = m.max_degree();
  if (m.min_degree() < top - 1) return false;
  for (const auto& row : oracle::dc_table()) {
    bool inside = true;
    for (const Variable& v : m.variables()) {
      bool found = false;
      for (const oracle::Term& t : row) found = found || (t.color == v.color && (t.lower ? top - 1 : top) == v.degree);
      inside = inside && found;
    }
    if (inside) return true;
  }
  return false;
}

std::set<Monomial> as_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("enumerate_admissible examples") {
  const auto l0 = enumerate_admissible(HighestWeight::fundamental(0), 1);
  CHECK(l0.size() == 8);
  CHECK(l0.front().empty());
  CHECK(l0.back() == M("2_(-1) 2(-1)"));
  const auto l1 = enumerate_admissible(HighestWeight::fundamental(1), 1);
  REQUIRE(l1.size() == 1);
  CHECK(l1.front().empty());
  for (const HighestWeight& w : weights_up_to_level(3)) CHECK(enumerate_admissible(w, 1).front().empty());
}

TEST_CASE("enumerate_admissible matches brute force") {
  for (const auto& k : oracle::weights(2)) {
    const HighestWeight w{k};
    const int lvl = w.level();
    const int depth = lvl <= 1 ? 3 : 2;
    const int max_len = 2 * lvl * depth;
    std::set<Monomial> want;
    for (const Monomial& m : oracle::universe(-depth, -1, std::min(max_len, 8)))
      if (oracle::admissible(m, k)) want.insert(m);
    const auto got = enumerate_admissible(w, depth);
    CHECK(as_set(got) == want);
    CHECK(got.size() == want.size());
  }
}

TEST_CASE("stream order is graded and strictly increasing") {
  const auto s = enumerate_admissible(HighestWeight{{1, 0, 1, 0, 0}}, 3);
  for (std::size_t i = 1; i < s.size(); ++i) {
    CHECK(graded_less(s[i - 1], s[i]));
    CHECK(s[i - 1].total_degree() <= s[i].total_degree());
  }
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (const HighestWeight& w : weights_up_to_level(2)) CHECK(enumerate_admissible(w, 3) == enumerate_admissible_serial(w, 3));
  std::size_t visited = 0;
  for_each_admissible(HighestWeight::fundamental(0), 4, [&](const Monomial&) { ++visited; });
  CHECK(visited == enumerate_admissible(HighestWeight::fundamental(0), 4).size());
}

TEST_CASE("graded_dimensions examples") {
  const GradedTable t = graded_dimensions(HighestWeight::fundamental(0), 2);
  REQUIRE(t.max_degree() == 2);
  CHECK(t.at(0) == 1);
  CHECK(t.at(1) == 6);
  CHECK(t.at(2) == 7);
  const GradedTable u = graded_dimensions(HighestWeight::fundamental(1), 1);
  CHECK(u.at(0) == 1);
  CHECK(u.at(1) == 0);
}

TEST_CASE("graded_dimensions matches brute force, the stream and the ghost predicate") {
  const auto uni = oracle::universe_by_total(4);
  for (const auto& k : oracle::weights(2)) {
    const HighestWeight w{k};
    const int D = 4;
    const GradedTable t = graded_dimensions(w, D);
    std::vector<long long> brute(D + 1, 0), ghost(D + 1, 0), stream(D + 1, 0);
    const Monomial g = ghost_monomial(w);
    for (const Monomial& m : uni) {
      if (oracle::admissible(m, k)) ++brute[static_cast<std::size_t>(m.total_degree())];
      if (oracle::dc(multiply(m, g), w.level())) ++ghost[static_cast<std::size_t>(m.total_degree())];
    }
    for (const Monomial& m : enumerate_admissible(w, D))
      if (m.total_degree() <= D) ++stream[static_cast<std::size_t>(m.total_degree())];
    for (int d = 0; d <= D; ++d) {
      CHECK(t.at(d) == brute[static_cast<std::size_t>(d)]);
      CHECK(t.at(d) == ghost[static_cast<std::size_t>(d)]);
      CHECK(t.at(d) == stream[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("graded_dimensions serial and parallel agree; counts grow past 64 bits") {
  for (const HighestWeight& w : weights_up_to_level(2)) CHECK(graded_dimensions(w, 10) == graded_dimensions_serial(w, 10));
  const GradedTable big = graded_dimensions(HighestWeight{{2, 0, 0, 0, 1}}, 200);
  CHECK(big.at(200) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  for (const BigInt& c : big.counts) CHECK(c >= 0);
}

TEST_CASE("leading term examples") {
  const auto lt = leading_terms(1, 1);
  std::set<Monomial> ms;
  for (const LeadingTerm& t : lt) ms.insert(t.monomial);
  CHECK(ms.count(M("2(-1)^2")) == 1);
  CHECK(ms.count(M("2_(-1) 2(-1)")) == 0);
  CHECK(ms.size() == lt.size());
  const ConditionRow& row2 = dc_rows()[1];
  bool seen = false;
  for (const FrequencyProfile& p : critical_solutions(row2, 1, 1))
    if (p.a[index(Color::c2)] == 2) {
      seen = true;
      CHECK(realize(p) == M("2(-1)^2"));
    }
  CHECK(seen);
}

TEST_CASE("leading terms match the oracle and violate DC at their window") {
  for (int k = 1; k <= 3; ++k) {
    std::set<Monomial> want;
    for (const Monomial& m : oracle::universe(-2, -1, k + 1))
      if (oracle_leading_term(m, k)) want.insert(m);
    std::set<Monomial> got;
    for (const LeadingTerm& t : leading_terms(k, 1)) {
      got.insert(t.monomial);
      CHECK(t.exponents.window == 1);
      CHECK(t.monomial.length() == k + 1);
      const Verdict v = satisfies_dc(t.monomial, k);
      CHECK(std::find(v.violations.begin(), v.violations.end(), Violation{Table::dc, t.condition, 1}) !=
            v.violations.end());
    }
    CHECK(got == want);
  }
}

TEST_CASE("leading term count is window invariant") {
  for (int k = 1; k <= 3; ++k) {
    const std::size_t n = leading_terms(k, 1).size();
    for (int j = 2; j <= 4; ++j) {
      const auto lt = leading_terms(k, j);
      CHECK(lt.size() == n);
      CHECK(lt.front().monomial == shift(leading_terms(k, 1).front().monomial, 1 - j));
    }
  }
}

TEST_CASE("leading term counting") {
  CHECK(count_leading_terms(1).count == 60);
  CHECK(count_leading_terms(2).count == 200);
  for (int k = 0; k <= 8; ++k) {
    const LeadingTermCount c = count_leading_terms(k);
    CHECK(c.consistent());
    const long long closed = (k + 2LL) * (k + 2) * (k + 3) * (k + 3) * (k + 4) / 12;
    CHECK(c.count == closed);
  }
  for (int k = 1; k <= 50; ++k) {
    CHECK(leading_term_binomial_sum(k) == leading_term_formula(k));
    if (k <= 20)
      CHECK(leading_term_binomial_sum(k) ==
            oracle::binom(k + 6, 5) + 6 * oracle::binom(k + 5, 5) + 3 * oracle::binom(k + 4, 5));
  }
  CHECK_THROWS(count_leading_terms(-1));
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim_vk(0).product == 6);
  CHECK(weyl_dim_vk(1).product == 20);
  for (int k = 0; k <= 8; ++k) {
    CHECK(weyl_dim_vk(k).consistent());
    CHECK(count_leading_terms(k).count == (k + 2) * weyl_dim_vk(k).product);
  }
}

TEST_CASE("violation witness examples") {
  auto w = violation_witness(M("3_(-1) 3(-1) 4(-2)"), 1);
  REQUIRE(w);
  CHECK(w->monomial == M("3_(-1) 3(-1)"));
  CHECK(w->condition == 1);
  CHECK_FALSE(violation_witness(M("2_(-1) 2(-1)"), 1));
  w = violation_witness(M("2(-2) 2(-1)"), 1);
  REQUIRE(w);
  CHECK(w->monomial == M("2(-2) 2(-1)"));
  CHECK(w->condition == 2);
  CHECK(w->exponents.b[index(Color::c2)] == 1);
  CHECK(w->exponents.a[index(Color::c2)] == 1);
}

TEST_CASE("witness completeness") {
  for (int k = 1; k <= 2; ++k)
    for (const Monomial& m : oracle::universe(-3, -1, k + 2)) {
      const auto w = violation_witness(m, k);
      CHECK(w.has_value() != oracle::dc(m, k));
      if (w) {
        CHECK(m.contains(w->monomial));
        CHECK(oracle_leading_term(w->monomial, k));
        CHECK(w->exponents.window >= 1);
      }
    }
}

TEST_CASE("factorization examples") {
  const std::vector<int> l12{1, 2}, l11{1, 1}, l3{3};
  CHECK_FALSE(find_factorization(M(kLevelThree), l12));
  CHECK(find_factorization(M(kLevelThree), l3));
  auto f = find_factorization(M("2(-1)^2"), l11);
  REQUIRE(f);
  CHECK((*f)[0] == M("2(-1)"));
  CHECK((*f)[1] == M("2(-1)"));
  f = find_factorization(Monomial{}, l12);
  REQUIRE(f);
  CHECK(f->size() == 2);
  for (const Monomial& p : *f) CHECK(p.empty());
}

TEST_CASE("factorization agrees with brute-force splitting") {
  const std::vector<int> levels{1, 1};
  for (const Monomial& m : oracle::universe(-3, -1, 4)) {
    const std::vector<Variable> f = m.variables();
    bool brute = false;
    for (unsigned mask = 0; mask < (1u << f.size()) && !brute; ++mask) {
      std::vector<Variable> p, q;
      for (std::size_t i = 0; i < f.size(); ++i) ((mask >> i) & 1u ? p : q).push_back(f[i]);
      brute = oracle::dc(Monomial(p), 1) && oracle::dc(Monomial(q), 1);
    }
    const auto got = find_factorization(m, levels);
    CHECK(got.has_value() == brute);
    if (got) {
      CHECK(multiply((*got)[0], (*got)[1]) == m);
      CHECK(dc_holds((*got)[0], 1));
      CHECK(dc_holds((*got)[1], 1));
    }
  }
}
