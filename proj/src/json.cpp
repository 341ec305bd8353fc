#include "d4fs/json.hpp"

#include <cstdint>
#include <sstream>

namespace d4fs {

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json counts_json(const ColorCounts& c) {
  Json j = Json::object();
  for (auto it = kColorsAscending.rbegin(); it != kColorsAscending.rend(); ++it)
    if (c[index(*it)]) j[std::string(color_token(*it))] = c[index(*it)];
  return j;
}

Json profile_json(const FrequencyProfile& p) {
  return {{"window", p.window}, {"a", counts_json(p.a)}, {"b", counts_json(p.b)}};
}

Json weight_json(const HighestWeight& w) { return Json(w.k); }

Json verdict_json(const Verdict& v) {
  Json list = Json::array();
  for (const Violation& x : v.violations) {
    Json e = {{"table", table_name(x.table)}};
    if (x.table != Table::bound) e["row"] = roman(x.row);
    e["window"] = x.window;
    list.push_back(std::move(e));
  }
  return {{"satisfied", v.satisfied}, {"violations", std::move(list)}};
}

namespace {

Json row_json(const ConditionRow& r) {
  Json terms = Json::array();
  for (const SlotTerm& t : r.terms)
    terms.push_back({{"slot", t.slot == Slot::a ? "a" : "b"}, {"color", std::string(color_token(t.color))}});
  Json j = {{"id", roman(r.id)}, {"terms", std::move(terms)}};
  if (r.table == Table::dc)
    j["level_coeff"] = r.level_coeff;
  else
    j["weight_coeffs"] = r.weight_coeffs;
  return j;
}

}  // namespace

Json conditions_json() {
  Json dc = Json::array(), ic = Json::array();
  for (const ConditionRow& r : dc_rows()) dc.push_back(row_json(r));
  for (const ConditionRow& r : ic_rows()) ic.push_back(row_json(r));
  return {{"dc", std::move(dc)}, {"ic", std::move(ic)}};
}

Json graded_table_json(const GradedTable& t) {
  Json counts = Json::array();
  for (const BigInt& c : t.counts) counts.push_back(bigint_json(c));
  return {{"max_degree", t.max_degree()}, {"counts", std::move(counts)}};
}

std::string graded_table_csv(const GradedTable& t) {
  std::ostringstream out;
  out << "degree,count\n";
  for (int d = 0; d <= t.max_degree(); ++d) out << d << ',' << t.at(d) << '\n';
  return out.str();
}

Json leading_term_json(const LeadingTerm& t) {
  return {{"condition", roman(t.condition)}, {"exponents", profile_json(t.exponents)},
          {"monomial", format_monomial(t.monomial)}};
}

Json leading_term_count_json(const LeadingTermCount& c) {
  return {{"count", bigint_json(c.count)}, {"formula", bigint_json(c.formula)},
          {"binomial_sum", bigint_json(c.binomial_sum)}, {"consistent", c.consistent()}};
}

Json weyl_json(const WeylDimension& d) {
  return {{"dimension", bigint_json(d.product)}, {"closed_form", bigint_json(d.closed_form)},
          {"consistent", d.consistent()}};
}

Json relation_record_json(const RelationRecord& r) {
  Json j = {{"condition", roman(r.condition)},
            {"params", profile_json(r.params)},
            {"leading_term", format_monomial(r.leading_term)},
            {"minimal", format_monomial(r.minimal)},
            {"net_coefficient", bigint_json(r.net_coefficient)},
            {"attaining_terms", r.attaining_terms},
            {"passed", r.passed}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json relation_report_json(const RelationReport& r) {
  Json records = Json::array();
  for (const RelationRecord& x : r.records) records.push_back(relation_record_json(x));
  return {{"level", r.level},
          {"instances", r.records.size()},
          {"distinct_leading_terms", r.distinct_leading_terms},
          {"failures", r.failures},
          {"records", std::move(records)}};
}

Json ic_report_json(const IcReport& r) {
  Json records = Json::array();
  for (const IcRecord& x : r.records) {
    Json j = {{"row", roman(x.row)}, {"method", ic_method_name(x.method)},
              {"monomial", format_monomial(x.monomial)}};
    if (x.base) j["base"] = format_monomial(*x.base);
    if (x.minimal) {
      j["minimal"] = format_monomial(x.minimal->monomial);
      j["net_coefficient"] = bigint_json(x.minimal->net_coefficient);
    }
    j["passed"] = x.passed;
    if (!x.detail.empty()) j["detail"] = x.detail;
    records.push_back(std::move(j));
  }
  return {{"weight", weight_json(r.weight)},
          {"instances", r.records.size()},
          {"failures", r.failures},
          {"records", std::move(records)}};
}

Json semi_infinite_json(const SemiInfiniteMonomial& s) {
  return {{"head", format_monomial(s.head)}, {"tail_index", s.tail_index}, {"weight", weight_json(s.weight)}};
}

SemiInfiniteMonomial semi_infinite_from_json(const Json& j) {
  SemiInfiniteMonomial s;
  s.head = parse_monomial(j.at("head").get<std::string>());
  s.tail_index = j.at("tail_index").get<int>();
  s.weight.k = j.at("weight").get<std::array<int, 5>>();
  for (int x : s.weight.k)
    if (x < 0) throw std::invalid_argument("weight multiplicities must be nonnegative");
  return s;
}

}  // namespace d4fs
