#include "d4fs/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "d4fs/enumeration.hpp"
#include "d4fs/json.hpp"
#include "d4fs/limits.hpp"
#include "d4fs/relations.hpp"

namespace d4fs::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HighestWeight weight_arg(const std::string& text) {
  try {
    return HighestWeight::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--weight: ") + e.what());
  }
}

std::vector<int> levels_arg(const std::string& text) {
  std::vector<int> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) throw UsageError("--levels: bad entry '" + item + "'");
    levels.push_back(v);
  }
  if (levels.empty()) throw UsageError("--levels: expected a comma-separated list");
  return levels;
}

void line(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

struct Options {
  std::string out_path;
  int level = -1;
  std::string weight;
  std::string monomial;
  int max_degree = 0;
  bool count_only = false;
  bool by_degree = false;
  bool summary = false;
  std::string format = "json";
  int window = 1;
  std::string levels;
  int blocks = 0;
  std::string head;
  int t = 0;
};

int cmd_check(const Options& o, std::ostream& out) {
  if (o.level < 0 && o.weight.empty()) throw UsageError("check needs --level, --weight or both");
  std::optional<HighestWeight> w;
  if (!o.weight.empty()) w = weight_arg(o.weight);
  const int k = o.level >= 0 ? o.level : w->level();
  const Monomial m = parse_monomial(o.monomial);
  Verdict v = satisfies_dc(m, k);
  if (w) {
    Verdict ic = satisfies_ic_shifted(m, *w, 0);
    v.satisfied = v.satisfied && ic.satisfied;
    v.violations.insert(v.violations.end(), ic.violations.begin(), ic.violations.end());
  }
  Json j = {{"monomial", format_monomial(m)}, {"level", k}};
  if (w) j["weight"] = weight_json(*w);
  j.update(verdict_json(v));
  line(out, j);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const HighestWeight w = weight_arg(o.weight);
  if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  if (o.format != "json" && !(o.format == "csv" && o.by_degree))
    throw UsageError("--format csv is only available with --by-degree");
  if (o.by_degree) {
    const GradedTable t = graded_dimensions(w, o.max_degree);
    if (o.format == "csv")
      out << graded_table_csv(t);
    else
      line(out, graded_table_json(t));
    return kOk;
  }
  if (o.count_only) {
    BigInt n = 0;
    for_each_admissible(w, o.max_degree, [&](const Monomial&) { ++n; });
    line(out, {{"weight", weight_json(w)}, {"max_degree", o.max_degree}, {"count", bigint_json(n)}});
    return kOk;
  }
  for (const Monomial& m : enumerate_admissible(w, o.max_degree))
    line(out, {{"monomial", format_monomial(m)}, {"total_degree", m.total_degree()}});
  return kOk;
}

int cmd_leading_terms(const Options& o, std::ostream& out) {
  if (o.level < 0) throw UsageError("--level must be nonnegative");
  if (o.format != "json" && o.format != "grammar") throw UsageError("--format must be json or grammar");
  if (o.count_only) {
    const LeadingTermCount c = count_leading_terms(o.level);
    Json j = {{"level", o.level}};
    j.update(leading_term_count_json(c));
    line(out, j);
    return c.consistent() ? kOk : kVerificationFailed;
  }
  if (o.window < 1) throw UsageError("--window must be at least 1");
  for (const LeadingTerm& t : leading_terms(o.level, o.window)) {
    if (o.format == "grammar")
      out << format_monomial(t.monomial) << '\n';
    else
      line(out, leading_term_json(t));
  }
  return kOk;
}

int cmd_verify_relations(const Options& o, std::ostream& out) {
  if (o.level < 1) throw UsageError("--level must be at least 1");
  const RelationReport r = verify_leading_terms(o.level);
  Json j = relation_report_json(r);
  if (o.summary) j.erase("records");
  line(out, j);
  return r.failures == 0 ? kOk : kVerificationFailed;
}

int cmd_verify_ic(const Options& o, std::ostream& out) {
  const HighestWeight w = weight_arg(o.weight);
  if (w.level() < 1) throw UsageError("--weight must have positive level");
  const IcReport r = verify_ic_leading_terms(w);
  Json j = ic_report_json(r);
  if (o.summary) j.erase("records");
  line(out, j);
  return r.failures == 0 ? kOk : kVerificationFailed;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const std::vector<int> levels = levels_arg(o.levels);
  const Monomial m = parse_monomial(o.monomial);
  Json j = {{"monomial", format_monomial(m)}, {"levels", levels}};
  if (auto parts = find_factorization(m, levels)) {
    Json list = Json::array();
    for (const Monomial& p : *parts) list.push_back(format_monomial(p));
    j["factorization"] = std::move(list);
  } else {
    j["factorization"] = "none";
  }
  line(out, j);
  return kOk;
}

int cmd_weyl_dim(const Options& o, std::ostream& out) {
  if (o.level < 0) throw UsageError("--level must be nonnegative");
  const WeylDimension d = weyl_dim_vk(o.level);
  const LeadingTermCount c = count_leading_terms(o.level);
  const bool product_ok = c.count == (o.level + 2) * d.product;
  Json j = {{"level", o.level}};
  j.update(weyl_json(d));
  j["leading_terms"] = bigint_json(c.count);
  j["leading_terms_match"] = product_ok;
  line(out, j);
  return d.consistent() && product_ok ? kOk : kVerificationFailed;
}

int cmd_tail(const Options& o, std::ostream& out) {
  SemiInfiniteMonomial s;
  s.weight = weight_arg(o.weight);
  s.head = parse_monomial(o.head);
  s.tail_index = o.t;
  if (o.blocks < 0) throw UsageError("--blocks must be nonnegative");
  const Monomial trunc = truncate(s, o.blocks);
  Json j = {{"semi_infinite", semi_infinite_json(s)},
            {"blocks", o.blocks},
            {"truncation", format_monomial(trunc)},
            {"truncation_satisfies_dc", dc_holds(trunc, s.weight.level())},
            {"depth0", depth0(s)},
            {"semi_dc", semi_dc_check(s)}};
  line(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Difference and initial conditions for D4 level-k subspaces"};
  app.name("d4fs");
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Evaluate DC (and IC with --weight) on a monomial");
  check->add_option("--level", o.level, "DC level; defaults to the level of --weight");
  check->add_option("--weight", o.weight, "k0,k1,k2,k3,k4");
  check->add_option("monomial", o.monomial, "Monomial, e.g. \"2(-1) 3_(-2)^2\"")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Admissible monomials with degrees in [-D,-1]");
  enumerate->add_option("--weight", o.weight)->required();
  enumerate->add_option("--max-degree", o.max_degree, "D")->required();
  enumerate->add_flag("--count-only", o.count_only, "Only count the stream");
  enumerate->add_flag("--by-degree", o.by_degree, "Graded dimensions for total degree <= D");
  enumerate->add_option("--format", o.format, "json or csv (csv needs --by-degree)");

  auto* leading = app.add_subcommand("leading-terms", "Solutions of the critical equalities");
  leading->add_option("--level", o.level)->required();
  leading->add_flag("--count-only", o.count_only);
  leading->add_option("--window", o.window, "Window j >= 1");
  leading->add_option("--format", o.format, "json or grammar");

  auto* relations = app.add_subcommand("verify-relations", "Re-derive every DC relation at one level");
  relations->add_option("--level", o.level)->required();
  relations->add_flag("--summary", o.summary, "Omit per-instance records");

  auto* ic = app.add_subcommand("verify-ic", "Check every IC leading term for one weight");
  ic->add_option("--weight", o.weight)->required();
  ic->add_flag("--summary", o.summary, "Omit per-instance records");

  auto* factorize = app.add_subcommand("factorize", "Split a monomial into DC factors of given levels");
  factorize->add_option("--levels", o.levels, "L1,L2,...")->required();
  factorize->add_option("monomial", o.monomial)->required();

  auto* weyl = app.add_subcommand("weyl-dim", "Dimension of the l0-module spanned by level-k leading terms");
  weyl->add_option("--level", o.level)->required();

  auto* tail = app.add_subcommand("tail", "Truncate a semi-infinite monomial and run the semi-DC check");
  tail->add_option("--weight", o.weight)->required();
  tail->add_option("--blocks", o.blocks, "Number of tail blocks")->required();
  tail->add_option("--head", o.head, "Finite head");
  tail->add_option("--t", o.t, "Tail index");

  auto* tables = app.add_subcommand("tables", "DC and IC tables as JSON");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->add_option("--out", o.out_path, "Write output to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (check->parsed()) code = cmd_check(o, buffer);
    else if (enumerate->parsed()) code = cmd_enumerate(o, buffer);
    else if (leading->parsed()) code = cmd_leading_terms(o, buffer);
    else if (relations->parsed()) code = cmd_verify_relations(o, buffer);
    else if (ic->parsed()) code = cmd_verify_ic(o, buffer);
    else if (factorize->parsed()) code = cmd_factorize(o, buffer);
    else if (weyl->parsed()) code = cmd_weyl_dim(o, buffer);
    else if (tail->parsed()) code = cmd_tail(o, buffer);
    else if (tables->parsed()) line(buffer, conditions_json());
  } catch (const ParseError& e) {
    err << "error: monomial parse error at byte " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kUsageError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace d4fs::cli
