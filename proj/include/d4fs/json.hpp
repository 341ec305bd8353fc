#ifndef D4FS_JSON_HPP
#define D4FS_JSON_HPP

#include <string>

#include <json.hpp>

#include "d4fs/bigint.hpp"
#include "d4fs/conditions.hpp"
#include "d4fs/enumeration.hpp"
#include "d4fs/limits.hpp"
#include "d4fs/relations.hpp"

namespace d4fs {

using Json = nlohmann::ordered_json;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
Json bigint_json(const BigInt& v);

/// Nonzero counts keyed by color token.
Json counts_json(const ColorCounts& c);
Json profile_json(const FrequencyProfile& p);
Json weight_json(const HighestWeight& w);

Json verdict_json(const Verdict& v);
/// Both condition tables: row id, slot terms and capacity coefficients.
Json conditions_json();

Json graded_table_json(const GradedTable& t);
/// "degree,count" header followed by one line per degree.
std::string graded_table_csv(const GradedTable& t);

Json leading_term_json(const LeadingTerm& t);
Json leading_term_count_json(const LeadingTermCount& c);
Json weyl_json(const WeylDimension& d);

Json relation_record_json(const RelationRecord& r);
Json relation_report_json(const RelationReport& r);
Json ic_report_json(const IcReport& r);

Json semi_infinite_json(const SemiInfiniteMonomial& s);
/// Inverse of semi_infinite_json; throws on malformed input.
SemiInfiniteMonomial semi_infinite_from_json(const Json& j);

}  // namespace d4fs

#endif  // D4FS_JSON_HPP
