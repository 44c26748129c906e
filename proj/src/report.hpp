#pragma once

// Report serialisation shared by the C API: every report becomes a list of
// flat records, rendered either as JSON lines or as "kind: key=value" text.

#include <string>
#include <vector>

#include "json.hpp"
#include "sadic/builtin.hpp"
#include "sadic/directive.hpp"
#include "sadic/returns.hpp"

namespace sadic::report {

using Record = nlohmann::ordered_json;
using Records = std::vector<Record>;

enum class Format { text, jsonl };

std::string render(const Records& records, Format format);

Records prefix_records(const GeneratedPrefix& g, std::size_t level);
Records profile_records(const std::vector<std::size_t>& profile);
Records complexity_records(const ComplexityBoundReport& r);
Records return_table_records(const ReturnWordTable& t);
Records tower_records(const DerivedTower& t);
Records lr_records(const LrSufficientReport& r);
Records ratio_records(const RatioProfile& p, bool rows);
Records not_lr_records(const builtin::NotLrReport& r);
Records gap_lemma_records(const builtin::GapLemmaReport& r);
Records block_identity_records(const builtin::BlockIdentityReport& r, bool words);
Records sturmian_gap_records(const builtin::SturmianGapReport& r);
Records sturmian_verdict_records(const builtin::SturmianVerdict& v);
Records coding_check_records(const builtin::CodingCheckReport& r);
Records oracle_check_records(const builtin::OracleCheckReport& r);

}  // namespace sadic::report
