#include "report.hpp"

namespace sadic::report {

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string text_value(const nlohmann::ordered_json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    return s.empty() ? "\"\"" : s;
  }
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render(const Records& records, Format format) {
  std::string out;
  for (const auto& r : records) {
    if (format == Format::jsonl) {
      out += r.dump();
    } else {
      bool first = true;
      for (const auto& [key, value] : r.items()) {
        if (first) {
          out += text_value(value) + ":";
          first = false;
          continue;
        }
        out += " " + key + "=" + text_value(value);
      }
    }
    out.push_back('\n');
  }
  return out;
}

Records prefix_records(const GeneratedPrefix& g, std::size_t level) {
  return {Record{{"kind", "prefix"},
                 {"level", level},
                 {"length", g.word.size()},
                 {"stable_length", g.stable_length},
                 {"depth_used", g.depth_used},
                 {"converged", g.converged},
                 {"word", g.word.str()}}};
}

Records profile_records(const std::vector<std::size_t>& profile) {
  Records out;
  for (std::size_t n = 0; n < profile.size(); ++n)
    out.push_back(Record{{"kind", "complexity"}, {"n", n}, {"p", profile[n]}});
  return out;
}

Records complexity_records(const ComplexityBoundReport& r) {
  Records out;
  for (const auto& h : r.hypothesis)
    out.push_back(Record{{"kind", "length_ratio"},
                         {"depth", h.depth},
                         {"max_next", h.max_next},
                         {"min_current", h.min_current},
                         {"witness_b", h.witness_b},
                         {"witness_c", h.witness_c},
                         {"holds", h.holds}});
  out.push_back(Record{{"kind", "growth"}, {"min_lengths", r.min_lengths}, {"holds", r.growth_holds}});
  for (const auto& c : r.complexity)
    out.push_back(Record{{"kind", "complexity"},
                         {"n", c.n},
                         {"p", c.observed},
                         {"ceiling", "(" + r.bound.str() + ")*" + std::to_string(r.alphabet_size * r.alphabet_size) +
                                         "*" + std::to_string(c.n)},
                         {"holds", c.holds}});
  out.push_back(Record{{"kind", "complexity_bound"},
                       {"D", r.bound.str()},
                       {"alphabet_size", r.alphabet_size},
                       {"window", r.window},
                       {"hypothesis_holds", r.hypothesis_holds},
                       {"growth_holds", r.growth_holds},
                       {"complexity_holds", r.complexity_holds},
                       {"passed", r.passed()}});
  return out;
}

Records return_table_records(const ReturnWordTable& t) {
  Records out;
  for (std::size_t k = 1; k <= t.size(); ++k)
    out.push_back(Record{{"kind", "return_word"},
                         {"k", k},
                         {"word", t.theta(k).str()},
                         {"length", t.theta(k).size()},
                         {"first_position", t.first_positions[k - 1]},
                         {"count", t.counts[k - 1]}});
  out.push_back(Record{{"kind", "return_table"},
                       {"u", t.u.str()},
                       {"v", t.v.str()},
                       {"size", t.size()},
                       {"scan_from", t.scan_from},
                       {"scan_to", t.scan_to},
                       {"complete", t.complete}});
  return out;
}

Records tower_records(const DerivedTower& t) {
  Records out;
  for (const auto& l : t.levels) {
    Record r{{"kind", "tower_level"},
             {"n", l.n},
             {"u_length", l.window_length},
             {"returns", l.table.size()},
             {"count_bound", t.count_bound},
             {"count_ok", l.count_ok}};
    if (l.n >= 1) {
      r["max_lambda_length"] = l.max_lambda_length;
      r["length_bound"] = t.length_bound;
      r["length_ok"] = l.length_ok;
      r["identity_ok"] = l.identity_ok;
      r["proper"] = l.proper.has_value();
      if (l.proper) {
        r["first"] = l.lambda->codomain()->token(l.proper->first);
        r["last"] = l.lambda->codomain()->token(l.proper->second);
      }
      r["positive"] = l.lambda_positive;
    }
    r["reconstruction_ok"] = l.reconstruction_ok;
    out.push_back(std::move(r));
  }
  for (const auto& d : t.diagnostics) out.push_back(Record{{"kind", "diagnostic"}, {"message", d}});
  out.push_back(Record{{"kind", "tower"},
                       {"K", t.K},
                       {"alpha", t.alpha},
                       {"levels", t.levels.size()},
                       {"window", t.window_size},
                       {"origin", t.origin},
                       {"passed", t.all_ok()}});
  return out;
}

Records lr_records(const LrSufficientReport& r) {
  Records out;
  for (const auto& row : r.rows)
    out.push_back(Record{{"kind", "dn"},
                         {"level", row.level},
                         {"D", opt(row.value)},
                         {"truncated", row.truncated},
                         {"window", row.window}});
  out.push_back(Record{{"kind", "lr_sufficient"},
                       {"max_D", opt(r.max_observed)},
                       {"consistent_with_lr", r.consistent_with_lr},
                       {"heuristic", true}});
  return out;
}

Records ratio_records(const RatioProfile& p, bool rows) {
  Records out;
  if (rows)
    for (const auto& row : p.rows)
      out.push_back(Record{{"kind", "ratio"},
                           {"length", row.length},
                           {"max_return", row.max_return},
                           {"witness", row.witness},
                           {"factors", row.factors_seen},
                           {"recurrent", row.recurrent_factors}});
  out.push_back(Record{{"kind", "ratio_profile"},
                       {"window", p.window},
                       {"lengths", p.rows.size()},
                       {"omitted", p.omitted.size()},
                       {"max_ratio", std::to_string(p.best_num) + "/" + std::to_string(p.best_den)}});
  return out;
}

Records not_lr_records(const builtin::NotLrReport& r) {
  return {Record{{"kind", "not_lr"},
                 {"n", r.n},
                 {"window", r.window},
                 {"first_ca", r.first_ca},
                 {"return_length", r.return_length},
                 {"min_return_length", r.min_return_length},
                 {"bound", r.bound},
                 {"ratio", std::to_string(r.ratio_num) + "/" + std::to_string(r.ratio_den)},
                 {"ratio_bound", std::to_string(r.bound) + "/2"},
                 {"rho_length", "3^" + std::to_string(r.rho_exponent)},
                 {"rho_ca_occurrences", r.rho_ca_occurrences},
                 {"exact_twice", r.exact_twice},
                 {"occurs_in_x", opt(r.occurs_in_x)},
                 {"passed", r.passed}}};
}

Records gap_lemma_records(const builtin::GapLemmaReport& r) {
  return {Record{{"kind", "gap_lemma"},
                 {"n", r.n},
                 {"length", r.word_length},
                 {"occurrences", r.occurrences},
                 {"min_gap", opt(r.min_gap)},
                 {"max_gap", opt(r.max_gap)},
                 {"bound", r.bound},
                 {"conclusive", r.conclusive},
                 {"strict", r.strict},
                 {"passed", r.holds}}};
}

Records block_identity_records(const builtin::BlockIdentityReport& r, bool words) {
  Record rec{{"kind", "block_identity"}, {"i", r.i}, {"j", r.j}, {"k", r.k}};
  if (words) {
    rec["image0"] = r.image0.str();
    rec["formula0"] = r.formula0.str();
    rec["image1"] = r.image1.str();
    rec["formula1"] = r.formula1.str();
  } else {
    rec["length0"] = r.image0.size();
    rec["length1"] = r.image1.size();
  }
  rec["equal0"] = r.equal0;
  rec["equal1"] = r.equal1;
  return {rec};
}

Records sturmian_gap_records(const builtin::SturmianGapReport& r) {
  Records out;
  for (const auto& row : r.rows)
    out.push_back(Record{{"kind", "factor_gap"},
                         {"factor", row.factor.str()},
                         {"max_gap", opt(row.max_gap)},
                         {"sub_bound", opt(row.sub_bound)},
                         {"within_sub_bound", row.within_sub_bound}});
  out.push_back(Record{{"kind", "sturmian_gaps"},
                       {"i", r.i},
                       {"j", r.j},
                       {"k", r.k},
                       {"length", r.word_length},
                       {"bound", r.bound},
                       {"only_00_01_10", r.only_expected_factors},
                       {"passed", r.holds}});
  return out;
}

Records sturmian_verdict_records(const builtin::SturmianVerdict& v) {
  Records out;
  for (const auto& row : v.rows)
    out.push_back(Record{{"kind", "dn"},
                         {"level", row.level},
                         {"D", opt(row.dn.value)},
                         {"max_quotient", row.max_quotient},
                         {"bound", row.bound},
                         {"truncated", row.dn.truncated},
                         {"holds", row.holds}});
  Records profile = ratio_records(v.profile, false);
  out.insert(out.end(), profile.begin(), profile.end());
  out.push_back(Record{{"kind", "sturmian_verdict"},
                       {"directive", v.description},
                       {"head_dropped", v.head_dropped},
                       {"levels", v.rows.size()},
                       {"max_D", opt(v.trend.max_observed)},
                       {"consistent_with_lr", v.trend.consistent_with_lr},
                       {"bounds_hold", v.bounds_hold}});
  return out;
}

Records coding_check_records(const builtin::CodingCheckReport& r) {
  return {Record{{"kind", "coding_check"},
                 {"tables", r.tables},
                 {"pairs", r.pairs},
                 {"collisions", r.collisions},
                 {"round_trips", r.round_trips},
                 {"round_trip_failures", r.round_trip_failures},
                 {"passed", r.passed()}}};
}

Records oracle_check_records(const builtin::OracleCheckReport& r) {
  Record rec{{"kind", "oracle_check"},
             {"instances", r.instances},
             {"max_window", r.max_window},
             {"mismatches", r.mismatches}};
  if (r.mismatches) rec["first_mismatch"] = r.first_mismatch;
  rec["passed"] = r.passed();
  return {rec};
}

}  // namespace sadic::report
