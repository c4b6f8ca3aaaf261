#pragma once

#include <string>

#include "delta/avoider.hpp"
#include "delta/cantor.hpp"
#include "delta/hierarchy.hpp"
#include "delta/ramsey.hpp"
#include "delta/witness.hpp"

namespace delta {

// Deterministic JSON renderings: fixed key order, two-space indent, all
// integers as decimal strings and rationals as "p/q" strings, no timestamps.
// Identical inputs yield byte-identical output.
std::string witness_to_json(const WitnessReport& rep);
std::string avoider_to_json(const AvoiderCertificate& cert);
std::string separator_to_json(const SeparatorSet& sep);
std::string pipeline_to_json(const PipelineReport& rep);
std::string sarkozy_to_json(const SarkozyReport& rep);
std::string char_integral_to_json(const Int& m, unsigned depth, const CharIntegral& c);
std::string search_result_to_json(const StructureSearchResult& res);
std::string limit_table_to_json(const BitWord& w, const Int& M,
                                const std::vector<LimitTableEntry>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace delta
