#pragma once

#include <json.hpp>

#include "qadic/adic.hpp"
#include "qadic/table.hpp"
#include "qadic/verify.hpp"

namespace qadic {

// Full analysis record for one quaternary sequence. Big integers are decimal
// strings; fc_log4 is the display float.
// { period, s4_decimal, d_decimal, d_plus_decimal, d_minus_decimal,
//   ratio_decimal, fc_log4, thresholds: {q4, q6}, autocorr_spectrum }
nlohmann::json analysis_record(const QuaternarySequence& q);

nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const Lemma9Check& c);
nlohmann::json to_json(const Lemma11Verdict& v);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

} // namespace qadic
