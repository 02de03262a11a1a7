#include "qadic/report.hpp"

namespace qadic {

namespace {

nlohmann::json complexity_json(const ExactComplexity& c) {
    return {{"period", c.period},
            {"d_decimal", c.divisor.to_decimal()},
            {"ratio_decimal", c.ratio.to_decimal()},
            {"fc_log4", c.log4_value}};
}

} // namespace

nlohmann::json analysis_record(const QuaternarySequence& q) {
    auto margin = security_margin(q);
    nlohmann::json spectrum = nlohmann::json::array();
    for (std::size_t tau = 0; tau < q.period(); ++tau) {
        auto v = autocorr_quaternary(q, tau);
        spectrum.push_back({v.re, v.im});
    }

    nlohmann::json out{{"period", q.period()},
                       {"s4_decimal", s4_value(q).to_decimal()},
                       {"d_decimal", margin.complexity.divisor.to_decimal()},
                       {"ratio_decimal", margin.complexity.ratio.to_decimal()},
                       {"fc_log4", margin.complexity.log4_value},
                       {"thresholds",
                        {{"q4", margin.pass_quarter ? "pass" : "fail"},
                         {"q6", margin.pass_sixth ? "pass" : "fail"}}},
                       {"autocorr_spectrum", std::move(spectrum)}};
    // d_plus/d_minus only make sense for period 2n, n odd.
    if (q.period() % 4 == 2) {
        auto split = d_split(q);
        out["d_plus_decimal"] = split.d_plus.to_decimal();
        out["d_minus_decimal"] = split.d_minus.to_decimal();
    }
    return out;
}

nlohmann::json to_json(const TheoremVerdict& v) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : v.parameters) params[key] = value;
    nlohmann::json out{{"theorem", v.theorem},
                       {"parameters", std::move(params)},
                       {"match", v.match},
                       {"notes", v.notes}};
    if (v.expected) out["expected"] = complexity_json(*v.expected);
    if (v.computed) out["computed"] = complexity_json(*v.computed);
    return out;
}

nlohmann::json to_json(const Lemma9Check& c) {
    return {{"theorem", "lemma9"},
            {"parameters", {{"k", std::to_string(c.k)}}},
            {"modulus_decimal", c.modulus.to_decimal()},
            {"r_decimal", c.r.to_decimal()},
            {"r_bar_decimal", c.r_bar.to_decimal()},
            {"product_decimal", c.product.to_decimal()},
            {"expected_decimal", c.expected.to_decimal()},
            {"match", c.holds}};
}

nlohmann::json to_json(const Lemma11Verdict& v) {
    return {{"theorem", "lemma11"},
            {"parameters", {{"p", std::to_string(v.p)}, {"g", std::to_string(v.g)}}},
            {"c", v.c},
            {"d", v.d},
            {"table_match", v.table_match},
            {"periods_match", v.periods_match},
            {"match", v.match}};
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        out.push_back({{"a_tag", row.a_tag},
                       {"b_tag", row.b_tag},
                       {"n", row.n},
                       {"period", row.period},
                       {"d_plus_decimal", row.d_plus.to_decimal()},
                       {"d_minus_decimal", row.d_minus.to_decimal()},
                       {"d_decimal", row.d.to_decimal()},
                       {"ratio_decimal", row.ratio.to_decimal()},
                       {"fc_log4", row.fc_log4},
                       {"optimal_autocorr", row.optimal_autocorr},
                       {"q4", row.q4_pass ? "pass" : "fail"},
                       {"q6", row.q6_pass ? "pass" : "fail"},
                       {"note", row.note}});
    }
    return out;
}

} // namespace qadic
