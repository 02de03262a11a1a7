#include "qadic/table.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "qadic/adic.hpp"
#include "qadic/cyclotomy.hpp"
#include "qadic/errors.hpp"
#include "qadic/families.hpp"
#include "qadic/interleave.hpp"
#include "qadic/numtheory.hpp"
#include "qadic/verify.hpp"

namespace qadic {

namespace {

TableRow analyze_pair(const BinarySequence& a, const BinarySequence& b, std::string note) {
    auto w = interleave(a, b);
    auto margin = security_margin(w);
    auto split = d_split(w);
    TableRow row;
    row.a_tag = a.tag();
    row.b_tag = b.tag();
    row.n = a.period();
    row.period = w.period();
    row.d_plus = std::move(split.d_plus);
    row.d_minus = std::move(split.d_minus);
    row.d = std::move(margin.complexity.divisor);
    row.ratio = std::move(margin.complexity.ratio);
    row.fc_log4 = margin.complexity.log4_value;
    row.optimal_autocorr = has_optimal_autocorr(w);
    row.q4_pass = margin.pass_quarter;
    row.q6_pass = margin.pass_sixth;
    row.note = std::move(note);
    return row;
}

// The base members the pair rules iterate over.
std::vector<BinarySequence> base_members(const std::string& family, std::uint64_t param) {
    if (family == "m") return {m_sequence(static_cast<unsigned>(param))};
    if (family == "legendre")
        return {legendre_sequence(param, LegendreVariant::ell),
                legendre_sequence(param, LegendreVariant::ell_prime)};
    if (family == "twin") return {twin_prime_sequence(param)};
    if (family == "hall") return {hall_sequence(param)};
    throw ParameterError("run_table: unknown family \"" + family + "\"");
}

} // namespace

std::vector<TableRow> run_table(const TableSpec& spec) {
    if (spec.params.empty()) throw ParameterError("run_table: empty parameter list");
    auto params = spec.params;
    std::sort(params.begin(), params.end());

    std::vector<TableRow> rows;
    for (std::uint64_t param : params) {
        if (spec.pairs == "self") {
            for (const auto& a : base_members(spec.family, param))
                rows.push_back(analyze_pair(a, a, "w(a,a)"));
        } else if (spec.pairs == "shifts") {
            auto a = base_members(spec.family, param).front();
            for (std::size_t l = 1; l < a.period(); ++l)
                rows.push_back(analyze_pair(a, a.shift(static_cast<std::int64_t>(l)),
                                            "l=" + std::to_string(l)));
        } else if (spec.pairs == "tau") {
            for (const auto& a : base_members(spec.family, param))
                rows.push_back(analyze_pair(a, a.sample(-1), "w(a,M_{-1}(a))"));
        } else if (spec.pairs == "theorem11") {
            if (spec.family != "legendre")
                throw ParameterError("run_table: pair rule theorem11 needs family legendre");
            auto ell = legendre_sequence(param, LegendreVariant::ell);
            auto ellp = legendre_sequence(param, LegendreVariant::ell_prime);
            rows.push_back(analyze_pair(ell, ellp, to_string(Theorem11Case::ell_ellprime)));
            rows.push_back(analyze_pair(ell, ell.sample(-1), to_string(Theorem11Case::ell_tau_ell)));
            rows.push_back(analyze_pair(ellp, ellp.sample(-1),
                                        to_string(Theorem11Case::ellprime_tau_ellprime)));
            rows.push_back(analyze_pair(ell, ellp.sample(-1),
                                        to_string(Theorem11Case::ell_tau_ellprime)));
        } else if (spec.pairs == "samples") {
            if (spec.family != "hall")
                throw ParameterError("run_table: pair rule samples needs family hall");
            auto h = hall_sequence(param);
            auto classes = cyclotomic_classes(param, 6, primitive_root(param));
            for (unsigned cls = 0; cls < 6; ++cls) {
                std::uint64_t r = classes.members[cls].front();
                // Closed forms exist for r in D_0 (w(a,a)) and r in D_3
                // (M_r(h) = M_{-1}(h)); the other classes have none published.
                std::string note = cls == 0   ? "r in D_0: w(a,a) form"
                                   : cls == 3 ? "r in D_3: M_{-1} form"
                                              : "no published closed form";
                rows.push_back(analyze_pair(
                    h, h.sample(static_cast<std::int64_t>(r)),
                    "r=" + std::to_string(r) + " (D_" + std::to_string(cls) + "): " + note));
            }
        } else {
            throw ParameterError("run_table: unknown pair rule \"" + spec.pairs + "\"");
        }
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

} // namespace

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "a_tag,b_tag,n,period,d_plus_decimal,d_minus_decimal,d_decimal,ratio_decimal,"
           "fc_log4,optimal_autocorr,q4,q6,note\n";
    char buf[32];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", row.fc_log4);
        out << csv_escape(row.a_tag) << ',' << csv_escape(row.b_tag) << ',' << row.n << ','
            << row.period << ',' << row.d_plus.to_decimal() << ',' << row.d_minus.to_decimal()
            << ',' << row.d.to_decimal() << ',' << row.ratio.to_decimal() << ',' << buf << ','
            << (row.optimal_autocorr ? "true" : "false") << ','
            << (row.q4_pass ? "pass" : "fail") << ',' << (row.q6_pass ? "pass" : "fail") << ','
            << csv_escape(row.note) << '\n';
    }
}

} // namespace qadic
