#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qadic/natural.hpp"

namespace qadic {

// Batch analysis request: a family, its parameters (k values for m, p values
// otherwise), and a pair rule choosing the (a, b) combinations:
//   self      - (a, a) for every base member
//   shifts    - (a, L^l(a)) for l = 1 .. n-1
//   tau       - (a, M_{-1}(a)) for every base member
//   theorem11 - the four Legendre case pairs (legendre only)
//   samples   - (h, M_r(h)) for one r per sextic class (hall only)
struct TableSpec {
    std::string family;
    std::vector<std::uint64_t> params;
    std::string pairs;
};

struct TableRow {
    std::string a_tag;
    std::string b_tag;
    std::size_t n = 0;
    std::size_t period = 0;
    Natural d_plus;
    Natural d_minus;
    Natural d;
    Natural ratio;
    double fc_log4 = 0.0;
    bool optimal_autocorr = false;
    bool q4_pass = false;
    bool q6_pass = false;
    std::string note;
};

// Rows ordered by (parameter, pair parameter); deterministic.
std::vector<TableRow> run_table(const TableSpec& spec);

// Header matches the JSON field names.
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

} // namespace qadic
