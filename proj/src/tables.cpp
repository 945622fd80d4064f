#include "pnpair/tables.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pnpair/parse.hpp"

namespace pnp::tables {

const std::vector<Table1Fixture>& table1_fixtures() {
    static const std::vector<Table1Fixture> rows = {
        {6, 137, 3101}, {7, 110, 432}, {8, 98, 152},  {9, 90, 78},   {10, 85, 49}, {11, 80, 34},
        {12, 80, 26},   {13, 78, 20},  {14, 75, 17},  {15, 70, 14},  {16, 70, 12}, {17, 70, 11},
        {18, 70, 10},   {19, 70, 9},   {20, 70, 8},   {21, 70, 7},   {22, 70, 7},  {23, 70, 6},
        {24, 70, 6},    {25, 65, 5},   {26, 70, 5},   {27, 70, 5},   {28, 70, 5},  {29, 65, 4},
        {30, 70, 4},    {31, 70, 4},   {32, 70, 4},   {33, 70, 4},   {34, 70, 4},  {35, 65, 3},
    };
    return rows;
}

std::vector<Table1RowReport> run_table1(const std::vector<uint32_t>& ks) {
    std::vector<Table1RowReport> out;
    for (const auto& fix : table1_fixtures()) {
        if (!ks.empty() && std::find(ks.begin(), ks.end(), fix.k) == ks.end()) continue;
        Table1RowReport rep;
        rep.fix = fix;
        auto row = sieve::inequality_scan(fix.k, fix.nu_times_10);
        rep.with_two = row.with_two;
        rep.odd_only = row.odd_only;
        rep.with_two_match = rep.with_two && *rep.with_two == fix.printed_n;
        rep.odd_match = rep.odd_only && *rep.odd_only == fix.printed_n;
        rep.pass = rep.with_two_match || rep.odd_match;
        out.push_back(std::move(rep));
    }
    return out;
}

const std::vector<Table2Fixture>& table2_fixtures() {
    static const std::vector<Table2Fixture> rows = {
        {1, 1, 17, 1, "x+1", 0.9844, 7.0794},
        {2, 1, 22, 1, "x+1", 0.2190, 43.0915},
        {3, 1, 23, 1, "x+1", 0.9555, 9.3261},
        {4, 1, 25, 1, "x+1", 0.8060, 13.1656},
        {5, 1, 27, 1, "x+1", 0.1556, 72.6835},
        {6, 1, 28, 15, "x+1", 0.3511, 33.3323},
        {7, 1, 31, 1, "x+1", 0.6249, 22.8000},
        {8, 1, 33, 1, "x+1", 0.0990, 153.5235},
        {9, 1, 35, 1, "x+1", 0.2656, 66.0123},
        {10, 1, 36, 105, "x+1", 0.1098, 120.3532},
        {11, 1, 39, 1, "x+1", 0.1872, 82.1095},
        {12, 1, 40, 3, "x+1", 0.0622, 210.9840},
        {13, 1, 42, 3, "x^3+1", 0.0832, 206.2723},
        {14, 1, 45, 217, "x+1", 0.0489, 431.6607},
        {15, 1, 48, 105, "x+1", 0.1888, 70.8429},
        {16, 1, 51, 1, "x+1", 0.1469, 158.6066},
        {17, 1, 60, 465465, "x+1", 0.0226, 753.1723},
        {18, 1, 63, 7, "x^3+1", 0.1696, 184.7342},
        {19, 1, 105, 15407, "x^3+1", 0.0245, 1592.1594},
        {20, 2, 11, 3, "1", 0.3837, 30.6655},
        {21, 2, 13, 3, "1", 0.4980, 20.0706},
        {22, 2, 14, 15, "1", 0.2886, 47.0488},
        {23, 2, 17, 3, "1", 0.4687, 29.7369},
        {24, 2, 20, 15, "x+1", 0.3372, 40.5521},
        {25, 2, 21, 21, "x^2+x+1", 0.2439, 88.0880},
        {26, 2, 22, 15, "1", 0.3778, 41.7085},
        {27, 2, 24, 105, "x^2+x+1", 0.1888, 70.8429},
        {28, 2, 25, 33, "1", 0.1726, 112.0939},
        {29, 2, 27, 3, "x^2+x+1", 0.0191, 997.8337},
        {30, 2, 30, 15015, "x^3+1", 0.0831, 278.7245},
        {31, 2, 33, 3, "x^2+x+1", 0.0603, 450.0562},
        {32, 2, 35, 33, "1", 0.0234, 1324.2348},
        {33, 2, 36, 1365, "x^2+x+1", 0.1018, 208.2453},
        {34, 2, 42, 105, "x^2+x+1", 0.0019, 16423.5219},
        {35, 2, 45, 4389, "x^3+1", 0.0711, 522.4620},
        {36, 2, 51, 3, "x^2+x+1", 0.0924, 467.2519},
        {37, 2, 63, 21, "x^3+1", 0.1738, 330.0547},
        {38, 3, 5, 1, "1", 0.3860, 25.3139},
        {39, 3, 9, 1, "x+1", 0.5619, 25.1366},
        {40, 3, 10, 3, "x+1", 0.4481, 26.5439},
        {41, 3, 12, 15, "x+1", 0.3241, 42.1078},
        {42, 3, 14, 21, "x^4+x^2+x+1", 0.1814, 73.6504, false},
        {43, 3, 15, 1, "x+1", 0.5732, 35.1497},
        {44, 3, 21, 511, "x^4+x^2+x+1", 0.0095, 2831.4159},
        {45, 4, 7, 3, "x+1", 0.4501, 30.8825},
        {46, 4, 9, 15, "x+1", 0.1044, 183.9925},
        {47, 4, 10, 15, "x+1", 0.0872, 196.9413},
        {48, 4, 11, 3, "x+1", 0.4817, 33.1426},
        {49, 4, 12, 15, "x+1", 0.1531, 113.0231},
        {50, 4, 13, 3, "x+1", 0.5454, 36.8396},
        {51, 4, 17, 3, "x+1", 0.5207, 53.8567},
        {52, 4, 18, 105, "x+1", 0.2595, 98.3310, true, 98.3399},
        {53, 4, 21, 15, "x+1", 0.1507, 234.1820},
        {54, 4, 30, 15, "x^15+1", 0.0858, 293.5170},
        {55, 4, 45, 105, "x^15+1", 0.2732, 203.3453},
        {56, 5, 3, 1, "1", 0.5721, 17.7323},
        {57, 5, 4, 3, "1", 0.2424, 39.1310, false},
        {58, 5, 5, 1, "x+1", 0.9310, 9.5184},
        {59, 5, 6, 3, "x+1", 0.4467, 26.6244},
        {60, 5, 31, 1, "x^31+1", 0.9289, 15.9958},
        {61, 6, 4, 15, "1", 0.4032, 24.3190},
        {62, 6, 5, 3, "x+1", 0.4477, 31.0381},
        {63, 6, 6, 15, "x+1", 0.2929, 53.2161},
        {64, 6, 7, 3, "x+1", 0.4582, 47.8293},
        {65, 6, 9, 3, "x+1", 0.3316, 77.3932},
        {66, 6, 10, 15, "x+1", 0.2108, 101.6394},
        {67, 6, 21, 21, "x+1", 0.1738, 330.0547},
        {68, 7, 3, 1, "x+1", 0.6925, 12.1086},
        {69, 7, 4, 3, "x+1", 0.4511, 21.9523},
        {70, 8, 3, 15, "1", 0.4111, 33.6258},
        {71, 8, 5, 3, "x+1", 0.1560, 123.8295},
        {72, 8, 6, 15, "x+1", 0.3875, 45.8714},
        {73, 8, 9, 15, "x+1", 0.2091, 131.1033},
        {74, 8, 15, 105, "x+1", 0.2621, 196.5840},
        {75, 9, 4, 15, "x+1", 0.3554, 32.9531},
        {76, 10, 3, 3, "x+1", 0.4448, 31.2294},
        {77, 10, 6, 15, "x+1", 0.2078, 103.0440},
        {78, 12, 3, 15, "x+1", 0.3544, 44.3251},
        {79, 12, 5, 15, "x+1", 0.2098, 121.1705},
        {80, 16, 3, 3, "x+1", 0.0031, 6210.5717},
        {81, 20, 3, 15, "x+1", 0.2117, 101.1816},
    };
    return rows;
}

std::vector<Table2RowReport> run_table2(const std::vector<uint32_t>& row_numbers, const arith::FactorBudget& budget,
                                        const arith::FactorHints* hints) {
    std::vector<Table2RowReport> out;
    for (const auto& fix : table2_fixtures()) {
        if (!row_numbers.empty() && std::find(row_numbers.begin(), row_numbers.end(), fix.no) == row_numbers.end())
            continue;
        Table2RowReport rep;
        rep.fix = fix;
        std::ostringstream note;
        auto ctx = sieve::make_context(2, fix.k2, fix.n, budget, hints);
        rep.factor_complete = ctx.order_fact.complete;
        if (!rep.factor_complete) {
            note << "blocked: q^n-1 factorization incomplete, unfactored cofactors:";
            for (const auto& u : ctx.order_fact.unfactored) note << " " << to_string(u);
            rep.note = note.str();
            rep.pass = false;
            out.push_back(std::move(rep));
            continue;
        }
        FqPoly g = parse::parse_fq_poly(*ctx.base, fix.g_text);
        rep.report = sieve::sieve_params(ctx, Int(static_cast<unsigned long>(fix.d)), g, 7);
        rep.holds6 = sieve::sieve_params(ctx, Int(static_cast<unsigned long>(fix.d)), g, 6).holds;

        rep.D_match = std::fabs(rep.report.D_real() - fix.D_printed) < 5e-4;
        double s_expect = fix.S_corrected != 0.0 ? fix.S_corrected : fix.S_printed;
        rep.S_match = rep.report.S && std::fabs(rep.report.S_real() - s_expect) < 5e-4;
        if (fix.S_corrected != 0.0)
            note << "printed S " << fix.S_printed << " is inconsistent with printed D; exact value "
                 << fix.S_corrected << ". ";
        if (!fix.holds7_expected)
            note << "M=7 inequality fails for this row (holds with M=6: " << (rep.holds6 ? "yes" : "no") << "). ";

        rep.pass = rep.D_match && rep.S_match && rep.report.holds == fix.holds7_expected;
        rep.note = note.str();
        out.push_back(std::move(rep));
    }
    return out;
}

// -------------------------------------------------------------------------
// Table 3 fixture: label | field spec | exponents of b | f

std::string table3_fixture_text() {
    return R"(# primitive normal pairs do not exist for these (q,n) and f
# label | field spec | primitive normal exponent list (powers of b) | f
(2,1)  | p=2,k=1,n=1,ext=x+1                            | 1 | (x^2+1)/(x^2+x+1)
(2,2)  | p=2,k=1,n=2,ext=x^2+x+1                        | 1,2 | (b*x^2)/(x^2+b)
(2,3)  | p=2,k=1,n=3,ext=x^3+x+1                        | 3,5,6 | (b*x^2)/(x^2+b)
(2,4)  | p=2,k=1,n=4,ext=x^4+x+1                        | 7,11,13,14 | (b*x^2)/(x^2+b)
(2,5)  | p=2,k=1,n=5,ext=x^5+x^2+1                      | 3,5,6,9,10,11,12,13,17,18,20,21,22,24,26 | (b*x^2+b*x+b^2)/(x^2+1)
(2,6)  | p=2,k=1,n=6,ext=x^6+x+1                        | 5,10,17,20,23,29,31,34,40,43,46,47,53,55,58,59,61,62 | (b*x^2+b^4)/(x^2+b^4*x+b^2)
(4,1)  | p=2,k=2,n=1,base=x^2+x+1,ext=x+a               | 1,2 | (a*x^2)/(x^2+a)
(4,2)  | p=2,k=2,n=2,base=x^2+x+1,ext=x^2+a*x+a         | 1,2,4,7,8,11,13,14 | (a*x^2+a)/(x^2+a*x)
(4,3)  | p=2,k=2,n=3,base=x^2+x+1,ext=x^3+a*x^2+a*x+a   | 1,2,4,8,11,16,22,23,25,29,32,37,43,44,46,50,53,58 | (a*x^2)/(x^2+a*x+a)
(8,1)  | p=2,k=3,n=1,base=x^3+x+1,ext=x+a               | 1,2,3,4,5,6 | (a*x^2+a*x+a+1)/(x^2+x+a)
(16,1) | p=2,k=4,n=1,base=x^4+x+1,ext=x+a               | 1,2,4,7,8,11,13,14 | (a*x^2+a^2)/(x^2+x+a^2)
)";
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<hunt::Table3Row> parse_table3_rows(const std::string& text) {
    std::vector<hunt::Table3Row> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (strip(line).empty()) continue;
        std::vector<std::string> parts;
        std::stringstream ls(line);
        std::string part;
        while (std::getline(ls, part, '|')) parts.push_back(strip(part));
        if (parts.size() != 4) throw std::runtime_error("table3 fixture: expected 4 fields in line: " + line);
        hunt::Table3Row row;
        row.label = parts[0];
        row.field_spec = parts[1];
        std::stringstream es(parts[2]);
        std::string tok;
        while (std::getline(es, tok, ',')) row.exponents.push_back(std::stoull(strip(tok)));
        row.f_text = parts[3];
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<hunt::Table3Row>& table3_fixtures() {
    static const std::vector<hunt::Table3Row> rows = parse_table3_rows(table3_fixture_text());
    return rows;
}

std::vector<hunt::Table3Row> load_table3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table 3 fixture file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table3_rows(buf.str());
}

std::vector<hunt::Table3Report> run_table3(const std::vector<uint32_t>& row_numbers, uint64_t budget,
                                           const std::vector<hunt::Table3Row>& rows) {
    std::vector<hunt::Table3Report> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        uint32_t no = static_cast<uint32_t>(i) + 1;
        if (!row_numbers.empty() && std::find(row_numbers.begin(), row_numbers.end(), no) == row_numbers.end())
            continue;
        out.push_back(hunt::verify_table3_row(rows[i], budget));
    }
    return out;
}

}  // namespace pnp::tables
