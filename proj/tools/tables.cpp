#include "tables.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "r2quad/families.hpp"
#include "r2quad/quadrature.hpp"
#include "r2quad/root_finder.hpp"

namespace r2quad::cli {

namespace {

using cd = std::complex<double>;

struct SeedRow {
    double y0;
    int j;
    double x;
};

// Lebesgue n = 15, positive zeros x_{15,7} .. x_{15,1}.
const std::vector<SeedRow> kLebesgueLrf = {
    {0.1000000000, 5, 0.19891236737966}, {0.3978247347, 3, 0.41421356237310}, {0.6295147573, 4, 0.66817863791930},
    {0.9221437134, 4, 1.00000000000000}, {1.3318213620, 4, 1.49660576266549}, {1.9932115253, 4, 2.41421356237309},
    {3.3318213620, 5, 5.02733949212585},
};

struct HybridRow {
    double y0;
    int j;
    int k;
    double x;
};

const std::vector<HybridRow> kLebesgueHybrid = {
    {0.10000000000, 3, 3, 0.19891236737966}, {0.39782473476, 2, 3, 0.41421356237310},
    {0.62951475737, 2, 3, 0.66817863791930}, {0.92214371347, 2, 3, 1.00000000000000},
    {1.33182136208, 3, 1, 1.49660576266549}, {1.99321152533, 3, 3, 2.41421356237309},
    {3.33182136208, 4, 1, 5.02733949212585},
};

struct CrrRow {
    int k;
    double y0;
    int j;
    double x;
    double w;
};

struct CrrTable {
    double lambda;
    double eta;
    int n;
    std::vector<CrrRow> rows;  // k = n .. 1
};

const CrrTable kTable3 = {2.5, 2.0, 8,
                          {{8, -0.71588, 4, -0.860951902, 0.001435559},
                           {7, -0.20000, 4, -0.395455713, 0.013120781},
                           {6, 0.00000, 4, -0.075029910, 0.057779655},
                           {5, 0.00000, 6, 0.211994598, 0.155038062},
                           {4, 0.30000, 3, 0.519849212, 0.268406695},
                           {3, 0.82770, 4, 0.909786866, 0.291154810},
                           {2, 1.29972, 4, 1.509028782, 0.173690345},
                           {1, 2.10827, 4, 2.752206638, 0.039041093}}};

const CrrTable kTable4 = {2.5, 2.0, 15,
                          {{15, -1.41686, 4, -1.672044257, 0.000036057},
                           {14, -0.96894, 4, -1.066959532, 0.000311365},
                           {13, -0.67016, 4, -0.717060414, 0.001519919},
                           {12, -0.44218, 4, -0.465177200, 0.005341485},
                           {11, -0.15000, 4, -0.260191665, 0.014845009},
                           {10, 0.00000, 5, -0.078205917, 0.034128298},
                           {9, 0.00000, 5, 0.095146340, 0.066361078},
                           {8, 0.15000, 4, 0.270925228, 0.110088169},
                           {7, 0.44670, 3, 0.460151608, 0.155554797},
                           {6, 0.64938, 4, 0.676720369, 0.185015149},
                           {5, 0.89329, 4, 0.941766842, 0.180719442},
                           {4, 1.20681, 4, 1.292753697, 0.138672540},
                           {3, 1.64374, 4, 1.807020312, 0.077127555},
                           {2, 2.32129, 4, 2.679413438, 0.026491638},
                           {1, 3.55181, 4, 4.607169720, 0.003769069}}};

const CrrTable kTable5 = {2.0, 2.0, 8,
                          {{8, -0.71475, 4, -0.866362671, 0.001409047},
                           {7, -0.20000, 4, -0.385089950, 0.011285827},
                           {6, 0.00000, 4, -0.055426036, 0.047818577},
                           {5, 0.00000, 6, 0.242186897, 0.131133033},
                           {4, 0.30000, 3, 0.567035907, 0.243675010},
                           {3, 0.89188, 4, 0.990130503, 0.296947815},
                           {2, 1.41323, 4, 1.668212121, 0.208595193},
                           {1, 2.34629, 4, 3.172646563, 0.058358497}}};

const CrrTable kTable6 = {2.0, 2.0, 15,
                          {{15, -1.43682, 4, -1.709139557, 0.000047582},
                           {14, -0.97423, 4, -1.076874551, 0.000329605},
                           {13, -0.66851, 4, -0.716927042, 0.001407835},
                           {12, -0.43632, 4, -0.459623282, 0.004551300},
                           {11, -0.15000, 4, -0.250739572, 0.012058883},
                           {10, 0.00000, 4, -0.065156395, 0.027196733},
                           {9, 0.00000, 5, 0.112221377, 0.053180697},
                           {8, 0.15000, 4, 0.293142015, 0.090767684},
                           {7, 0.47406, 3, 0.489563410, 0.134906482},
                           {6, 0.68598, 4, 0.716961300, 0.172611607},
                           {5, 0.94436, 4, 0.999518459, 0.185747261},
                           {4, 1.28208, 4, 1.381314327, 0.161215301},
                           {3, 1.76311, 4, 1.956293085, 0.104560922},
                           {2, 2.53127, 4, 2.970861856, 0.043473255},
                           {1, 3.98543, 4, 5.358584571, 0.007880354}}};

struct IntegralRow {
    int n;
    double value;
    double err;
};

constexpr double kExactI = 0.6133229495946;
const std::vector<IntegralRow> kTable7 = {
    {6, 0.61228678065306, 1.0e-3}, {10, 0.61332311526782, 1.6e-7}, {12, 0.61332296550298, 1.5e-8}, {15, 0.61332294881837, 7.7e-10}};

struct CircleRow {
    int n;
    cd value;
    double err;
};

const cd kExactS1{3.52677323641868e-2, 2.86020606590488e-2};
const cd kExactS2{0.33606707423377e-2, 2.80064202619193e-2};

const std::vector<CircleRow> kTable8 = {{8, {3.52677470437557e-02, 2.86021897172897e-02}, 1.3e-7},
                                        {15, {3.52677323654955e-02, 2.86020606599670e-02}, 1.6e-12}};
const std::vector<CircleRow> kTable9 = {{8, {3.36088971644750e-03, 2.80129450967408e-02}, 6.5e-6},
                                        {15, {3.36059488687229e-03, 2.80065722184178e-02}, 1.7e-7}};
const std::vector<CircleRow> kTable10 = {{8, {3.36106005666877e-03, 2.80065917218239e-02}, 4.3e-7},
                                         {15, {3.36067074166006e-03, 2.80064202570487e-02}, 4.9e-12}};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string fmt_i(long v) { return std::to_string(v); }

const char* mark(bool ok) { return ok ? "ok" : "MISS"; }

bool within_factor_two(double got, double want) { return got <= 2.0 * want && got >= 0.5 * want; }

bool counts_close(std::size_t got, int want) { return std::abs(static_cast<long>(got) - want) <= 1; }

bool table1(std::ostream& out) {
    const auto fam = lebesgue_family();
    RootFindConfig cfg;
    bool ok = true;
    out << "zero      y0             j(ref) j    y_j             reference          check\n";
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < kLebesgueLrf.size(); ++i) {
        const auto& row = kLebesgueLrf[i];
        const LrfResult r = lrf_find_zero(fam, 15, row.y0, Direction::plus, cfg);
        const bool good = std::abs(r.zero - row.x) < 1e-10 && counts_close(r.iterations, row.j);
        ok = ok && good;
        out << "x_{15," << 7 - i << "}  " << fmt("%.10f", row.y0) << "   " << row.j << "      " << r.iterations
            << "    " << fmt("%.10f", r.zero) << "    " << fmt("%.14f", row.x) << "   " << mark(good) << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << "elapsed " << fmt("%.4f", secs) << " s\n";
    return ok;
}

bool table2(std::ostream& out) {
    const auto fam = lebesgue_family();
    RootFindConfig fine;
    RootFindConfig coarse;
    coarse.tol = fine.hybrid_switch_tol;
    bool ok = true;
    out << "zero      y0              j(ref) j   k(ref) k   y_k            weight          check\n";
    for (std::size_t i = 0; i < kLebesgueHybrid.size(); ++i) {
        const auto& row = kLebesgueHybrid[i];
        const LrfResult lr = lrf_find_zero(fam, 15, row.y0, Direction::plus, coarse);
        const IpResult ip = ip_refine(fam, 15, lr.zero, fine);
        const bool good = std::abs(ip.zero - row.x) < 1e-10 && std::abs(ip.weight - 0.0625) < 1e-9 &&
                          counts_close(lr.iterations, row.j) && counts_close(ip.iterations, row.k);
        ok = ok && good;
        out << "x_{15," << 7 - i << "}  " << fmt("%.11f", row.y0) << "   " << row.j << "      " << lr.iterations
            << "   " << row.k << "      " << ip.iterations << "   " << fmt("%.10f", ip.zero) << "   "
            << fmt("%.12f", ip.weight) << "  " << mark(good) << "\n";
    }
    return ok;
}

bool crr_table(const CrrTable& t, std::ostream& out) {
    const auto fam = crr_family(t.lambda, t.eta);
    RootFindConfig cfg;
    const RealRule rule = real_rule(fam, static_cast<std::size_t>(t.n), cfg);
    const double m1 = fam.chain_params(t.n).m1;
    bool ok = true;
    out << "lambda = " << t.lambda << ", eta = " << t.eta << ", n = " << t.n << "\n";
    out << " k    y0        j(ref) j(seed)   x_{n,k}         weight          ref x          ref w         check\n";
    for (const auto& row : t.rows) {
        const std::size_t idx = static_cast<std::size_t>(row.k - 1);
        const double x = rule.nodes[idx];
        const double w = rule.weights[idx];
        // the same zero started from the published seed
        const Direction dir = row.x > row.y0 ? Direction::plus : Direction::minus;
        std::string seeded = "-";
        try {
            const LrfResult lr = lrf_find_zero(fam, t.n, row.y0, dir, cfg);
            if (std::abs(lr.zero - row.x) < 1e-8) seeded = fmt_i(static_cast<long>(lr.iterations));
            (void)formula_weight(fam, lr.scaled, m1);
        } catch (const std::exception&) {
        }
        const bool good = std::abs(x - row.x) < 5e-10 && std::abs(w - row.w) < 5e-10;
        ok = ok && good;
        char line[200];
        std::snprintf(line, sizeof line, "%2d  %9.5f   %d      %-7s %14.9f  %14.9f  %14.9f %14.9f  %s\n", row.k, row.y0,
                      row.j, seeded.c_str(), x, w, row.x, row.w, mark(good));
        out << line;
    }
    return ok;
}

bool table7(std::ostream& out) {
    const auto fam = lebesgue_family();
    bool ok = true;
    out << " n   I_n                 ref                 |I-I_n|   ref err  check\n";
    for (const auto& row : kTable7) {
        const RealRule rule = real_rule(fam, static_cast<std::size_t>(row.n));
        const double I = integrate_real(rule, [](double x) {
            return std::numbers::pi * std::pow(x * x + 1.0, -7.0) * std::exp(-x * x);
        });
        const double err = std::abs(kExactI - I);
        const bool good = std::abs(I - row.value) < 1e-11 && within_factor_two(err, row.err);
        ok = ok && good;
        char line[160];
        std::snprintf(line, sizeof line, "%2d  %.14f    %.14f    %.1e   %.1e   %s\n", row.n, I, row.value, err, row.err,
                      mark(good));
        out << line;
    }
    return ok;
}

cd sum_F1(const CircleRule& r) {
    return integrate_circle(r, [](cd z) { return z * std::sin(z) / (4.0 - z); });
}

// zeta^1.5 with the angle of zeta taken in [0, 2 pi)
cd sum_F2(const CircleRule& r) {
    cd s = r.mass_at_one * std::sin(1.0) / 3.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
        const cd z = r.nodes[k].z();
        s += r.weights[k] * std::polar(1.0, 1.5 * r.nodes[k].theta) * std::sin(z) / (4.0 - z);
    }
    return s;
}

cd sum_F2hat(const CircleRule& r) {
    return integrate_circle(r, [](cd z) { return (z - 1.0) * z * std::sin(z) / (4.0 - z); });
}

bool circle_table(const std::vector<CircleRow>& rows, double lambda, cd (*sum)(const CircleRule&), cd exact,
                  double value_tol, std::ostream& out) {
    const auto fam = crr_family(lambda, 2.0);
    const cd tau = crr_tau(lambda, 2.0);
    bool ok = true;
    out << "tau(" << lambda << "+2i) = " << fmt("%.14f", tau.real()) << " + " << fmt("%.14f", tau.imag()) << "i\n";
    out << "(n+1)   approximation                                  |S-approx|  ref err  check\n";
    for (const auto& row : rows) {
        const CircleRule rule = circle_rule_nu(fam, static_cast<std::size_t>(row.n), 0.0);
        const cd v = sum(rule) / tau;
        const double err = std::abs(v - exact);
        const bool value_ok = std::abs(v.real() - row.value.real()) < value_tol &&
                              std::abs(v.imag() - row.value.imag()) < value_tol;
        // only errors well above rounding level are meaningful to compare
        const bool err_ok = row.err < 1e-10 || within_factor_two(err, row.err);
        const bool good = value_ok && err_ok;
        ok = ok && good;
        char line[200];
        std::snprintf(line, sizeof line, "(%d+1)  %.14e + i %.14e   %.1e   %.1e  %s\n", row.n, v.real(), v.imag(), err,
                      row.err, mark(good));
        out << line;
    }
    return ok;
}

}  // namespace

bool reproduce_table(int id, std::ostream& out) {
    out << "table " << id << "\n";
    bool ok = false;
    switch (id) {
        case 1: ok = table1(out); break;
        case 2: ok = table2(out); break;
        case 3: ok = crr_table(kTable3, out); break;
        case 4: ok = crr_table(kTable4, out); break;
        case 5: ok = crr_table(kTable5, out); break;
        case 6: ok = crr_table(kTable6, out); break;
        case 7: ok = table7(out); break;
        case 8: ok = circle_table(kTable8, 2.5, sum_F1, kExactS1, 1e-11, out); break;
        case 9: ok = circle_table(kTable9, 2.5, sum_F2, kExactS2, 1e-11, out); break;
        case 10: ok = circle_table(kTable10, 2.0, sum_F2hat, kExactS2, 1e-11, out); break;
        default: return false;
    }
    out << (ok ? "all entries within tolerance\n" : "some entries missed their tolerance\n");
    return ok;
}

}  // namespace r2quad::cli
