#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "r2quad/coeff_maps.hpp"
#include "r2quad/errors.hpp"
#include "r2quad/families.hpp"
#include "r2quad/io.hpp"
#include "r2quad/quadrature.hpp"
#include "tables.hpp"

namespace r2quad::cli {

namespace {

using cd = std::complex<double>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyOpts {
    std::string name = "lebesgue";
    double lambda = 2.5;
    double eta = 2.0;
    std::string file;

    CoefficientFamily build() const {
        if (name == "lebesgue") return lebesgue_family();
        if (name == "crr") return crr_family(lambda, eta);
        if (file.empty()) throw UsageError("--family file needs --file");
        return custom_family(file);
    }
};

struct Options {
    FamilyOpts family;
    std::size_t n = 8;
    double tol = 1e-10;
    double delta = 1.0;
    std::string method = "lrf";
    std::string kind = "real";
    double epsilon = 0.0;
    std::string format = "json";
    std::string output;
    unsigned threads = 1;

    std::string integrand;
    std::vector<double> coeffs;
    double power = 0.0;
    std::string circle_rule = "nu";
    int m = 0;
    bool scale_by_tau = false;

    std::string map;
    std::string input;
    std::string source = "mu";
    std::vector<double> tau1;
    std::vector<double> integral;
    double quad_tol = 1e-10;

    int table_id = 0;
};

void add_family(CLI::App* sub, Options& o) {
    sub->add_option("--family", o.family.name, "lebesgue, crr or file")
        ->check(CLI::IsMember({"lebesgue", "crr", "file"}));
    sub->add_option("--lambda", o.family.lambda, "CRR parameter lambda (> -1/2)");
    sub->add_option("--eta", o.family.eta, "CRR parameter eta");
    sub->add_option("--file", o.family.file, "coefficient file with rows `k c_k d_{k+1}`");
}

void add_rule_shape(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "degree")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "root-finding tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--delta", o.delta, "multiplier of the gap used for the next start point")->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "worker threads for weight assembly");
}

RootFindConfig root_config(const Options& o) {
    RootFindConfig cfg;
    cfg.tol = o.tol;
    cfg.delta = o.delta;
    cfg.method = method_from_string(o.method);
    cfg.threads = std::max(1u, o.threads);
    return cfg;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void text_table(std::ostream& out, const RealRule& r) {
    out << "# " << r.family;
    for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
    out << "  n=" << r.n << "  method=" << to_string(r.method) << '\n';
    const bool ip = r.method != Method::lrf;
    out << (ip ? " k           y0   j   ip           x                  weight\n"
               : " k           y0   j            x                  weight\n");
    for (std::size_t i = 0; i < r.n; ++i) {
        char line[160];
        const NodeRecord* p = i < r.provenance.size() ? &r.provenance[i] : nullptr;
        const double y0 = p ? p->y0 : std::nan("");
        const long j = p ? static_cast<long>(p->lrf_iterations) : -1;
        if (ip)
            std::snprintf(line, sizeof line, "%2zu  %12.8f  %2ld  %2ld  %18.12f  %22.15e\n", i + 1, y0, j,
                          p ? static_cast<long>(p->ip_iterations) : -1L, r.nodes[i], r.weights[i]);
        else
            std::snprintf(line, sizeof line, "%2zu  %12.8f  %2ld  %18.12f  %22.15e\n", i + 1, y0, j, r.nodes[i],
                          r.weights[i]);
        out << line;
    }
}

void text_table(std::ostream& out, const CircleRule& r) {
    out << "# " << r.family << "  " << to_string(r.kind) << "  points=" << r.n_points << "  epsilon=" << r.epsilon
        << '\n';
    out << " k        theta                 re                   im                 weight\n";
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        char line[160];
        const auto& c = r.nodes[i];
        std::snprintf(line, sizeof line, "%2zu  %18.14f  %19.15f  %19.15f  %22.15e\n", i + 1, c.theta, c.re, c.im,
                      r.weights[i]);
        out << line;
    }
    if (r.kind == CircleKind::nu_rule) {
        char line[160];
        std::snprintf(line, sizeof line, "%2zu  %18.14f  %19.15f  %19.15f  %22.15e\n", r.nodes.size() + 1, 0.0, 1.0,
                      0.0, r.mass_at_one);
        out << line;
    }
}

template <class Rule>
void emit_rule(std::ostream& out, const Options& o, const Rule& r) {
    if (o.format == "json")
        out << to_json(r).dump(2) << '\n';
    else if (o.format == "csv")
        write_csv(out, r);
    else
        text_table(out, r);
}

void emit_value(std::ostream& out, const Options& o, const std::string& what, cd v) {
    if (o.format == "json") {
        nlohmann::json j{{"integrand", what}, {"n", o.n}, {"re", v.real()}, {"im", v.imag()}};
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "integrand,n,re,im\n" << what << ',' << o.n << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << '\n';
    } else {
        out << what << "  n=" << o.n << "  " << fmt("%.15e", v.real());
        if (v.imag() != 0.0) out << " + i " << fmt("%.15e", v.imag());
        out << '\n';
    }
}

int cmd_rule(const Options& o, std::ostream& out) {
    const auto fam = o.family.build();
    const RootFindConfig cfg = root_config(o);
    if (o.kind == "real") {
        emit_rule(out, o, real_rule(fam, o.n, cfg));
    } else if (o.kind == "mu") {
        emit_rule(out, o, circle_rule_mu(fam, o.n, cfg));
    } else {
        emit_rule(out, o, circle_rule_nu(fam, o.n, o.epsilon, cfg));
    }
    return 0;
}

int cmd_integrate_real(const Options& o, std::ostream& out) {
    const auto fam = o.family.build();
    const RealRule rule = real_rule(fam, o.n, root_config(o));
    std::function<double(double)> f;
    if (o.integrand == "gauss-rational") {
        if (fam.name() != "lebesgue") throw UsageError("--integrand gauss-rational is defined for --family lebesgue");
        // (x^2+1)^{-8} e^{-x^2} dx written against dx / (pi (1+x^2))
        f = [](double x) { return M_PI * std::pow(x * x + 1.0, -7.0) * std::exp(-x * x); };
    } else if (o.integrand == "one") {
        f = [](double) { return 1.0; };
    } else {
        if (o.coeffs.empty()) throw UsageError("--integrand poly needs --coeffs");
        const auto a = o.coeffs;
        const double p = o.power;
        f = [a, p](double x) {
            double s = 0.0;
            for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * x + *it;
            return s * std::pow(x * x + 1.0, -p);
        };
    }
    emit_value(out, o, o.integrand, integrate_real(rule, f));
    return 0;
}

int cmd_integrate_circle(const Options& o, std::ostream& out) {
    if (o.circle_rule == "mu" && o.epsilon != 0.0) throw UsageError("--epsilon applies only to --rule nu");
    const auto fam = o.family.build();
    const RootFindConfig cfg = root_config(o);
    const CircleRule rule =
        o.circle_rule == "mu" ? circle_rule_mu(fam, o.n, cfg) : circle_rule_nu(fam, o.n, o.epsilon, cfg);

    cd v;
    if (o.integrand == "F1") {
        v = integrate_circle(rule, [](cd z) { return z * std::sin(z) / (4.0 - z); });
    } else if (o.integrand == "F2") {
        // z^{3/2} with arg z in [0, 2 pi)
        v = rule.mass_at_one * std::sin(1.0) / 3.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const cd z = rule.nodes[k].z();
            v += rule.weights[k] * std::polar(1.0, 1.5 * rule.nodes[k].theta) * std::sin(z) / (4.0 - z);
        }
    } else if (o.integrand == "F2hat") {
        v = integrate_circle(rule, [](cd z) { return (z - 1.0) * z * std::sin(z) / (4.0 - z); });
    } else if (o.integrand == "one") {
        v = integrate_circle(rule, [](cd) { return cd(1.0); });
    } else {
        const int m = o.m;
        v = integrate_circle(rule, [m](cd z) { return std::pow(z, m); });
    }
    if (o.scale_by_tau) {
        if (fam.name() != "crr") throw UsageError("--scale-by-tau is defined for --family crr");
        v /= crr_tau(fam.params().at("lambda"), fam.params().at("eta"));
    }
    emit_value(out, o, o.integrand, v);
    return 0;
}

std::optional<cd> parse_pair(const std::vector<double>& v, const char* flag) {
    if (v.empty()) return std::nullopt;
    if (v.size() != 2) throw UsageError(std::string(flag) + " takes two numbers: re im");
    return cd(v[0], v[1]);
}

VerblunskyData read_verblunsky(const std::string& path) {
    if (path.empty()) throw UsageError("--input is required for this map");
    std::ifstream in(path);
    if (!in) throw UsageError("--input: cannot open " + path);
    return parse_verblunsky(in);
}

void write_table(std::ostream& out, const Options& o, const std::vector<double>& c, const std::vector<double>& d_next,
                 const nlohmann::json& extra) {
    if (o.format == "json") {
        nlohmann::json j = extra;
        j["c"] = c;
        j["d_next"] = d_next;
        out << j.dump(2) << '\n';
        return;
    }
    CoefficientTable t;
    t.c.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d_next.size()));
    t.d_next = d_next;
    write_coefficients(out, t);
}

int cmd_coeffs(const Options& o, std::ostream& out) {
    if (o.map == "to-verblunsky") {
        const auto fam = o.family.build();
        const VerblunskySeq s = o.source == "mu" ? verblunsky_from_coeffs(fam, o.n) : verblunsky_nu0_from_coeffs(fam, o.n);
        VerblunskyData data;
        data.alpha = s.alpha;
        if (s.source == VerblunskySource::mu) data.tau1 = s.tau1_seed;
        if (o.format == "json") {
            nlohmann::json j;
            j["source"] = o.source;
            std::vector<double> re, im;
            for (const auto& a : s.alpha) {
                re.push_back(a.real());
                im.push_back(a.imag());
            }
            j["alpha_re"] = re;
            j["alpha_im"] = im;
            if (data.tau1) j["tau1"] = {data.tau1->real(), data.tau1->imag()};
            out << j.dump(2) << '\n';
        } else {
            write_verblunsky(out, data);
        }
        return 0;
    }
    if (o.map == "from-verblunsky-mu") {
        const VerblunskyData data = read_verblunsky(o.input);
        std::optional<cd> tau1 = parse_pair(o.tau1, "--tau1");
        if (const auto I = parse_pair(o.integral, "--I")) tau1 = tau1_from_integral(*I);
        if (!tau1) tau1 = data.tau1;
        if (!tau1) throw UsageError("from-verblunsky-mu needs --tau1, --I or a tau1 header in --input");
        const std::size_t n = data.alpha.size();
        const MuInverse r = coeffs_from_verblunsky_mu(data.alpha, *tau1, n);
        std::vector<double> d;
        double prev = 0.0;
        for (double l : r.ell) {
            d.push_back((1.0 - prev) * l);
            prev = l;
        }
        write_table(out, o, r.c, d, {{"ell", r.ell}});
        return 0;
    }
    if (o.map == "from-verblunsky-nu") {
        const VerblunskyData data = read_verblunsky(o.input);
        const NuInverse r = coeffs_from_verblunsky_nu(data.alpha, data.alpha.size());
        write_table(out, o, r.c, r.d, {{"g", r.g}});
        if (o.format != "json" && !r.c.empty()) out << "# c_" << r.c.size() << ' ' << format_double(r.c.back()) << '\n';
        return 0;
    }
    const auto fam = o.family.build();
    const MeasureCoeffs r = coeffs_from_measure(family_integrator(fam), o.n, o.quad_tol);
    write_table(out, o, r.c, r.d, {{"gamma0", r.gamma0}});
    return 0;
}

int dispatch(CLI::App& app, CLI::App* sub_rule, CLI::App* sub_ir, CLI::App* sub_ic, CLI::App* sub_co,
             CLI::App* sub_tab, const Options& o, std::ostream& out, std::ostream& err) {
    if (*sub_tab) {
        const bool ok = reproduce_table(o.table_id, out);
        if (!ok) err << "reproduce-table: table " << o.table_id << " missed its tolerances\n";
        return ok ? 0 : 1;
    }
    if (*sub_rule) return cmd_rule(o, out);
    if (*sub_ir) return cmd_integrate_real(o, out);
    if (*sub_ic) return cmd_integrate_circle(o, out);
    if (*sub_co) return cmd_coeffs(o, out);
    err << app.help();
    return 2;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("R2QUAD_THREADS")) {
        const long t = std::strtol(env, nullptr, 10);
        if (t > 0) o.threads = static_cast<unsigned>(t);
    }

    CLI::App app{"Quadrature rules from R_II recurrences on the real line and the unit circle", "r2quad"};
    app.require_subcommand(1);

    auto* sub_rule = app.add_subcommand("rule", "construct a quadrature rule");
    add_family(sub_rule, o);
    add_rule_shape(sub_rule, o);
    sub_rule->add_option("--method", o.method, "lrf, ip or hybrid")->check(CLI::IsMember({"lrf", "ip", "hybrid"}));
    sub_rule->add_option("--kind", o.kind, "real, mu or nu")->check(CLI::IsMember({"real", "mu", "nu"}));
    auto* eps_rule = sub_rule->add_option("--epsilon", o.epsilon, "mass at zeta = 1 (nu rules only)")
                         ->check(CLI::Range(0.0, 1.0));
    sub_rule->add_option("--format", o.format, "json, csv or text-table")
        ->check(CLI::IsMember({"json", "csv", "text-table"}));
    sub_rule->add_option("--output", o.output, "write to this file instead of stdout");

    auto* sub_ir = app.add_subcommand("integrate-real", "apply a real-line rule to a named integrand");
    add_family(sub_ir, o);
    add_rule_shape(sub_ir, o);
    sub_ir->add_option("--integrand", o.integrand, "gauss-rational, one or poly")
        ->required()
        ->check(CLI::IsMember({"gauss-rational", "one", "poly"}));
    sub_ir->add_option("--coeffs", o.coeffs, "polynomial coefficients a_0 a_1 ... for poly")->delimiter(',');
    sub_ir->add_option("--power", o.power, "denominator power m in (x^2+1)^m for poly");
    sub_ir->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text-table"}));
    sub_ir->add_option("--output", o.output, "write to this file instead of stdout");

    auto* sub_ic = app.add_subcommand("integrate-circle", "apply a unit-circle rule to a named integrand");
    add_family(sub_ic, o);
    add_rule_shape(sub_ic, o);
    sub_ic->add_option("--rule", o.circle_rule, "mu or nu")->check(CLI::IsMember({"mu", "nu"}));
    sub_ic->add_option("--epsilon", o.epsilon)->check(CLI::Range(0.0, 1.0));
    sub_ic->add_option("--integrand", o.integrand, "F1, F2, F2hat, one or monomial")
        ->required()
        ->check(CLI::IsMember({"F1", "F2", "F2hat", "one", "monomial"}));
    sub_ic->add_option("--m", o.m, "exponent for monomial");
    sub_ic->add_flag("--scale-by-tau", o.scale_by_tau, "divide by tau(b) of the CRR family");
    sub_ic->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text-table"}));
    sub_ic->add_option("--output", o.output, "write to this file instead of stdout");

    auto* sub_co = app.add_subcommand("coeffs", "coefficient and Verblunsky maps");
    add_family(sub_co, o);
    sub_co->add_option("--n", o.n, "number of coefficients")->check(CLI::PositiveNumber);
    sub_co->add_option("--map", o.map)
        ->required()
        ->check(CLI::IsMember({"to-verblunsky", "from-verblunsky-mu", "from-verblunsky-nu", "from-measure"}));
    sub_co->add_option("--input", o.input, "Verblunsky file: optional `tau1 re im`, then `re im` rows");
    sub_co->add_option("--source", o.source, "mu or nu for to-verblunsky")->check(CLI::IsMember({"mu", "nu"}));
    sub_co->add_option("--tau1", o.tau1, "tau_1 as re,im")->delimiter(',')->expected(2);
    sub_co->add_option("--I", o.integral, "I(mu) as re,im")->delimiter(',')->expected(2);
    sub_co->add_option("--quad-tol", o.quad_tol, "integration tolerance for from-measure")->check(CLI::PositiveNumber);
    sub_co->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text", "text-table"}));
    sub_co->add_option("--output", o.output, "write to this file instead of stdout");

    auto* sub_tab = app.add_subcommand("reproduce-table", "recompute a published table and check it");
    sub_tab->add_option("--id", o.table_id, "table number 1..10")->required()->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
        if (sub_rule->parsed() && eps_rule->count() > 0 && o.kind != "nu")
            throw CLI::ValidationError("--epsilon", "only valid together with --kind nu");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
        file = std::make_unique<std::ofstream>(o.output);
        if (!*file) {
            err << "--output: cannot open " << o.output << '\n';
            return 2;
        }
        sink = file.get();
    }

    try {
        return dispatch(app, sub_rule, sub_ir, sub_ic, sub_co, sub_tab, o, *sink, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace r2quad::cli
