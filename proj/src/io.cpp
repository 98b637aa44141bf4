#include "r2quad/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "r2quad/errors.hpp"

namespace r2quad {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

double to_double(const std::string& tok, std::size_t line) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError(line, "not a number: '" + tok + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CoefficientTable parse_coefficients(std::istream& in) {
    CoefficientTable t;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty()) continue;
        if (s[0] == '#') {
            const auto toks = split(s.substr(1));
            if (toks.size() == 2 && toks[0] == "m1") t.m1 = to_double(toks[1], line);
            continue;
        }
        if (const auto h = s.find('#'); h != std::string::npos) s = trim(s.substr(0, h));
        const auto toks = split(s);
        if (toks.size() != 3) throw ParseError(line, "expected `k c_k d_{k+1}`");
        const double k = to_double(toks[0], line);
        if (k != static_cast<double>(t.c.size() + 1))
            throw ParseError(line, "expected row index " + std::to_string(t.c.size() + 1));
        t.c.push_back(to_double(toks[1], line));
        t.d_next.push_back(to_double(toks[2], line));
    }
    if (t.c.empty()) throw ParseError(line, "no coefficient rows");
    return t;
}

void write_coefficients(std::ostream& out, const CoefficientTable& table) {
    out << "# k c_k d_{k+1}\n";
    if (table.m1) out << "# m1 " << format_double(*table.m1) << "\n";
    for (std::size_t i = 0; i < table.c.size(); ++i)
        out << i + 1 << ' ' << format_double(table.c[i]) << ' ' << format_double(table.d_next[i]) << '\n';
}

VerblunskyData parse_verblunsky(std::istream& in) {
    VerblunskyData v;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto toks = split(s);
        if (!toks.empty() && toks[0] == "tau1") {
            if (toks.size() != 3) throw ParseError(line, "expected `tau1 re im`");
            if (!v.alpha.empty() || v.tau1) throw ParseError(line, "tau1 header must come first");
            v.tau1 = std::complex<double>(to_double(toks[1], line), to_double(toks[2], line));
            continue;
        }
        if (toks.size() != 2) throw ParseError(line, "expected `re im`");
        v.alpha.emplace_back(to_double(toks[0], line), to_double(toks[1], line));
    }
    return v;
}

void write_verblunsky(std::ostream& out, const VerblunskyData& data) {
    if (data.tau1) out << "tau1 " << format_double(data.tau1->real()) << ' ' << format_double(data.tau1->imag()) << '\n';
    for (const auto& a : data.alpha) out << format_double(a.real()) << ' ' << format_double(a.imag()) << '\n';
}

nlohmann::json to_json(const RealRule& rule) {
    nlohmann::json j;
    j["kind"] = "real_rule";
    j["family"] = rule.family;
    j["params"] = rule.params;
    j["n"] = rule.n;
    j["tol"] = rule.tol;
    j["method"] = to_string(rule.method);
    j["nodes"] = rule.nodes;
    j["weights"] = rule.weights;
    if (!rule.provenance.empty()) {
        nlohmann::json prov = nlohmann::json::array();
        for (const auto& r : rule.provenance) {
            nlohmann::json p{{"y0", r.y0}, {"lrf_iterations", r.lrf_iterations}, {"ip_iterations", r.ip_iterations}};
            if (r.ip_weight) p["ip_weight"] = *r.ip_weight;
            prov.push_back(p);
        }
        j["provenance"] = prov;
    }
    return j;
}

nlohmann::json to_json(const CircleRule& rule) {
    nlohmann::json j;
    j["kind"] = to_string(rule.kind);
    j["family"] = rule.family;
    j["params"] = rule.params;
    j["n_points"] = rule.n_points;
    j["epsilon"] = rule.epsilon;
    j["mass_at_one"] = rule.mass_at_one;
    std::vector<double> th, re, im;
    for (const auto& c : rule.nodes) {
        th.push_back(c.theta);
        re.push_back(c.re);
        im.push_back(c.im);
    }
    j["theta"] = th;
    j["re"] = re;
    j["im"] = im;
    j["weights"] = rule.weights;
    return j;
}

RealRule real_rule_from_json(const nlohmann::json& j) {
    try {
        if (j.at("kind") != "real_rule") throw ParseError(0, "not a real_rule record");
        RealRule r;
        r.family = j.at("family").get<std::string>();
        r.params = j.at("params").get<std::map<std::string, double>>();
        r.n = j.at("n").get<std::size_t>();
        r.tol = j.at("tol").get<double>();
        r.method = method_from_string(j.at("method").get<std::string>());
        r.nodes = j.at("nodes").get<std::vector<double>>();
        r.weights = j.at("weights").get<std::vector<double>>();
        if (r.nodes.size() != r.n || r.weights.size() != r.n) throw ParseError(0, "array length differs from n");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
}

CircleRule circle_rule_from_json(const nlohmann::json& j) {
    try {
        CircleRule r;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "mu_rule")
            r.kind = CircleKind::mu_rule;
        else if (kind == "nu_rule")
            r.kind = CircleKind::nu_rule;
        else
            throw ParseError(0, "not a circle rule record");
        r.family = j.at("family").get<std::string>();
        r.params = j.at("params").get<std::map<std::string, double>>();
        r.n_points = j.at("n_points").get<std::size_t>();
        r.epsilon = j.at("epsilon").get<double>();
        r.mass_at_one = j.at("mass_at_one").get<double>();
        const auto th = j.at("theta").get<std::vector<double>>();
        const auto re = j.at("re").get<std::vector<double>>();
        const auto im = j.at("im").get<std::vector<double>>();
        r.weights = j.at("weights").get<std::vector<double>>();
        if (th.size() != re.size() || th.size() != im.size() || th.size() != r.weights.size())
            throw ParseError(0, "array lengths differ");
        for (std::size_t k = 0; k < th.size(); ++k) r.nodes.push_back({th[k], re[k], im[k]});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
}

void write_csv(std::ostream& out, const RealRule& rule) {
    out << "k,x,weight\n";
    for (std::size_t k = 0; k < rule.n; ++k)
        out << k + 1 << ',' << format_double(rule.nodes[k]) << ',' << format_double(rule.weights[k]) << '\n';
}

void write_csv(std::ostream& out, const CircleRule& rule) {
    out << "k,theta,re,im,weight\n";
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const auto& c = rule.nodes[k];
        out << k + 1 << ',' << format_double(c.theta) << ',' << format_double(c.re) << ',' << format_double(c.im) << ','
            << format_double(rule.weights[k]) << '\n';
    }
    if (rule.kind == CircleKind::nu_rule)
        out << rule.nodes.size() + 1 << ",0,1,0," << format_double(rule.mass_at_one) << '\n';
}

}  // namespace r2quad
