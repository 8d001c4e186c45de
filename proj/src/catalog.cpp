#include "spinorbit/catalog.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "spinorbit/error.hpp"

namespace spinorbit {

ResonanceParams ResonanceParams::make(int p, int q, double e, double eps, double eta,
                                      double nu) {
    if (p < 1 || q < 1) throw InvalidArgument("resonance: p and q must be positive");
    if (std::gcd(p, q) != 1) throw InvalidArgument("resonance: p and q must be coprime");
    if (!(e >= 0.0 && e < 1.0)) throw InvalidArgument("resonance: requires 0 <= e < 1");
    if (!(eps >= 0.0)) throw InvalidArgument("resonance: eps must be non-negative");
    if (!(eta >= 0.0)) throw InvalidArgument("resonance: eta must be non-negative");
    if (!std::isfinite(nu)) throw InvalidArgument("resonance: nu must be finite");
    ResonanceParams r;
    r.p = p;
    r.q = q;
    r.e = e;
    r.eps = eps;
    r.eta = eta;
    r.nu = nu;
    r.eta_hat = q * eta;
    r.nu_hat = q * nu - p;
    r.eps_hat = static_cast<double>(q) * q * eps;
    return r;
}

namespace catalog {

namespace {

const char *const kColumns[] = {"name", "primary", "a_km", "b_km", "c_km", "e", "p", "q"};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string_view rest = line;
    while (true) {
        const auto pos = rest.find(',');
        out.push_back(trim(rest.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    return out;
}

double parse_double(const std::string &s, const char *field, int line) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw ParseError(std::string("field '") + field + "': not a number: '" + s + "'", line);
    return v;
}

int parse_int(const std::string &s, const char *field, int line) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw ParseError(std::string("field '") + field + "': not an integer: '" + s + "'", line);
    return v;
}

void validate_at(const Body &body, int line) {
    try {
        validate(body);
    } catch (const InvalidArgument &ex) {
        throw ParseError(ex.what(), line);
    }
}

std::vector<Body> parse_csv(std::istream &in) {
    std::vector<Body> bodies;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    bool with_k = false;
    std::set<std::string> names;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto cells = split(stripped);
        if (!header_seen) {
            with_k = cells.size() == 9;
            if (cells.size() != 8 && !with_k)
                throw ParseError("header must list name,primary,a_km,b_km,c_km,e,p,q[,K]", line_no);
            for (std::size_t i = 0; i < 8; ++i)
                if (cells[i] != kColumns[i])
                    throw ParseError("unexpected header column '" + cells[i] + "', expected '" +
                                         kColumns[i] + "'",
                                     line_no);
            if (with_k && cells[8] != "K")
                throw ParseError("unexpected header column '" + cells[8] + "', expected 'K'",
                                 line_no);
            header_seen = true;
            continue;
        }
        const std::size_t expected = with_k ? 9 : 8;
        if (cells.size() != expected)
            throw ParseError("expected " + std::to_string(expected) + " fields, found " +
                                 std::to_string(cells.size()),
                             line_no);
        Body b;
        b.name = cells[0];
        b.primary_name = cells[1];
        b.a = parse_double(cells[2], "a_km", line_no);
        b.b_radius = parse_double(cells[3], "b_km", line_no);
        b.c = parse_double(cells[4], "c_km", line_no);
        b.e = parse_double(cells[5], "e", line_no);
        b.p = parse_int(cells[6], "p", line_no);
        b.q = parse_int(cells[7], "q", line_no);
        if (with_k && !cells[8].empty()) b.K = parse_double(cells[8], "K", line_no);
        validate_at(b, line_no);
        if (!names.insert(b.name).second)
            throw ParseError("duplicate body name '" + b.name + "'", line_no);
        bodies.push_back(std::move(b));
    }
    if (!header_seen) throw ParseError("empty catalog: no header line");
    return bodies;
}

std::vector<Body> parse_json(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_array()) throw ParseError("JSON catalog must be an array of bodies");
    std::vector<Body> bodies;
    int row = 0;
    for (const auto &item : doc) {
        ++row;
        try {
            Body b;
            b.name = item.at("name").get<std::string>();
            b.primary_name = item.at("primary").get<std::string>();
            b.a = item.at("a_km").get<double>();
            b.b_radius = item.at("b_km").get<double>();
            b.c = item.at("c_km").get<double>();
            b.e = item.at("e").get<double>();
            b.p = item.at("p").get<int>();
            b.q = item.at("q").get<int>();
            if (item.contains("K") && !item.at("K").is_null()) b.K = item.at("K").get<double>();
            validate(b);
            bodies.push_back(std::move(b));
        } catch (const nlohmann::json::exception &ex) {
            throw ParseError("entry " + std::to_string(row) + ": " + ex.what());
        } catch (const InvalidArgument &ex) {
            throw ParseError("entry " + std::to_string(row) + ": " + ex.what());
        }
    }
    return bodies;
}

void check_unique(const std::vector<Body> &bodies) {
    std::set<std::string> seen;
    for (const auto &b : bodies)
        if (!seen.insert(b.name).second) throw ParseError("duplicate body name '" + b.name + "'");
}

}  // namespace

double oblateness(double a, double b_radius) {
    if (!(a > 0.0 && b_radius > 0.0)) throw InvalidArgument("oblateness: radii must be positive");
    if (a < b_radius) throw InvalidArgument("oblateness: requires a >= b");
    const double a2 = a * a;
    const double b2 = b_radius * b_radius;
    return 1.5 * (a2 - b2) / (a2 + b2);
}

double omega_of_e(double e) {
    if (!(e >= 0.0 && e < 1.0)) throw InvalidArgument("omega_of_e: requires 0 <= e < 1");
    const double e2 = e * e;
    return (1.0 + 3.0 * e2 + 0.375 * e2 * e2) / std::pow(1.0 - e2, 4.5);
}

double n_of_e(double e) {
    if (!(e >= 0.0 && e < 1.0)) throw InvalidArgument("n_of_e: requires 0 <= e < 1");
    const double e2 = e * e;
    return (1.0 + 7.5 * e2 + 5.625 * e2 * e2 + 0.3125 * e2 * e2 * e2) / std::pow(1.0 - e2, 6);
}

double nu_of_e(double e) {
    if (!(e >= 0.0 && e < 1.0)) throw InvalidArgument("nu_of_e: requires 0 <= e < 1");
    const double e2 = e * e;
    const double num = 1.0 + 7.5 * e2 + 5.625 * e2 * e2 + 0.3125 * e2 * e2 * e2;
    const double den = 1.0 + 3.0 * e2 + 0.375 * e2 * e2;
    return num / den / std::pow(1.0 - e2, 1.5);
}

ResonanceParams resonance_params(const Body &body, double eta) {
    validate(body);
    if (!(eta >= 0.0)) throw InvalidArgument("resonance_params: eta must be non-negative");
    return ResonanceParams::make(body.p, body.q, body.e, oblateness(body.a, body.b_radius), eta,
                                 nu_of_e(body.e));
}

void validate(const Body &body) {
    if (body.name.empty()) throw InvalidArgument("body name is empty");
    const std::string who = "body '" + body.name + "': ";
    if (!(body.b_radius > 0.0)) throw InvalidArgument(who + "b_km must be positive");
    if (!(body.a >= body.b_radius)) throw InvalidArgument(who + "requires a_km >= b_km");
    if (!(body.c > 0.0)) throw InvalidArgument(who + "c_km must be positive");
    if (!(body.e >= 0.0 && body.e < 1.0)) throw InvalidArgument(who + "requires 0 <= e < 1");
    if (body.p < 1 || body.q < 1) throw InvalidArgument(who + "p and q must be positive");
    if (std::gcd(body.p, body.q) != 1) throw InvalidArgument(who + "p and q must be coprime");
    if (body.K && !(*body.K >= 0.0)) throw InvalidArgument(who + "K must be non-negative");
}

std::vector<Body> load_catalog(std::istream &in, Format format) {
    auto bodies = format == Format::Json ? parse_json(in) : parse_csv(in);
    check_unique(bodies);
    return bodies;
}

std::vector<Body> load_catalog(std::string_view text, Format format) {
    std::istringstream in{std::string(text)};
    return load_catalog(in, format);
}

std::vector<Body> load_catalog_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog '" + path.string() + "'");
    const Format fmt = path.extension() == ".json" ? Format::Json : Format::Csv;
    try {
        return load_catalog(in, fmt);
    } catch (const ParseError &ex) {
        throw ParseError(path.string() + ": " + ex.what(), ex.line());
    }
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_catalog(std::ostream &out, const std::vector<Body> &bodies, Format format) {
    if (format == Format::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &b : bodies) {
            nlohmann::ordered_json j{{"name", b.name}, {"primary", b.primary_name},
                                     {"a_km", b.a},    {"b_km", b.b_radius},
                                     {"c_km", b.c},    {"e", b.e},
                                     {"p", b.p},       {"q", b.q}};
            if (b.K) j["K"] = *b.K;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    bool any_k = false;
    for (const auto &b : bodies) any_k = any_k || b.K.has_value();
    out << "name,primary,a_km,b_km,c_km,e,p,q" << (any_k ? ",K" : "") << '\n';
    for (const auto &b : bodies) {
        out << b.name << ',' << b.primary_name << ',' << format_number(b.a) << ','
            << format_number(b.b_radius) << ',' << format_number(b.c) << ','
            << format_number(b.e) << ',' << b.p << ',' << b.q;
        if (any_k) out << ',' << (b.K ? format_number(*b.K) : std::string());
        out << '\n';
    }
}

}  // namespace catalog
}  // namespace spinorbit
