#include "spinorbit/certification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spinorbit/error.hpp"
#include "spinorbit/potential.hpp"

namespace spinorbit::certification {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return catalog::format_number(v);
}

std::string short_num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

nlohmann::ordered_json json_num(double v) {
    if (std::isinf(v)) return num(v);
    return v;
}

}  // namespace

int resonance_index(int p, int q) {
    if (p == 1 && q == 1) return 2;
    if (p == 3 && q == 2) return 3;
    throw InvalidArgument("certification: only the 1:1 and 3:2 resonances are supported, got " +
                          std::to_string(p) + ":" + std::to_string(q));
}

double green_norm_bound(double eta_hat) {
    const double half_pi = 0.5 * kPi;
    if (!(eta_hat >= 0.0 && eta_hat < 1.0 / half_pi))
        throw InvalidArgument("green_norm_bound: requires 0 <= eta_hat < 2/pi");
    return (1.0 + eta_hat * half_pi / (1.0 - eta_hat * half_pi)) * kPi * kPi / 8.0;
}

double green_eta_hat_cap() { return kPi / 5.0 * (10.0 / (kPi * kPi) - 1.0); }

double green_eta_cap(int q) {
    if (q < 1) throw InvalidArgument("green_eta_cap: q must be positive");
    return green_eta_hat_cap() / q;
}

double correction_bound(double e) { return 5.0 / std::pow(1.0 - e, 6); }

double range_margin(double e, double eps, int p, int q) {
    resonance_index(p, q);
    return std::pow(1.0 - e, 3) / (5.0 * q * q) - eps;
}

double nonempty_margin(double e, double eps, int p, int q) {
    const int j = resonance_index(p, q);
    const double alpha = potential::alpha_lower_bound(j, e);
    return 2.0 * std::pow(1.0 - e, 6) * alpha / (5.0 * q * q) - eps;
}

double eta_max(double e, double eps, double nu, int p, int q) {
    const int j = resonance_index(p, q);
    const double detuning = std::abs(q * nu - p);
    if (detuning == 0.0) return kUnconstrained;
    const double alpha = potential::alpha_lower_bound(j, e);
    const double bracket = 2.0 * alpha - static_cast<double>(q) * q * eps * correction_bound(e);
    if (bracket <= 0.0) return 0.0;
    return q * eps / detuning * bracket;
}

double guaranteed_half_width(const ResonanceParams &params) {
    const int j = resonance_index(params.p, params.q);
    return 2.0 * potential::alpha_lower_bound(j, params.e) -
           params.eps_hat * correction_bound(params.e);
}

CertificationReport certify(const std::string &name, int p, int q, double e, double eps,
                            double nu) {
    CertificationReport r;
    r.body_name = name;
    r.p = p;
    r.q = q;
    r.alpha_lower = potential::alpha_lower_bound(resonance_index(p, q), e);
    r.range_margin = range_margin(e, eps, p, q);
    r.nonempty_margin = nonempty_margin(e, eps, p, q);
    r.eta_bif_max = eta_max(e, eps, nu, p, q);
    r.eta_green_max = green_eta_cap(q);
    r.eta_admissible = std::min(r.eta_bif_max, r.eta_green_max);
    r.certified = r.alpha_lower > 0.0 && r.range_margin > 0.0 && r.nonempty_margin > 0.0 &&
                  r.eta_admissible > 0.0;
    return r;
}

CertificationReport certify(const Body &body) {
    const ResonanceParams params = catalog::resonance_params(body);
    return certify(body.name, body.p, body.q, params.e, params.eps, params.nu);
}

std::vector<CertificationReport> certify_all(const std::vector<Body> &bodies) {
    std::vector<std::future<CertificationReport>> jobs;
    jobs.reserve(bodies.size());
    for (const auto &b : bodies)
        jobs.push_back(std::async(std::launch::async, [&b] { return certify(b); }));
    std::vector<CertificationReport> out;
    out.reserve(bodies.size());
    for (auto &j : jobs) out.push_back(j.get());
    return out;
}

void write_reports(std::ostream &out, const std::vector<CertificationReport> &reports,
                   ReportFormat format) {
    switch (format) {
    case ReportFormat::Csv:
        out << "body,p,q,alpha_lower,range_margin,nonempty_margin,eta_bif_max,eta_green_max,"
               "eta_admissible,certified\n";
        for (const auto &r : reports)
            out << r.body_name << ',' << r.p << ',' << r.q << ',' << num(r.alpha_lower) << ','
                << num(r.range_margin) << ',' << num(r.nonempty_margin) << ','
                << num(r.eta_bif_max) << ',' << num(r.eta_green_max) << ','
                << num(r.eta_admissible) << ',' << (r.certified ? "true" : "false") << '\n';
        break;
    case ReportFormat::Json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &r : reports)
            arr.push_back({{"body", r.body_name},
                           {"p", r.p},
                           {"q", r.q},
                           {"alpha_lower", json_num(r.alpha_lower)},
                           {"range_margin", json_num(r.range_margin)},
                           {"nonempty_margin", json_num(r.nonempty_margin)},
                           {"eta_bif_max", json_num(r.eta_bif_max)},
                           {"eta_green_max", json_num(r.eta_green_max)},
                           {"eta_admissible", json_num(r.eta_admissible)},
                           {"certified", r.certified}});
        out << arr.dump(2) << '\n';
        break;
    }
    case ReportFormat::Markdown:
        out << "| Body | lower bound on \\|alpha_q\\| | range margin | non-empty margin "
               "| eta bifurcation max | eta Green max | eta admissible | certified |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const auto &r : reports)
            out << "| " << r.body_name << " (" << r.p << ':' << r.q << ") | "
                << short_num(r.alpha_lower) << " | " << short_num(r.range_margin) << " | "
                << short_num(r.nonempty_margin) << " | " << short_num(r.eta_bif_max) << " | "
                << short_num(r.eta_green_max) << " | " << short_num(r.eta_admissible) << " | "
                << (r.certified ? "yes" : "no") << " |\n";
        break;
    }
}

bool agree_to_significant_digits(double a, double b, int digits) {
    if (digits < 1) throw InvalidArgument("agree_to_significant_digits: digits must be >= 1");
    char ba[64];
    char bb[64];
    std::snprintf(ba, sizeof ba, "%.*e", digits - 1, a);
    std::snprintf(bb, sizeof bb, "%.*e", digits - 1, b);
    return std::string(ba) == std::string(bb);
}

std::vector<std::string> compare_with_reference(const std::vector<CertificationReport> &reports,
                                                const std::vector<ReferenceRow> &reference,
                                                int digits) {
    std::map<std::string, const CertificationReport *> by_name;
    for (const auto &r : reports) by_name[r.body_name] = &r;
    std::vector<std::string> mismatched;
    for (const auto &ref : reference) {
        const auto it = by_name.find(ref.body_name);
        if (it == by_name.end()) {
            mismatched.push_back(ref.body_name);
            continue;
        }
        const CertificationReport &r = *it->second;
        const bool ok = agree_to_significant_digits(r.alpha_lower, ref.alpha_lower, digits) &&
                        agree_to_significant_digits(r.range_margin, ref.range_margin, digits) &&
                        agree_to_significant_digits(r.nonempty_margin, ref.nonempty_margin,
                                                    digits) &&
                        agree_to_significant_digits(r.eta_bif_max, ref.eta_bif_max, digits);
        if (!ok) mismatched.push_back(ref.body_name);
    }
    return mismatched;
}

std::vector<ReferenceRow> load_reference(std::istream &in) {
    std::vector<ReferenceRow> rows;
    std::string line;
    int line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        std::istringstream cells(line);
        ReferenceRow row;
        std::string field;
        std::vector<std::string> f;
        while (std::getline(cells, field, ',')) f.push_back(field);
        if (f.size() != 5) throw ParseError("reference row needs 5 fields", line_no);
        try {
            row.body_name = f[0];
            row.alpha_lower = std::stod(f[1]);
            row.range_margin = std::stod(f[2]);
            row.nonempty_margin = std::stod(f[3]);
            row.eta_bif_max = std::stod(f[4]);
        } catch (const std::exception &) {
            throw ParseError("reference row has a malformed number", line_no);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace spinorbit::certification
