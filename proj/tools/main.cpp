#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffext/budget.hpp"
#include "ffext/extensions.hpp"
#include "ffext/kottwitz.hpp"
#include "ffext/minute.hpp"
#include "ffext/polygon.hpp"
#include "ffext/strata.hpp"

namespace {

using ffext::HNPolygon;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

json polygons_to_json(const std::vector<HNPolygon>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(ffext::format_polygon(p));
    return arr;
}

json witness_to_json(const ffext::PathWitness& w) {
    json b = json::array();
    for (const auto& x : w.b) b.push_back(x.str());
    return json{{"h_positions", w.h_positions}, {"k_positions", w.k_positions}, {"b", b}};
}

// "(1,1,0,0)" or "(1^(2),0^(2))": weakly decreasing integers, repeats allowed.
std::vector<std::int64_t> parse_int_vector(const std::string& text) {
    std::string inner = text;
    auto strip = [](std::string s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        return s;
    };
    inner = strip(inner);
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
        throw std::invalid_argument("mu: expected \"(v1,v2,...)\"");
    inner = inner.substr(1, inner.size() - 2);
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
        std::size_t comma = inner.find(',', pos);
        std::string item = strip(inner.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (item.empty()) throw std::invalid_argument("mu: empty entry");
        std::int64_t mult = 1;
        if (auto caret = item.find('^'); caret != std::string::npos) {
            std::string exp = strip(item.substr(caret + 1));
            if (exp.size() < 2 || exp.front() != '(' || exp.back() != ')')
                throw std::invalid_argument("mu: malformed exponent");
            mult = std::stoll(exp.substr(1, exp.size() - 2));
            if (mult < 1) throw std::invalid_argument("mu: exponent must be positive");
            item = strip(item.substr(0, caret));
        }
        const std::int64_t value = std::stoll(item);
        for (std::int64_t t = 0; t < mult; ++t) out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

json record_to_json(const ffext::StratumRecord& rec) {
    json j{{"nu_b_prime", ffext::format_polygon(rec.nu_b_prime)},
           {"nonempty", rec.nonempty},
           {"hn_decomposable", rec.hn_decomposable},
           {"cuts", rec.cuts},
           {"wa_status", ffext::to_string(rec.wa_status)}};
    if (rec.witness) {
        j["witness"] = json{{"m", rec.witness->m},
                            {"s", rec.witness->s},
                            {"x1", ffext::format_polygon(rec.witness->x1)},
                            {"x2", ffext::format_polygon(rec.witness->x2)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

/// Machine output: one JSON report per invocation, keys in fixed order.
void emit(const std::string& command, json inputs, json result) {
    json report{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"version", kVersion}};
    std::cout << report.dump() << "\n";
}

/// Human output: aligned key/value and table rendering.
class Pretty {
public:
    void kv(const std::string& key, const std::string& value) {
        rows_.push_back({key, value});
    }
    void flush_kv() {
        std::size_t w = 0;
        for (const auto& [k, v] : rows_) w = std::max(w, k.size());
        for (const auto& [k, v] : rows_)
            std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
        rows_.clear();
    }
    void table(const std::vector<std::vector<std::string>>& cells) {
        if (cells.empty()) return;
        std::vector<std::size_t> widths(cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::cout << row[i];
                if (i + 1 < row.size()) std::cout << std::string(widths[i] - row[i].size() + 2, ' ');
            }
            std::cout << "\n";
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Args {
    bool pretty = false;
    std::uint64_t max_candidates = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Harder-Narasimhan polygon combinatorics for vector bundles on the "
                 "Fargues-Fontaine curve: Kottwitz sets, extension sets and Newton-strata reports"};
    app.require_subcommand(1);
    app.fallthrough();
    Args args;
    app.add_flag("--pretty", args.pretty, "render aligned tables for humans instead of JSON");
    app.add_option("--max-candidates", args.max_candidates,
                   "abort with exit code 3 after this many enumerated candidates (0 = unlimited)");

    std::string a_text, c_text, d_text, delta_text, mu_text, nu_text, mode = "gl", which = "weak";
    std::int64_t n = 0, r = 0, i = 0, i_prime = 0, m_target = 0;
    long long k = 0;
    bool summary_only = false;
    bool constant_mode = false;

    CLI::App* cmd_polygon = app.add_subcommand("polygon", "parse a polygon and print its invariants");
    cmd_polygon->fallthrough();
    cmd_polygon->add_option("--p", a_text, "polygon text")->required();

    CLI::App* cmd_kottwitz = app.add_subcommand("kottwitz", "enumerate a generalized Kottwitz set B(GL_n, k, delta)");
    cmd_kottwitz->fallthrough();
    cmd_kottwitz->add_option("--n", n, "rank")->required();
    cmd_kottwitz->add_option("--k", k, "total degree (kappa)")->required();
    cmd_kottwitz->add_option("--delta", delta_text, "dominant bound polygon")->required();

    CLI::App* cmd_tilde = app.add_subcommand("tilde-ext", "combinatorial extension-set membership with witness");
    cmd_tilde->fallthrough();
    cmd_tilde->add_option("--a", a_text)->required();
    cmd_tilde->add_option("--c", c_text)->required();
    cmd_tilde->add_option("--d", d_text)->required();

    CLI::App* cmd_enum = app.add_subcommand("ext-enum", "enumerate Ext^1(c, d)");
    cmd_enum->fallthrough();
    cmd_enum->add_option("--c", c_text)->required();
    cmd_enum->add_option("--d", d_text)->required();

    CLI::App* cmd_test = app.add_subcommand("ext-test", "decide a in Ext^1(c, d)");
    cmd_test->fallthrough();
    cmd_test->add_option("--a", a_text)->required();
    cmd_test->add_option("--c", c_text)->required();
    cmd_test->add_option("--d", d_text)->required();

    CLI::App* cmd_interp = app.add_subcommand("interpolate", "sandwich a polygon of prescribed degree between c and a");
    cmd_interp->fallthrough();
    cmd_interp->add_option("--a", a_text)->required();
    cmd_interp->add_option("--c", c_text)->required();
    cmd_interp->add_option("--m", m_target, "target degree")->required();
    cmd_interp->add_flag("--constant", constant_mode, "use the constant-c variant");

    CLI::App* cmd_strata = app.add_subcommand("strata", "Newton stratification / weakly admissible locus report");
    cmd_strata->fallthrough();
    cmd_strata->add_option("--n", n, "rank")->required();
    cmd_strata->add_option("--r", r, "number of 1s in mu = (1^(r), 0^(n-r))")->required();
    cmd_strata->add_option("--nu", nu_text, "classify a single stratum instead of all");
    cmd_strata->add_flag("--summary", summary_only, "print only the summary counts");

    CLI::App* cmd_minute = app.add_subcommand("minute", "minute criteria for (weakly) fully HN-decomposable pairs");
    cmd_minute->fallthrough();
    cmd_minute->add_option("--mode", mode, "gl | typeA")->check(CLI::IsMember({"gl", "typeA"}));
    cmd_minute->add_option("--n", n, "rank (gl) or Dynkin index (typeA)")->required();
    cmd_minute->add_option("--mu", mu_text, "dominant integral cocharacter, e.g. \"(1,1,0,0)\" (gl mode)");
    cmd_minute->add_option("--i", i, "index of mu = omega_i (typeA mode)");
    cmd_minute->add_option("--iprime", i_prime, "index of xi = omega_i' (typeA mode, 0 = trivial)");
    cmd_minute->add_option("--which", which, "full | weak")->check(CLI::IsMember({"full", "weak"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::optional<ffext::CandidateBudget> budget;
    if (args.max_candidates > 0) budget.emplace(args.max_candidates);

    try {
        if (cmd_polygon->parsed()) {
            const HNPolygon p = ffext::parse_polygon(a_text);
            json result{{"polygon", ffext::format_polygon(p)},
                        {"rank", p.rank()},
                        {"degree", p.degree().str()},
                        {"integral_breakpoints", p.has_integral_breakpoints()},
                        {"semistable", p.is_semistable()},
                        {"dual", ffext::format_polygon(p.dual())}};
            if (args.pretty) {
                Pretty pr;
                for (const auto& [key, value] : result.items())
                    pr.kv(key, value.is_string() ? value.get<std::string>() : value.dump());
                pr.flush_kv();
            } else {
                emit("polygon", json{{"p", a_text}}, result);
            }
        } else if (cmd_kottwitz->parsed() || cmd_enum->parsed()) {
            std::vector<HNPolygon> set;
            std::string command;
            json inputs;
            if (cmd_kottwitz->parsed()) {
                command = "kottwitz";
                inputs = json{{"n", n}, {"k", k}, {"delta", delta_text}};
                set = ffext::kottwitz_set({n, k, ffext::parse_polygon(delta_text)});
            } else {
                command = "ext-enum";
                inputs = json{{"c", c_text}, {"d", d_text}};
                set = ffext::ext_enumerate(
                    {ffext::parse_polygon(c_text), ffext::parse_polygon(d_text)});
            }
            if (args.pretty) {
                Pretty pr;
                pr.kv("count", std::to_string(set.size()));
                pr.flush_kv();
                for (const auto& p : set) std::cout << "  " << ffext::format_polygon(p) << "\n";
            } else {
                emit(command, inputs, json{{"count", set.size()}, {"elements", polygons_to_json(set)}});
            }
        } else if (cmd_tilde->parsed()) {
            const HNPolygon a = ffext::parse_polygon(a_text);
            const ffext::ExtQuery q{ffext::parse_polygon(c_text), ffext::parse_polygon(d_text)};
            const auto w = ffext::tilde_ext_contains(a, q);
            if (args.pretty) {
                Pretty pr;
                pr.kv("member", w ? "true" : "false");
                if (w) {
                    pr.kv("H", json(w->h_positions).dump());
                    pr.kv("K", json(w->k_positions).dump());
                    std::string b;
                    for (const auto& x : w->b) b += (b.empty() ? "" : " ") + x.str();
                    pr.kv("b", b);
                }
                pr.flush_kv();
            } else {
                emit("tilde-ext", json{{"a", a_text}, {"c", c_text}, {"d", d_text}},
                     json{{"member", w.has_value()}, {"witness", w ? witness_to_json(*w) : json(nullptr)}});
            }
        } else if (cmd_test->parsed()) {
            const HNPolygon a = ffext::parse_polygon(a_text);
            const ffext::ExtQuery q{ffext::parse_polygon(c_text), ffext::parse_polygon(d_text)};
            const bool member = ffext::ext_contains(a, q);
            if (args.pretty) {
                std::cout << (member ? "true" : "false") << "\n";
            } else {
                emit("ext-test", json{{"a", a_text}, {"c", c_text}, {"d", d_text}},
                     json{{"member", member}});
            }
        } else if (cmd_interp->parsed()) {
            const HNPolygon a = ffext::parse_polygon(a_text);
            const HNPolygon c = ffext::parse_polygon(c_text);
            const HNPolygon b = constant_mode ? ffext::interpolate_constant(a, c, m_target)
                                              : ffext::interpolate_general(a, c, m_target);
            if (args.pretty) {
                std::cout << ffext::format_polygon(b) << "\n";
            } else {
                emit("interpolate",
                     json{{"a", a_text}, {"c", c_text}, {"m", m_target}, {"constant", constant_mode}},
                     json{{"b", ffext::format_polygon(b)}});
            }
        } else if (cmd_strata->parsed()) {
            const ffext::StrataConfig cfg{n, r};
            json inputs{{"n", n}, {"r", r}};
            if (!nu_text.empty()) {
                inputs["nu"] = nu_text;
                const auto rec = ffext::stratum_status(cfg, ffext::parse_polygon(nu_text));
                if (args.pretty) {
                    Pretty pr;
                    for (const auto& [key, value] : record_to_json(rec).items())
                        pr.kv(key, value.is_string() ? value.get<std::string>() : value.dump());
                    pr.flush_kv();
                } else {
                    emit("strata", inputs, record_to_json(rec));
                }
            } else {
                const auto report = ffext::stratification_report(cfg);
                json summary{{"nonempty", report.summary.nonempty},
                             {"hn_decomposable", report.summary.hn_decomposable},
                             {"hn_indecomposable", report.summary.hn_indecomposable},
                             {"disjoint", report.summary.disjoint},
                             {"proper_intersect", report.summary.proper_intersect},
                             {"contained", report.summary.contained}};
                if (args.pretty) {
                    Pretty pr;
                    pr.kv("delta", ffext::format_polygon(report.delta));
                    for (const auto& [key, value] : summary.items()) pr.kv(key, value.dump());
                    pr.flush_kv();
                    if (!summary_only) {
                        std::vector<std::vector<std::string>> cells{{"nu_b'", "status", "witness"}};
                        for (const auto& rec : report.records) {
                            std::string wtn = "-";
                            if (rec.hn_decomposable) wtn = "cuts " + json(rec.cuts).dump();
                            else if (rec.witness)
                                wtn = "m=" + std::to_string(rec.witness->m) +
                                      " s=" + std::to_string(rec.witness->s) + " x1=" +
                                      ffext::format_polygon(rec.witness->x1) + " x2=" +
                                      ffext::format_polygon(rec.witness->x2);
                            cells.push_back({ffext::format_polygon(rec.nu_b_prime),
                                             ffext::to_string(rec.wa_status), wtn});
                        }
                        pr.table(cells);
                    }
                } else {
                    json result{{"delta", ffext::format_polygon(report.delta)}, {"summary", summary}};
                    if (!summary_only) {
                        json records = json::array();
                        for (const auto& rec : report.records) records.push_back(record_to_json(rec));
                        result["records"] = std::move(records);
                    }
                    emit("strata", inputs, result);
                }
            }
        } else if (cmd_minute->parsed()) {
            ffext::MinuteResult res;
            json inputs{{"mode", mode}, {"n", n}, {"which", which}};
            if (mode == "gl") {
                if (mu_text.empty()) throw CLI::ValidationError("minute", "--mu is required in gl mode");
                ffext::MinuteQueryGL q;
                q.n = n;
                q.mu = parse_int_vector(mu_text);
                inputs["mu"] = mu_text;
                res = (which == "full") ? ffext::fully_hn_gl(q) : ffext::weakly_fully_hn_gl(q);
            } else {
                ffext::MinuteQueryTypeA q{n, i, i_prime};
                inputs["i"] = i;
                inputs["iprime"] = i_prime;
                res = (which == "full") ? ffext::fully_hn_typeA(q) : ffext::weakly_fully_hn_typeA(q);
            }
            if (args.pretty) {
                Pretty pr;
                pr.kv("value", res.value ? "true" : "false");
                pr.kv("violations", json(res.violations).dump());
                pr.flush_kv();
            } else {
                emit("minute", inputs, json{{"value", res.value}, {"violations", res.violations}});
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ffext::BudgetExceeded& e) {
        std::cerr << "aborted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
