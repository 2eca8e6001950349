/*
   Copyright 2026 The spinfake Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "spinfake/cli.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinfake/characters.hpp"
#include "spinfake/fake_degrees.hpp"
#include "spinfake/oracle.hpp"
#include "spinfake/symmetric.hpp"

namespace spinfake {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { json, csv, text };

struct Options {
    std::string type;
    int n = -1;
    std::string algebra = "minus";
    std::string lambda;
    std::string format = "json";
    std::string suite;
    int maxdeg = -1;
    long cap = kDefaultDimensionCap;
    int n_max = 4;
    int degree = 4;
    bool fail_fast = false;
    bool oracle = false;
    bool timestamp = false;
};

// Integers that fit in a long stay numbers; larger ones become strings.
json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json rational_json(const Rational& v) {
    if (v.get_den() == 1) return integer_json(v.get_num());
    return v.get_str();
}

// Dense coefficients from t^0, padded with zeros up to t^top.
json polynomial_json(const IntPolynomial& p, int top) {
    json a = json::array();
    for (int k = 0; k <= std::max(top, p.degree()); ++k) a.push_back(integer_json(p.coefficient(k)));
    return a;
}

json series_json(const TruncatedSeries& s) {
    json a = json::array();
    for (const auto& c : s.coefficients()) a.push_back(rational_json(c));
    return a;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string array_text(const json& a) {
    std::vector<std::string> parts;
    for (const auto& v : a) parts.push_back(scalar_text(v));
    return join(parts, " ");
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    if (f == "text") return Format::text;
    throw UsageError("unknown format '" + f + "'");
}

WeylType parse_weyl(const std::string& t, bool allow_a) {
    if (t == "B") return WeylType::B;
    if (t == "D") return WeylType::D;
    if (t == "A" && allow_a) return WeylType::A;
    throw UsageError("unknown type '" + t + "'");
}

GroupKind parse_group(const std::string& t) {
    if (t == "B") return GroupKind::B;
    if (t == "D") return GroupKind::D;
    if (t == "Gamma") return GroupKind::Gamma;
    throw UsageError("unknown group '" + t + "'");
}

bool parse_algebra(const std::string& a) {
    if (a == "minus") return false;
    if (a == "hecke_clifford") return true;
    throw UsageError("unknown algebra '" + a + "'");
}

void require_type_and_n(const Options& o) {
    if (o.type.empty()) throw UsageError("missing type");
    if (o.n < 0) throw UsageError("missing n");
}

json make_record(const std::string& kind, json metadata, json payload, const Options& o) {
    metadata["tool_version"] = kToolVersion;
    if (o.timestamp) {
        std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::ostringstream ts;
        ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
        metadata["timestamp"] = ts.str();
    }
    return {{"kind", kind}, {"metadata", std::move(metadata)}, {"payload", std::move(payload)}};
}

// Writes rows of a record either as JSON, CSV (header plus rows) or aligned text.
void emit(std::ostream& out, Format f, const json& record, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
    if (f == Format::json) {
        out << record.dump(2) << "\n";
        return;
    }
    if (f == Format::csv) {
        std::vector<std::string> h;
        for (const auto& c : header) h.push_back(csv_field(c));
        out << join(h, ",") << "\n";
        for (const auto& r : rows) {
            std::vector<std::string> cells;
            for (const auto& c : r) cells.push_back(csv_field(c));
            out << join(cells, ",") << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i + 1 == r.size()) s += r[i];
            else s += r[i] + std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

int cmd_table(const Options& o, std::ostream& out) {
    require_type_and_n(o);
    const WeylType w = parse_weyl(o.type, false);
    const bool hc = parse_algebra(o.algebra);
    const Format f = parse_format(o.format);
    const auto table = fake_degree_table(w, o.n, hc);
    json rows = json::array();
    std::vector<std::vector<std::string>> text;
    for (const auto& r : table) {
        json row = {{"module", r.module.to_string()},
                    {"lambda", r.module.lambda.to_string()},
                    {"module_type", to_string(r.module.type)},
                    {"dimension", integer_json(r.module.dimension)},
                    {"duplicity", r.duplicity},
                    {"polynomial", polynomial_json(r.polynomial, r.shift)},
                    {"shift", r.shift},
                    {"palindromic", r.palindromic},
                    {"value_at_one", integer_json(r.value_at_one)}};
        if (r.module.partner) row["partner"] = r.module.partner->to_string();
        rows.push_back(row);
        text.push_back({row["module"], row["module_type"], scalar_text(row["dimension"]), std::to_string(r.duplicity),
                        std::to_string(r.shift), r.palindromic ? "true" : "false", scalar_text(row["value_at_one"]),
                        array_text(row["polynomial"])});
    }
    json record = make_record("fake_degree", {{"type", o.type}, {"n", o.n}},
                              {{"algebra", o.algebra}, {"rows", rows}}, o);
    emit(out, f, record,
         {"module", "type", "dimension", "duplicity", "shift", "palindromic", "value_at_one", "polynomial"}, text);
    return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
    require_type_and_n(o);
    const GroupKind g = parse_group(o.type);
    const Format f = parse_format(o.format);
    json rows = json::array();
    std::vector<std::vector<std::string>> text;
    for (const auto& c : split_classes(g, o.n)) {
        json word = json::array();
        std::vector<std::string> letters;
        for (int l : canonical_representative(c).word) {
            word.push_back(l);
            letters.push_back(l == o.n ? "t" + std::to_string(l) : "s" + std::to_string(l));
        }
        rows.push_back({{"label", c.to_string()},
                        {"rho_plus", c.rho_plus.to_string()},
                        {"rho_minus", c.rho_minus.to_string()},
                        {"family", to_string(c.family)},
                        {"parity", to_string(c.parity)},
                        {"representative", word}});
        text.push_back({c.to_string(), to_string(c.family), to_string(c.parity),
                        letters.empty() ? "1" : join(letters, " ")});
    }
    json record = make_record("split_classes", {{"type", o.type}, {"n", o.n}}, {{"classes", rows}}, o);
    emit(out, f, record, {"class", "family", "parity", "representative"}, text);
    return 0;
}

int cmd_chartable(const Options& o, std::ostream& out) {
    require_type_and_n(o);
    const GroupKind g = parse_group(o.type);
    if (g == GroupKind::D) throw UsageError("chartable supports B and Gamma");
    const Format f = parse_format(o.format);
    // spin characters of CB_n^- are tabulated on even classes only
    std::vector<SplitClassLabel> classes;
    for (const auto& c : split_classes(g, o.n))
        if (c.parity == Parity::even) classes.push_back(c);
    std::vector<std::string> header{"lambda"};
    json labels = json::array();
    for (const auto& c : classes) {
        header.push_back(c.to_string());
        labels.push_back(c.to_string());
    }
    json rows = json::array();
    std::vector<std::vector<std::string>> text;
    for (const auto& lambda : partitions_of(o.n)) {
        json values = json::array();
        std::vector<std::string> line{lambda.to_string()};
        for (const auto& c : classes) {
            AlgebraicScalar v = g == GroupKind::B ? spin_char_B(lambda, c) : AlgebraicScalar(hc_char_B(lambda, c));
            values.push_back({{"rat", v.rational_part().get_str()}, {"sqrt2", v.sqrt2_part().get_str()}});
            line.push_back(v.to_string());
        }
        rows.push_back({{"lambda", lambda.to_string()}, {"values", values}});
        text.push_back(line);
    }
    json record = make_record("char_table", {{"type", o.type}, {"n", o.n}}, {{"classes", labels}, {"rows", rows}}, o);
    emit(out, f, record, header, text);
    return 0;
}

int cmd_query(const Options& o, std::ostream& out) {
    if (o.type.empty()) throw UsageError("missing type");
    if (o.lambda.empty()) throw UsageError("missing --lambda");
    const WeylType w = parse_weyl(o.type, false);
    const bool hc = parse_algebra(o.algebra);
    const Format f = parse_format(o.format);
    const Partition lambda = Partition::parse(o.lambda);
    const int n = lambda.size();
    require_weyl_rank(w, n);
    if (o.n >= 0 && o.n != n) throw UsageError("--n does not match the size of --lambda");

    std::string factored;
    IntPolynomial p;
    TruncatedSeries series;
    const int order = std::max(o.maxdeg, 0);
    if (w == WeylType::B) {
        FactoredRational h = hc ? H_B_heckeclifford(lambda) : H_minus_B(lambda);
        factored = h.to_string();
        p = hc ? P_B_heckeclifford(lambda) : P_minus_B(lambda);
        series = h.expand(order);
    } else {
        FactoredSum h = hc ? H_D_heckeclifford(lambda) : H_minus_D(lambda);
        factored = h.to_string();
        p = hc ? P_D_heckeclifford(lambda) : P_minus_D(lambda);
        series = h.expand(order);
    }
    const int shift = static_cast<int>(reflection_count(w, n));
    json payload = {{"lambda", lambda.to_string()},
                    {"algebra", o.algebra},
                    {"generating_function", factored},
                    {"polynomial", polynomial_json(p, shift)},
                    {"shift", shift},
                    {"palindromic", check_palindromic(p, shift)},
                    {"value_at_one", integer_json(p.evaluate_at_one())}};
    std::string kind = "fake_degree";
    std::vector<std::string> header{"lambda", "shift", "palindromic", "value_at_one", "polynomial"};
    std::vector<std::string> row{lambda.to_string(), std::to_string(shift), payload["palindromic"].dump(),
                                 scalar_text(payload["value_at_one"]), array_text(payload["polynomial"])};
    if (o.maxdeg >= 0) {
        kind = "multiplicity_series";
        payload["series"] = series_json(series);
        header.push_back("series");
        row.push_back(array_text(payload["series"]));
        if (o.oracle) {
            TruncatedSeries s = w == WeylType::B ? oracle_H_B(lambda, o.maxdeg, o.cap) : oracle_H_D(lambda, o.maxdeg);
            if (hc && w == WeylType::D && n % 2 && conjugate(lambda) != lambda) s *= Rational(1, 2);
            if (!hc && w == WeylType::B && n % 2) s *= Rational(2);
            payload["oracle_series"] = series_json(s);
            payload["oracle_agrees"] = s == series;
            header.push_back("oracle_agrees");
            row.push_back(payload["oracle_agrees"].dump());
        }
    } else if (o.oracle) {
        throw UsageError("--oracle needs --maxdeg");
    }
    json record = make_record(kind, {{"type", o.type}, {"n", n}}, payload, o);
    emit(out, f, record, header, {row});
    if (payload.contains("oracle_agrees") && !payload["oracle_agrees"].get<bool>()) return 1;
    return 0;
}

using Job = std::function<VerificationReport()>;

constexpr int kBasicSpinMaxRank = 5;

std::vector<Job> suite_jobs(const std::string& suite, const Options& o) {
    std::vector<Job> jobs;
    const int n_max = o.n_max;
    const int maxdeg = o.maxdeg < 0 ? 12 : o.maxdeg;
    const long cap = o.cap;
    if (suite == "formulas") {
        jobs.push_back([=] { return palindromicity_check(n_max); });
        jobs.push_back([=] { return conjugation_identity_check(n_max); });
        jobs.push_back([=] { return formula_relations_check(n_max); });
        jobs.push_back([=] { return heckeclifford_super_schur_check(n_max, maxdeg); });
        for (int n = kMinRankB; n <= n_max; ++n)
            for (bool hc : {false, true}) jobs.push_back([=] { return sum_rule_check(WeylType::B, n, hc); });
        for (int n = kMinRankD; n <= n_max; ++n)
            for (bool hc : {false, true}) jobs.push_back([=] { return sum_rule_check(WeylType::D, n, hc); });
    } else if (suite == "oracle") {
        for (int n = kMinRankB; n <= n_max; ++n) {
            jobs.push_back([=] { return verify_graded_rep_relations(n, 2, cap); });
            jobs.push_back([=] { return verify_graded_traces(n, maxdeg, cap); });
            jobs.push_back([=] { return verify_oracle_B(n, maxdeg, cap); });
        }
        for (int n = kMinRankD; n <= n_max; ++n) jobs.push_back([=] { return verify_oracle_D(n, maxdeg, cap); });
    } else if (suite == "isomorphisms") {
        for (int n = kMinRankB; n <= n_max; ++n)
            jobs.push_back([=] { return verify_presentation_images(PresentationTarget::phiB, WeylType::B, n); });
        for (int n = 5; n <= n_max; n += 2) {
            jobs.push_back([=] { return verify_presentation_images(PresentationTarget::phiD, WeylType::D, n); });
            jobs.push_back([=] { return verify_phiD_surjectivity_identities(n); });
        }
        for (WeylType w : {WeylType::A, WeylType::B, WeylType::D}) {
            const int lo = w == WeylType::A ? 1 : w == WeylType::B ? kMinRankB : kMinRankD;
            for (int n = lo; n <= n_max; ++n) {
                jobs.push_back([=] { return verify_presentation_images(PresentationTarget::Omega, w, n); });
                jobs.push_back([=] { return verify_presentation_images(PresentationTarget::Psi, w, n); });
                // whole-group enumeration; B_6 already has 46080 elements
                if (n <= kBasicSpinMaxRank) jobs.push_back([=] { return verify_basic_spin_correspondence(w, n); });
            }
        }
        jobs.push_back([=] { return verify_super_tensor_associativity(std::min(n_max, 5), 100, 20261017u); });
    } else if (suite == "characters") {
        jobs.push_back([=] { return characteristic_map_check(n_max); });
        for (int n = kMinRankB; n <= n_max; ++n) jobs.push_back([=] { return orthogonality_check(n); });
        for (int n = 3; n <= n_max; n += 2) jobs.push_back([=] { return lambda_selfconjugate_vanishing_check(n); });
        for (int m = 1; m < n_max; ++m)
            jobs.push_back([=] { return induction_product_check(m, n_max - m); });
        jobs.push_back([=] { return count_consistency_check(n_max, 2 * n_max + 1); });
    } else if (suite == "cauchy") {
        jobs.push_back([=] { return verify_super_cauchy(o.degree, 2, 2, 2); });
        jobs.push_back([=] { return verify_super_schur_specialization(n_max, maxdeg); });
    } else {
        throw UsageError("unknown suite '" + suite + "'");
    }
    return jobs;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.suite.empty()) throw UsageError("missing suite");
    const Format f = parse_format(o.format);
    if (o.n_max < 1) throw UsageError("--n-max must be positive");
    std::vector<std::string> suites;
    if (o.suite == "all") suites = {"formulas", "oracle", "isomorphisms", "characters", "cauchy"};
    else suites = {o.suite};

    std::vector<Job> jobs;
    for (const auto& s : suites)
        for (auto& j : suite_jobs(s, o)) jobs.push_back(std::move(j));

    json checks = json::array();
    std::vector<std::vector<std::string>> text;
    bool passed = true;
    for (const auto& job : jobs) {
        VerificationReport r = job();
        checks.push_back(r.to_json());
        text.push_back({r.passed ? "pass" : "fail", r.check, r.params.dump(), std::to_string(r.cases),
                        r.first_discrepancy});
        passed = passed && r.passed;
        if (!r.passed && o.fail_fast) break;
    }
    json meta = {{"type", nullptr}, {"n", o.n_max}};
    json record = make_record("verification", meta,
                              {{"suite", o.suite}, {"status", passed ? "pass" : "fail"}, {"checks", checks}}, o);
    emit(out, f, record, {"status", "check", "params", "cases", "first_discrepancy"}, text);
    return passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Spin fake degrees for Weyl groups of type B and D"};
    app.name("spinfake");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json (default), csv or text");
        sub->add_flag("--timestamp", o.timestamp, "add a UTC timestamp to the metadata");
    };
    auto add_type_n = [&](CLI::App* sub, const std::string& type_help) {
        sub->add_option("type,--type", o.type, type_help);
        sub->add_option("n,--n", o.n, "rank");
    };

    auto* table = app.add_subcommand("table", "fake degree table, one row per simple module");
    add_type_n(table, "B or D");
    table->add_option("algebra,--algebra", o.algebra, "minus (default) or hecke_clifford");
    add_common(table);

    auto* classes = app.add_subcommand("classes", "split conjugacy classes with representatives");
    add_type_n(classes, "B, D or Gamma");
    add_common(classes);

    auto* chartable = app.add_subcommand("chartable", "spin character table on split classes");
    add_type_n(chartable, "B or Gamma");
    add_common(chartable);

    auto* query = app.add_subcommand("query", "generating function and fake degree of one module");
    query->add_option("--type", o.type, "B or D");
    query->add_option("--lambda", o.lambda, "partition, e.g. 3,1");
    query->add_option("--n", o.n, "rank (optional, must match lambda)");
    query->add_option("--algebra", o.algebra, "minus (default) or hecke_clifford");
    query->add_option("--maxdeg", o.maxdeg, "also expand the multiplicity series to this degree");
    query->add_flag("--oracle", o.oracle, "recompute the series by brute force and compare");
    query->add_option("--cap", o.cap, "dimension cap for the brute-force representation");
    add_common(query);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite,--suite", o.suite, "formulas, oracle, isomorphisms, characters, cauchy or all");
    verify->add_option("--n-max", o.n_max, "largest rank checked (default 4)");
    verify->add_option("--maxdeg", o.maxdeg, "series truncation degree (default 12)");
    verify->add_option("--degree", o.degree, "total degree for the Cauchy identity (default 4)");
    verify->add_option("--cap", o.cap, "dimension cap for graded representations");
    verify->add_flag("--fail-fast", o.fail_fast, "stop at the first failing check");
    add_common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(o, out);
        if (classes->parsed()) return cmd_classes(o, out);
        if (chartable->parsed()) return cmd_chartable(o, out);
        if (query->parsed()) return cmd_query(o, out);
        return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace spinfake
