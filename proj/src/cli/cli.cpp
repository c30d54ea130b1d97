#include "hs/cli.hpp"

#include "hs/cache.hpp"
#include "hs/checks.hpp"
#include "hs/correlator.hpp"
#include "hs/errors.hpp"
#include "hs/hurwitz.hpp"
#include "hs/json_io.hpp"
#include "hs/monotone.hpp"
#include "hs/oracle.hpp"
#include "hs/permutation.hpp"
#include "hs/tables.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <exception>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hs {

std::pair<int, int> parse_range(const std::string& text) {
    const auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (s.empty() || used != s.size()) throw ParseError("malformed range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw ParseError("empty range '" + text + "'");
    return {lo, hi};
}

namespace {

enum class Format { text, json, csv, markdown };

// What every command produces: a table for the human formats, a JSON value
// for --format json, and an exit code.
struct Document {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    Json json;
    int exit_code = 0;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render(const Document& doc, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::json:
        os << doc.json.dump(2) << "\n";
        break;
    case Format::csv:
        for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << csv_field(doc.columns[i]);
        os << "\n";
        for (const auto& row : doc.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
            os << "\n";
        }
        break;
    case Format::markdown:
        os << "|";
        for (const auto& c : doc.columns) os << " " << c << " |";
        os << "\n|";
        for (std::size_t i = 0; i < doc.columns.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& row : doc.rows) {
            os << "|";
            for (const auto& cell : row) os << " " << cell << " |";
            os << "\n";
        }
        for (const auto& n : doc.notes) os << "\n" << n << "\n";
        break;
    case Format::text: {
        std::vector<std::size_t> width(doc.columns.size(), 0);
        for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
        for (const auto& row : doc.rows)
            for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
        const auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
            }
            os << s << "\n";
        };
        line(doc.columns);
        for (const auto& row : doc.rows) line(row);
        for (const auto& n : doc.notes) os << n << "\n";
        break;
    }
    }
    return os.str();
}

Json mu_json(const std::vector<int>& mu) { return Json(mu); }

std::string decimal(const Rational& x, int digits) { return digits > 0 ? to_significant(x, digits) : ""; }

// Runs f(i) for i in [0, n) across the OpenMP pool, rethrowing the first
// failure on the calling thread.
template <class F>
void parallel_for(int n, F&& f) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            f(i);
        } catch (...) {
#pragma omp critical(hs_cli_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

struct RunConfig {
    std::string command;
    std::string mu;
    std::string word;
    std::string g = "0";
    std::optional<int> k;
    int r = 1;
    int classical = 0;
    int which = 0;
    std::string suite;
    int max_degree = 0;
    std::string method = "exhaustive";
    std::string normalisation = "fixed-target";
    bool disconnected = false;
    bool asymptotic = false;
    bool transitive = false;
    bool monotone = false;
    bool fixed_target = false;
    bool verify = false;
    Format format = Format::text;
    int digits = 0;
    std::uint64_t budget = default_budget;
    int jobs = 0;

    // Everything that determines the output; budget and jobs do not.
    std::string cache_key() const {
        Json j;
        j["command"] = command;
        j["mu"] = mu;
        j["word"] = word;
        j["g"] = g;
        j["k"] = k ? Json(*k) : Json();
        j["r"] = r;
        j["classical"] = classical;
        j["method"] = method;
        j["normalisation"] = normalisation;
        j["flags"] = {disconnected, asymptotic, transitive, monotone, fixed_target, verify};
        j["format"] = static_cast<int>(format);
        j["digits"] = digits;
        return j.dump();
    }
};

Document cmd_correlator(const RunConfig& c) {
    if (c.mu.empty() == c.word.empty()) throw InvalidQuery("give exactly one of --mu and --word");
    const OperatorWord word = c.word.empty() ? OperatorWord::hurwitz(parse_mu(c.mu), c.r) : OperatorWord::parse(c.word);
    Document doc;
    doc.json["word"] = word.to_string();
    if (c.disconnected) {
        const QRational v = disconnected(word);
        doc.columns = {"word", "disconnected"};
        doc.rows.push_back({word.to_string(), v.to_string()});
        doc.json["disconnected"] = v.to_string();
        return doc;
    }
    CorrelatorOptions opt;
    opt.keep_qproducts = true;
    const CorrelatorResult res = connected(word, opt);
    doc.columns = {"word", "q-integer form", "expanded"};
    doc.rows.push_back({word.to_string(), res.qproduct_string(), res.value.to_string()});
    doc.json["connected"] = to_json(res);
    return doc;
}

std::string closed_form(const StructureTable& t) {
    const int d = std::accumulate(t.mu.begin(), t.mu.end(), 0);
    const int n = static_cast<int>(t.mu.size());
    std::string pre = "2/(";
    if (t.r != 1) pre += std::to_string(t.r) + "^" + std::to_string(d / t.r) + "*";
    pre += std::to_string(d / t.r) + "!";
    for (int p : t.mu) pre += "*" + std::to_string(p);
    pre += ")";
    std::string sum;
    for (auto it = t.combo.terms.rbegin(); it != t.combo.terms.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        sum += sum.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        sum += (mag == 1 ? "" : to_string(mag) + "*") + std::to_string(m) + "^k";
    }
    if (sum.empty()) sum = "0";
    std::string k = std::to_string(d / t.r - 2 + n);
    return "H_{g;(" + mu_to_string(t.mu) + ")} = " + pre + " * (" + sum + "), k = 2g + " + k + " (prefactor " +
           to_string(t.prefactor) + ")";
}

Document cmd_hurwitz(const RunConfig& c) {
    const std::vector<int> mu = parse_mu(c.mu);
    const auto [lo, hi] = parse_range(c.g);
    if (c.disconnected && c.asymptotic) throw InvalidQuery("--asymptotic applies to connected numbers only");
    HurwitzQuery base{mu, 0, c.r, !c.disconnected};
    base.validate();
    if (!c.disconnected) structure_coefficients(mu, c.r);  // warm the memo before fanning out

    const int count = hi - lo + 1;
    std::vector<Rational> values(static_cast<std::size_t>(count));
    std::vector<AsymptoticReport> asym(static_cast<std::size_t>(c.asymptotic ? count : 0));
    parallel_for(count, [&](int i) {
        HurwitzQuery q = base;
        q.g = lo + i;
        values[static_cast<std::size_t>(i)] = hurwitz_number(q);
        if (c.asymptotic) asym[static_cast<std::size_t>(i)] = asymptotics(q);
    });

    Document doc;
    doc.columns = {"g", "k", "H"};
    if (c.digits > 0) doc.columns.push_back("decimal");
    if (c.asymptotic) doc.columns.insert(doc.columns.end(), {"estimate", "estimate/H", "H/estimate"});
    doc.json["mu"] = mu_json(mu);
    doc.json["r"] = c.r;
    doc.json["connected"] = !c.disconnected;
    Json rows = Json::array();
    const int asym_digits = c.digits > 0 ? c.digits : 8;
    for (int i = 0; i < count; ++i) {
        HurwitzQuery q = base;
        q.g = lo + i;
        const Rational& v = values[static_cast<std::size_t>(i)];
        std::vector<std::string> row{std::to_string(q.g), std::to_string(q.k()), to_string(v)};
        Json jr{{"g", q.g}, {"k", q.k()}, {"value", to_string(v)}};
        if (c.digits > 0) {
            row.push_back(decimal(v, c.digits));
            jr["decimal"] = row.back();
        }
        if (c.asymptotic) {
            const AsymptoticReport& a = asym[static_cast<std::size_t>(i)];
            if (v == 0) throw InvalidQuery("no asymptotic ratio at g = " + std::to_string(q.g) + ": H vanishes");
            row.push_back(decimal(a.estimate, asym_digits));
            row.push_back(decimal(a.estimate_over_exact(), asym_digits));
            row.push_back(decimal(a.exact_over_estimate(), asym_digits));
            jr["estimate"] = to_string(a.estimate);
            jr["estimate_over_H"] = to_string(a.estimate_over_exact());
            jr["H_over_estimate"] = to_string(a.exact_over_estimate());
        }
        doc.rows.push_back(std::move(row));
        rows.push_back(std::move(jr));
    }
    doc.json["values"] = std::move(rows);
    if (!c.disconnected) {
        doc.notes.push_back(closed_form(structure_coefficients(mu, c.r)));
        doc.json["closed_form"] = doc.notes.back();
    }
    return doc;
}

Document cmd_coeffs(const RunConfig& c) {
    Document doc;
    if (c.classical > 0) {
        const ClassicalHurwitz h = classical_hurwitz(c.classical);
        doc.columns = {"m", "B(d,m)"};
        Json b = Json::object();
        for (const auto& [m, v] : h.B) {
            doc.rows.push_back({std::to_string(m), v.get_str()});
            b[std::to_string(m)] = v.get_str();
        }
        doc.notes.push_back("Hur_{g," + std::to_string(c.classical) + "} = 2/" + std::to_string(c.classical) +
                            "!^2 * sum_m B(d,m) m^(2g+" + std::to_string(h.exponent(0)) + ")");
        doc.json = {{"d", c.classical}, {"B", b}, {"exponent", "2g+" + std::to_string(h.exponent(0))}};
        return doc;
    }
    const StructureTable& t = structure_coefficients(parse_mu(c.mu), c.r);
    doc.columns = {"m", "C(m)"};
    for (const auto& [m, v] : t.combo.terms) doc.rows.push_back({std::to_string(m), to_string(v)});
    doc.notes.push_back(closed_form(t));
    doc.json = to_json(t);
    doc.json["closed_form"] = doc.notes.back();
    return doc;
}

Document cmd_tables(const RunConfig& c) {
    const TableReport rep = reproduce_table(c.which);
    Document doc;
    doc.columns = {"mu", "computed", "reference", "match"};
    Json rows = Json::array();
    std::size_t matched = 0;
    for (const auto& row : rep.rows) {
        matched += row.match;
        doc.rows.push_back({mu_to_string(row.mu), row.computed, row.expected, row.match ? "yes" : "NO"});
        rows.push_back({{"mu", mu_json(row.mu)}, {"computed", row.computed}, {"expected", row.expected},
                        {"match", row.match}});
    }
    doc.notes.push_back(std::to_string(matched) + "/" + std::to_string(rep.rows.size()) + " rows match");
    doc.json = {{"table", c.which}, {"rows", rows}, {"all_match", rep.all_match()}};
    if (!rep.all_match()) doc.exit_code = 1;
    return doc;
}

Document cmd_oracle(const RunConfig& c) {
    FactorizationQuery q;
    q.mu = parse_mu(c.mu);
    std::sort(q.mu.begin(), q.mu.end(), std::greater<>());
    q.d = std::accumulate(q.mu.begin(), q.mu.end(), 0);
    q.transitive = c.transitive;
    q.monotone = c.monotone;
    if (c.r != 1) q.orbifold_r = c.r;
    if (c.fixed_target) q.fixed_target = Permutation::with_cycle_type(q.mu);
    if (c.k) {
        q.k = *c.k;
    } else {
        const int g = parse_range(c.g).first;
        q.k = q.d / c.r + 2 * g - 2 + static_cast<int>(q.mu.size());
    }
    q.validate();

    const Rational aut_weight =
        Rational(Integer(static_cast<unsigned long>(automorphisms(q.mu)))) / Rational(factorial(static_cast<unsigned long>(q.d)));
    const Integer class_size = factorial(static_cast<unsigned long>(q.d)) / Integer(static_cast<unsigned long>(automorphisms(q.mu))) /
                               std::accumulate(q.mu.begin(), q.mu.end(), Integer(1), [](Integer a, int p) { return a * p; });
    OracleResult res;
    res.method = c.method;
    if (c.method == "exhaustive") {
        res = count_factorizations(q, Exec::parallel, c.budget);
    } else if (c.method == "convolution") {
        if (q.monotone) throw InvalidQuery("convolution does not restrict to monotone tuples; use --method dp");
        if (q.orbifold_r) {
            if (q.transitive && q.mu != std::vector<int>{q.d})
                throw InvalidQuery("orbifold convolution counts are transitive only for mu = (d)");
            if (q.fixed_target) throw InvalidQuery("orbifold convolution supports class targets only");
            res.count = orbifold_count_by_convolution(q.d, *q.orbifold_r, q.mu, q.k);
            res.weighted = Rational(res.count) * aut_weight;
        } else if (q.transitive) {
            const Rational w = connected_count(q.d, q.mu, q.k);
            const Rational n = w / aut_weight;
            res.count = q.fixed_target ? Integer(n.get_num() / class_size) : n.get_num();
            res.weighted = q.fixed_target ? Rational(res.count) : w;
        } else {
            const Integer n = count_by_convolution(q.d, q.mu, q.k, Exec::parallel);
            res.count = q.fixed_target ? Integer(n / class_size) : n;
            res.weighted = q.fixed_target ? Rational(res.count) : Rational(n) * aut_weight;
        }
    } else if (c.method == "dp") {
        if (!q.monotone || q.orbifold_r) throw InvalidQuery("the dp method counts monotone tuples with r = 1");
        if (q.transitive) {
            const int twice_g = q.k - q.d + 2 - static_cast<int>(q.mu.size());
            if (twice_g < 0 || twice_g % 2) throw InvalidQuery("no genus matches k = " + std::to_string(q.k));
            const Rational def = monotone_hurwitz(q.mu, twice_g / 2, Normalisation::definition);
            const Rational n = def / aut_weight;
            res.count = q.fixed_target ? Integer(n.get_num() / class_size) : n.get_num();
            res.weighted = q.fixed_target ? Rational(res.count) : def;
        } else {
            res.count = monotone_count(q.d, q.mu, q.k, q.fixed_target.has_value());
            res.weighted = q.fixed_target ? Rational(res.count) : Rational(res.count) * aut_weight;
        }
    } else {
        throw InvalidQuery("unknown method '" + c.method + "'");
    }
    res.method = c.method;

    Document doc;
    doc.columns = {"query", "count", "weighted", "method"};
    doc.rows.push_back({q.to_string(), res.count.get_str(), to_string(res.weighted), res.method});
    doc.json = to_json(q, res);
    return doc;
}

Document cmd_monotone(const RunConfig& c) {
    const std::vector<int> mu = parse_mu(c.mu);
    const Normalisation n = parse_normalisation(c.normalisation);
    Document doc;
    if (c.verify) {
        const MonotoneReport rep = verify_conjecture(mu, parse_range(c.g).second, n);
        doc.columns = {"g", "k", "value", "model", "fitted", "match"};
        for (const auto& p : rep.points)
            doc.rows.push_back({std::to_string(p.g), std::to_string(p.k), to_string(p.value), to_string(p.predicted),
                                p.fitted ? "fit" : "check", p.pass ? "yes" : "NO"});
        std::string model = to_string(rep.model.C0) + "*k";
        for (const auto& [m, v] : rep.model.C)
            if (v != 0) model += (v < 0 ? " - " : " + ") + to_string(v < 0 ? Rational(-v) : v) + "*" + std::to_string(m) + "^k";
        doc.notes.push_back("model (" + to_string(n) + "): " + model);
        doc.notes.push_back(std::string("normalisation bridge ") + (rep.bridge_holds ? "holds" : "FAILS"));
        doc.json = to_json(rep);
        doc.json["bridge_holds"] = rep.bridge_holds;
        if (!rep.all_pass || !rep.bridge_holds) doc.exit_code = 1;
        return doc;
    }
    const auto [lo, hi] = parse_range(c.g);
    doc.columns = {"g", "value"};
    Json rows = Json::array();
    for (int g = lo; g <= hi; ++g) {
        const Rational v = monotone_hurwitz(mu, g, n);
        doc.rows.push_back({std::to_string(g), to_string(v)});
        rows.push_back({{"g", g}, {"value", to_string(v)}});
    }
    doc.json = {{"mu", mu_json(mu)}, {"normalisation", to_string(n)}, {"values", rows}};
    return doc;
}

Document cmd_check(const RunConfig& c) {
    std::vector<std::string> suites;
    if (c.suite == "all") suites = suite_names();
    else suites = {c.suite};
    Document doc;
    doc.columns = {"suite", "check", "result", "detail"};
    Json reports = Json::array();
    bool all = true;
    for (const auto& s : suites) {
        const SuiteReport rep = run_suite(s, CheckOptions{c.max_degree});
        Json results = Json::array();
        for (const auto& r : rep.results) {
            doc.rows.push_back({s, r.name, r.pass ? "pass" : "FAIL", r.detail});
            results.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << rep.seconds;
        doc.notes.push_back(s + ": " + (rep.pass() ? "PASS" : "FAIL") + " (" + std::to_string(rep.results.size()) +
                            " checks, " + secs.str() + " s)");
        reports.push_back({{"suite", s}, {"pass", rep.pass()}, {"results", results}});
        all = all && rep.pass();
    }
    doc.json = {{"suites", reports}, {"pass", all}};
    if (!all) doc.exit_code = 1;
    return doc;
}

Document dispatch(const RunConfig& c) {
    if (c.command == "correlator") return cmd_correlator(c);
    if (c.command == "hurwitz") return cmd_hurwitz(c);
    if (c.command == "coeffs") return cmd_coeffs(c);
    if (c.command == "tables") return cmd_tables(c);
    if (c.command == "oracle") return cmd_oracle(c);
    if (c.command == "monotone") return cmd_monotone(c);
    return cmd_check(c);
}

bool cacheable(const std::string& command) { return command != "tables" && command != "check"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simple, orbifold and monotone Hurwitz numbers", "hurwitz"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;

    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}, {"markdown", Format::markdown}};
    app.add_option("--format", c.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--digits", c.digits, "Also print decimals to this many significant figures")->check(CLI::NonNegativeNumber);
    app.add_option("--budget", c.budget, "Largest number of tuples an exhaustive oracle may enumerate");
    app.add_option("--jobs", c.jobs, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    auto* correlator = app.add_subcommand("correlator", "Connected (or disconnected) vacuum correlator");
    correlator->add_option("--mu", c.mu, "Profile, e.g. 2,1,1");
    correlator->add_option("--word", c.word, "Operator word a:b,..., e.g. 1:1,1:1,-2:1");
    correlator->add_option("--r", c.r, "Orbifold parameter for --mu")->check(CLI::PositiveNumber);
    correlator->add_flag("--disconnected", c.disconnected, "Full vacuum expectation instead of the connected part");

    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz numbers over a genus range");
    hurwitz->add_option("--mu", c.mu, "Profile")->required();
    hurwitz->add_option("--g", c.g, "Genus or range lo..hi");
    hurwitz->add_option("--r", c.r, "Orbifold parameter")->check(CLI::PositiveNumber);
    hurwitz->add_flag("--disconnected", c.disconnected, "Disconnected numbers (r = 1)");
    hurwitz->add_flag("--asymptotic", c.asymptotic, "Compare with the leading exponential");

    auto* coeffs = app.add_subcommand("coeffs", "Structure coefficients C(mu, m)");
    coeffs->add_option("--mu", c.mu, "Profile");
    coeffs->add_option("--r", c.r, "Orbifold parameter")->check(CLI::PositiveNumber);
    coeffs->add_option("--classical", c.classical, "Classical coefficients B(d, m) for this d")->check(CLI::PositiveNumber);

    auto* tables = app.add_subcommand("tables", "Regenerate a reference table and compare");
    tables->add_option("which", c.which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

    auto* oracle = app.add_subcommand("oracle", "Count transposition factorisations directly");
    oracle->add_option("--mu", c.mu, "Target cycle type")->required();
    oracle->add_option("--k", c.k, "Number of transpositions")->check(CLI::NonNegativeNumber);
    oracle->add_option("--g", c.g, "Genus (sets k when --k is absent)");
    oracle->add_option("--r", c.r, "Orbifold parameter")->check(CLI::PositiveNumber);
    oracle->add_option("--method", c.method, "exhaustive, convolution or dp")
        ->check(CLI::IsMember({"exhaustive", "convolution", "dp"}));
    oracle->add_flag("--transitive", c.transitive, "Count transitive tuples only");
    oracle->add_flag("--monotone", c.monotone, "Count monotone tuples only");
    oracle->add_flag("--fixed-target", c.fixed_target, "Product equals one fixed permutation");

    auto* monotone = app.add_subcommand("monotone", "Monotone Hurwitz numbers");
    monotone->add_option("--mu", c.mu, "Profile")->required();
    monotone->add_option("--g", c.g, "Genus or range lo..hi");
    monotone->add_option("--normalisation", c.normalisation, "fixed-target or definition");
    monotone->add_flag("--verify", c.verify, "Fit the exponential-plus-linear model and check every genus");

    auto* check = app.add_subcommand("check", "Run an invariant suite");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    check->add_option("suite", c.suite, "Suite name or all")->required()->check(CLI::IsMember(suite_choices));
    check->add_option("--max-degree", c.max_degree, "Override the suite's |mu| bound")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (c.jobs > 0) omp_set_num_threads(c.jobs);

    try {
        const ResultCache cache = cacheable(c.command) ? ResultCache::from_env() : ResultCache();
        const std::string key = c.cache_key();
        if (cache.enabled())
            if (auto hit = cache.get(key); hit && hit->contains("output") && hit->contains("exit")) {
                out << hit->at("output").get<std::string>();
                return hit->at("exit").get<int>();
            }
        const Document doc = dispatch(c);
        const std::string text = render(doc, c.format);
        out << text;
        if (cache.enabled()) cache.put(key, Json{{"output", text}, {"exit", doc.exit_code}});
        if (doc.exit_code != 0 && c.command == "tables")
            err << "MismatchAgainstGolden: table " << c.which << " differs from the reference copy\n";
        return doc.exit_code;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hs
