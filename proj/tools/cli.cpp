#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divseq/catalog.hpp"
#include "divseq/errors.hpp"
#include "divseq/sequence.hpp"

#ifndef DIVSEQ_VERSION
#define DIVSEQ_VERSION "0.0.0"
#endif

namespace divseq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t default_terms = 40;
constexpr std::size_t default_max_terms = 512;

struct Options {
    std::string command;
    std::vector<std::string> args;

    std::string sequence;
    std::vector<std::string> params;
    std::string input;
    std::string ring = "ZZ";
    long long terms = 0;
    bool terms_given = false;

    long long n = 0;
    long long at = 0;
    bool at_given = false;

    unsigned workers = 1;
    std::string format = "text";
    std::string out;
};

long long parse_integer(std::string_view text, std::string_view what)
{
    long long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
    return value;
}

std::size_t max_terms()
{
    const char* env = std::getenv("DIVSEQ_MAX_TERMS");
    if (env == nullptr || *env == '\0')
        return default_max_terms;
    const long long cap = parse_integer(env, "DIVSEQ_MAX_TERMS");
    if (cap < 1)
        throw UsageError("DIVSEQ_MAX_TERMS must be positive");
    return static_cast<std::size_t>(cap);
}

std::size_t checked_count(long long n, std::string_view flag)
{
    if (n < 1)
        throw UsageError(std::string(flag) + " must be at least 1");
    const std::size_t cap = max_terms();
    if (static_cast<unsigned long long>(n) > cap)
        throw UsageError(std::string(flag) + " " + std::to_string(n) + " exceeds DIVSEQ_MAX_TERMS=" +
                         std::to_string(cap));
    return static_cast<std::size_t>(n);
}

ParamMap parse_params(const std::vector<std::string>& items)
{
    ParamMap params;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--param expects key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        if (params.count(key))
            throw UsageError("parameter '" + key + "' given twice");
        params[key] = parse_integer(std::string_view(item).substr(eq + 1), "--param " + key);
    }
    return params;
}

struct Source {
    SequenceSpec spec;
    std::size_t count;
};

Source resolve_source(const Options& o)
{
    if (o.sequence.empty() == o.input.empty())
        throw UsageError("exactly one of --sequence or --input is required");

    if (!o.sequence.empty()) {
        auto spec = builtin(o.sequence, parse_params(o.params));
        const std::size_t count = checked_count(o.terms_given ? o.terms : default_terms, "--terms");
        return {std::move(spec), count};
    }

    Ring ring;
    try {
        ring = Ring::parse(o.ring);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--ring: ") + e.what());
    }
    auto spec = read_terms_file(ring, o.input);
    const std::size_t count = o.terms_given ? checked_count(o.terms, "--terms")
                                            : checked_count(static_cast<long long>(*spec.available()), "--terms");
    if (count > *spec.available())
        throw UsageError(o.input + " holds " + std::to_string(*spec.available()) + " terms, " +
                         std::to_string(count) + " requested");
    return {std::move(spec), count};
}

std::vector<std::string> strings(const std::vector<RingElement>& elems)
{
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const auto& e : elems)
        out.push_back(e.str());
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

/// Rows of text cells with a header; rendered as aligned text or CSV.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

bool is_plain_integer(const std::string& cell)
{
    std::size_t i = !cell.empty() && cell[0] == '-' ? 1 : 0;
    if (i == cell.size())
        return false;
    for (; i < cell.size(); ++i)
        if (cell[i] < '0' || cell[i] > '9')
            return false;
    return true;
}

std::string csv_cell(const std::string& cell)
{
    if (cell.empty() || is_plain_integer(cell))
        return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

void write_csv(std::ostream& os, const Table& t)
{
    auto line = [&](const std::vector<std::string>& cells, bool quote) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << (quote ? csv_cell(cells[i]) : cells[i]);
        os << '\n';
    };
    line(t.header, false);
    for (const auto& r : t.rows)
        line(r, true);
}

void write_text_table(std::ostream& os, const Table& t)
{
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < width.size(); ++i)
        width[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size())
                s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
}

Json preamble(const Options& o)
{
    Json j;
    j["tool"] = tool_name;
    j["version"] = DIVSEQ_VERSION;
    j["command"] = o.args;
    return j;
}

Json sequence_json(const Options& o, const SequenceSpec& spec, std::size_t count)
{
    Json j;
    j["name"] = spec.name();
    j["ring"] = spec.ring().name();
    Json params = Json::object();
    if (!spec.is_explicit())
        for (const auto& [k, v] : spec.params())
            params[k] = v;
    j["params"] = params;
    if (spec.is_explicit())
        j["input"] = o.input;
    j["terms"] = count;
    return j;
}

Json table_json(const Table& t)
{
    Json values = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (t.header[i] == "n")
                row["n"] = std::stoull(r[i]);
            else
                row[t.header[i]] = r[i];
        }
        values.push_back(std::move(row));
    }
    return values;
}

Json witness_json(const std::optional<Witness>& w)
{
    if (!w)
        return nullptr;
    Json j;
    j["m"] = w->m;
    j["n"] = w->n;
    Json values;
    for (const auto& [label, value] : w->values)
        values[label] = value;
    j["values"] = values;
    return j;
}

Json report_json(const VerificationReport& r)
{
    Json j;
    j["property"] = r.property;
    j["checked"] = r.checked;
    j["holds"] = r.holds;
    j["witness"] = witness_json(r.witness);
    return j;
}

std::string describe(const VerificationReport& r)
{
    std::ostringstream s;
    s << r.property << ": ";
    if (r.holds) {
        s << "holds for n <= " << r.checked;
        return s.str();
    }
    s << "fails";
    if (r.witness) {
        if (r.witness->m == r.witness->n)
            s << " at n = " << r.witness->n;
        else
            s << " at (m, n) = (" << r.witness->m << ", " << r.witness->n << ")";
        const char* sep = ": ";
        for (const auto& [label, value] : r.witness->values) {
            s << sep << label << " = " << value;
            sep = ", ";
        }
    }
    return s.str();
}

std::string heading(const SequenceSpec& spec, std::size_t count)
{
    std::ostringstream s;
    s << spec.name();
    const char* sep = "(";
    for (const auto& [k, v] : spec.params()) {
        if (spec.is_explicit())
            break;
        s << sep << k << '=' << v;
        sep = ", ";
    }
    if (*sep == ',')
        s << ')';
    s << " over " << spec.ring().name() << ", " << count << " terms";
    return s.str();
}

/// Emits a sequence table in the requested format.
void emit_sequence_table(std::ostream& os, const Options& o, const Source& src, const Table& t, Json extra = {})
{
    if (o.format == "csv") {
        write_csv(os, t);
    } else if (o.format == "json") {
        Json j = preamble(o);
        j["sequence"] = sequence_json(o, src.spec, src.count);
        if (extra.is_object())
            for (auto& [k, v] : extra.items())
                j[k] = v;
        j["values"] = table_json(t);
        os << j.dump(2) << '\n';
    } else {
        os << "# " << heading(src.spec, src.count) << '\n';
        write_text_table(os, t);
    }
}

/// Emits a flat record (one row) in the requested format.
void emit_record(std::ostream& os, const Options& o, const std::vector<std::pair<std::string, Json>>& fields,
                 const std::string& text)
{
    if (o.format == "json") {
        Json j = preamble(o);
        for (const auto& [k, v] : fields)
            j[k] = v;
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        Table t;
        std::vector<std::string> row;
        for (const auto& [k, v] : fields) {
            t.header.push_back(k);
            row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        t.rows.push_back(std::move(row));
        write_csv(os, t);
    } else {
        os << text << '\n';
    }
}

// ---------------------------------------------------------------------------
// Commands

void cmd_terms(std::ostream& os, const Options& o)
{
    const auto src = resolve_source(o);
    const auto terms = materialize(src.spec, src.count);
    Table t{{"n", "a_n"}, {}};
    for (std::size_t k = 0; k < terms.size(); ++k)
        t.rows.push_back({std::to_string(k + 1), terms[k].str()});
    emit_sequence_table(os, o, src, t);
}

void cmd_lcmseq(std::ostream& os, const Options& o)
{
    const auto src = resolve_source(o);
    const auto r = lcm_sequence(src.spec, src.count);
    Table t{{"n", "a_n", "e_n", "c_n"}, {}};
    for (std::size_t k = 0; k < r.size(); ++k)
        t.rows.push_back({std::to_string(k + 1), r.a[k].str(), r.e[k + 1].str(), r.c[k].str()});
    emit_sequence_table(os, o, src, t);
}

void cmd_invert(std::ostream& os, const Options& o)
{
    const auto src = resolve_source(o);
    const auto terms = materialize(src.spec, src.count);
    const auto inv = mobius_invert(terms);
    Table t{{"n", "a_n", "b_n"}, {}};
    for (std::size_t k = 0; k < terms.size(); ++k)
        t.rows.push_back({std::to_string(k + 1), terms[k].str(), inv.b[k] ? inv.b[k]->str() : ""});

    if (o.format == "json") {
        Json j = preamble(o);
        j["sequence"] = sequence_json(o, src.spec, src.count);
        j["all_exact"] = inv.all_exact();
        j["first_inexact"] = inv.first_inexact ? Json(*inv.first_inexact) : Json(nullptr);
        Json values = Json::array();
        for (std::size_t k = 0; k < terms.size(); ++k) {
            Json row;
            row["n"] = k + 1;
            row["a_n"] = terms[k].str();
            row["b_n"] = inv.b[k] ? Json(inv.b[k]->str()) : Json(nullptr);
            row["exact"] = static_cast<bool>(inv.exact[k]);
            values.push_back(std::move(row));
        }
        j["values"] = values;
        os << j.dump(2) << '\n';
        return;
    }
    if (o.format == "text")
        for (auto& r : t.rows)
            if (r[2].empty())
                r[2] = "(inexact)";
    emit_sequence_table(os, o, src, t);
}

void cmd_verify(std::ostream& os, const Options& o)
{
    const auto src = resolve_source(o);
    const auto report = verify_equivalence(src.spec, src.count, {o.workers});
    const auto& sd = report.strong_divisibility;
    const auto& dp = report.divisor_product;

    if (o.format == "json") {
        Json j = preamble(o);
        j["sequence"] = sequence_json(o, src.spec, src.count);
        j["holds"] = sd.holds;
        j["witness"] = witness_json(sd.witness);
        j["checks"] = Json::array({report_json(sd), report_json(dp)});
        j["c"] = strings(report.lcm.c);
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        Table t{{"property", "checked", "holds", "m", "n"}, {}};
        for (const auto* r : {&sd, &dp})
            t.rows.push_back({r->property, std::to_string(r->checked), r->holds ? "true" : "false",
                              r->witness ? std::to_string(r->witness->m) : "",
                              r->witness ? std::to_string(r->witness->n) : ""});
        write_csv(os, t);
    } else {
        os << "# " << heading(src.spec, src.count) << '\n';
        os << describe(sd) << '\n' << describe(dp) << '\n';
    }
}

void cmd_wnbei(std::ostream& os, const Options& o)
{
    Options sized = o;
    sized.terms = o.n;
    sized.terms_given = true;
    const auto src = resolve_source(sized);
    if (src.count < 2)
        throw UsageError("--n must be at least 2");
    const auto q = prime_divisor_quotient(src.spec, src.count);
    emit_record(os, o,
                {{"n", src.count}, {"left", q.left.str()}, {"right", q.right.str()}, {"agree", q.agree()}},
                "left  = " + q.left.str() + "\nright = " + q.right.str() + "\n" + (q.agree() ? "agree" : "differ"));
}

void cmd_cyclotomic(std::ostream& os, const Options& o)
{
    const std::size_t n = checked_count(o.n, "--n");
    if (o.at_given) {
        if (o.at < 2)
            throw UsageError("--at must be at least 2");
        const auto value = cyclotomic_phi_at(n, o.at).get_str();
        emit_record(os, o, {{"n", n}, {"b", o.at}, {"value", value}}, value);
        return;
    }
    const auto phi = cyclotomic_phi(n).str();
    emit_record(os, o, {{"n", n}, {"phi_n", phi}}, phi);
}

void cmd_psi(std::ostream& os, const Options& o)
{
    const std::size_t n = checked_count(o.n, "--n");
    const auto p = psi(n).str();
    emit_record(os, o, {{"n", n}, {"psi_n", p}}, p);
}

std::string params_text(const CatalogEntry& e)
{
    std::string s;
    for (const auto& p : e.params)
        s += (s.empty() ? "" : " ") + p.name + "=" + std::to_string(p.default_value);
    return s;
}

void cmd_catalog(std::ostream& os, const Options& o)
{
    if (o.format == "json") {
        Json j = preamble(o);
        Json entries = Json::array();
        for (const auto& e : catalog()) {
            Json params = Json::array();
            for (const auto& p : e.params)
                params.push_back({{"name", p.name}, {"default", p.default_value}, {"description", p.description}});
            entries.push_back({{"name", e.name},
                               {"ring", e.ring.name()},
                               {"expected", std::string(to_string(e.expected))},
                               {"params", params},
                               {"note", e.note}});
        }
        j["sequences"] = entries;
        os << j.dump(2) << '\n';
        return;
    }
    Table t{{"name", "ring", "expected", "params", "note"}, {}};
    for (const auto& e : catalog())
        t.rows.push_back({e.name, e.ring.name(), std::string(to_string(e.expected)), params_text(e), e.note});
    if (o.format == "csv")
        write_csv(os, t);
    else
        write_text_table(os, t);
}

// ---------------------------------------------------------------------------

void add_source_options(CLI::App* sub, Options& o)
{
    auto* seq = sub->add_option("--sequence", o.sequence, "built-in sequence name (see `catalog`)");
    auto* param = sub->add_option("--param", o.params, "parameter key=value, repeatable")->needs(seq);
    param->allow_extra_args(false);
    auto* input = sub->add_option("--input", o.input, "file with one term per line")->excludes(seq);
    sub->add_option("--ring", o.ring, "ring of the input terms, e.g. ZZ or x,y")->needs(input);
    sub->add_option("--terms", o.terms, "number of terms N (default 40, or all terms of --input)");
}

void add_output_options(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "write the report to a file instead of stdout");
}

int dispatch(Options& o, std::ostream& out)
{
    std::ostringstream report;
    if (o.command == "terms")
        cmd_terms(report, o);
    else if (o.command == "lcmseq")
        cmd_lcmseq(report, o);
    else if (o.command == "invert")
        cmd_invert(report, o);
    else if (o.command == "verify")
        cmd_verify(report, o);
    else if (o.command == "wnbei")
        cmd_wnbei(report, o);
    else if (o.command == "cyclotomic")
        cmd_cyclotomic(report, o);
    else if (o.command == "psi")
        cmd_psi(report, o);
    else
        cmd_catalog(report, o);

    if (o.out.empty()) {
        out << report.str();
        return exit_ok;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot open " + o.out + " for writing");
    file << report.str();
    if (!file)
        throw UsageError("failed writing " + o.out);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    o.args = args;

    CLI::App app{"lcm-sequences, strong divisibility sequences and cyclotomic polynomials", tool_name};
    app.set_version_flag("--version", DIVSEQ_VERSION);
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        bool source;
    };
    const Sub subs[] = {
        {"terms", "print the first N terms", true},
        {"lcmseq", "running lcms e_n and quotients c_n", true},
        {"invert", "Moebius inversion b_n of the terms", true},
        {"verify", "check strong divisibility and the divisor-product identity", true},
        {"wnbei", "two expressions for the n-th lcm quotient", true},
        {"cyclotomic", "cyclotomic polynomial Phi_n, or Phi_n(b) with --at", false},
        {"psi", "homogeneous cyclotomic polynomial Psi_n(x,y)", false},
        {"catalog", "list the built-in sequences", false},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->callback([&o, name = s.name] { o.command = name; });
        if (s.source)
            add_source_options(sub, o);
        add_output_options(sub, o);
        const std::string name = s.name;
        if (name == "verify")
            sub->add_option("--workers", o.workers, "threads for the pairwise scans")->check(CLI::PositiveNumber);
        if (name == "wnbei" || name == "cyclotomic" || name == "psi")
            sub->add_option("--n", o.n, "index n")->required();
        if (name == "cyclotomic")
            sub->add_option("--at", o.at, "evaluate at the integer b >= 2");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    for (auto* sub : app.get_subcommands()) {
        o.terms_given = o.terms_given || (sub->get_option_no_throw("--terms") && sub->count("--terms") > 0);
        o.at_given = o.at_given || (sub->get_option_no_throw("--at") && sub->count("--at") > 0);
    }

    try {
        return dispatch(o, out);
    } catch (const UsageError& e) {
        err << tool_name << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << tool_name << ": " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace divseq::cli
