#include "symfunc/cli.hpp"

#include "symfunc/identities.hpp"
#include "symfunc/umbral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace symfunc::cli {

using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Documents

Json partition_json(const Partition& p) {
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

Partition partition_from(const Json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("partition entries must be integers");
        parts.push_back(x.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw ParseError(std::string("field \"") + key + "\" must be a boolean");
    return v.get<bool>();
}

Json symfunc_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) terms.push_back(Json{{"partition", partition_json(lam)}, {"coeff", c.str()}});
    return Json{{"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from(const Json& j) {
    SymFunc f(parse_basis(string_field(j, "basis")));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) f.add_term(partition_from(field(t, "partition")), parse_qt(string_field(t, "coeff")));
    return f;
}

struct MatrixDoc {
    std::string series, convention;
    int deg = 0;
    TransitionMatrix m;
};

Json matrix_json(const MatrixDoc& d) {
    Json index = Json::array(), rows = Json::array();
    for (const auto& p : d.m.index) index.push_back(partition_json(p));
    for (const auto& r : d.m.entries) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_string(x));
        rows.push_back(row);
    }
    return Json{{"series", d.series}, {"convention", d.convention}, {"deg", d.deg}, {"index", index}, {"entries", rows}};
}

MatrixDoc matrix_from(const Json& j) {
    MatrixDoc d{string_field(j, "series"), string_field(j, "convention"), int_field(j, "deg"), {}};
    for (const auto& p : field(j, "index")) d.m.index.push_back(partition_from(p));
    for (const auto& r : field(j, "entries")) {
        if (!r.is_array() || r.size() != d.m.index.size()) throw ParseError("matrix rows must match the index length");
        std::vector<BigRational> row;
        for (const auto& x : r) {
            if (!x.is_string()) throw ParseError("matrix entries must be strings");
            row.push_back(parse_rational(x.get<std::string>()));
        }
        d.m.entries.push_back(std::move(row));
    }
    if (d.m.entries.size() != d.m.index.size()) throw ParseError("matrix must be square");
    return d;
}

struct TableDoc {
    std::string series, convention, extract;
    int deg = 0;
    std::vector<std::vector<BigInt>> table;
};

Json table_json(const TableDoc& d) {
    Json rows = Json::array();
    for (const auto& r : d.table) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        rows.push_back(row);
    }
    return Json{{"series", d.series}, {"convention", d.convention}, {"deg", d.deg}, {"extract", d.extract}, {"table", rows}};
}

TableDoc table_from(const Json& j) {
    TableDoc d{string_field(j, "series"), string_field(j, "convention"), string_field(j, "extract"), int_field(j, "deg"), {}};
    for (const auto& r : field(j, "table")) {
        std::vector<BigInt> row;
        for (const auto& x : r) {
            if (!x.is_string()) throw ParseError("table entries must be strings");
            BigInt v;
            if (v.set_str(x.get<std::string>(), 10) != 0) throw ParseError("bad integer in table");
            row.push_back(v);
        }
        d.table.push_back(std::move(row));
    }
    return d;
}

struct LrEntry {
    Partition left, right;
    QTRational value;
};

struct LrDoc {
    Partition lambda;
    std::string series, convention;  // empty for plain Schur coefficients
    bool lr_property = false;
    std::vector<LrEntry> entries;
};

Json lr_json(const LrDoc& d) {
    Json j{{"partition", partition_json(d.lambda)}};
    if (!d.series.empty()) {
        j["series"] = d.series;
        j["convention"] = d.convention;
        j["lr_property"] = d.lr_property;
    }
    Json cs = Json::array();
    for (const auto& e : d.entries) cs.push_back(Json{{"left", partition_json(e.left)}, {"right", partition_json(e.right)}, {"value", e.value.str()}});
    j["coefficients"] = cs;
    return j;
}

LrDoc lr_from(const Json& j) {
    LrDoc d;
    d.lambda = partition_from(field(j, "partition"));
    if (j.contains("series")) {
        d.series = string_field(j, "series");
        d.convention = string_field(j, "convention");
        d.lr_property = bool_field(j, "lr_property");
    }
    for (const auto& e : field(j, "coefficients"))
        d.entries.push_back({partition_from(field(e, "left")), partition_from(field(e, "right")), parse_qt(string_field(e, "value"))});
    return d;
}

const std::vector<std::pair<std::string, PieriKind>> kPieriKinds = {
    {"phi", PieriKind::phi}, {"psi", PieriKind::psi}, {"phi-prime", PieriKind::phi_prime}, {"psi-prime", PieriKind::psi_prime}};

PieriKind pieri_kind(const std::string& name) {
    for (const auto& [n, k] : kPieriKinds)
        if (n == name) return k;
    throw ParseError("unknown Pieri kind: " + name);
}

struct PieriDoc {
    std::string kind;
    Partition lambda, mu;
    QTRational coeff;
};

Json pieri_json(const PieriDoc& d) {
    return Json{{"kind", d.kind}, {"lambda", partition_json(d.lambda)}, {"mu", partition_json(d.mu)}, {"coeff", d.coeff.str()}};
}

PieriDoc pieri_from(const Json& j) {
    PieriDoc d{string_field(j, "kind"), partition_from(field(j, "lambda")), partition_from(field(j, "mu")), parse_qt(string_field(j, "coeff"))};
    pieri_kind(d.kind);
    return d;
}

// Reports: identity name, parameters, the verdict and optional per-degree
// verdicts, in that order.
Json report_from(const Json& j) {
    string_field(j, "identity");
    bool_field(j, "equal");
    if (j.contains("per_degree")) {
        const Json& pd = j["per_degree"];
        if (!pd.is_array()) throw ParseError("per_degree must be an array");
        for (const auto& e : pd) {
            int_field(e, "d");
            bool_field(e, "equal");
        }
    }
    for (const auto& [k, v] : j.items())
        if (v.is_object()) throw ParseError("unexpected nested object in report field \"" + k + "\"");
    return j;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

// Table rendering

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void table_symfunc(std::ostream& out, const SymFunc& f) {
    if (f.is_zero()) {
        out << "0\n";
        return;
    }
    std::size_t w = 0;
    for (const auto& [lam, c] : f.terms()) w = std::max(w, lam.str().size());
    for (const auto& [lam, c] : f.terms()) out << basis_name(f.basis()) << pad(lam.str(), w) << "  " << c.str() << "\n";
}

void table_grid(std::ostream& out, const std::vector<std::string>& row_labels, const std::vector<std::vector<std::string>>& cells) {
    std::size_t w = 1, lw = 0;
    for (const auto& r : cells)
        for (const auto& c : r) w = std::max(w, c.size());
    for (const auto& l : row_labels) lw = std::max(lw, l.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!row_labels.empty()) out << pad(row_labels[i], lw) << " |";
        for (const auto& c : cells[i]) out << ' ' << pad(c, w);
        out << "\n";
    }
}

void table_report(std::ostream& out, const Json& j) {
    out << j["identity"].get<std::string>() << ":";
    for (const auto& [k, v] : j.items()) {
        if (k == "identity" || k == "equal" || k == "per_degree") continue;
        out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << "  " << (j["equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
    if (j.contains("per_degree"))
        for (const auto& e : j["per_degree"]) out << "  degree " << e["d"].get<int>() << ": " << (e["equal"].get<bool>() ? "equal" : "NOT equal") << "\n";
}

// Argument helpers

void require_range(const char* what, long v, long lo, long hi) {
    if (v < lo || v > hi)
        throw UsageError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(v));
}

UmbralConvention parse_convention(const std::string& s) {
    if (s == "associated") return UmbralConvention::associated;
    if (s == "generating") return UmbralConvention::generating;
    throw UsageError("unknown convention: " + s);
}

// A named series or a JSON list of coefficients starting at z^1.
std::pair<std::string, DeltaSeries> parse_series(const std::string& text, int order) {
    if (auto named = DeltaSeries::named(text, order)) return {text, *named};
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        throw UsageError("--series: unknown name and not a JSON list: " + text);
    }
    if (!j.is_array() || j.empty()) throw UsageError("--series: expected a nonempty JSON list of coefficients");
    std::vector<BigRational> c;
    for (const auto& x : j) {
        if (x.is_number_integer())
            c.emplace_back(x.get<long>());
        else if (x.is_string())
            c.push_back(parse_rational(x.get<std::string>()));
        else
            throw UsageError("--series: coefficients must be integers or rational strings");
    }
    if (static_cast<int>(c.size()) < order)
        throw UsageError("--series: " + std::to_string(c.size()) + " coefficients given, degree " + std::to_string(order) + " needs that many");
    c.resize(static_cast<std::size_t>(order));
    try {
        return {"custom", DeltaSeries(std::move(c))};
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--series: ") + e.what());
    }
}

std::vector<std::string> partition_labels(const std::vector<Partition>& ps) {
    std::vector<std::string> r;
    for (const auto& p : ps) r.push_back(p.str());
    return r;
}

struct Options {
    std::string out = "json";
    std::uint64_t seed = 1;
};

void emit(std::ostream& out, const Options& o, const Json& j, const std::function<void(std::ostream&)>& table) {
    if (o.out == "table")
        table(out);
    else
        out << j.dump() << "\n";
}

int emit_report(std::ostream& out, const Options& o, const Json& j) {
    emit(out, o, j, [&](std::ostream& s) { table_report(s, j); });
    return j["equal"].get<bool>() ? 0 : 1;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return {};
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
            throw ParseError("malformed partition \"" + std::string(text) + "\": expected comma-separated nonnegative integers");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw ParseError("malformed partition \"" + std::string(text) + "\": parts must be weakly decreasing");
    return Partition(std::move(parts));
}

std::string write_symfunc(const SymFunc& f) { return symfunc_json(f).dump(); }

SymFunc read_symfunc(std::string_view json_text) { return symfunc_from(parse_json(json_text)); }

std::string read_document(std::string_view json_text, std::string* kind) {
    Json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    std::string k;
    Json back;
    try {
        if (j.contains("identity")) {
            k = "report";
            back = report_from(j);
        } else if (j.contains("terms")) {
            k = "symfunc";
            back = symfunc_json(symfunc_from(j));
        } else if (j.contains("entries")) {
            k = "matrix";
            back = matrix_json(matrix_from(j));
        } else if (j.contains("table")) {
            k = "table";
            back = table_json(table_from(j));
        } else if (j.contains("coefficients")) {
            k = "lr";
            back = lr_json(lr_from(j));
        } else if (j.contains("kind")) {
            k = "pieri";
            back = pieri_json(pieri_from(j));
        } else {
            throw ParseError("unrecognized document");
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (kind) *kind = k;
    return back.dump();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric functions over Q(q,t)", "symfunc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", o.seed, "Seed for sampled identity checks");

    std::string partition_text, basis = "s", to = "m", series, convention = "associated";

    auto* expand = app.add_subcommand("expand", "Expand a basis element, or an umbral LR basis element with --series");
    expand->add_option("--partition", partition_text)->required();
    expand->add_option("--basis", basis, "m, h, e, p or s");
    expand->add_option("--series", series, "Delta series name or JSON coefficient list");
    expand->add_option("--convention", convention, "associated or generating");
    expand->add_option("--to", to, "Target basis");

    std::string input = "-";
    auto* convert_cmd = app.add_subcommand("convert", "Convert a symmetric function document to another basis");
    convert_cmd->add_option("--input", input, "File, or - for standard input");
    convert_cmd->add_option("--to", to)->required();

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients c^lambda_{mu,nu}");
    lr->add_option("--partition", partition_text)->required();
    lr->add_option("--series", series, "Compare with the coproduct constants of this umbral basis");
    lr->add_option("--convention", convention);

    int deg = 5;
    std::string extract;
    auto* um = app.add_subcommand("umbral-matrix", "Transition matrix of an umbral LR basis to the Schur basis");
    um->add_option("--series", series)->required();
    um->add_option("--deg", deg);
    um->add_option("--convention", convention);
    um->add_option("--extract", extract, "stirling or lah: integer table M[(k),(n)] n!/k!")->check(CLI::IsMember({"stirling", "lah"}));

    std::string which;
    auto* mac = app.add_subcommand("macdonald", "Macdonald P or Q in the monomial basis, or the norm <P,P>");
    mac->add_option("which", which)->required()->check(CLI::IsMember({"P", "Q", "norm"}));
    mac->add_option("--partition", partition_text)->required();

    std::string kind, lambda_text, mu_text;
    auto* pieri = app.add_subcommand("pieri", "Pieri coefficient of lambda/mu");
    pieri->add_option("--kind", kind)->required()->check(CLI::IsMember({"phi", "psi", "phi-prime", "psi-prime"}));
    pieri->add_option("--lambda", lambda_text)->required();
    pieri->add_option("--mu", mu_text)->required();

    std::string identity, z_text = "1/t";
    int vars = 2, size = 3, k = 1, trials = 5;
    auto* verify = app.add_subcommand("verify", "Check an identity exactly");
    verify->add_option("identity", identity)
        ->required()
        ->check(CLI::IsMember({"kawanaka", "schur", "degeneration", "phi-split", "final", "toprove", "norm"}));
    verify->add_option("--vars", vars);
    verify->add_option("--deg", deg);
    verify->add_option("--size", size, "Alphabet size for phi-split and final");
    verify->add_option("--k", k);
    verify->add_option("--trials", trials);
    verify->add_option("--z", z_text, "Value of z for the final identity");
    verify->add_option("--partition", partition_text, "mu for toprove");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*expand) {
            Partition lam = parse_partition(partition_text);
            require_range("partition size", lam.size(), 0, 12);
            Basis target = parse_basis(to);
            SymFunc f;
            if (!series.empty()) {
                auto [name, s] = parse_series(series, std::max(1, lam.size()));
                f = lr_basis(s, lam, parse_convention(convention));
            } else {
                f = SymFunc(parse_basis(basis), lam);
            }
            f = convert(f, target);
            emit(out, o, symfunc_json(f), [&](std::ostream& s) { table_symfunc(s, f); });
            return 0;
        }
        if (*convert_cmd) {
            std::string text;
            if (input == "-") {
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            } else {
                std::ifstream f(input);
                if (!f) throw UsageError("cannot open " + input);
                std::stringstream ss;
                ss << f.rdbuf();
                text = ss.str();
            }
            SymFunc g = convert(read_symfunc(text), parse_basis(to));
            emit(out, o, symfunc_json(g), [&](std::ostream& s) { table_symfunc(s, g); });
            return 0;
        }
        if (*lr) {
            LrDoc d;
            d.lambda = parse_partition(partition_text);
            require_range("partition size", d.lambda.size(), 0, 10);
            auto plain = lr_coefficients(d.lambda);
            if (series.empty()) {
                for (const auto& [mn, c] : plain) d.entries.push_back({mn.first, mn.second, QTRational(c)});
            } else {
                auto [name, s] = parse_series(series, std::max(1, d.lambda.size()));
                d.series = name;
                d.convention = convention;
                auto sc = lr_structure_constants(s, d.lambda, parse_convention(convention));
                std::map<std::pair<Partition, Partition>, QTRational> expect;
                for (const auto& [mn, c] : plain) expect.emplace(mn, QTRational(c));
                d.lr_property = sc == expect;
                for (const auto& [mn, c] : sc) d.entries.push_back({mn.first, mn.second, c});
            }
            Json j = lr_json(d);
            emit(out, o, j, [&](std::ostream& s) {
                for (const auto& e : d.entries) s << e.left.str() << " " << e.right.str() << "  " << e.value.str() << "\n";
                if (!d.series.empty()) s << "LR property: " << (d.lr_property ? "yes" : "no") << "\n";
            });
            return 0;
        }
        if (*um) {
            require_range("--deg", deg, 1, 10);
            auto [name, s] = parse_series(series, deg);
            UmbralConvention conv = parse_convention(convention);
            TransitionMatrix m = transition_matrix(s, deg, conv);
            if (!extract.empty()) {
                TableDoc d{name, convention, extract, deg, stirling_lah_extract(m, deg)};
                emit(out, o, table_json(d), [&](std::ostream& st) {
                    std::vector<std::vector<std::string>> cells;
                    for (const auto& r : d.table) {
                        cells.emplace_back();
                        for (const auto& x : r) cells.back().push_back(x.get_str());
                    }
                    table_grid(st, {}, cells);
                });
                return 0;
            }
            MatrixDoc d{name, convention, deg, m};
            emit(out, o, matrix_json(d), [&](std::ostream& st) {
                std::vector<std::vector<std::string>> cells;
                for (const auto& r : m.entries) {
                    cells.emplace_back();
                    for (const auto& x : r) cells.back().push_back(to_string(x));
                }
                table_grid(st, partition_labels(m.index), cells);
            });
            return 0;
        }
        if (*mac) {
            Partition lam = parse_partition(partition_text);
            require_range("partition size", lam.size(), 0, 9);
            if (which == "norm") {
                QTRational n = qt_inner(macdonald_P(lam), macdonald_P(lam));
                Json j{{"identity", "norm"}, {"partition", partition_json(lam)}, {"value", n.str()}, {"equal", n == norm_formula(lam)}};
                return emit_report(out, o, j);
            }
            SymFunc f = which == "P" ? macdonald_P(lam) : convert(macdonald_Q(lam), Basis::m);
            emit(out, o, symfunc_json(f), [&](std::ostream& s) { table_symfunc(s, f); });
            return 0;
        }
        if (*pieri) {
            PieriDoc d{kind, parse_partition(lambda_text), parse_partition(mu_text), 0};
            require_range("lambda size", d.lambda.size(), 0, 30);
            if (!contains(d.lambda, d.mu)) throw UsageError("mu must be contained in lambda");
            d.coeff = pieri_coeff(d.lambda, d.mu, pieri_kind(kind));
            emit(out, o, pieri_json(d), [&](std::ostream& s) { s << kind << " " << d.lambda.str() << "/" << d.mu.str() << " = " << d.coeff.str() << "\n"; });
            return 0;
        }
        if (*verify) {
            if (identity == "kawanaka") {
                require_range("--vars", vars, 1, 6);
                require_range("--deg", deg, 0, 10);
                KawanakaReport r = verify_kawanaka(vars, deg);
                Json pd = Json::array();
                for (const auto& e : r.per_degree) pd.push_back(Json{{"d", e.d}, {"equal", e.equal}});
                return emit_report(out, o, Json{{"identity", "kawanaka"}, {"n", vars}, {"deg", deg}, {"equal", r.equal}, {"per_degree", pd}});
            }
            if (identity == "schur" || identity == "degeneration") {
                require_range("--vars", vars, 1, 6);
                require_range("--deg", deg, 0, identity == "schur" ? 12 : 8);
                bool ok = identity == "schur" ? verify_schur_identity(vars, deg) : kawanaka_schur_degeneration(vars, deg);
                return emit_report(out, o, Json{{"identity", identity}, {"n", vars}, {"deg", deg}, {"equal", ok}});
            }
            if (identity == "norm") {
                require_range("--deg", deg, 0, 8);
                Json pd = Json::array();
                bool all = true;
                for (int d = 0; d <= deg; ++d) {
                    bool ok = true;
                    for (const auto& lam : enumerate(d)) ok = ok && qt_inner(macdonald_P(lam), macdonald_P(lam)) == norm_formula(lam);
                    pd.push_back(Json{{"d", d}, {"equal", ok}});
                    all = all && ok;
                }
                return emit_report(out, o, Json{{"identity", "norm"}, {"deg", deg}, {"equal", all}, {"per_degree", pd}});
            }
            if (identity == "toprove") {
                Partition mu = parse_partition(partition_text);
                require_range("partition size", mu.size(), 0, 8);
                require_range("--k", k, 0, 4);
                return emit_report(out, o, Json{{"identity", "toprove"}, {"partition", partition_json(mu)}, {"k", k}, {"equal", lr_proof_terms(mu, k)}});
            }
            // sampled checks
            require_range("--trials", trials, 1, 100);
            bool phi = identity == "phi-split";
            require_range("--size", size, phi ? 2 : 1, phi ? 6 : 4);
            require_range("--k", k, phi ? 1 : 0, phi ? size - 1 : size);
            QTRational z = parse_qt(z_text);
            SampleGenerator gen(o.seed);
            bool all = true;
            for (int trial = 0; trial < trials; ++trial) {
                for (int attempt = 0;; ++attempt) {
                    LetterAlphabet X = gen.letters(size);
                    try {
                        all = all && (phi ? check_phi_split(X, k) : check_final_identity(X, k, z));
                        break;
                    } catch (const PoleError&) {
                        if (attempt >= 100) throw;
                    }
                }
            }
            Json j{{"identity", identity}, {"size", size}, {"k", k}};
            if (!phi) j["z"] = z.str();
            j["seed"] = o.seed;
            j["trials"] = trials;
            j["equal"] = all;
            return emit_report(out, o, j);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace symfunc::cli
