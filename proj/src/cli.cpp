#include "rahp/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rahp/andreev.hpp"
#include "rahp/canonical.hpp"
#include "rahp/census.hpp"
#include "rahp/error.hpp"
#include "rahp/generators.hpp"
#include "rahp/io.hpp"
#include "rahp/numerics.hpp"
#include "rahp/realization.hpp"
#include "rahp/spectra.hpp"
#include "rahp/volumes.hpp"

namespace rahp::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Double-derived values carry at most this many fractional digits.
constexpr int kDoubleDigits = 15;

struct Options {
    std::string format = "json";
    int jobs = 1;
    int digits = 10;
    double tol = 1e-10;
    int max_n = 0;
    int n = 0;
    int k = 1;
    std::string kind = "ideal";
    std::string input;
    std::string other;
    std::string family;
    std::string move_type;
    std::vector<int> edges;
    int face = -1;
    int other_face = -1;
    int direction = 1;
    int offset = 0;
    bool list = false;
    bool summary = false;
    bool provenance = false;
    bool tags = false;
    double target = 0.0;
    double eps = 1e-4;
    int max_terms = 64;
    std::optional<double> omega1;
    std::optional<double> ver1;
    std::optional<double> omega2;
    std::optional<double> ver2;
    double omega = 0.0;
    int eq = 0;
    std::string name;
};

std::string read_text(const std::string& source, std::istream& in)
{
    if (source == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(source);
    if (!file) throw Error(ErrorCode::BadInput, "cannot open " + source);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string real(double x, int digits) { return to_decimal(x, std::min(digits, kDoubleDigits)); }

Kind parse_kind(const std::string& name)
{
    if (name == "ideal") return Kind::ideal;
    if (name == "compact") return Kind::compact;
    throw Error(ErrorCode::BadParameter, "kind must be ideal or compact");
}

ordered_json envelope()
{
    ordered_json j;
    j["schema"] = "1";
    return j;
}

void put_polyhedron(ordered_json& j, const AbstractPolyhedron& P, bool tags)
{
    j["code"] = canonical_code(P).text;
    j["vertices"] = P.vertex_count();
    const json body = polyhedron_to_json(P, tags);
    j["faces"] = body.at("faces");
    if (tags && body.contains("tags")) j["tags"] = body.at("tags");
}

json edge_json(Edge e) { return json::array({e.first, e.second}); }

ordered_json cmd_validate(const Options& o, std::istream& in)
{
    const auto P = read_polyhedron(read_text(o.input, in));
    const auto report = andreev_check(P);
    auto j = envelope();
    j["valid"] = report.valid();
    j["kind"] = to_string(report.kind);
    j["code"] = canonical_code(P).text;
    j["conditions"] = {{"steinitz", report.steinitz_ok},
                       {"faces_ge6", report.cond_faces_ge6},
                       {"valency", report.cond_valency},
                       {"triples", report.cond_triples},
                       {"no_prismatic4", report.cond_no_prismatic4}};
    if (report.witness) {
        ordered_json w;
        w["reason"] = report.witness->reason;
        w["faces"] = report.witness->faces;
        if (report.witness->vertex) w["vertex"] = *report.witness->vertex;
        if (report.witness->circuit) w["crossed_edges"] = report.witness->circuit->crossed_edges;
        j["witness"] = w;
    }
    return j;
}

ordered_json cmd_gen(const Options& o)
{
    AbstractPolyhedron P = [&] {
        if (o.family == "antiprism") return antiprism(o.n);
        if (o.family == "lobell") return lobell(o.n);
        return tower(o.n, o.k);
    }();
    auto j = envelope();
    j["family"] = o.family;
    j["n"] = o.n;
    if (o.family == "tower") j["k"] = o.k;
    j["kind"] = to_string(andreev_check(P).kind);
    put_polyhedron(j, P, o.tags);
    return j;
}

Edge edge_at(const std::vector<int>& v, std::size_t i) { return Edge{v.at(i), v.at(i + 1)}; }

ordered_json cmd_move(const Options& o, std::istream& in)
{
    const auto P = read_polyhedron(read_text(o.input, in));
    auto j = envelope();
    if (o.list) {
        json twists = json::array();
        for (const auto& c : edge_twist_candidates(P))
            twists.push_back({{"face", c.face}, {"e1", edge_json(c.e1)}, {"e2", edge_json(c.e2)}});
        json goods = json::array();
        if (andreev_check(P).kind == Kind::compact)
            for (const auto& c : good_edges(P))
                goods.push_back({{"edge", edge_json(c.edge)}, {"very_good", c.cls == EdgeClass::very_good}});
        json additions = json::array();
        for (const auto& c : edge_addition_candidates(P))
            additions.push_back({{"face", c.face}, {"ea", edge_json(c.ea)}, {"eb", edge_json(c.eb)}});
        j["twist"] = twists;
        j["surgery"] = goods;
        j["addition"] = additions;
        return j;
    }
    const std::size_t need = o.move_type == "surgery" ? 2 : o.move_type == "compose" ? 0 : 4;
    if (o.edges.size() != need)
        throw Error(ErrorCode::BadParameter,
                    o.move_type + " takes " + std::to_string(need) + " edge endpoints, got " +
                        std::to_string(o.edges.size()));
    AbstractPolyhedron result;
    ordered_json move;
    move["kind"] = o.move_type;
    if (o.move_type == "compose") {
        const auto Q = read_polyhedron(read_text(o.other, in));
        const Matching matching{o.direction, o.offset};
        result = connect_sum(P, o.face, Q, o.other_face, matching);
        move["face"] = o.face;
        move["other_face"] = o.other_face;
        move["other"] = canonical_code(Q).text;
        move["matching"] = {{"direction", matching.direction}, {"offset", matching.offset}};
        move["isometric"] = gluing_is_isometric(P, o.face, Q, o.other_face, matching);
    } else {
        MoveDescriptor d;
        d.face = o.face;
        d.e1 = edge_at(o.edges, 0);
        if (o.move_type == "twist") {
            d.kind = MoveKind::twist;
            d.e2 = edge_at(o.edges, 2);
        } else if (o.move_type == "surgery") {
            d.kind = MoveKind::surgery;
        } else {
            d.kind = MoveKind::addition;
            d.e2 = edge_at(o.edges, 2);
        }
        result = apply_move(P, d);
        const json descriptor = to_json(d);
        for (const auto& [key, value] : descriptor.items()) move[key] = value;
    }
    j["move"] = move;
    j["kind"] = to_string(andreev_check(result).kind);
    put_polyhedron(j, result, o.tags);
    return j;
}

ordered_json cmd_census(const Options& o, std::ostream& out, bool& printed)
{
    const Kind kind = parse_kind(o.kind);
    CensusOptions opts;
    opts.jobs = o.jobs;
    const auto result = kind == Kind::ideal ? ideal_census(o.max_n, opts) : compact_census(o.max_n, opts);
    if (o.format == "text") {
        for (const auto& [n, codes] : result.codes) {
            out << "# n=" << n << " count=" << codes.size() << "\n";
            if (!o.summary)
                for (const auto& c : codes) out << c.text << "\n";
        }
        printed = true;
        return {};
    }
    auto j = envelope();
    j["kind"] = to_string(kind);
    j["n_max"] = o.max_n;
    ordered_json counts = ordered_json::object();
    for (const auto& [n, c] : result.counts()) counts[std::to_string(n)] = c;
    j["counts"] = counts;
    if (!o.summary) {
        ordered_json codes = ordered_json::object();
        for (const auto& [n, list] : result.codes) {
            json texts = json::array();
            for (const auto& c : list) texts.push_back(c.text);
            codes[std::to_string(n)] = texts;
        }
        j["codes"] = codes;
        if (kind == Kind::compact) {
            ordered_json volumes = ordered_json::object();
            for (const auto& [code, v] : result.volumes) volumes[code] = real(v, o.digits);
            j["additive_volumes"] = volumes;
        }
    }
    if (o.provenance) {
        ordered_json logs = ordered_json::object();
        for (const auto& [code, log] : result.provenance) logs[code] = to_json(log);
        j["provenance"] = logs;
    }
    return j;
}

ordered_json cmd_volume(const Options& o, std::istream& in)
{
    auto j = envelope();
    if (!o.input.empty()) {
        const auto P = read_polyhedron(read_text(o.input, in));
        const auto v = ideal_volume(P, o.tol);
        const auto nv = normalized(v, P.vertex_count(), Kind::ideal);
        j["code"] = canonical_code(P).text;
        j["value"] = real(v.value, o.digits);
        j["method"] = to_string(v.method);
        j["digits"] = std::min(o.digits, kDoubleDigits);
        j["omega"] = real(nv.omega, o.digits);
        if (nv.omega_tilde) j["omega_tilde"] = real(*nv.omega_tilde, o.digits);
        return j;
    }
    const PrecisionSpec prec{std::max(o.digits, 15)};
    int ver = 0;
    Kind kind = Kind::compact;
    VolumeValue v;
    if (o.family == "antiprism") {
        v = antiprism_volume(o.n, prec);
        ver = 2 * o.n;
        kind = Kind::ideal;
    } else if (o.family == "lobell") {
        v = lobell_volume(o.n, prec);
        ver = 4 * o.n;
    } else {
        v = tower_volume(o.n, o.k, prec);
        ver = 2 * o.n * (o.k + 1);
    }
    j["family"] = o.family;
    j["n"] = o.n;
    if (o.family == "tower") j["k"] = o.k;
    j["digits"] = o.digits;
    j["method"] = to_string(v.method);
    if (v.high) {
        j["value"] = to_decimal(*v.high, o.digits);
        j["omega"] = to_decimal(HighReal(*v.high / ver), o.digits);
    } else {
        j["value"] = real(v.value, o.digits);
        j["omega"] = real(v.value / ver, o.digits);
    }
    j["ver"] = ver;
    const auto nv = normalized(v.value, ver, kind);
    if (nv.omega_tilde) j["omega_tilde"] = real(*nv.omega_tilde, o.digits);
    return j;
}

ordered_json cmd_realize(const Options& o, std::istream& in)
{
    const auto P = read_polyhedron(read_text(o.input, in));
    const auto pattern = solve_pattern(P, o.tol);
    const auto R = realize(P, pattern);
    auto j = envelope();
    j["code"] = canonical_code(P).text;
    j["apex"] = R.apex;
    const json dump = pattern_to_json(P, pattern);
    for (const auto& [key, value] : dump.items()) j[key] = value;
    j["volume"] = real(volume_from_positions(P, R.vertices, R.apex, o.tol), o.digits);
    return j;
}

ordered_json row_json(const SpectrumRow& row, int digits)
{
    ordered_json r;
    r["n"] = row.n;
    r["count"] = row.count;
    r["distinct_omega"] = row.distinct_omega;
    r["min_omega"] = row.min_omega ? json(real(*row.min_omega, digits)) : json(nullptr);
    r["max_omega"] = row.max_omega ? json(real(*row.max_omega, digits)) : json(nullptr);
    r["with_volume"] = row.with_volume;
    r["partial"] = row.partial;
    return r;
}

ordered_json cmd_spectrum(const Options& o)
{
    const Kind kind = parse_kind(o.kind);
    if (o.n == 0 && o.max_n == 0) throw Error(ErrorCode::BadParameter, "spectrum needs --n or --max-n");
    const int top = std::max(o.n, o.max_n);
    CensusOptions opts;
    opts.jobs = o.jobs;
    const auto census = kind == Kind::ideal ? ideal_census(top, opts) : compact_census(top, opts);
    const auto volumes = kind == Kind::ideal ? realized_volumes(census, o.jobs, o.tol) : census.volumes;
    auto j = envelope();
    j["kind"] = to_string(kind);
    if (o.n != 0) {
        const auto it = census.codes.find(o.n);
        if (it == census.codes.end())
            throw Error(ErrorCode::BadParameter, "no " + to_string(kind) + " vertex count " + std::to_string(o.n));
        const auto row = row_json(spectrum_table(kind, o.n, it->second, volumes), o.digits);
        for (const auto& [key, value] : row.items()) j[key] = value;
        return j;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& [n, codes] : census.codes) rows.push_back(row_json(spectrum_table(kind, n, codes, volumes), o.digits));
    j["rows"] = rows;
    return j;
}

ordered_json stats_json(const SummandStats& s, int digits)
{
    return {{"ver_tilde", real(s.ver_tilde, digits)}, {"omega_tilde", real(s.omega_tilde, digits)}};
}

ordered_json cmd_schedule(const Options& o)
{
    const bool explicit_stats = o.omega1 || o.ver1 || o.omega2 || o.ver2;
    std::pair<SummandStats, SummandStats> summands;
    if (explicit_stats) {
        if (!(o.omega1 && o.ver1 && o.omega2 && o.ver2))
            throw Error(ErrorCode::BadParameter, "explicit summands need --omega1 --ver1 --omega2 --ver2");
        summands = {SummandStats{*o.ver1, *o.omega1}, SummandStats{*o.ver2, *o.omega2}};
    } else {
        summands = ideal_density_summands(o.target);
    }
    const auto s = approximation_schedule(o.target, summands.first, summands.second, o.eps, o.max_terms);
    auto j = envelope();
    j["target"] = real(s.target, o.digits);
    j["eps"] = real(s.eps, kDoubleDigits);
    j["p1"] = stats_json(s.p1, o.digits);
    j["p2"] = stats_json(s.p2, o.digits);
    j["alpha"] = real(s.alpha, o.digits);
    json pairs = json::array();
    for (const auto& [k, m] : s.pairs) pairs.push_back({k, m});
    j["pairs"] = pairs;
    j["predicted"] = real(s.predicted, o.digits);
    return j;
}

ordered_json cmd_classify(const Options& o, std::ostream& out, bool& printed)
{
    const Kind kind = parse_kind(o.kind);
    const Region region = classify(o.omega, kind);
    if (o.format == "text") {
        out << to_string(region) << "\n";
        printed = true;
        return {};
    }
    auto j = envelope();
    j["omega"] = real(o.omega, o.digits);
    j["kind"] = to_string(kind);
    j["region"] = to_string(region);
    return j;
}

ordered_json cmd_identity(const Options& o)
{
    std::string name = o.name;
    if (o.eq == 8) name = "lobell-antiprism";
    if (o.eq == 9) name = "cuboctahedron";
    if (name != "lobell-antiprism" && name != "cuboctahedron")
        throw Error(ErrorCode::BadParameter, "identity needs --eq 8|9 or --name lobell-antiprism|cuboctahedron");
    const auto v = name == "lobell-antiprism" ? check_lobell_antiprism_identity(o.digits)
                                              : check_cuboctahedron_identity(o.digits);
    auto j = envelope();
    j["name"] = name;
    j["digits"] = o.digits;
    j["verdict"] = v.agree ? "agree" : "differ";
    j["agree_digits"] = v.agree_digits;
    j["value"] = to_decimal(v.rhs, o.digits);
    j["lhs"] = to_decimal(v.lhs, o.digits);
    j["rhs"] = to_decimal(v.rhs, o.digits);
    return j;
}

ordered_json cmd_constants(const Options& o)
{
    const PrecisionSpec prec{std::max(o.digits, 15)};
    validate(prec);
    ordered_json list = ordered_json::array();
    auto add = [&](const std::string& name, const HighReal& value) {
        if (!o.name.empty() && o.name != name) return;
        ordered_json c;
        c["name"] = name;
        c["digits"] = o.digits;
        c["value"] = to_decimal(value, o.digits);
        list.push_back(c);
    };
    add("v_oct", v_oct(prec));
    add("v_tet", v_tet(prec));
    for (const auto& [key, value] : landmark_constants(prec)) add(std::string(1, key), value);
    if (list.empty()) throw Error(ErrorCode::BadParameter, "unknown constant " + o.name);
    auto j = envelope();
    j["constants"] = list;
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Right-angled hyperbolic polyhedra: generation, census, volumes and spectra", "rahp"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 1024));

    auto input_arg = [&](CLI::App* sub) { sub->add_option("input", o.input, "Polyhedron file, or - for stdin")->required(); };
    std::map<CLI::App*, int> digits_of;
    auto digits_opt = [&](CLI::App* sub, int fallback) {
        digits_of[sub] = fallback;
        sub->add_option("--digits", digits_of[sub], "Fractional digits of reported reals")
            ->check(CLI::Range(1, kMaxDigits));
    };
    auto kind_opt = [&](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "ideal or compact")->check(CLI::IsMember({"ideal", "compact"}));
    };
    auto jobs_opt = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 1024)); };

    auto* validate_cmd = app.add_subcommand("validate", "Check right-angled realizability");
    input_arg(validate_cmd);

    auto* gen = app.add_subcommand("gen", "Generate a named polyhedron");
    gen->add_option("family", o.family)->required()->check(CLI::IsMember({"antiprism", "lobell", "tower"}));
    gen->add_option("--n", o.n)->required();
    gen->add_option("--k", o.k, "Tower height");
    gen->add_flag("--tags", o.tags, "Include face tags");

    auto* move = app.add_subcommand("move", "Apply a move or list the legal ones");
    input_arg(move);
    move->add_option("--type", o.move_type)->check(CLI::IsMember({"twist", "surgery", "addition", "compose"}));
    move->add_option("--edges", o.edges, "Edge endpoints: u v for surgery, u1 v1 u2 v2 for twist and addition");
    move->add_option("--face", o.face, "Addition face or first summand face");
    move->add_option("--other", o.other, "Second summand for compose");
    move->add_option("--other-face", o.other_face);
    move->add_option("--direction", o.direction)->check(CLI::IsMember({-1, 1}));
    move->add_option("--offset", o.offset);
    move->add_flag("--list", o.list, "List legal twists, surgeries and additions");
    move->add_flag("--tags", o.tags, "Include face tags");

    auto* census = app.add_subcommand("census", "Enumerate polyhedra up to a vertex count");
    kind_opt(census);
    census->add_option("--max-n", o.max_n)->required();
    census->add_flag("--summary", o.summary, "Counts only");
    census->add_flag("--provenance", o.provenance, "Include replay logs");
    census->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    jobs_opt(census);
    digits_opt(census, 10);

    auto* volume = app.add_subcommand("volume", "Closed-form or realized volume");
    volume->add_option("input", o.input, "Ideal polyhedron file, or - for stdin");
    volume->add_option("--family", o.family)->check(CLI::IsMember({"antiprism", "lobell", "tower"}));
    volume->add_option("--n", o.n);
    volume->add_option("--k", o.k);
    volume->add_option("--tol", o.tol);
    digits_opt(volume, 10);

    auto* realize_cmd = app.add_subcommand("realize", "Solve the circle pattern of an ideal polyhedron");
    input_arg(realize_cmd);
    realize_cmd->add_option("--tol", o.tol);
    digits_opt(realize_cmd, 10);

    auto* spectrum = app.add_subcommand("spectrum", "Normalized-volume table rows");
    kind_opt(spectrum);
    spectrum->add_option("--n", o.n, "Single row");
    spectrum->add_option("--max-n", o.max_n, "All rows up to this vertex count");
    spectrum->add_option("--tol", o.tol);
    jobs_opt(spectrum);
    digits_opt(spectrum, 6);

    auto* schedule = app.add_subcommand("schedule", "Gluing schedule approaching a target");
    schedule->add_option("--target", o.target)->required();
    schedule->add_option("--eps", o.eps);
    schedule->add_option("--max-terms", o.max_terms)->check(CLI::Range(1, 10000));
    schedule->add_option("--omega1", o.omega1, "Modified normalized volume of the first summand");
    schedule->add_option("--ver1", o.ver1, "Modified vertex count of the first summand");
    schedule->add_option("--omega2", o.omega2);
    schedule->add_option("--ver2", o.ver2);
    digits_opt(schedule, 12);

    auto* classify_cmd = app.add_subcommand("classify", "Spectrum region of a normalized volume");
    classify_cmd->add_option("--omega", o.omega)->required();
    kind_opt(classify_cmd);
    classify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    digits_opt(classify_cmd, 6);

    auto* identity = app.add_subcommand("identity", "High-precision check of a volume identity");
    identity->add_option("--eq", o.eq, "8: lobell-antiprism, 9: cuboctahedron")->check(CLI::IsMember({8, 9}));
    identity->add_option("--name", o.name)->check(CLI::IsMember({"lobell-antiprism", "cuboctahedron"}));
    digits_opt(identity, 50);

    auto* constants = app.add_subcommand("constants", "Volume constants and spectrum landmarks");
    constants->add_option("--name", o.name, "Single constant");
    digits_opt(constants, 6);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    for (const auto& [sub, digits] : digits_of)
        if (sub->parsed()) o.digits = digits;

    try {
        ordered_json result;
        bool printed = false;
        if (validate_cmd->parsed()) {
            result = cmd_validate(o, in);
        } else if (gen->parsed()) {
            result = cmd_gen(o);
        } else if (move->parsed()) {
            if (!o.list && o.move_type.empty()) {
                err << "usage error: move needs --type or --list\n";
                return 2;
            }
            result = cmd_move(o, in);
        } else if (census->parsed()) {
            result = cmd_census(o, out, printed);
        } else if (volume->parsed()) {
            if (o.input.empty() && (o.family.empty() || o.n == 0)) {
                err << "usage error: volume needs an input polyhedron or --family with --n\n";
                return 2;
            }
            result = cmd_volume(o, in);
        } else if (realize_cmd->parsed()) {
            result = cmd_realize(o, in);
        } else if (spectrum->parsed()) {
            result = cmd_spectrum(o);
        } else if (schedule->parsed()) {
            result = cmd_schedule(o);
        } else if (classify_cmd->parsed()) {
            result = cmd_classify(o, out, printed);
        } else if (identity->parsed()) {
            if (o.eq == 0 && o.name.empty()) {
                err << "usage error: identity needs --eq or --name\n";
                return 2;
            }
            result = cmd_identity(o);
        } else if (constants->parsed()) {
            result = cmd_constants(o);
        }
        if (!printed) out << result.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        ordered_json j = envelope();
        j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        out << j.dump() << "\n";
        err << to_string(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json j = envelope();
        j["error"] = {{"code", "BadInput"}, {"message", e.what()}};
        out << j.dump() << "\n";
        err << "BadInput: " << e.what() << "\n";
        return 1;
    }
}

} // namespace rahp::cli
