#include "semiaffine/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "semiaffine/json_io.hpp"
#include "semiaffine/zline.hpp"

namespace semiaffine {

namespace {

struct Options {
    std::string group;
    std::string set_literal;
    std::string bits_hex;
    std::string points;
    std::string groups_csv;
    std::string range;
    std::string format;
    std::string checks_csv;
    std::string output;
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t max_order = 0;
    uint64_t converse_limit = 8;
    unsigned workers = 1;
    bool exhaustive = false;
    bool no_timing = false;
    bool reconstruct_flag = false;
    bool dedup_shifts = false;
};

GroupSpec need_group(const Options& o) {
    if (o.group.empty()) throw std::invalid_argument("missing --group");
    return GroupSpec::parse(o.group);
}

SubsetBits need_set(const Options& o, const GroupSpec& g) {
    if (!o.set_literal.empty() && !o.bits_hex.empty())
        throw std::invalid_argument("--set and --bits are mutually exclusive");
    if (!o.set_literal.empty()) return parse_subset(g, o.set_literal);
    if (!o.bits_hex.empty()) return subset_from_hex(g, o.bits_hex);
    throw std::invalid_argument("missing --set or --bits");
}

CheckSet parse_checks(const std::string& csv) {
    if (csv.empty()) return CheckSet{};
    CheckSet cs{false, false, false, false, false};
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "theorem")
            cs.theorem = true;
        else if (tok == "lemma1")
            cs.lemma1 = true;
        else if (tok == "lemma2")
            cs.lemma2 = true;
        else if (tok == "t2")
            cs.t2_equivalence = true;
        else if (tok == "t1")
            cs.t1_equivalence = true;
        else
            throw std::invalid_argument("unknown check '" + tok + "'");
    }
    return cs;
}

std::pair<uint64_t, uint64_t> parse_range(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must be lo:hi, got '" + text + "'");
    size_t used = 0;
    const uint64_t lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("bad range bound in '" + text + "'");
    const std::string hs = text.substr(colon + 1);
    const uint64_t hi = std::stoull(hs, &used);
    if (used != hs.size()) throw std::invalid_argument("bad range bound in '" + text + "'");
    return {lo, hi};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int run_check(const Options& o, std::ostream& out) {
    const GroupSpec g = need_group(o);
    const SubsetBits x = need_set(o, g);
    const SubsetBits full = SubsetBits::full(g);
    const auto aw = affine_violation(x);
    const auto sw = semiaffine_violation(x);
    const auto mw = midconvex_violation(x, full);
    json j{{"group", g.name()}, {"set", format_subset(x)}};
    const auto put = [&](const char* key, const std::optional<Witness>& w) {
        json e{{"holds", !w}, {"witness", nullptr}};
        if (w) e["witness"] = witness_json(g, *w);
        j[key] = std::move(e);
    };
    put("affine", aw);
    put("semiaffine", sw);
    put("midconvex", mw);
    emit(out, j);
    return 0;
}

int run_classify(const Options& o, std::ostream& out) {
    const GroupSpec g = need_group(o);
    const SubsetBits x = need_set(o, g);
    const Classification c = classify(x);
    json j = classification_json(c);
    if (o.reconstruct_flag)
        j["reconstructed"] = c.semiaffine() ? json(format_subset(reconstruct(c))) : json(nullptr);
    emit(out, j);
    return 0;
}

int run_verify(const Options& o, std::ostream& out) {
    const GroupSpec g = need_group(o);
    if (!o.set_literal.empty() || !o.bits_hex.empty()) {
        const SubsetBits x = need_set(o, g);
        const TheoremReport r = verify_theorem(x, o.converse_limit);
        emit(out, theorem_report_json(r));
        return r.all_passed() ? 0 : 1;
    }
    if (!o.exhaustive && o.samples == 0)
        throw std::invalid_argument("verify needs --set/--bits, --exhaustive, or --samples");
    SweepConfig cfg = o.exhaustive ? SweepConfig::exhaustive(g)
                                   : SweepConfig::random(g, o.samples, o.seed);
    cfg.workers = o.workers;
    cfg.checks = parse_checks(o.checks_csv);
    cfg.converse_search_limit = o.converse_limit;
    cfg.dedup_shift_classes = o.dedup_shifts;
    if (!o.range.empty()) {
        if (!o.exhaustive) throw std::invalid_argument("--range requires --exhaustive");
        std::tie(cfg.lo, cfg.hi) = parse_range(o.range);
    }
    const SweepReport r = o.exhaustive ? exhaustive_verify(cfg) : random_verify(cfg);
    emit(out, sweep_report_json(r, !o.no_timing));
    return r.failures.empty() ? 0 : 1;
}

int run_count(const Options& o, std::ostream& out) {
    const GroupSpec g = need_group(o);
    const ClassCounts c = count_classes(g);
    if (o.format == "csv") {
        out << "group,total,affine,semiaffine,midconvex\n"
            << g.name() << ',' << c.total << ',' << c.affine << ',' << c.semiaffine << ','
            << c.midconvex << "\n";
    } else {
        emit(out, class_counts_json(g, c));
    }
    return 0;
}

int run_trace(const Options& o, std::ostream& out) {
    const GroupSpec g = need_group(o);
    const SubsetBits x = need_set(o, g);
    const bool as_json = o.format == "json";
    for (uint64_t xi : x.members()) {
        const Element base = g.element_at(xi);
        for (uint64_t gi = 0; gi < g.order(); ++gi) {
            const Element step = g.element_at(gi);
            const ZTrace t = trace(x, base, step);
            const auto d = decompose_trace(t);
            if (as_json) {
                json j{{"x", format_element(g, base)},
                       {"g", format_element(g, step)},
                       {"modulus", t.modulus},
                       {"residues", t.residues.indices()},
                       {"d", nullptr}};
                if (d) j["d"] = d->d;
                out << j.dump() << "\n";
            } else {
                out << format_element(g, base) << '\t' << format_element(g, step) << '\t'
                    << t.modulus << '\t';
                out << '{';
                bool first = true;
                for (uint64_t rsd : t.residues.indices()) {
                    if (!first) out << ',';
                    out << rsd;
                    first = false;
                }
                out << "}\t";
                if (d)
                    out << d->d;
                else
                    out << "FAIL";
                out << "\n";
            }
        }
    }
    return 0;
}

int run_sphere(const Options& o, std::ostream& out) {
    if (o.points.empty()) throw std::invalid_argument("missing --points");
    const LinePointSet p = LinePointSet::parse(o.points);
    const json j = sphere_report_json(p);
    emit(out, j);
    return j["spherical"] == j["equivalent_semiaffine"] ? 0 : 1;
}

int run_atlas(const Options& o, std::ostream& out) {
    std::vector<GroupSpec> groups;
    if (!o.groups_csv.empty()) {
        std::stringstream ss(o.groups_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) groups.push_back(GroupSpec::parse(tok));
    } else if (o.max_order > 0) {
        groups = presentations_up_to(o.max_order);
    } else {
        throw std::invalid_argument("atlas needs --groups or --max-order");
    }
    const AtlasFormat fmt = o.format == "json" ? AtlasFormat::JsonLines : AtlasFormat::Csv;
    uint64_t failures = 0;
    if (!o.output.empty()) {
        std::ofstream file(o.output);
        if (!file) throw std::invalid_argument("cannot open output file '" + o.output + "'");
        atlas_emit(groups, file, fmt, o.workers, !o.no_timing, &failures);
    } else {
        atlas_emit(groups, out, fmt, o.workers, !o.no_timing, &failures);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Structure of semiaffine subsets of finite Abelian groups"};
    app.require_subcommand(1);

    const auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("-g,--group", o.group, "group literal, e.g. Z6 or Z4xZ2");
    };
    const auto add_set = [&](CLI::App* cmd) {
        cmd->add_option("-s,--set", o.set_literal, "set literal, e.g. {1,2,4,5}");
        cmd->add_option("--bits", o.bits_hex, "set as little-endian hex bitset");
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format");
    };

    auto* check = app.add_subcommand("check", "evaluate the three predicates on one set");
    add_group(check);
    add_set(check);

    auto* classify_cmd = app.add_subcommand("classify", "decompose a set into its canonical form");
    add_group(classify_cmd);
    add_set(classify_cmd);
    classify_cmd->add_flag("--reconstruct", o.reconstruct_flag,
                           "also evaluate the decomposition back to a set literal");

    auto* verify = app.add_subcommand("verify", "verify the classification on a set or a sweep");
    add_group(verify);
    add_set(verify);
    verify->add_flag("--exhaustive", o.exhaustive, "sweep every subset");
    verify->add_option("--samples", o.samples, "random sweep sample count");
    verify->add_option("--seed", o.seed, "random sweep seed");
    verify->add_option("--workers", o.workers, "worker thread count")->check(CLI::PositiveNumber);
    verify->add_option("--range", o.range, "mask range lo:hi for exhaustive sweeps");
    verify->add_option("--checks", o.checks_csv, "comma list: theorem,lemma1,lemma2,t2,t1");
    verify->add_option("--converse-limit", o.converse_limit,
                       "max group order for the no-decomposition search");
    verify->add_flag("--no-timing", o.no_timing, "report seconds as 0 for byte-stable output");
    verify->add_flag("--dedup-shifts", o.dedup_shifts,
                     "check only minimal translation-class representatives");

    auto* count = app.add_subcommand("count", "count affine/semiaffine/midconvex subsets");
    add_group(count);
    add_format(count);

    auto* trace_cmd = app.add_subcommand("trace", "print trace rows for all x in X, g in G");
    add_group(trace_cmd);
    add_set(trace_cmd);
    add_format(trace_cmd);

    auto* sphere = app.add_subcommand("sphere", "decide 1-sphericity of rational line points");
    sphere->add_option("-p,--points", o.points, "comma-separated rationals, e.g. 0,1/2,3");

    auto* atlas = app.add_subcommand("atlas", "sweep a list of groups and emit a table");
    atlas->add_option("--groups", o.groups_csv, "comma list of group literals");
    atlas->add_option("--max-order", o.max_order, "all presentations up to this order");
    add_format(atlas);
    atlas->add_option("--workers", o.workers, "worker thread count")->check(CLI::PositiveNumber);
    atlas->add_flag("--no-timing", o.no_timing, "report seconds as 0.000");
    atlas->add_option("-o,--output", o.output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return run_check(o, out);
        if (classify_cmd->parsed()) return run_classify(o, out);
        if (verify->parsed()) return run_verify(o, out);
        if (count->parsed()) return run_count(o, out);
        if (trace_cmd->parsed()) return run_trace(o, out);
        if (sphere->parsed()) return run_sphere(o, out);
        if (atlas->parsed()) return run_atlas(o, out);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace semiaffine
