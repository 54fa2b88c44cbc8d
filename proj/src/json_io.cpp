#include "semiaffine/json_io.hpp"

namespace semiaffine {

namespace {

json element_strings(const GroupSpec& g, const std::vector<uint64_t>& indices) {
    json arr = json::array();
    for (uint64_t i : indices) arr.push_back(format_element(g, g.element_at(i)));
    return arr;
}

}  // namespace

json witness_json(const GroupSpec& g, const Witness& w) {
    return json{{"kind", witness_kind_name(w.kind)},
                {"elements", element_strings(g, w.elements)},
                {"missing", element_strings(g, w.missing)}};
}

json trace_json(const GroupSpec& g, const LemmaOneTrace& t) {
    json j{{"violator", format_element(g, t.violator)},
           {"d_window", t.d_window},
           {"n_min", nullptr},
           {"step", nullptr},
           {"h_a", format_subset(t.h_a.bits())},
           {"base", format_element(g, t.base)}};
    if (t.n_min) j["n_min"] = *t.n_min;
    if (t.step) j["step"] = format_element(g, *t.step);
    return j;
}

json classification_json(const Classification& c) {
    const GroupSpec& g = c.original.group();
    json j{{"group", g.name()},
           {"set", format_subset(c.original)},
           {"variant", c.variant_name()},
           {"affine", c.affine}};
    if (const auto* ns = std::get_if<NotSemiaffine>(&c.form)) {
        j["witness"] = witness_json(g, ns->witness);
    } else if (const auto* tc = std::get_if<TwoCosets>(&c.form)) {
        j["H"] = format_subset(tc->subgroup.bits());
        j["a"] = format_element(g, tc->a);
        j["b"] = format_element(g, tc->b);
        j["trace"] = trace_json(g, tc->trace);
    } else {
        const auto& cm = std::get<CosetMinusMidconvex>(c.form);
        j["H"] = format_subset(cm.subgroup.bits());
        j["C"] = format_subset(cm.midconvex_part);
        j["g"] = format_element(g, cm.shift);
    }
    return j;
}

json theorem_report_json(const TheoremReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json e{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return json{{"classification", classification_json(r.classification)},
                {"checks", std::move(checks)},
                {"all_passed", r.all_passed()}};
}

json sweep_report_json(const SweepReport& r, bool include_timing) {
    json failures = json::array();
    for (const SweepFailure& f : r.failures)
        failures.push_back(json{{"mask", f.mask},
                                {"set", format_subset(subset_from_mask(r.group, f.mask))},
                                {"check", f.check},
                                {"detail", f.detail}});
    return json{{"group", r.group.name()},
                {"checked", r.checked},
                {"counts",
                 {{"total", r.counts.total},
                  {"affine", r.counts.affine},
                  {"semiaffine", r.counts.semiaffine},
                  {"midconvex", r.counts.midconvex}}},
                {"failures", std::move(failures)},
                {"seconds", include_timing ? r.seconds : 0.0}};
}

json class_counts_json(const GroupSpec& g, const ClassCounts& c) {
    return json{{"group", g.name()},
                {"total", c.total},
                {"affine", c.affine},
                {"semiaffine", c.semiaffine},
                {"midconvex", c.midconvex}};
}

json sphere_report_json(const LinePointSet& p) {
    const auto sv = one_spherical_violation(p);
    json j{{"spherical", !sv}, {"witness", nullptr}, {"equivalent_semiaffine", !line_semiaffine_violation(p)}};
    if (sv) {
        json triple = json::array();
        for (const Rational& q : sv->triple) triple.push_back(q.str());
        j["witness"] = std::move(triple);
    }
    return j;
}

}  // namespace semiaffine
