#include "semiaffine/search.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "semiaffine/zline.hpp"

namespace semiaffine {

SweepConfig SweepConfig::exhaustive(GroupSpec g) {
    SweepConfig cfg;
    cfg.group = std::move(g);
    cfg.mode = Mode::Exhaustive;
    return cfg;
}

SweepConfig SweepConfig::random(GroupSpec g, uint64_t samples, uint64_t seed) {
    SweepConfig cfg;
    cfg.group = std::move(g);
    cfg.mode = Mode::Random;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

SubsetBits subset_from_mask(const GroupSpec& g, uint64_t mask) {
    if (g.order() > 63)
        throw std::length_error("mask encoding supports group orders up to 63");
    if (g.order() < 64 && (mask >> g.order()) != 0)
        throw std::invalid_argument("mask has bits beyond the group order");
    SubsetBits x(g);
    for (uint64_t i = 0; i < g.order(); ++i)
        if ((mask >> i) & 1) x.insert(i);
    return x;
}

uint64_t mask_of_subset(const SubsetBits& x) {
    if (x.group().order() > 63)
        throw std::length_error("mask encoding supports group orders up to 63");
    uint64_t mask = 0;
    x.bits().for_each([&](uint64_t i) { mask |= uint64_t{1} << i; });
    return mask;
}

namespace {

struct SweepContext {
    const SweepConfig& cfg;
    SubsetBits full;
    std::vector<Subgroup> subgroups;  // populated when t2 is enabled
};

struct Partial {
    uint64_t checked = 0;
    ClassCounts counts;
    std::vector<SweepFailure> failures;
};

bool is_minimal_shift_representative(const SubsetBits& x, uint64_t mask) {
    const GroupSpec& g = x.group();
    for (uint64_t s = 1; s < g.order(); ++s)
        if (mask_of_subset(shift_index(x, s)) < mask) return false;
    return true;
}

void check_one(const SweepContext& ctx, uint64_t mask, Partial& p) {
    const GroupSpec& g = ctx.cfg.group;
    const SubsetBits x = subset_from_mask(g, mask);
    if (ctx.cfg.dedup_shift_classes && !is_minimal_shift_representative(x, mask)) return;
    p.checked++;
    p.counts.total++;
    const bool sa = is_semiaffine(x);
    const bool mc = is_midconvex(x, ctx.full);
    if (is_affine(x)) p.counts.affine++;
    if (sa) p.counts.semiaffine++;
    if (mc) p.counts.midconvex++;

    const CheckSet& cs = ctx.cfg.checks;
    std::optional<Classification> cls;
    if (cs.theorem) {
        TheoremReport r = verify_theorem(x, ctx.cfg.converse_search_limit);
        for (const CheckResult& c : r.checks)
            if (!c.passed) p.failures.push_back({mask, "theorem." + c.name, c.detail});
        cls = std::move(r.classification);
    } else if (cs.lemma1) {
        cls = classify(x);
    }
    if (cs.lemma1 && cls) {
        if (const auto* tc = std::get_if<TwoCosets>(&cls->form))
            if (auto v = lemma_one_trace_violation(x, tc->trace))
                p.failures.push_back({mask, "lemma1.trace", *v});
    }
    if (cs.lemma2 && sa && !x.empty()) {
        const bool closed = doubling_closed(x);
        const bool sub = is_subgroup(difference_set(x));
        if (closed != sub)
            p.failures.push_back({mask, "lemma2.equivalence",
                                  std::string("doubling_closed=") + (closed ? "true" : "false") +
                                      " but X-X subgroup=" + (sub ? "true" : "false")});
    }
    if (cs.t2_equivalence) {
        for (const Subgroup& h : ctx.subgroups) {
            if (!x.is_subset_of(h.bits())) continue;
            const bool direct = is_midconvex(x, h.bits());
            const bool periodic = periodic_midconvex_check(x, h);
            if (direct != periodic)
                p.failures.push_back(
                    {mask, "t2.equivalence",
                     "ambient " + format_subset(h.bits()) + ": direct=" +
                         (direct ? "true" : "false") + " periodic=" + (periodic ? "true" : "false")});
        }
    }
    if (cs.t1_equivalence) {
        const bool via = midconvex_via_traces(x);
        if (via != mc)
            p.failures.push_back({mask, "t1.equivalence",
                                  std::string("traces=") + (via ? "true" : "false") +
                                      " direct=" + (mc ? "true" : "false")});
    }
}

// Runs fn(block, begin, end) on `workers` threads over contiguous splits of
// [0, n) and returns per-block partials in block order.
template <typename Fn>
std::vector<Partial> run_blocks(uint64_t n, unsigned workers, Fn&& fn) {
    const unsigned nblocks = std::max(1u, workers);
    std::vector<Partial> partials(nblocks);
    std::vector<std::thread> threads;
    const uint64_t per = n / nblocks;
    const uint64_t rem = n % nblocks;
    uint64_t begin = 0;
    for (unsigned b = 0; b < nblocks; ++b) {
        const uint64_t len = per + (b < rem ? 1 : 0);
        threads.emplace_back([&fn, &partials, b, begin, len] {
            fn(partials[b], begin, begin + len);
        });
        begin += len;
    }
    for (auto& t : threads) t.join();
    return partials;
}

SweepReport merge(const SweepConfig& cfg, std::vector<Partial> partials, double seconds) {
    SweepReport r{cfg.group, 0, {}, {}, seconds};
    for (Partial& p : partials) {
        r.checked += p.checked;
        r.counts.total += p.counts.total;
        r.counts.affine += p.counts.affine;
        r.counts.semiaffine += p.counts.semiaffine;
        r.counts.midconvex += p.counts.midconvex;
        r.failures.insert(r.failures.end(), std::make_move_iterator(p.failures.begin()),
                          std::make_move_iterator(p.failures.end()));
    }
    return r;
}

SweepContext make_context(const SweepConfig& cfg) {
    SweepContext ctx{cfg, SubsetBits::full(cfg.group), {}};
    if (cfg.checks.t2_equivalence) ctx.subgroups = all_subgroups(cfg.group, cfg.cap);
    return ctx;
}

void guarded_check(const SweepContext& ctx, uint64_t mask, Partial& p) {
    try {
        check_one(ctx, mask, p);
    } catch (const std::exception& e) {
        p.failures.push_back({mask, "exception", e.what()});
    }
}

}  // namespace

SweepReport exhaustive_verify(const SweepConfig& cfg) {
    if (cfg.mode != SweepConfig::Mode::Exhaustive)
        throw std::invalid_argument("exhaustive_verify requires exhaustive mode");
    const uint64_t n = cfg.group.order();
    if (n > cfg.cap)
        throw std::length_error("group order " + std::to_string(n) + " exceeds exhaustive cap " +
                                std::to_string(cfg.cap));
    if (n > 63) throw std::length_error("mask encoding supports group orders up to 63");
    const uint64_t space = uint64_t{1} << n;
    uint64_t lo = cfg.lo, hi = cfg.hi;
    if (lo == 0 && hi == 0) hi = space;
    if (lo > hi || hi > space) throw std::invalid_argument("invalid mask range");

    const auto t0 = std::chrono::steady_clock::now();
    const SweepContext ctx = make_context(cfg);
    auto partials = run_blocks(hi - lo, cfg.workers, [&](Partial& p, uint64_t b, uint64_t e) {
        for (uint64_t i = b; i < e; ++i) guarded_check(ctx, lo + i, p);
    });
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return merge(cfg, std::move(partials), dt.count());
}

SweepReport random_verify(const SweepConfig& cfg) {
    if (cfg.mode != SweepConfig::Mode::Random)
        throw std::invalid_argument("random_verify requires random mode");
    const uint64_t n = cfg.group.order();
    if (n > 63) throw std::length_error("mask encoding supports group orders up to 63");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<uint64_t> masks(cfg.samples);
    SplitMix64 rng(cfg.seed);
    const uint64_t mask_max = (uint64_t{1} << n) - 1;
    for (uint64_t& m : masks) m = rng.next() & mask_max;

    const SweepContext ctx = make_context(cfg);
    auto partials = run_blocks(masks.size(), cfg.workers, [&](Partial& p, uint64_t b, uint64_t e) {
        for (uint64_t i = b; i < e; ++i) guarded_check(ctx, masks[i], p);
    });
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return merge(cfg, std::move(partials), dt.count());
}

ClassCounts count_classes(const GroupSpec& g, uint64_t cap) {
    if (g.order() > cap)
        throw std::length_error("group order " + std::to_string(g.order()) +
                                " exceeds exhaustive cap " + std::to_string(cap));
    if (g.order() > 63) throw std::length_error("mask encoding supports group orders up to 63");
    const SubsetBits full = SubsetBits::full(g);
    ClassCounts counts;
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.order()); ++mask) {
        const SubsetBits x = subset_from_mask(g, mask);
        counts.total++;
        if (is_affine(x)) counts.affine++;
        if (is_semiaffine(x)) counts.semiaffine++;
        if (is_midconvex(x, full)) counts.midconvex++;
    }
    return counts;
}

namespace {

void presentations_rec(uint64_t budget, uint64_t max_factor, std::vector<uint64_t>& cur,
                       std::vector<std::vector<uint64_t>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (uint64_t f = std::min(max_factor, budget); f >= 2; --f) {
        cur.push_back(f);
        presentations_rec(budget / f, f, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GroupSpec> presentations_up_to(uint64_t max_order) {
    std::vector<std::vector<uint64_t>> factor_lists;
    std::vector<uint64_t> cur;
    presentations_rec(max_order, max_order, cur, factor_lists);
    std::vector<GroupSpec> out;
    if (max_order >= 1) out.emplace_back();  // Z1
    for (auto& f : factor_lists) out.emplace_back(std::move(f));
    std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.orders() < b.orders();
    });
    return out;
}

ConstructionReport verify_two_coset_construction(const GroupSpec& g) {
    ConstructionReport r;
    const auto subgroups = all_subgroups(g);
    for (const Subgroup& h : subgroups)
        for (uint64_t a = 0; a < g.order(); ++a) {
            const Bitset ca = coset(h, a).bits();
            for (uint64_t b = a; b < g.order(); ++b) {
                const SubsetBits s(g, ca | coset(h, b).bits());
                r.built++;
                if (auto w = semiaffine_violation(s))
                    r.failures.push_back(
                        {mask_of_subset(s), "converse.two_coset",
                         "H=" + format_subset(h.bits()) + " a=" + std::to_string(a) +
                             " b=" + std::to_string(b) + " violation at (" +
                             std::to_string(w->elements[0]) + "," + std::to_string(w->elements[1]) +
                             "," + std::to_string(w->elements[2]) + ")"});
            }
        }
    return r;
}

ConstructionReport verify_complement_construction(const GroupSpec& g) {
    ConstructionReport r;
    const auto subgroups = all_subgroups(g);
    for (const Subgroup& h : subgroups) {
        const auto members = h.bits().members();
        if (members.size() > 63) throw std::length_error("subgroup too large to enumerate");
        for (uint64_t cmask = 0; cmask < (uint64_t{1} << members.size()); ++cmask) {
            SubsetBits c(g);
            for (size_t i = 0; i < members.size(); ++i)
                if ((cmask >> i) & 1) c.insert(members[i]);
            if (!is_midconvex(c, h.bits())) continue;
            const Bitset carrier = h.bits().bits().and_not(c.bits());
            for (uint64_t shift_by = 0; shift_by < g.order(); ++shift_by) {
                const SubsetBits s = shift_index(SubsetBits(g, carrier), shift_by);
                r.built++;
                if (auto w = semiaffine_violation(s))
                    r.failures.push_back(
                        {mask_of_subset(s), "converse.complement",
                         "H=" + format_subset(h.bits()) + " C=" + format_subset(c) +
                             " g=" + std::to_string(shift_by) + " violation at (" +
                             std::to_string(w->elements[0]) + "," + std::to_string(w->elements[1]) +
                             "," + std::to_string(w->elements[2]) + ")"});
            }
        }
    }
    return r;
}

uint64_t atlas_emit(const std::vector<GroupSpec>& groups, std::ostream& sink, AtlasFormat format,
                    unsigned workers, bool include_timing, uint64_t* total_failures) {
    if (format == AtlasFormat::Csv)
        sink << "group,N,total,affine,semiaffine,midconvex,failures,seconds\n";
    uint64_t rows = 0;
    if (total_failures) *total_failures = 0;
    for (const GroupSpec& g : groups) {
        SweepConfig cfg = SweepConfig::exhaustive(g);
        cfg.workers = workers;
        const SweepReport rep = exhaustive_verify(cfg);
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << (include_timing ? rep.seconds : 0.0);
        if (format == AtlasFormat::Csv) {
            sink << g.name() << ',' << g.order() << ',' << rep.counts.total << ','
                 << rep.counts.affine << ',' << rep.counts.semiaffine << ','
                 << rep.counts.midconvex << ',' << rep.failures.size() << ',' << secs.str()
                 << '\n';
        } else {
            sink << "{\"group\":\"" << g.name() << "\",\"N\":" << g.order()
                 << ",\"total\":" << rep.counts.total << ",\"affine\":" << rep.counts.affine
                 << ",\"semiaffine\":" << rep.counts.semiaffine
                 << ",\"midconvex\":" << rep.counts.midconvex
                 << ",\"failures\":" << rep.failures.size() << ",\"seconds\":" << secs.str()
                 << "}\n";
        }
        rows++;
        if (total_failures) *total_failures += rep.failures.size();
        if (!sink) throw std::runtime_error("atlas sink write failed");
    }
    return rows;
}

}  // namespace semiaffine
