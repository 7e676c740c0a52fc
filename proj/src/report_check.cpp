#include "encap/report_check.hpp"

namespace encap {

ReportCheck check_report(const ConstructionReport& report, const ReportCheckOptions& opt) {
    ReportCheck r;
    const Scene& scene = report.scene;
    auto fail = [&](std::string msg) {
        r.pass = false;
        r.failures.push_back(std::move(msg));
    };

    const DisjointnessResult dj = bodies_pairwise_disjoint(scene);
    r.disjoint = dj.disjoint;
    if (r.disjoint != report.expected_disjoint)
        fail(std::string("disjointness: expected ") + (report.expected_disjoint ? "disjoint" : "overlapping") +
             ", got " + (r.disjoint ? "disjoint" : "overlap of " + scene.bodies[dj.first].name + " and " +
                                                       scene.bodies[dj.second].name + " at " + to_string(dj.witness)));

    for (const ConvexBody& b : scene.bodies) {
        if (b.pieces.size() < 2) continue;
        const ConvexityResult c = verify_convex_union(b, opt.convexity_trials, opt.seed);
        if (!c.pass) fail("body " + b.name + " is not convex: " + to_string(c.counterexample));
    }

    const ComplementAnalyzer a(scene, opt.budget);
    const ComplementSurvey sv = a.survey();
    r.complement_finite = !sv.has_interior;
    for (const Cell& c : sv.cells) {
        if (c.dim > 0) r.complement_finite = false;
        else if (a.local(c.witness).local_dim == 0) ++r.encapsulated;
    }
    if (report.expected_encapsulated && *report.expected_encapsulated != r.encapsulated)
        fail("encapsulated points: expected " + std::to_string(*report.expected_encapsulated) + ", got " +
             std::to_string(r.encapsulated));

    if (!report.expected_nu.empty()) {
        r.nu = strong_cover(scene, opt.budget, opt.seed).nu;
        for (const auto& [k, want] : report.expected_nu) {
            const std::size_t got = static_cast<std::size_t>(k) < r.nu.size() ? r.nu[static_cast<std::size_t>(k)] : 0;
            if (got != want)
                fail("nu_" + std::to_string(k) + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
        }
    }
    return r;
}

}  // namespace encap
