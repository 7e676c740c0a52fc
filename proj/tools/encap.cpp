#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "encap/bounds.hpp"
#include "encap/complement.hpp"
#include "encap/constructions.hpp"
#include "encap/errors.hpp"
#include "encap/oracle.hpp"
#include "encap/scene_io.hpp"

using namespace encap;

namespace {

constexpr int kExitOk = 0, kExitVerify = 1, kExitInput = 2, kExitResource = 3, kExitInternal = 4;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

RVector parse_point(const std::string& s, std::size_t d) {
    RVector p;
    for (const std::string& t : split(s, ',')) {
        try {
            p.push_back(Rational::parse(t));
        } catch (const std::exception&) {
            throw InputError("bad coordinate `" + t + "` in `" + s + "`");
        }
    }
    if (p.size() != d) throw InputError("point `" + s + "` needs " + std::to_string(d) + " coordinates");
    return p;
}

std::vector<long> parse_ints(const std::string& s) {
    std::vector<long> out;
    for (const std::string& t : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw InputError("bad integer `" + t + "` in `" + s + "`");
        }
    }
    return out;
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    const std::vector<long> v =
        dots == std::string::npos ? parse_ints(s) : parse_ints(s.substr(0, dots) + "," + s.substr(dots + 2));
    if (v.size() == 1) return {v[0], v[0]};
    if (v.size() != 2 || v[0] > v[1]) throw InputError("bad range `" + s + "` (expected A..B)");
    return {v[0], v[1]};
}

std::string nu_string(const std::vector<std::size_t>& nu) {
    std::string s = "(";
    for (std::size_t k = 0; k < nu.size(); ++k) s += (k ? "," : "") + std::to_string(nu[k]);
    return s + ")";
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
    std::string name, out, profile, parts;
    long n = -1, d = -1;
};

std::size_t need(long v, const char* flag, const std::string& gen) {
    if (v < 0) throw InputError(gen + " needs --" + flag);
    return static_cast<std::size_t>(v);
}

ConstructionReport run_generator(const GenArgs& a) {
    const std::string& g = a.name;
    if (g == "interval-chain") return gen_interval_chain(need(a.n, "n", g));
    if (g == "grid") return gen_grid(need(a.d, "d", g), need(a.n, "n", g));
    if (g == "three-sets") return gen_three_sets(need(a.d, "d", g));
    if (g == "two-sets-profile") {
        if (a.profile.empty()) throw InputError("two-sets-profile needs --profile b0,b1,...,bd");
        std::vector<int> bits;
        for (long b : parse_ints(a.profile)) bits.push_back(static_cast<int>(b));
        return gen_two_sets_profile(bits);
    }
    if (g == "turan-planar") {
        if (a.parts.empty()) throw InputError("turan-planar needs --parts n1,n2,n3,n4");
        const auto p = parse_ints(a.parts);
        if (p.size() != 4) throw InputError("turan-planar needs exactly four part sizes");
        for (long x : p)
            if (x < 0) throw InputError("part sizes must be nonnegative");
        return gen_turan_planar(p[0], p[1], p[2], p[3]);
    }
    if (g == "disjoint-planar") return gen_disjoint_planar(need(a.n, "n", g));
    if (g == "neighborly-tiling") return gen_neighborly_tiling(need(a.d, "d", g), need(a.n, "n", g));
    if (g == "carved-tiling") return gen_carved_tiling(need(a.d, "d", g), need(a.n, "n", g));
    throw InputError("unknown generator `" + g +
                     "` (interval-chain, grid, three-sets, two-sets-profile, turan-planar, disjoint-planar, "
                     "neighborly-tiling, carved-tiling)");
}

int cmd_gen(const GenArgs& a) {
    const ConstructionReport r = run_generator(a);
    std::ostringstream out;
    out << "# generator: " << r.name << "\n# " << r.description << "\n";
    if (r.expected_encapsulated) out << "# expected-encapsulated: " << *r.expected_encapsulated << "\n";
    if (!r.expected_nu.empty()) {
        out << "# expected-nu:";
        for (const auto& [k, c] : r.expected_nu) out << ' ' << k << ':' << c;
        out << "\n";
    }
    out << "# expected-disjoint: " << (r.expected_disjoint ? "true" : "false") << "\n";
    out << write_scene(r.scene);
    write_output(a.out, out.str());
    return kExitOk;
}

// --- analyze -------------------------------------------------------------

struct AnalyzeArgs {
    std::string file, local_dim, touch;
    bool cover = false, encapsulated = false;
    std::size_t budget = kDefaultAnalysisBudget;
    std::uint64_t seed = 1;
};

void print_cover(const StrongCover& c) {
    std::cout << "nu " << nu_string(c.nu) << "\n";
    for (const Flat& f : c.flats) std::cout << "flat " << f.describe() << "\n";
}

int cmd_analyze(const AnalyzeArgs& a) {
    const Scene scene = read_scene_file(a.file);
    const bool any = a.cover || a.encapsulated || !a.local_dim.empty() || !a.touch.empty();
    if (a.encapsulated || !any) {
        const auto pts = enumerate_encapsulated(scene, a.budget);
        std::cout << "encapsulated " << pts.size() << "\n";
        for (const RVector& p : pts) std::cout << "point " << to_string(p) << "\n";
    }
    if (a.cover || !any) print_cover(strong_cover(scene, a.budget, a.seed));
    if (!a.local_dim.empty()) {
        const RVector p = parse_point(a.local_dim, scene.d);
        const LocalStructure L = ComplementAnalyzer(scene, a.budget).local(p);
        std::cout << "local-dim " << L.local_dim << "\n";
        std::cout << "ordinary " << (L.ordinary_flat ? L.ordinary_flat->describe() : std::string("no")) << "\n";
    }
    if (!a.touch.empty()) {
        const TouchSet t = touch_set(scene, parse_point(a.touch, scene.d));
        std::cout << "touch";
        for (std::size_t i : t.indices) std::cout << ' ' << scene.bodies[i].name;
        std::cout << "\n";
    }
    return kExitOk;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string file, expect_nu;
    long expect_isolated = -1;
    bool disjoint = false;
    std::size_t budget = kDefaultAnalysisBudget;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a) {
    const Scene scene = read_scene_file(a.file);
    bool ok = true;
    auto report = [&](const std::string& what, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << what << ": " << detail << "\n";
        ok = ok && pass;
    };
    for (const ConvexBody& b : scene.bodies) {
        if (b.pieces.size() < 2) continue;
        const ConvexityResult c = verify_convex_union(b, 60, a.seed);
        report("convex " + b.name, c.pass, c.pass ? "union of pieces is convex" : "gap at " + to_string(c.counterexample));
    }
    if (a.disjoint) {
        const DisjointnessResult d = bodies_pairwise_disjoint(scene);
        report("disjoint", d.disjoint,
               d.disjoint ? "bodies pairwise disjoint"
                          : scene.bodies[d.first].name + " and " + scene.bodies[d.second].name + " meet at " +
                                to_string(d.witness));
    }
    if (a.expect_isolated >= 0) {
        const std::size_t got = enumerate_encapsulated(scene, a.budget).size();
        report("encapsulated", got == static_cast<std::size_t>(a.expect_isolated),
               "expected " + std::to_string(a.expect_isolated) + ", got " + std::to_string(got));
    }
    if (!a.expect_nu.empty()) {
        std::vector<std::size_t> want;
        for (long x : parse_ints(a.expect_nu)) {
            if (x < 0) throw InputError("--expect-nu entries must be nonnegative");
            want.push_back(static_cast<std::size_t>(x));
        }
        if (want.size() != scene.d + 1)
            throw InputError("--expect-nu needs " + std::to_string(scene.d + 1) + " entries (nu_0..nu_d)");
        const auto got = strong_cover(scene, a.budget, a.seed).nu;
        report("nu", got == want, "expected " + nu_string(want) + ", got " + nu_string(got));
    }
    std::cout << (ok ? "verify: ok" : "verify: FAILED") << "\n";
    return ok ? kExitOk : kExitVerify;
}

// --- bounds --------------------------------------------------------------

int cmd_bounds(const std::string& drange, const std::string& nrange, bool csv) {
    const auto [dlo, dhi] = parse_range(drange);
    const auto [nlo, nhi] = parse_range(nrange);
    const auto rows = bound_table(dlo, dhi, nlo, nhi);
    const char* cols[] = {"d", "n", "f_three", "f_upper", "f_closed", "lm_open", "lm_general", "turan4", "disjoint_planar"};
    auto cell = [](const std::optional<Integer>& x) { return x ? x->get_str() : std::string("-"); };
    std::vector<std::vector<std::string>> table;
    for (const BoundRow& r : rows)
        table.push_back({std::to_string(r.d), std::to_string(r.n), cell(r.f_three), cell(r.f_upper), cell(r.f_closed),
                         cell(r.lm_open), cell(r.lm_general), cell(r.turan4), cell(r.disjoint_planar)});
    if (csv) {
        for (std::size_t k = 0; k < 9; ++k) std::cout << (k ? "," : "") << cols[k];
        std::cout << "\n";
        for (const auto& row : table) {
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << row[k];
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::vector<std::size_t> w(9);
    for (std::size_t k = 0; k < 9; ++k) {
        w[k] = std::string(cols[k]).size();
        for (const auto& row : table) w[k] = std::max(w[k], row[k].size());
    }
    for (std::size_t k = 0; k < 9; ++k) std::cout << (k ? "  " : "") << std::setw(static_cast<int>(w[k])) << cols[k];
    std::cout << "\n";
    for (const auto& row : table) {
        for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? "  " : "") << std::setw(static_cast<int>(w[k])) << row[k];
        std::cout << "\n";
    }
    return kExitOk;
}

// --- render --------------------------------------------------------------

int cmd_render(const std::string& file, const std::string& out, const std::string& viewport, bool no_cover,
               std::size_t budget) {
    const Scene scene = read_scene_file(file);
    if (scene.d != 2) throw InputError("render supports planar scenes only (d = 2)");
    const RVector v = parse_point(viewport, 4);
    std::optional<StrongCover> cover;
    if (!no_cover) cover = strong_cover(scene, budget);
    write_output(out, render_svg(scene, cover, Viewport{v[0], v[1], v[2], v[3]}));
    return kExitOk;
}

// --- oracle --------------------------------------------------------------

int cmd_oracle(const std::string& file, std::size_t trials, std::uint64_t seed, std::size_t resolution,
               std::size_t budget, bool audit) {
    const Scene scene = read_scene_file(file);
    const Concordance c = oracle_concordance(scene, trials, seed, resolution, budget);
    std::cout << "points " << c.points << "\n"
              << "agree-encapsulated " << c.agree_encapsulated << "\n"
              << "certified-not-encapsulated " << c.certified << "\n"
              << "non-isolated-uncertified " << c.non_isolated << "\n";
    if (c.grid_checked) std::cout << "grid-nu " << nu_string(c.grid_nu) << " exact-nu " << nu_string(c.exact_nu) << "\n";
    bool ok = c.ok();
    for (const std::string& s : c.contradictions) std::cout << "CONTRADICTION " << s << "\n";
    if (audit) {
        const AuditReport r = euler_audit(scene, budget);
        std::cout << "audit v=" << r.v << " e=" << r.e << " f=" << r.f << " e_r=" << r.e_r << " e_l=" << r.e_l
                  << " X=" << r.X << " |S|=" << r.s_count << " 5f-11=" << r.bound_value << "\n";
        for (const auto& [name, pass] : r.checks) std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
        ok = ok && r.pass();
    }
    std::cout << (ok ? "oracle: agree" : "oracle: DISAGREE") << "\n";
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"encap: exact analysis of complements of unions of convex polyhedral sets"};
    app.require_subcommand(1);
    std::size_t budget = kDefaultAnalysisBudget;
    app.add_option("--budget", budget, "Hyperplane budget for the exact engine")->check(CLI::PositiveNumber);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a construction scene");
    g->add_option("name", gen.name, "Generator name")->required();
    g->add_option("--n", gen.n, "Number of bodies");
    g->add_option("--d", gen.d, "Dimension");
    g->add_option("--profile", gen.profile, "two-sets-profile bits b0,...,bd");
    g->add_option("--parts", gen.parts, "turan-planar part sizes n1,n2,n3,n4");
    g->add_option("-o,--output", gen.out, "Output file (default stdout)");

    AnalyzeArgs an;
    auto* a = app.add_subcommand("analyze", "Analyze a scene file");
    a->add_option("file", an.file)->required();
    a->add_flag("--strong-cover", an.cover, "Print the strong cover and nu");
    a->add_flag("--encapsulated", an.encapsulated, "List encapsulated points");
    a->add_option("--local-dim", an.local_dim, "Local dimension and ordinary flat at x,y,...");
    a->add_option("--touch", an.touch, "Bodies touched at x,y,...");
    a->add_option("--seed", an.seed, "Seed for cell sampling");

    VerifyArgs ve;
    auto* v = app.add_subcommand("verify", "Check expectations; exit 1 when unmet");
    v->add_option("file", ve.file)->required();
    v->add_option("--expect-isolated", ve.expect_isolated, "Expected number of encapsulated points");
    v->add_option("--expect-nu", ve.expect_nu, "Expected nu_0,...,nu_d");
    v->add_flag("--disjoint", ve.disjoint, "Require pairwise disjoint bodies");
    v->add_option("--seed", ve.seed, "Seed for sampling");

    std::string drange, nrange;
    bool csv = false;
    auto* b = app.add_subcommand("bounds", "Tabulate the bound formulas");
    b->add_option("--d", drange, "Dimension range A..B")->required();
    b->add_option("--n", nrange, "Body-count range C..D")->required();
    b->add_flag("--csv", csv, "CSV output");

    std::string rfile, rout, viewport = "-5,-5,5,5";
    bool no_cover = false;
    auto* r = app.add_subcommand("render", "Render a planar scene to SVG");
    r->add_option("file", rfile)->required();
    r->add_option("-o,--output", rout, "Output SVG (default stdout)");
    r->add_option("--viewport", viewport, "x0,y0,x1,y1");
    r->add_flag("--no-cover", no_cover, "Skip the strong cover overlay");

    std::string ofile;
    std::size_t trials = 500, resolution = 256;
    std::uint64_t seed = 1;
    bool audit = false;
    auto* o = app.add_subcommand("oracle", "Cross-check the exact engine with the sampling oracles");
    o->add_option("file", ofile)->required();
    o->add_option("--trials", trials, "Random directions per point")->check(CLI::PositiveNumber);
    o->add_option("--seed", seed, "Seed");
    o->add_option("--resolution", resolution, "Grid resolution for d <= 2");
    o->add_flag("--audit", audit, "Also run the planar Euler audit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitInput;
    }

    an.budget = budget;
    ve.budget = budget;
    try {
        if (*g) return cmd_gen(gen);
        if (*a) return cmd_analyze(an);
        if (*v) return cmd_verify(ve);
        if (*b) return cmd_bounds(drange, nrange, csv);
        if (*r) return cmd_render(rfile, rout, viewport, no_cover, budget);
        if (*o) return cmd_oracle(ofile, trials, seed, resolution, budget, audit);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
