// Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock limit.
#include "drawkit/canonical_drawings.hpp"
#include "drawkit/circular.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/hampath.hpp"
#include "drawkit/oracle.hpp"
#include "drawkit/rotation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

using namespace drawkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
};

long binom4(int n) { return static_cast<long>(n) * (n - 1) * (n - 2) * (n - 3) / 24; }

bool good_path(const CrossingSet& cs, const VertexPath& p, Vertex a, Vertex b) {
    return !p.empty() && p.front() == a && p.back() == b && is_hamiltonian(cs.n(), p) && is_crossing_free(cs, p);
}

/// Checks `make` against the oracle on every ordered pair; returns the number of failing pairs.
int all_pairs_against_oracle(const CrossingSet& cs, const std::function<VertexPath(Vertex, Vertex)>& make) {
    int bad = 0;
    for (Vertex a = 1; a <= cs.n(); ++a)
        for (Vertex b = 1; b <= cs.n(); ++b) {
            if (a == b) continue;
            const bool built = good_path(cs, make(a, b), a, b);
            const auto found = find_cf_ham_path(cs, a, b);
            if (!built || !found || !good_path(cs, *found, a, b)) ++bad;
        }
    return bad;
}

std::vector<Vertex> by_angle(const std::vector<CylVertex>& ring) {
    std::vector<CylVertex> r = ring;
    std::sort(r.begin(), r.end(), [](const CylVertex& x, const CylVertex& y) { return x.angle < y.angle; });
    std::vector<Vertex> out;
    for (const auto& cv : r) out.push_back(cv.v);
    return out;
}

/// Crossed rim edges of one circle, read straight off the crossing set.
int crossed_rim(const CrossingSet& cs, const std::vector<CylVertex>& ring) {
    const auto ord = by_angle(ring);
    if (ord.size() < 2) return 0;
    std::set<Edge> rims;
    for (std::size_t i = 0; i < ord.size(); ++i) rims.insert(Edge(ord[i], ord[(i + 1) % ord.size()]));
    return static_cast<int>(std::count_if(rims.begin(), rims.end(), [&](const Edge& e) { return cs.is_crossed(e); }));
}

Outcome c1() {
    const auto report = verify_enumeration(5);
    const auto classes = enumerate_realizable(5);
    auto has = [&](const CrossingSet& cs) {
        const CrossingSet f = canonical_crossing_form(cs);
        return std::any_of(classes.begin(), classes.end(), [&](const DrawingClass& c) { return c.canonical == f; });
    };
    const bool ok = report.classes == 5 && classes.size() == 5 && has(convex(5).crossings) && has(twisted(5));
    return {ok, "classes=" + std::to_string(report.classes) + " convex=" + (has(convex(5).crossings) ? "yes" : "no") +
                    " twisted=" + (has(twisted(5)) ? "yes" : "no")};
}

Outcome c2(int jobs) {
    Outcome out;
    for (int n = 3; n <= 6; ++n) {
        const auto r = verify_enumeration(n, jobs);
        out.detail += "n=" + std::to_string(n) + ":" + std::to_string(r.classes) + (r.conj1_ok && r.conj2_ok ? "/ok " : "/FAIL ");
        out.ok = out.ok && r.conj1_ok && r.conj2_ok && r.failures.empty();
        if (n == 6 && r.classes != kK6ClassSnapshot) {
            out.ok = false;
            out.detail += "(snapshot " + std::to_string(kK6ClassSnapshot) + ") ";
        }
    }
    return out;
}

Outcome c3() {
    Outcome out;
    for (int n = 3; n <= 10; ++n)
        if (static_cast<long>(convex(n).crossings.size()) != binom4(n) || static_cast<long>(twisted(n).size()) != binom4(n)) {
            out.ok = false;
            out.detail += "n=" + std::to_string(n) + " ";
        }
    if (out.ok) out.detail = "n=3..10";
    return out;
}

Outcome c4() {
    int bad_x = 0, bad_s = 0, bad_c = 0;
    long pairs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 7);
        pairs += 3L * n * (n - 1);
        const LinearWiring lw = random_x_monotone(n, seed);
        bad_x += all_pairs_against_oracle(crossing_set(lw), [&](Vertex a, Vertex b) { return path_x_monotone(lw, a, b); });
        const CircularWiring cw = to_strongly_c_monotone(random_cylindrical(n, 1000 + seed, true));
        bad_s += all_pairs_against_oracle(crossing_set(cw), [&](Vertex a, Vertex b) { return path_strong_c_mon(cw, a, b); });
        const CylindricalDrawing cd = random_cylindrical(n, 2000 + seed, seed % 2 == 1);
        bad_c += all_pairs_against_oracle(crossing_set(cd), [&](Vertex a, Vertex b) { return path_cylindrical(cd, a, b); });
    }
    return {bad_x + bad_s + bad_c == 0, "pairs=" + std::to_string(pairs) + " failing x-mono/strong-c-mon/cyl=" +
                                            std::to_string(bad_x) + "/" + std::to_string(bad_s) + "/" + std::to_string(bad_c)};
}

Outcome c5() {
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const LinearWiring lw = random_x_monotone(3 + static_cast<int>(seed % 8), seed);
        const XBoundedData xb = extract_xbounded(lw);
        const LinearWiring back = to_x_monotone(xb);
        const XBoundedData again = extract_xbounded(back);
        const bool same = back.n == lw.n && crossing_set(back) == crossing_set(lw) &&
                          again.left_order == xb.left_order && again.right_order == xb.right_order;
        bad += !same;
    }
    return {bad == 0, "mismatches=" + std::to_string(bad) + "/200"};
}

Outcome c6() {
    int bad = 0, spirals_seen = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        for (const bool strong : {false, true}) {
            const CylindricalDrawing cd = random_cylindrical(n, 3000 + seed, strong);
            const CrossingSet cs = crossing_set(cd);
            const CylindricalDrawing norm = normalize_winding(cd);
            spirals_seen += !find_double_spirals(norm).empty();
            const CylindricalDrawing clean = remove_double_spirals(norm);
            const CircularWiring cw = to_circular_wiring(normalize_winding(clean));
            bool ok = crossing_set(norm) == cs && crossing_set(clean) == cs && find_double_spirals(clean).empty() &&
                      crossing_set(cw) == cs;
            if (strong) {
                const CircularWiring sw = to_strongly_c_monotone(cd);
                ok = ok && crossing_set(sw) == cs && strong_c_monotone_report(sw).no_covering_star;
            }
            bad += !ok;
        }
    }
    return {bad == 0, "instances=200 failures=" + std::to_string(bad) + " with-double-spirals=" + std::to_string(spirals_seen)};
}

Outcome c7() {
    int bad = 0, with_crossed = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const CylindricalDrawing cd = random_cylindrical(4 + static_cast<int>(seed % 7), 4000 + seed, seed % 4 == 0);
        const CrossingSet cs = crossing_set(cd);
        const int o = crossed_rim(cs, cd.outer), i = crossed_rim(cs, cd.inner);
        bad += o > 1 || i > 1;
        with_crossed += o + i > 0;
    }
    return {bad == 0, "violations=" + std::to_string(bad) + " instances-with-a-crossed-rim-edge=" + std::to_string(with_crossed)};
}

Outcome c8() {
    int checked = 0, bad = 0;
    for (int n : {4, 5})
        for (const auto& c : enumerate_realizable(n)) {
            ++checked;
            const CrossingSet dup = duplicate_apex(c.canonical, c.rotation.rotation(n));
            const auto p = find_cf_ham_path(dup, n, n + 1);
            if (!p) {
                ++bad;
                continue;
            }
            const VertexPath cycle(p->begin(), p->end() - 1);
            bad += !(is_hamiltonian(n, cycle) && is_crossing_free(c.canonical, cycle, true));
        }
    return {bad == 0, "classes=" + std::to_string(checked) + " failures=" + std::to_string(bad)};
}

Outcome c9() {
    const auto classes = enumerate_realizable(5);
    const CrossingSet h5 = canonical_crossing_form(crossing_set(hill(5)));
    const auto matches = std::count_if(classes.begin(), classes.end(), [&](const DrawingClass& c) { return c.canonical == h5; });

    const CylindricalDrawing h9 = hill(9);
    const CrossingSet cs = crossing_set(h9);
    const bool strong = is_strongly_cylindrical(h9);
    const CylindricalDrawing clean = remove_double_spirals(normalize_winding(h9));
    const CircularWiring cw = to_circular_wiring(clean);
    const CircularWiring sw = to_strongly_c_monotone(h9);
    const bool pipeline = crossing_set(clean) == cs && crossing_set(cw) == cs && crossing_set(sw) == cs &&
                          is_strongly_c_monotone(sw);
    const RimReport rims = uncrossed_rim_edges(h9);
    bool cycle_ok = !rims.outer.uncrossed.empty();
    if (cycle_ok) {
        const VertexPath c = cycle_via_uncrossed(cs, rims.outer.uncrossed.front(),
                                                 [&](Vertex a, Vertex b) { return path_cylindrical(h9, a, b); });
        cycle_ok = is_hamiltonian(9, c) && is_crossing_free(cs, c, true);
    }
    return {matches == 1 && strong && pipeline && cycle_ok,
            "hill5-class-matches=" + std::to_string(matches) + " hill9 strong=" + (strong ? "yes" : "no") +
                " pipeline=" + (pipeline ? "ok" : "FAIL") + " rim-cycle=" + (cycle_ok ? "ok" : "FAIL") +
                " crossings=" + std::to_string(cs.size())};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"drawkit acceptance run"};
    int jobs = 1;
    std::vector<int> only;
    app.add_option("--jobs", jobs, "worker threads for the enumeration checks")->check(CLI::PositiveNumber);
    app.add_option("--only", only, "criteria to run (default: all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, 5, c1},   {2, 600, [&] { return c2(jobs); }}, {3, 1, c3},   {4, 300, c4}, {5, 60, c5},
        {6, 120, c6}, {7, 60, c7},                        {8, 120, c8}, {9, 10, c9},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = out.ok && secs <= c.limit_s;
        failed += !pass;
        std::printf("criterion %d: %s  %s  [%.2fs, limit %.0fs]\n", c.id, pass ? "PASS" : "FAIL", out.detail.c_str(), secs,
                    c.limit_s);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
