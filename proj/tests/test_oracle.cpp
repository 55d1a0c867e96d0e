#include "drawkit/canonical_drawings.hpp"
#include "drawkit/oracle.hpp"
#include "drawkit/rotation.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace drawkit;
using testsupport::all_cf_paths;
using testsupport::valid_ham_path;

TEST_CASE("paths on small drawings") {
    const CrossingSet c4 = convex(4).crossings;
    const auto p = find_cf_ham_path(c4, 1, 3);
    REQUIRE(p);
    CHECK(valid_ham_path(c4, *p, 1, 3));
    CHECK(find_cf_ham_path(twisted(4), 2, 3) == VertexPath{2, 1, 4, 3});
    CHECK(find_cf_ham_path(CrossingSet(2), 1, 2) == VertexPath{1, 2});
    CHECK(find_cf_ham_path(CrossingSet(2), 2, 1) == VertexPath{2, 1});
}

TEST_CASE("cycles on small drawings") {
    CHECK(find_cf_ham_cycle(convex(5).crossings) == VertexPath{1, 2, 3, 4, 5});
    const auto t5 = find_cf_ham_cycle(twisted(5));
    REQUIRE(t5);
    CHECK(is_hamiltonian(5, *t5));
    CHECK(testsupport::plain_crossing_free(twisted(5), *t5, true));
    CHECK(find_cf_ham_cycle(CrossingSet(3)) == VertexPath{1, 2, 3});
}

TEST_CASE("first path in ascending order matches brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + trial % 3;
        // random subsets of the twisted pairs keep at most one crossing per quadruple
        CrossingSet cs(n);
        const CrossingSet tw = twisted(n);
        for (const auto& [e, f] : tw.pairs())
            if (rng() % 3 != 0) cs.insert(e, f);
        const Vertex a = 1 + static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        Vertex b = 1 + static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (a == b) b = a % n + 1;
        const auto brute = all_cf_paths(cs, a, b);
        const auto found = find_cf_ham_path(cs, a, b);
        CHECK(found.has_value() == !brute.empty());
        if (found && !brute.empty()) CHECK(*found == brute.front());
    }
}

TEST_CASE("absent paths are reported") {
    // K_4 where every Hamiltonian 1-2 path contains a crossing pair
    CrossingSet cs(4);
    cs.insert(Edge(1, 3), Edge(2, 4));
    cs.insert(Edge(1, 4), Edge(2, 3));
    CHECK(all_cf_paths(cs, 1, 2).empty());
    CHECK_FALSE(find_cf_ham_path(cs, 1, 2).has_value());
    CHECK_FALSE(verify_all_pairs(cs));
}

TEST_CASE("all pairs") {
    for (const auto& c : enumerate_realizable(5)) CHECK(verify_all_pairs(c.canonical));
    CHECK(verify_all_pairs(convex(6).crossings));
    CHECK(verify_all_pairs(CrossingSet(2)));
}

TEST_CASE("enumeration reports") {
    const VerificationReport r4 = verify_enumeration(4);
    CHECK(r4.classes == 2);
    CHECK(r4.conj1_ok);
    CHECK(r4.conj2_ok);
    CHECK(r4.failures.empty());
    const VerificationReport r5 = verify_enumeration(5, 2);
    CHECK(r5.classes == 5);
    CHECK(r5.conj1_ok);
    CHECK(r5.conj2_ok);
    CHECK_THROWS_AS(verify_enumeration(8), Error);
}

TEST_CASE("dropping a cycle edge leaves a path") {
    for (int n : {4, 5, 6})
        for (const auto& c : enumerate_realizable(n)) {
            const auto cyc = find_cf_ham_cycle(c.canonical);
            REQUIRE(cyc);
            CHECK((*cyc)[1] < cyc->back());
            for (std::size_t cut = 0; cut < cyc->size(); ++cut) {
                VertexPath p(cyc->begin() + static_cast<long>(cut) + 1, cyc->end());
                p.insert(p.end(), cyc->begin(), cyc->begin() + static_cast<long>(cut) + 1);
                CHECK(valid_ham_path(c.canonical, p, p.front(), p.back()));
            }
        }
}

TEST_CASE("oracle is deterministic and capped") {
    const CrossingSet cs = crossing_set(hill(9));
    CHECK(find_cf_ham_path(cs, 2, 7) == find_cf_ham_path(cs, 2, 7));
    CHECK(find_cf_ham_cycle(cs) == find_cf_ham_cycle(cs));
    CHECK_THROWS_AS(find_cf_ham_path(CrossingSet(16), 1, 2), Error);
    CHECK_THROWS_AS(find_cf_ham_cycle(CrossingSet(16)), Error);
}
