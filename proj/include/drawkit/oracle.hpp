#ifndef DRAWKIT_ORACLE_HPP
#define DRAWKIT_ORACLE_HPP

#include "drawkit/crossing_set.hpp"
#include "drawkit/hampath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drawkit {

/// Default cap on n for the backtracking searches.
inline constexpr int kOracleCap = 14;

/// Class count of K_6 recorded from the first enumeration run; later runs must match it.
inline constexpr int kK6ClassSnapshot = 102;

/// First crossing-free Hamiltonian a-b path in ascending-neighbour order. Throws TooLarge.
std::optional<VertexPath> find_cf_ham_path(const CrossingSet& cs, Vertex a, Vertex b);

/// Crossing-free Hamiltonian cycle starting at 1 with its second vertex below its last. Throws TooLarge.
std::optional<VertexPath> find_cf_ham_cycle(const CrossingSet& cs);

/// True iff every pair of vertices is joined by a crossing-free Hamiltonian path.
bool verify_all_pairs(const CrossingSet& cs);

struct VerificationFailure {
    CrossingSet canonical;
    std::string what;  // "cycle" or "path a-b"
    std::string verdict = "inconclusive: possibly unrealizable";
};

struct VerificationReport {
    int n = 0;
    int classes = 0;
    bool conj1_ok = true;
    bool conj2_ok = true;
    std::vector<VerificationFailure> failures;
};

/// Both conjectures over every enumerated class of K_n. Throws TooLarge above n = 7.
VerificationReport verify_enumeration(int n, int jobs = 1);

}  // namespace drawkit

#endif
