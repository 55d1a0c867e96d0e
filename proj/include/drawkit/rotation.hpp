#ifndef DRAWKIT_ROTATION_HPP
#define DRAWKIT_ROTATION_HPP

#include "drawkit/crossing_set.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace drawkit {

/**
 * @brief Clockwise cyclic order of the other vertices around every vertex of K_n.
 *
 * rotations[v-1] lists the n-1 vertices other than v. Construction validates
 * the permutation property; the cyclic start is normalized to the smallest vertex.
 */
class RotationSystem {
public:
    RotationSystem() = default;
    RotationSystem(int n, std::vector<std::vector<Vertex>> rotations);

    int n() const { return n_; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[static_cast<std::size_t>(v - 1)]; }

    /// Vertex v becomes perm[v-1].
    RotationSystem relabeled(const std::vector<Vertex>& perm) const;
    /// All rotations reversed (the mirror drawing).
    RotationSystem mirrored() const;

    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> rotations_;
};

/// Crossing status of a 4-vertex rotation system, or nullopt when no drawing realizes it.
struct K4Entry {
    bool realizable = false;
    std::optional<EdgePair> crossing;  // on labels 1..4
};

/**
 * @brief Lookup from 4-vertex rotation systems to their crossing pair.
 *
 * Built once from straight-line drawings of the two K_4 point configurations
 * under every labeling and its mirror image.
 */
class K4ClassTable {
public:
    static const K4ClassTable& instance();

    /// Key of the subsystem induced on s (ascending) in rs.
    static int key_of(const RotationSystem& rs, const std::array<Vertex, 4>& s);
    const K4Entry& at(int key) const { return entries_[static_cast<std::size_t>(key)]; }
    int realizable_count() const;

private:
    K4ClassTable();
    std::array<K4Entry, 16> entries_{};
};

/// Throws UnrealizableQuadruple if some 4-vertex subsystem is not in the K4 table.
CrossingSet crossings_from_rotation(const RotationSystem& rs);

/// Restriction to `subset`, relabeled 1..k in index order. Throws SubsetTooSmall below 3 vertices.
RotationSystem induced_subsystem(const RotationSystem& rs, std::vector<Vertex> subset);

/// Default cap on n for the factorial relabeling search.
inline constexpr int kCanonicalCap = 9;

/// Lexicographically minimal relabeling of cs. Throws TooLarge above the cap.
CrossingSet canonical_crossing_form(const CrossingSet& cs);

/// Canonical form together with the relabeling that produces it (perm[v-1] = new label of v).
std::pair<CrossingSet, std::vector<Vertex>> canonical_crossing_form_with_map(const CrossingSet& cs);

/// Canonical forms of the five weak-isomorphism classes of K_5.
const std::vector<CrossingSet>& k5_reference_forms();

/// Necessary condition for realizability: every 5-vertex subsystem is one of the K_5 classes.
bool realizability_filter(const RotationSystem& rs);

/// One weak-isomorphism class: its canonical crossing set and a rotation system realizing it exactly.
struct DrawingClass {
    CrossingSet canonical;
    RotationSystem rotation;
};

/// Default cap on n for enumeration.
inline constexpr int kEnumerationCap = 7;

/// Calls `emit` once per class, in increasing canonical order. Throws TooLarge above the cap.
void enumerate_realizable(int n, const std::function<void(const DrawingClass&)>& emit, int jobs = 1);
std::vector<DrawingClass> enumerate_realizable(int n, int jobs = 1);

}  // namespace drawkit

#endif
