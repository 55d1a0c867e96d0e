#include "drawkit/rotation.hpp"

#include "drawkit/points.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

namespace drawkit {

RotationSystem::RotationSystem(int n, std::vector<std::vector<Vertex>> rotations)
    : n_(n), rotations_(std::move(rotations)) {
    if (n_ < 3) throw Error(Errc::InvalidArgument, "rotation system needs n >= 3");
    if (static_cast<int>(rotations_.size()) != n_)
        throw Error(Errc::InvalidArgument, "expected one rotation per vertex");
    for (int v = 1; v <= n_; ++v) {
        auto& r = rotations_[static_cast<std::size_t>(v - 1)];
        std::vector<Vertex> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Vertex> expect;
        for (int u = 1; u <= n_; ++u)
            if (u != v) expect.push_back(u);
        if (sorted != expect)
            throw Error(Errc::InvalidArgument,
                        "rotation of vertex " + std::to_string(v) + " is not a cycle of the other vertices");
        std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    }
}

RotationSystem RotationSystem::relabeled(const std::vector<Vertex>& perm) const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v) {
        auto& target = out[static_cast<std::size_t>(perm[static_cast<std::size_t>(v - 1)] - 1)];
        for (Vertex u : rotation(v)) target.push_back(perm[static_cast<std::size_t>(u - 1)]);
    }
    return RotationSystem(n_, std::move(out));
}

RotationSystem RotationSystem::mirrored() const {
    auto out = rotations_;
    for (auto& r : out) std::reverse(r.begin(), r.end());
    return RotationSystem(n_, std::move(out));
}

namespace {

// Position lookup: pos[v][u] = index of u in the rotation of v.
struct PositionTable {
    int n;
    std::vector<int> pos;

    explicit PositionTable(int n_) : n(n_), pos(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), -1) {}
    explicit PositionTable(const RotationSystem& rs) : PositionTable(rs.n()) {
        for (int v = 1; v <= n; ++v) set(v, rs.rotation(v));
    }

    void set(Vertex v, const std::vector<Vertex>& rot) {
        for (std::size_t i = 0; i < rot.size(); ++i) at(v, rot[i]) = static_cast<int>(i);
    }
    int& at(Vertex v, Vertex u) { return pos[static_cast<std::size_t>(v * (n + 1) + u)]; }
    int at(Vertex v, Vertex u) const { return pos[static_cast<std::size_t>(v * (n + 1) + u)]; }
    // clockwise steps from x to y around v
    int steps(Vertex v, Vertex x, Vertex y) const {
        const int m = n - 1;
        return ((at(v, y) - at(v, x)) % m + m) % m;
    }
};

int k4_key(const PositionTable& pt, const std::array<Vertex, 4>& s) {
    int key = 0;
    for (int i = 0; i < 4; ++i) {
        Vertex o[3];
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) o[k++] = s[static_cast<std::size_t>(j)];
        const Vertex v = s[static_cast<std::size_t>(i)];
        if (pt.steps(v, o[0], o[1]) < pt.steps(v, o[0], o[2])) key |= 1 << i;
    }
    return key;
}

// Lexicographic index of a permutation of {0,1,2}.
int perm3_index(int p0, int p1) {
    static constexpr int table[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};
    return table[p0][p1];
}

constexpr int kPerm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

int k5_key(const PositionTable& pt, const std::array<Vertex, 5>& s) {
    int key = 0, mult = 1;
    for (int i = 0; i < 5; ++i) {
        Vertex o[4];
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) o[k++] = s[static_cast<std::size_t>(j)];
        const Vertex v = s[static_cast<std::size_t>(i)];
        const int r1 = pt.steps(v, o[0], o[1]), r2 = pt.steps(v, o[0], o[2]), r3 = pt.steps(v, o[0], o[3]);
        // rank order of o1,o2,o3 along the rotation after o0
        int first, second;
        if (r1 < r2 && r1 < r3) {
            first = 0;
            second = r2 < r3 ? 1 : 2;
        } else if (r2 < r1 && r2 < r3) {
            first = 1;
            second = r1 < r3 ? 0 : 2;
        } else {
            first = 2;
            second = r1 < r2 ? 0 : 1;
        }
        key += perm3_index(first, second) * mult;
        mult *= 6;
    }
    return key;
}

RotationSystem decode_k5(int key) {
    std::vector<std::vector<Vertex>> rot(5);
    for (int v = 1; v <= 5; ++v) {
        std::vector<Vertex> o;
        for (int u = 1; u <= 5; ++u)
            if (u != v) o.push_back(u);
        const int idx = key % 6;
        key /= 6;
        auto& r = rot[static_cast<std::size_t>(v - 1)];
        r.push_back(o[0]);
        for (int j = 0; j < 3; ++j) r.push_back(o[static_cast<std::size_t>(1 + kPerm3[idx][j])]);
    }
    return RotationSystem(5, std::move(rot));
}

constexpr int kK5Keys = 6 * 6 * 6 * 6 * 6;

// Matching index on 4 labels: 0 = {12,34}, 1 = {13,24}, 2 = {14,23}.
EdgePair matching(int idx, const std::array<Vertex, 4>& s) {
    switch (idx) {
        case 0: return make_edge_pair(Edge(s[0], s[1]), Edge(s[2], s[3]));
        case 1: return make_edge_pair(Edge(s[0], s[2]), Edge(s[1], s[3]));
        default: return make_edge_pair(Edge(s[0], s[3]), Edge(s[1], s[2]));
    }
}

int matching_index(const EdgePair& p) {
    if (p.first == Edge(1, 2)) return 0;
    if (p.first == Edge(1, 3)) return 1;
    return 2;
}

std::string subset_text(const std::array<Vertex, 4>& s) {
    return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
           std::to_string(s[3]) + "}";
}

}  // namespace

K4ClassTable::K4ClassTable() {
    // Convex position and a triangle with an interior point, under all labelings and mirrors.
    const std::vector<PointSet> configs = {
        {{1, 1}, {2, 4}, {3, 9}, {4, 16}},
        {{0, 0}, {6, 1}, {2, 7}, {3, 3}},
    };
    std::array<bool, 16> seen{};
    std::array<int, 16> crossing_idx{};
    for (const auto& base : configs) {
        for (int mirror = 0; mirror < 2; ++mirror) {
            std::vector<int> perm = {0, 1, 2, 3};
            do {
                PointSet ps(4);
                for (int i = 0; i < 4; ++i) {
                    Point p = base[static_cast<std::size_t>(i)];
                    if (mirror) p.x = -p.x;
                    ps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = p;
                }
                const RotationSystem rs(4, clockwise_rotations(ps));
                const CrossingSet cs = segment_crossings(ps);
                const int key = key_of(rs, {1, 2, 3, 4});
                const int value = cs.empty() ? -1 : matching_index(cs.pairs().front());
                if (seen[static_cast<std::size_t>(key)] && crossing_idx[static_cast<std::size_t>(key)] != value)
                    throw Error(Errc::InternalAssertion, "K4 table: conflicting crossing data for one rotation");
                seen[static_cast<std::size_t>(key)] = true;
                crossing_idx[static_cast<std::size_t>(key)] = value;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    for (int k = 0; k < 16; ++k) {
        auto& e = entries_[static_cast<std::size_t>(k)];
        e.realizable = seen[static_cast<std::size_t>(k)];
        if (e.realizable && crossing_idx[static_cast<std::size_t>(k)] >= 0)
            e.crossing = matching(crossing_idx[static_cast<std::size_t>(k)], {1, 2, 3, 4});
    }
}

const K4ClassTable& K4ClassTable::instance() {
    static const K4ClassTable table;
    return table;
}

int K4ClassTable::key_of(const RotationSystem& rs, const std::array<Vertex, 4>& s) {
    return k4_key(PositionTable(rs), s);
}

int K4ClassTable::realizable_count() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](const K4Entry& e) { return e.realizable; }));
}

namespace {

// Adds the crossing of quadruple s (if any); returns false if the quadruple is not realizable.
bool add_quadruple(const PositionTable& pt, const std::array<Vertex, 4>& s, std::vector<EdgePair>& out) {
    const K4Entry& entry = K4ClassTable::instance().at(k4_key(pt, s));
    if (!entry.realizable) return false;
    if (entry.crossing) out.push_back(matching(matching_index(*entry.crossing), s));
    return true;
}

CrossingSet crossings_from_positions(const PositionTable& pt) {
    const int n = pt.n;
    std::vector<EdgePair> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const std::array<Vertex, 4> s{a, b, c, d};
                    if (!add_quadruple(pt, s, pairs))
                        throw Error(Errc::UnrealizableQuadruple, "subset " + subset_text(s));
                }
    return CrossingSet(n, std::move(pairs));
}

std::uint32_t pack(const EdgePair& p) {
    return static_cast<std::uint32_t>(p.first.a) << 24 | static_cast<std::uint32_t>(p.first.b) << 16 |
           static_cast<std::uint32_t>(p.second.a) << 8 | static_cast<std::uint32_t>(p.second.b);
}

}  // namespace

CrossingSet crossings_from_rotation(const RotationSystem& rs) { return crossings_from_positions(PositionTable(rs)); }

RotationSystem induced_subsystem(const RotationSystem& rs, std::vector<Vertex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.size() < 3) throw Error(Errc::SubsetTooSmall, "induced subsystem needs at least 3 vertices");
    std::vector<int> index(static_cast<std::size_t>(rs.n() + 1), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > rs.n()) throw Error(Errc::InvalidArgument, "subset vertex out of range");
        index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i + 1);
    }
    std::vector<std::vector<Vertex>> rot;
    for (Vertex v : subset) {
        std::vector<Vertex> r;
        for (Vertex u : rs.rotation(v))
            if (index[static_cast<std::size_t>(u)]) r.push_back(index[static_cast<std::size_t>(u)]);
        rot.push_back(std::move(r));
    }
    return RotationSystem(static_cast<int>(subset.size()), std::move(rot));
}

std::pair<CrossingSet, std::vector<Vertex>> canonical_crossing_form_with_map(const CrossingSet& cs) {
    const int n = cs.n();
    const int cap = size_cap(kCanonicalCap);
    if (n > cap) throw Error(Errc::TooLarge, "canonical form limited to n <= " + std::to_string(cap));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint32_t> best, cur(cs.size());
    std::vector<Vertex> best_perm = perm;
    bool first = true;
    do {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const auto& [e, f] = cs.pairs()[i];
            auto map = [&](Vertex v) { return perm[static_cast<std::size_t>(v - 1)]; };
            cur[i] = pack(make_edge_pair(Edge(map(e.a), map(e.b)), Edge(map(f.a), map(f.b))));
        }
        std::sort(cur.begin(), cur.end());
        if (first || cur < best) {
            best = cur;
            best_perm = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {cs.relabeled(best_perm), best_perm};
}

CrossingSet canonical_crossing_form(const CrossingSet& cs) { return canonical_crossing_form_with_map(cs).first; }

namespace {

struct K5Table {
    std::vector<bool> ok;

    K5Table() : ok(kK5Keys, false) {
        const auto& refs = k5_reference_forms();
        const std::set<CrossingSet> ref_set(refs.begin(), refs.end());
        for (int key = 0; key < kK5Keys; ++key) {
            const PositionTable pt(decode_k5(key));
            std::vector<EdgePair> pairs;
            bool quads_ok = true;
            for (int skip = 1; skip <= 5 && quads_ok; ++skip) {
                std::array<Vertex, 4> s{};
                int k = 0;
                for (int v = 1; v <= 5; ++v)
                    if (v != skip) s[static_cast<std::size_t>(k++)] = v;
                quads_ok = add_quadruple(pt, s, pairs);
            }
            if (!quads_ok) continue;
            ok[static_cast<std::size_t>(key)] =
                ref_set.count(canonical_crossing_form(CrossingSet(5, std::move(pairs)))) > 0;
        }
    }

    static const K5Table& instance() {
        static const K5Table table;
        return table;
    }
};

// Checks the quadruples and quintuples whose largest vertex is v.
bool local_check(const PositionTable& pt, Vertex v, bool use_k5) {
    const auto& k4 = K4ClassTable::instance();
    for (int a = 1; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) {
                if (!k4.at(k4_key(pt, {a, b, c, v})).realizable) return false;
                if (!use_k5) continue;
                for (int d = c + 1; d < v; ++d)
                    if (!K5Table::instance().ok[static_cast<std::size_t>(k5_key(pt, {a, b, c, d, v}))]) return false;
            }
    return true;
}

}  // namespace

bool realizability_filter(const RotationSystem& rs) {
    if (rs.n() < 5) throw Error(Errc::InvalidArgument, "realizability filter needs n >= 5");
    const PositionTable pt(rs);
    for (int v = 4; v <= rs.n(); ++v)
        if (!local_check(pt, v, true)) return false;
    return true;
}

namespace {

struct Enumerator {
    int n;
    bool use_k5;
    std::vector<std::vector<Vertex>> rot;
    PositionTable pt;
    std::unordered_set<std::string> seen_labeled;
    std::set<CrossingSet> classes;
    std::vector<DrawingClass> found;

    explicit Enumerator(int n_) : n(n_), use_k5(n_ >= 5), rot(static_cast<std::size_t>(n_)), pt(n_) {}

    static std::vector<std::vector<Vertex>> cyclic_orders(int n, Vertex v) {
        std::vector<Vertex> others;
        for (int u = 1; u <= n; ++u)
            if (u != v) others.push_back(u);
        std::vector<std::vector<Vertex>> out;
        do {
            out.push_back(others);
        } while (std::next_permutation(others.begin() + 1, others.end()));
        return out;
    }

    void assign(Vertex v, const std::vector<Vertex>& r) {
        rot[static_cast<std::size_t>(v - 1)] = r;
        pt.set(v, r);
    }

    void run_from(Vertex v) {
        if (v > n) {
            leaf();
            return;
        }
        for (const auto& r : cyclic_orders(n, v)) {
            assign(v, r);
            if (v >= 4 && !local_check(pt, v, use_k5)) continue;
            run_from(v + 1);
        }
    }

    void leaf() {
        const CrossingSet cs = crossings_from_positions(pt);
        std::string key;
        for (const auto& p : cs.pairs()) {
            const auto packed = pack(p);
            key.append(reinterpret_cast<const char*>(&packed), sizeof packed);
        }
        if (!seen_labeled.insert(key).second) return;
        auto [canon, perm] = canonical_crossing_form_with_map(cs);
        if (!classes.insert(canon).second) return;
        found.push_back({canon, RotationSystem(n, rot).relabeled(perm)});
    }
};

}  // namespace

void enumerate_realizable(int n, const std::function<void(const DrawingClass&)>& emit, int jobs) {
    const int cap = std::min(size_cap(kEnumerationCap), size_cap(kCanonicalCap));
    if (n > cap) throw Error(Errc::TooLarge, "enumeration limited to n <= " + std::to_string(cap));
    if (n < 3) throw Error(Errc::InvalidArgument, "enumeration needs n >= 3");

    std::vector<Vertex> identity;
    for (int u = 2; u <= n; ++u) identity.push_back(u);

    std::vector<DrawingClass> all;
    if (n == 3) {
        all.push_back({CrossingSet(3), RotationSystem(3, {{2, 3}, {1, 3}, {1, 2}})});
    } else {
        // Work items: choices for vertex 2's rotation, split across workers.
        const auto prefixes = Enumerator::cyclic_orders(n, 2);
        const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(prefixes.size())));
        std::vector<std::vector<DrawingClass>> partial(static_cast<std::size_t>(workers));
        auto work = [&](int w) {
            Enumerator en(n);
            en.assign(1, identity);
            for (std::size_t i = static_cast<std::size_t>(w); i < prefixes.size(); i += static_cast<std::size_t>(workers)) {
                en.assign(2, prefixes[i]);
                en.run_from(3);
            }
            partial[static_cast<std::size_t>(w)] = std::move(en.found);
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
            for (auto& t : threads) t.join();
        }
        std::set<CrossingSet> seen;
        for (auto& part : partial)
            for (auto& c : part)
                if (seen.insert(c.canonical).second) all.push_back(std::move(c));
    }
    std::sort(all.begin(), all.end(), [](const DrawingClass& x, const DrawingClass& y) { return x.canonical < y.canonical; });
    for (const auto& c : all) emit(c);
}

std::vector<DrawingClass> enumerate_realizable(int n, int jobs) {
    std::vector<DrawingClass> out;
    enumerate_realizable(n, [&](const DrawingClass& c) { out.push_back(c); }, jobs);
    return out;
}

}  // namespace drawkit
