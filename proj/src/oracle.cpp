#include "drawkit/oracle.hpp"

#include "drawkit/rotation.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <mutex>
#include <thread>
#include <tuple>

namespace drawkit {

namespace {

constexpr std::size_t kMaxEdges = 128;
using EdgeBits = std::bitset<kMaxEdges>;

void check_size(int n) {
    // the vertex mask and edge bitset hold up to 15 vertices
    const int cap = std::min(size_cap(kOracleCap), 15);
    if (n > cap) throw Error(Errc::TooLarge, "search limited to n <= " + std::to_string(cap));
}

/// Depth-first search over vertex sequences; an edge may be added only if no earlier path edge crosses it.
class Search {
public:
    explicit Search(const CrossingSet& cs) : n_(cs.n()), crossing_(static_cast<std::size_t>(edge_count(cs.n()))) {
        check_size(n_);
        for (const auto& [e, f] : cs.pairs()) {
            crossing_[idx(e)].set(idx(f));
            crossing_[idx(f)].set(idx(e));
        }
    }

    std::optional<VertexPath> path(Vertex a, Vertex b) {
        target_ = b;
        cycle_ = false;
        return start(a);
    }

    std::optional<VertexPath> cycle() {
        target_ = 0;
        cycle_ = true;
        return start(1);
    }

private:
    std::size_t idx(Edge e) const { return static_cast<std::size_t>(edge_index(n_, e)); }

    std::optional<VertexPath> start(Vertex a) {
        path_.assign(1, a);
        used_ = 1u << a;
        if (extend(EdgeBits{})) return path_;
        return std::nullopt;
    }

    bool admissible(Vertex v) const {
        const auto len = static_cast<int>(path_.size());
        if (target_ && v == target_) return len == n_ - 1;
        // keep the direction with second vertex < last vertex
        if (cycle_ && len == n_ - 1) return v > path_[1];
        return true;
    }

    bool extend(const EdgeBits& blocked) {
        const Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            if (!cycle_) return true;
            const std::size_t closing = idx(Edge(last, path_.front()));
            return !blocked.test(closing);
        }
        for (Vertex v = 1; v <= n_; ++v) {
            if ((used_ >> v) & 1u || !admissible(v)) continue;
            const std::size_t e = idx(Edge(last, v));
            if (blocked.test(e)) continue;
            EdgeBits next = blocked | crossing_[e];
            if (cycle_ && static_cast<int>(path_.size()) + 1 == n_) {
                // the closing edge must not cross the edge just added
                if (next.test(idx(Edge(v, path_.front())))) continue;
            }
            used_ |= 1u << v;
            path_.push_back(v);
            if (extend(next)) return true;
            path_.pop_back();
            used_ &= ~(1u << v);
        }
        return false;
    }

    int n_;
    std::vector<EdgeBits> crossing_;
    Vertex target_ = 0;
    bool cycle_ = false;
    unsigned used_ = 0;
    VertexPath path_;
};

/// Own validity check, kept apart from the constructive module.
bool plane(const CrossingSet& cs, const VertexPath& p, bool closed) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    if (closed) edges.emplace_back(p.back(), p.front());
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!edges[i].shares_vertex(edges[j]) && cs.contains(edges[i], edges[j])) return false;
    return true;
}

}  // namespace

std::optional<VertexPath> find_cf_ham_path(const CrossingSet& cs, Vertex a, Vertex b) {
    const int n = cs.n();
    if (a < 1 || a > n || b < 1 || b > n || a == b) throw Error(Errc::InvalidArgument, "ends must be two distinct vertices");
    auto p = Search(cs).path(a, b);
    if (p && !plane(cs, *p, false)) throw Error(Errc::InternalAssertion, "oracle path has a crossing");
    return p;
}

std::optional<VertexPath> find_cf_ham_cycle(const CrossingSet& cs) {
    if (cs.n() < 3) throw Error(Errc::InvalidArgument, "a cycle needs n >= 3");
    auto c = Search(cs).cycle();
    if (c && !plane(cs, *c, true)) throw Error(Errc::InternalAssertion, "oracle cycle has a crossing");
    return c;
}

bool verify_all_pairs(const CrossingSet& cs) {
    check_size(cs.n());
    Search search(cs);
    for (Vertex a = 1; a <= cs.n(); ++a)
        for (Vertex b = a + 1; b <= cs.n(); ++b)
            if (!search.path(a, b)) return false;
    return true;
}

VerificationReport verify_enumeration(int n, int jobs) {
    const int cap = size_cap(kEnumerationCap);
    if (n > cap) throw Error(Errc::TooLarge, "verification limited to n <= " + std::to_string(cap));
    const std::vector<DrawingClass> classes = enumerate_realizable(n, jobs);

    VerificationReport report;
    report.n = n;
    report.classes = static_cast<int>(classes.size());
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < classes.size(); i = next++) {
            const CrossingSet& cs = classes[i].canonical;
            Search search(cs);
            std::vector<VerificationFailure> local;
            if (!search.cycle()) local.push_back({cs, "cycle"});
            for (Vertex a = 1; a <= n; ++a)
                for (Vertex b = a + 1; b <= n; ++b)
                    if (!search.path(a, b)) local.push_back({cs, "path " + std::to_string(a) + "-" + std::to_string(b)});
            if (local.empty()) continue;
            std::lock_guard lock(mu);
            for (auto& f : local) {
                (f.what == "cycle" ? report.conj1_ok : report.conj2_ok) = false;
                report.failures.push_back(std::move(f));
            }
        }
    };
    const int workers = std::max(1, jobs);
    std::vector<std::thread> threads;
    for (int w = 1; w < workers; ++w) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();
    std::sort(report.failures.begin(), report.failures.end(), [](const VerificationFailure& x, const VerificationFailure& y) {
        return std::tie(x.canonical, x.what) < std::tie(y.canonical, y.what);
    });
    return report;
}

}  // namespace drawkit
