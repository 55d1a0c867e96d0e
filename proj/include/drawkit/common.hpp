#ifndef DRAWKIT_COMMON_HPP
#define DRAWKIT_COMMON_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drawkit {

/// Vertices are 1-based throughout the library.
using Vertex = int;

/// Undirected edge {a, b}, always stored with a < b.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

    constexpr bool incident_to(Vertex v) const { return a == v || b == v; }
    constexpr bool shares_vertex(const Edge& o) const {
        return a == o.a || a == o.b || b == o.a || b == o.b;
    }
    constexpr Vertex other(Vertex v) const { return v == a ? b : a; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Index of edge {a,b} in the lexicographic enumeration of the edges of K_n.
inline int edge_index(int n, Edge e) {
    // edges (1,2),(1,3),...,(1,n),(2,3),...
    const int a = e.a - 1;
    return a * (2 * n - a - 1) / 2 + (e.b - e.a - 1);
}

inline int edge_count(int n) { return n * (n - 1) / 2; }

inline std::vector<Edge> all_edges(int n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count(n)));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

enum class Errc {
    UnrealizableQuadruple,
    SubsetTooSmall,
    TooLarge,
    InvalidArgument,
    DegeneratePointSet,
    GaveUp,
    IncomparableAtRequiredVertex,
    InconsistentInput,
    CutBlocked,
    WrongFace,
    InvalidDrawing,
    RangeTooWide,
    NonTermination,
    RealizationMismatch,
    BothDirectionsForbidden,
    NotStronglyCMonotone,
    InternalAssertion,
    EdgeIsCrossed,
    BadRotation,
    UnrenderableModel,
    Parse,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Size cap for factorial and exhaustive searches; DRAWKIT_MAX_N overrides `fallback`.
int size_cap(int fallback);

}  // namespace drawkit

#endif
