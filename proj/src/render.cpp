#include "drawkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace drawkit {

namespace {

using Pt = std::pair<double, double>;
using Polyline = std::vector<Pt>;

constexpr const char* kHighlight = "#d62728";

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

class Svg {
public:
    explicit Svg(int size) : size_(size) {
        out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               std::to_string(size) + "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) +
               " " + std::to_string(size) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void polyline(const Polyline& pts, const std::string& color, double width, const std::string& cls) {
        if (pts.size() < 2) return;
        out_ += "<polyline class=\"" + cls + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
                "\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) out_ += (i ? " " : "") + num(pts[i].first) + "," + num(pts[i].second);
        out_ += "\"/>\n";
    }

    void circle(Pt c, double r, const std::string& stroke, const std::string& fill, const std::string& cls) {
        out_ += "<circle class=\"" + cls + "\" cx=\"" + num(c.first) + "\" cy=\"" + num(c.second) + "\" r=\"" + num(r) +
                "\" stroke=\"" + stroke + "\" fill=\"" + fill + "\"/>\n";
    }

    void vertex(Pt c, Vertex v, const RenderSpec& spec) {
        if (!spec.labels.empty()) v = spec.labels[static_cast<std::size_t>(v - 1)];
        const double r = std::max(6.0, size_ / 60.0);
        circle(c, r, "black", "white", "vertex");
        out_ += "<text x=\"" + num(c.first) + "\" y=\"" + num(c.second + r * 0.4) + "\" font-family=\"sans-serif\" font-size=\"" +
                num(r * 1.1) + "\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
    }

    std::string finish() { return out_ + "</svg>\n"; }

private:
    int size_;
    std::string out_;
};

void check_spec(const RenderSpec& spec) {
    if (spec.size < 100) throw Error(Errc::InvalidArgument, "canvas must be at least 100 px");
    if (spec.palette.empty()) throw Error(Errc::InvalidArgument, "palette must not be empty");
}

std::vector<Edge> highlighted(const RenderSpec& spec) {
    if (!spec.highlight) return {};
    return path_edges(*spec.highlight, spec.highlight_closed);
}

/// Edge strokes in edge order, highlighted edges last and thicker.
void draw_edges(Svg& svg, int n, const std::map<Edge, std::vector<Polyline>>& lines, const RenderSpec& spec) {
    const double width = std::max(1.0, spec.size / 400.0);
    for (const auto& [e, pieces] : lines)
        for (const auto& pl : pieces)
            svg.polyline(pl, spec.palette[static_cast<std::size_t>(edge_index(n, e)) % spec.palette.size()], width, "edge");
    for (const Edge& e : highlighted(spec)) {
        const auto it = lines.find(e);
        if (it == lines.end()) continue;
        for (const auto& pl : it->second) svg.polyline(pl, kHighlight, width * 3, "highlight");
    }
}

}  // namespace

std::string render_svg(const LinearWiring& lw, const RenderSpec& spec) {
    check_spec(spec);
    const WiringTrace t = trace(lw);
    const int n = lw.n;

    // station columns: each vertex, the strip entry, and one per swap
    std::size_t columns = static_cast<std::size_t>(n);
    std::size_t levels = 1;
    for (int i = 0; i + 1 < n; ++i) {
        columns += lw.strips[static_cast<std::size_t>(i)].size() + 1;
        levels = std::max(levels, t.enter[static_cast<std::size_t>(i)].size());
    }
    for (const auto& p : t.passing) levels = std::max(levels, p.size() + 1);
    const double margin = spec.size * 0.06;
    const double dx = (spec.size - 2 * margin) / static_cast<double>(std::max<std::size_t>(columns - 1, 1));
    const double dy = (spec.size - 2 * margin) / static_cast<double>(std::max<std::size_t>(levels - 1, 1));
    auto y_of = [&](double level) { return spec.size - margin - level * dy; };

    std::map<Edge, std::vector<Polyline>> lines;
    for (const Edge& e : all_edges(n)) lines[e].emplace_back();
    std::vector<Pt> vertex_at(static_cast<std::size_t>(n));
    double x = margin;
    for (int v = 1; v <= n; ++v) {
        const auto vi = static_cast<std::size_t>(v - 1);
        const int pos = lw.vertex_pos[vi];
        const Pt here{x, y_of(pos)};
        vertex_at[vi] = here;
        for (std::size_t k = 0; k < t.passing[vi].size(); ++k) {
            const int level = static_cast<int>(k) < pos ? static_cast<int>(k) : static_cast<int>(k) + 1;
            lines[t.passing[vi][k]].back().emplace_back(x, y_of(level));
        }
        for (const Edge& e : lw.left_order[vi]) lines[e].back().push_back(here);
        for (const Edge& e : lw.right_order[vi]) lines[e].back().push_back(here);
        if (v == n) break;
        std::vector<Edge> order = t.enter[vi];
        x += dx;
        for (std::size_t k = 0; k < order.size(); ++k) lines[order[k]].back().emplace_back(x, y_of(static_cast<double>(k)));
        for (int s : lw.strips[vi]) {
            std::swap(order[static_cast<std::size_t>(s)], order[static_cast<std::size_t>(s) + 1]);
            x += dx;
            for (std::size_t k = 0; k < order.size(); ++k) lines[order[k]].back().emplace_back(x, y_of(static_cast<double>(k)));
        }
        x += dx;
    }

    Svg svg(spec.size);
    draw_edges(svg, n, lines, spec);
    for (int v = 1; v <= n; ++v) svg.vertex(vertex_at[static_cast<std::size_t>(v - 1)], v, spec);
    return svg.finish();
}

std::string render_svg(const CircularWiring& cw, const RenderSpec& spec) {
    check_spec(spec);
    validate(cw);
    const int n = cw.n;
    const double c = spec.size / 2.0;
    const double r_max = spec.size * 0.45, r_min = spec.size * 0.08;

    std::size_t levels = cw.base_order.size() + 1;
    {
        std::vector<Edge> order = cw.base_order;
        for (const auto& ev : cw.events) {
            if (ev.kind == CircularEvent::Kind::Swap) continue;
            const auto pos = static_cast<std::ptrdiff_t>(ev.pos);
            order.erase(order.begin() + pos, order.begin() + pos + static_cast<std::ptrdiff_t>(ev.ending.size()));
            levels = std::max(levels, order.size() + 1);
            order.insert(order.begin() + pos, ev.starting.begin(), ev.starting.end());
            levels = std::max(levels, order.size() + 1);
        }
    }
    const double dr = (r_max - r_min) / static_cast<double>(levels);
    auto radius = [&](double level) { return r_min + (level + 0.5) * dr; };

    // events sharing an angle are spread slightly for display
    std::vector<double> shown(cw.events.size());
    {
        double min_gap = 1.0;
        for (std::size_t i = 0; i + 1 < cw.events.size(); ++i)
            if (cw.events[i + 1].angle != cw.events[i].angle)
                min_gap = std::min(min_gap, to_double(cw.events[i + 1].angle) - to_double(cw.events[i].angle));
        std::size_t group = 1, largest = 1;
        for (std::size_t i = 1; i < cw.events.size(); ++i) {
            group = cw.events[i].angle == cw.events[i - 1].angle ? group + 1 : 1;
            largest = std::max(largest, group);
        }
        const double step = std::min(0.004, min_gap / static_cast<double>(largest + 1));
        std::size_t j = 0;
        for (std::size_t i = 0; i < cw.events.size(); ++i) {
            j = (i > 0 && cw.events[i].angle == cw.events[i - 1].angle) ? j + 1 : 0;
            shown[i] = to_double(cw.events[i].angle) + static_cast<double>(j) * step;
        }
    }

    // polar samples (turns, level), densified into Cartesian points afterwards
    using Polar = std::pair<double, double>;
    std::map<Edge, std::vector<std::vector<Polar>>> polar;
    for (const Edge& e : all_edges(n)) polar[e];
    std::vector<Edge> order = cw.base_order;
    for (std::size_t k = 0; k < order.size(); ++k) polar[order[k]].push_back({{0.0, static_cast<double>(k)}});
    std::vector<Polar> vertex_at(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cw.events.size(); ++i) {
        const auto& ev = cw.events[i];
        const double th = shown[i];
        if (ev.kind == CircularEvent::Kind::Swap) {
            std::swap(order[static_cast<std::size_t>(ev.level)], order[static_cast<std::size_t>(ev.level) + 1]);
            for (std::size_t k = 0; k < order.size(); ++k) polar[order[k]].back().push_back({th, static_cast<double>(k)});
            continue;
        }
        const auto pos = static_cast<std::size_t>(ev.pos);
        std::vector<Edge> passing;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (k < pos || k >= pos + ev.ending.size()) passing.push_back(order[k]);
        const Polar here{th, static_cast<double>(pos)};
        vertex_at[static_cast<std::size_t>(ev.v - 1)] = here;
        for (std::size_t k = 0; k < passing.size(); ++k)
            polar[passing[k]].back().push_back({th, static_cast<double>(k < pos ? k : k + 1)});
        for (const Edge& e : ev.ending) polar[e].back().push_back(here);
        for (const Edge& e : ev.starting) polar[e].push_back({here});
        order = passing;
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), ev.starting.begin(), ev.starting.end());
    }
    for (std::size_t k = 0; k < order.size(); ++k) polar[order[k]].back().push_back({1.0, static_cast<double>(k)});

    auto cart = [&](double turns, double r) {
        const double a = 2 * std::numbers::pi * turns;
        return Pt{c + r * std::cos(a), c - r * std::sin(a)};
    };
    std::map<Edge, std::vector<Polyline>> lines;
    for (const auto& [e, pieces] : polar)
        for (const auto& piece : pieces) {
            Polyline pl;
            for (std::size_t k = 0; k < piece.size(); ++k) {
                if (k > 0) {
                    const auto [t0, l0] = piece[k - 1];
                    const auto [t1, l1] = piece[k];
                    const int steps = std::max(1, static_cast<int>((t1 - t0) * 200));
                    for (int s = 1; s < steps; ++s) {
                        const double f = static_cast<double>(s) / steps;
                        pl.push_back(cart(t0 + f * (t1 - t0), radius(l0 + f * (l1 - l0))));
                    }
                }
                pl.push_back(cart(piece[k].first, radius(piece[k].second)));
            }
            lines[e].push_back(pl);
        }

    Svg svg(spec.size);
    svg.circle({c, c}, 3, "black", "black", "origin");
    draw_edges(svg, n, lines, spec);
    for (int v = 1; v <= n; ++v) {
        const auto [th, level] = vertex_at[static_cast<std::size_t>(v - 1)];
        svg.vertex(cart(th, radius(level)), v, spec);
    }
    return svg.finish();
}

std::string render_svg(const CylindricalDrawing& cd, const RenderSpec& spec) {
    check_spec(spec);
    validate(cd);
    const double c = spec.size / 2.0;
    const double r_out = spec.size * 0.30, r_in = spec.size * 0.15;
    const double band = r_out - r_in;
    auto cart = [&](double turns, double r) {
        const double a = 2 * std::numbers::pi * turns;
        return Pt{c + r * std::cos(a), c - r * std::sin(a)};
    };

    std::map<Vertex, std::pair<double, double>> where;  // angle in turns, radius
    for (const auto& cv : cd.outer) where[cv.v] = {to_double(cv.angle), r_out};
    for (const auto& cv : cd.inner) where[cv.v] = {to_double(cv.angle), r_in};

    std::map<Edge, std::vector<Polyline>> lines;
    constexpr int kSamples = 96;
    for (const auto& le : cd.lateral) {
        Polyline pl;
        const double start = where[le.u].first, turn = to_double(le.omega);
        for (int s = 0; s <= kSamples; ++s) {
            const double f = static_cast<double>(s) / kSamples;
            pl.push_back(cart(start + f * turn, r_out + f * (r_in - r_out)));
        }
        lines[Edge(le.u, le.w)].push_back(pl);
    }
    for (const auto& ce : cd.circle) {
        const Arc arc = arc_of(cd, ce);
        const double base = where[ce.u].second;
        const bool outer = base == r_out;
        // home edges bulge away from the annulus, lateral-face edges into it
        double bulge = 0;
        if (ce.face == Face::Home) bulge = outer ? spec.size * 0.15 : -r_in * 0.8;
        else bulge = outer ? -band * 0.45 : band * 0.45;
        const double len = to_double(arc.length);
        bulge *= std::min(1.0, 0.3 + len);
        Polyline pl;
        for (int s = 0; s <= kSamples; ++s) {
            const double f = static_cast<double>(s) / kSamples;
            pl.push_back(cart(to_double(arc.start) + f * len, base + bulge * std::sin(std::numbers::pi * f)));
        }
        lines[Edge(ce.u, ce.v)].push_back(pl);
    }

    Svg svg(spec.size);
    svg.circle({c, c}, r_out, "#999999", "none", "rim");
    svg.circle({c, c}, r_in, "#999999", "none", "rim");
    draw_edges(svg, cd.n, lines, spec);
    for (const auto& [v, pr] : where) svg.vertex(cart(pr.first, pr.second), v, spec);
    return svg.finish();
}

}  // namespace drawkit
