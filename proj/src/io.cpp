#include "drawkit/io.hpp"

#include <fstream>

namespace drawkit {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(Errc::Parse, std::string("bad value for '") + what + "'");
    }
}

Json edge_json(Edge e) { return Json::array({e.a, e.b}); }

Edge edge_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(Errc::Parse, "an edge is [a, b]");
    const int a = as<int>(j[0], "edge"), b = as<int>(j[1], "edge");
    if (a == b) throw Error(Errc::Parse, "edge endpoints coincide");
    return Edge(a, b);
}

Json edges_json(const std::vector<Edge>& es) {
    Json out = Json::array();
    for (const Edge& e : es) out.push_back(edge_json(e));
    return out;
}

std::vector<Edge> edges_from(const Json& j) {
    if (!j.is_array()) throw Error(Errc::Parse, "expected a list of edges");
    std::vector<Edge> out;
    for (const auto& e : j) out.push_back(edge_from(e));
    return out;
}

std::vector<std::vector<Edge>> edge_lists_from(const Json& j) {
    if (!j.is_array()) throw Error(Errc::Parse, "expected a list of edge lists");
    std::vector<std::vector<Edge>> out;
    for (const auto& l : j) out.push_back(edges_from(l));
    return out;
}

Json edge_lists_json(const std::vector<std::vector<Edge>>& ls) {
    Json out = Json::array();
    for (const auto& l : ls) out.push_back(edges_json(l));
    return out;
}

/// Rationals are written as "p/q" strings; plain JSON integers are accepted on input.
Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return make_rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(Errc::Parse, "expected a rational \"p/q\"");
}

Json rational_json(const Rational& r) { return to_string(r); }

}  // namespace

Json to_json(const CrossingSet& cs) {
    Json pairs = Json::array();
    for (const auto& [e, f] : cs.pairs()) pairs.push_back(Json::array({edge_json(e), edge_json(f)}));
    return {{"n", cs.n()}, {"crossings", pairs}};
}

CrossingSet crossing_set_from_json(const Json& j) {
    const int n = as<int>(field(j, "n"), "n");
    std::vector<EdgePair> pairs;
    for (const auto& p : field(j, "crossings")) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::Parse, "a crossing is [[a,b],[c,d]]");
        pairs.push_back(make_edge_pair(edge_from(p[0]), edge_from(p[1])));
    }
    return CrossingSet(n, std::move(pairs));
}

Json to_json(const RotationSystem& rs) { return {{"n", rs.n()}, {"rotations", rs.rotations()}}; }

RotationSystem rotation_system_from_json(const Json& j) {
    return RotationSystem(as<int>(field(j, "n"), "n"), as<std::vector<std::vector<Vertex>>>(field(j, "rotations"), "rotations"));
}

Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const Point& p : ps) pts.push_back(Json::array({rational_json(p.x), rational_json(p.y)}));
    return {{"n", ps.size()}, {"points", pts}};
}

PointSet points_from_json(const Json& j) {
    PointSet out;
    for (const auto& p : field(j, "points")) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::Parse, "a point is [x, y]");
        out.push_back({rational_from(p[0]), rational_from(p[1])});
    }
    return out;
}

Json to_json(const LinearWiring& lw) {
    return {{"n", lw.n},
            {"strips", lw.strips},
            {"vertex_pos", lw.vertex_pos},
            {"left_order", edge_lists_json(lw.left_order)},
            {"right_order", edge_lists_json(lw.right_order)}};
}

LinearWiring linear_wiring_from_json(const Json& j) {
    LinearWiring lw;
    lw.n = as<int>(field(j, "n"), "n");
    lw.strips = as<std::vector<std::vector<int>>>(field(j, "strips"), "strips");
    lw.vertex_pos = as<std::vector<int>>(field(j, "vertex_pos"), "vertex_pos");
    lw.left_order = edge_lists_from(field(j, "left_order"));
    lw.right_order = edge_lists_from(field(j, "right_order"));
    validate(lw);
    return lw;
}

Json to_json(const XBoundedData& xb) {
    const int n = xb.n();
    Json sides = Json::array();
    for (const Edge& e : all_edges(n)) {
        Json s = Json::array();
        for (Vertex v = e.a + 1; v < e.b; ++v) s.push_back(xb.passes(e, v) == Side::Above ? "above" : "below");
        sides.push_back(s);
    }
    return {{"n", n},
            {"sides", sides},
            {"left_order", edge_lists_json(xb.left_order)},
            {"right_order", edge_lists_json(xb.right_order)}};
}

XBoundedData xbounded_from_json(const Json& j) {
    const int n = as<int>(field(j, "n"), "n");
    if (n < 2) throw Error(Errc::Parse, "n must be at least 2");
    XBoundedData xb(n);
    const Json& sides = field(j, "sides");
    if (!sides.is_array() || static_cast<int>(sides.size()) != edge_count(n)) throw Error(Errc::Parse, "one side list per edge expected");
    for (const Edge& e : all_edges(n)) {
        const Json& s = sides[static_cast<std::size_t>(edge_index(n, e))];
        if (!s.is_array() || static_cast<int>(s.size()) != e.b - e.a - 1) throw Error(Errc::Parse, "side list length mismatch");
        for (Vertex v = e.a + 1; v < e.b; ++v) {
            const auto word = as<std::string>(s[static_cast<std::size_t>(v - e.a - 1)], "sides");
            if (word != "above" && word != "below") throw Error(Errc::Parse, "side must be above or below");
            xb.set_passes(e, v, word == "above" ? Side::Above : Side::Below);
        }
    }
    xb.left_order = edge_lists_from(field(j, "left_order"));
    xb.right_order = edge_lists_from(field(j, "right_order"));
    if (static_cast<int>(xb.left_order.size()) != n || static_cast<int>(xb.right_order.size()) != n)
        throw Error(Errc::Parse, "one order per vertex expected");
    return xb;
}

Json to_json(const CircularWiring& cw) {
    Json angles = Json::array();
    for (const auto& a : cw.angle) angles.push_back(rational_json(a));
    Json events = Json::array();
    for (const auto& ev : cw.events) {
        if (ev.kind == CircularEvent::Kind::Vertex)
            events.push_back({{"kind", "vertex"},
                              {"angle", rational_json(ev.angle)},
                              {"v", ev.v},
                              {"pos", ev.pos},
                              {"ending", edges_json(ev.ending)},
                              {"starting", edges_json(ev.starting)}});
        else
            events.push_back({{"kind", "swap"}, {"angle", rational_json(ev.angle)}, {"level", ev.level}});
    }
    return {{"n", cw.n}, {"angles", angles}, {"base_order", edges_json(cw.base_order)}, {"events", events}};
}

CircularWiring circular_wiring_from_json(const Json& j) {
    CircularWiring cw;
    cw.n = as<int>(field(j, "n"), "n");
    for (const auto& a : field(j, "angles")) cw.angle.push_back(rational_from(a));
    cw.base_order = edges_from(field(j, "base_order"));
    for (const auto& e : field(j, "events")) {
        CircularEvent ev;
        const auto kind = as<std::string>(field(e, "kind"), "kind");
        ev.angle = rational_from(field(e, "angle"));
        if (kind == "vertex") {
            ev.kind = CircularEvent::Kind::Vertex;
            ev.v = as<int>(field(e, "v"), "v");
            ev.pos = as<int>(field(e, "pos"), "pos");
            ev.ending = edges_from(field(e, "ending"));
            ev.starting = edges_from(field(e, "starting"));
        } else if (kind == "swap") {
            ev.kind = CircularEvent::Kind::Swap;
            ev.level = as<int>(field(e, "level"), "level");
        } else {
            throw Error(Errc::Parse, "event kind must be vertex or swap");
        }
        cw.events.push_back(std::move(ev));
    }
    validate(cw);
    return cw;
}

Json to_json(const CylindricalDrawing& cd) {
    auto circle_json = [](const std::vector<CylVertex>& c) {
        Json out = Json::array();
        for (const auto& cv : c) out.push_back({{"v", cv.v}, {"angle", rational_json(cv.angle)}});
        return out;
    };
    Json lateral = Json::array();
    for (const auto& le : cd.lateral) lateral.push_back({{"u", le.u}, {"w", le.w}, {"omega", rational_json(le.omega)}});
    Json circle = Json::array();
    for (const auto& ce : cd.circle)
        circle.push_back({{"u", ce.u},
                          {"v", ce.v},
                          {"face", ce.face == Face::Home ? "home" : "lateral"},
                          {"arc", ce.arc == ArcDir::Cw ? "cw" : "ccw"}});
    return {{"n", cd.n}, {"outer", circle_json(cd.outer)}, {"inner", circle_json(cd.inner)}, {"lateral", lateral}, {"circle", circle}};
}

CylindricalDrawing cylindrical_from_json(const Json& j) {
    CylindricalDrawing cd;
    auto circle_from = [](const Json& c) {
        std::vector<CylVertex> out;
        for (const auto& cv : c) out.push_back({as<int>(field(cv, "v"), "v"), rational_from(field(cv, "angle"))});
        return out;
    };
    cd.outer = circle_from(field(j, "outer"));
    cd.inner = circle_from(field(j, "inner"));
    cd.n = j.contains("n") ? as<int>(j.at("n"), "n") : static_cast<int>(cd.outer.size() + cd.inner.size());
    for (const auto& le : field(j, "lateral"))
        cd.lateral.push_back({as<int>(field(le, "u"), "u"), as<int>(field(le, "w"), "w"), rational_from(field(le, "omega"))});
    for (const auto& ce : field(j, "circle")) {
        const auto face = as<std::string>(field(ce, "face"), "face");
        const auto arc = as<std::string>(field(ce, "arc"), "arc");
        if ((face != "home" && face != "lateral") || (arc != "cw" && arc != "ccw")) throw Error(Errc::Parse, "bad face or arc");
        cd.circle.push_back({as<int>(field(ce, "u"), "u"), as<int>(field(ce, "v"), "v"),
                             face == "home" ? Face::Home : Face::Lateral, arc == "cw" ? ArcDir::Cw : ArcDir::Ccw});
    }
    validate(cd);
    return cd;
}

Json path_to_json(const VertexPath& p, bool closed) {
    Json out = {{"path", p}};
    if (closed) out["closed"] = true;
    return out;
}

VertexPath path_from_json(const Json& j) {
    if (j.is_array()) return as<VertexPath>(j, "path");
    return as<VertexPath>(field(j, "path"), "path");
}

Json to_json(const VerificationReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"class", to_json(f.canonical)}, {"check", f.what}, {"verdict", f.verdict}});
    return {{"n", r.n}, {"classes", r.classes}, {"conj1_ok", r.conj1_ok}, {"conj2_ok", r.conj2_ok}, {"failures", failures}};
}

Json envelope(const std::string& kind, Json payload) { return {{"kind", kind}, {"payload", std::move(payload)}}; }

std::pair<std::string, Json> open_envelope(const Json& doc) {
    return {as<std::string>(field(doc, "kind"), "kind"), field(doc, "payload")};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::Parse, "'" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

}  // namespace drawkit
