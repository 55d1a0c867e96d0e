// Command-line front end: gen, path, verify, convert, render, stats.

#include "drawkit/canonical_drawings.hpp"
#include "drawkit/hampath.hpp"
#include "drawkit/io.hpp"
#include "drawkit/oracle.hpp"
#include "drawkit/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <numeric>
#include <random>

using namespace drawkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitAbsent = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string out;
    std::string engine = "auto";
    int jobs = 1;
};

/// JSON goes to --out when given, else to stdout; status lines then go to the other stream.
class Output {
public:
    explicit Output(const Options& o) : path_(o.out) {}

    void document(const Json& j) const {
        if (path_.empty()) std::cout << j.dump(2) << "\n";
        else write_text_file(path_, j.dump(2) + "\n");
    }
    void text(const std::string& body) const {
        if (path_.empty()) std::cout << body;
        else write_text_file(path_, body);
    }
    std::ostream& status() const { return path_.empty() ? std::cerr : std::cout; }

private:
    std::string path_;
};

/// A model read from an envelope.
struct Model {
    std::string kind;
    Json payload;
};

Model load(const std::string& path) {
    auto [kind, payload] = open_envelope(read_json_file(path));
    return {kind, payload};
}

TwoPageDrawing two_page_of(const Json& p) {
    return two_page(p.at("n").get<int>(), p.at("spine").get<std::vector<Vertex>>(), p.at("pages").get<std::vector<int>>());
}

CrossingSet crossings_of(const Model& m) {
    if (m.kind == "crossing_set") return crossing_set_from_json(m.payload);
    if (m.kind == "rotation_system") return crossings_from_rotation(rotation_system_from_json(m.payload));
    if (m.kind == "points") return segment_crossings(points_from_json(m.payload));
    if (m.kind == "linear_wiring") return crossing_set(linear_wiring_from_json(m.payload));
    if (m.kind == "xbounded") return predicted_crossings(xbounded_from_json(m.payload));
    if (m.kind == "circular_wiring") return crossing_set(circular_wiring_from_json(m.payload));
    if (m.kind == "cylindrical") return crossing_set(cylindrical_from_json(m.payload));
    if (m.kind == "two_page") return two_page_of(m.payload).crossings;
    throw Error(Errc::Parse, "unknown model kind '" + m.kind + "'");
}

std::string family_of(const Model& m) {
    return m.kind == "crossing_set" && m.payload.contains("family") ? m.payload.at("family").get<std::string>() : "";
}

/// An x-monotone wiring of the model; wiring vertex i is original vertex original_of[i-1].
struct LinearView {
    LinearWiring wiring;
    std::vector<Vertex> original_of;
};

std::optional<LinearView> linear_view(const Model& m) {
    auto identity = [](int n) {
        std::vector<Vertex> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 1);
        return id;
    };
    if (m.kind == "linear_wiring") {
        LinearWiring lw = linear_wiring_from_json(m.payload);
        const int n = lw.n;
        return LinearView{std::move(lw), identity(n)};
    }
    if (m.kind == "xbounded") {
        LinearWiring lw = to_x_monotone(xbounded_from_json(m.payload));
        const int n = lw.n;
        return LinearView{std::move(lw), identity(n)};
    }
    if (m.kind == "two_page") {
        TwoPageDrawing tp = two_page_of(m.payload);
        return LinearView{std::move(tp.wiring), tp.spine};
    }
    if (m.kind == "points") {
        const PointSet ps = points_from_json(m.payload);
        check_general_position(ps);
        std::vector<Vertex> order = identity(static_cast<int>(ps.size()));
        std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
            return ps[static_cast<std::size_t>(x - 1)].x < ps[static_cast<std::size_t>(y - 1)].x;
        });
        PointSet sorted;
        for (Vertex v : order) sorted.push_back(ps[static_cast<std::size_t>(v - 1)]);
        return LinearView{wiring_from_points(sorted), order};
    }
    if (family_of(m) == "convex") {
        const int n = m.payload.at("n").get<int>();
        return LinearView{convex(n).wiring, identity(n)};
    }
    return std::nullopt;
}

std::vector<Vertex> inverse(const std::vector<Vertex>& original_of) {
    std::vector<Vertex> pos(original_of.size() + 1);
    for (std::size_t i = 0; i < original_of.size(); ++i) pos[static_cast<std::size_t>(original_of[i])] = static_cast<Vertex>(i + 1);
    return pos;
}

std::string auto_engine(const Model& m) {
    if (m.kind == "cylindrical") return "cylindrical";
    if (m.kind == "circular_wiring") return "strongcmon";
    if (family_of(m) == "twisted") return "twisted";
    if (linear_view(m)) return "xmono";
    return "oracle";
}

/// Returns the exit code.
int run_path(const Options& o, const std::string& in, Vertex a, Vertex b) {
    const Output out(o);
    const Model m = load(in);
    const CrossingSet cs = crossings_of(m);
    const std::string engine = o.engine == "auto" ? auto_engine(m) : o.engine;

    std::optional<VertexPath> p;
    if (engine == "xmono") {
        const auto view = linear_view(m);
        if (!view) throw Error(Errc::InvalidArgument, "engine xmono needs an x-monotone model, not '" + m.kind + "'");
        const auto pos = inverse(view->original_of);
        p = path_x_monotone(view->wiring, pos.at(static_cast<std::size_t>(a)), pos.at(static_cast<std::size_t>(b)));
        for (Vertex& v : *p) v = view->original_of[static_cast<std::size_t>(v - 1)];
    } else if (engine == "strongcmon") {
        CircularWiring cw;
        if (m.kind == "circular_wiring") cw = circular_wiring_from_json(m.payload);
        else if (m.kind == "cylindrical") cw = to_strongly_c_monotone(cylindrical_from_json(m.payload));
        else throw Error(Errc::InvalidArgument, "engine strongcmon needs a circular wiring or a strongly cylindrical drawing");
        p = path_strong_c_mon(cw, a, b);
    } else if (engine == "cylindrical") {
        if (m.kind != "cylindrical") throw Error(Errc::InvalidArgument, "engine cylindrical needs a cylindrical drawing");
        p = path_cylindrical(cylindrical_from_json(m.payload), a, b);
    } else if (engine == "twisted") {
        if (cs.n() < 3 || cs != twisted(cs.n())) throw Error(Errc::InvalidArgument, "engine twisted needs the twisted drawing's crossings");
        p = path_twisted(cs.n(), a, b);
    } else if (engine == "oracle") {
        p = find_cf_ham_path(cs, a, b);
    } else {
        throw CLI::ValidationError("--engine", "unknown engine '" + engine + "'");
    }

    const std::string label = std::to_string(a) + ".." + std::to_string(b);
    if (!p) {
        out.status() << "NO CROSSING-FREE HAMILTONIAN PATH " << label << "\n";
        return kExitAbsent;
    }
    Json payload = path_to_json(*p);
    payload["n"] = cs.n();
    payload["engine"] = engine;
    out.document(envelope("path", payload));
    const bool ok = is_hamiltonian(cs.n(), *p) && p->front() == a && p->back() == b && is_crossing_free(cs, *p);
    out.status() << "HAMILTONIAN CROSSING-FREE " << label << ": " << (ok ? "OK" : "FAIL") << "\n";
    return ok ? kExitOk : kExitFailed;
}

int run_gen(const Options& o, const std::string& kind, int n, bool strong) {
    const Output out(o);
    if (n < 2) throw CLI::ValidationError("n", "n must be at least 2");
    if (n > size_cap(64)) throw Error(Errc::TooLarge, "n above the size cap");
    if (kind == "convex" || kind == "twisted") {
        Json payload = to_json(kind == "convex" ? convex(n).crossings : twisted(n));
        payload["family"] = kind;
        out.document(envelope("crossing_set", payload));
    } else if (kind == "hill") {
        out.document(envelope("cylindrical", to_json(hill(n))));
    } else if (kind == "two-page") {
        std::vector<Vertex> spine(static_cast<std::size_t>(n));
        std::iota(spine.begin(), spine.end(), 1);
        std::vector<int> pages;
        if (n == 8 && !o.seed_given) {
            pages = two_page_k8_pages();
        } else {
            std::mt19937_64 rng(o.seed);
            for (int i = 0; i < edge_count(n); ++i) pages.push_back(std::uniform_int_distribution<int>(0, 1)(rng));
        }
        out.document(envelope("two_page", {{"n", n}, {"spine", spine}, {"pages", pages}}));
    } else if (kind == "points") {
        out.document(envelope("points", to_json(random_points(n, o.seed))));
    } else if (kind == "random-cyl") {
        out.document(envelope("cylindrical", to_json(random_cylindrical(n, o.seed, strong))));
    } else if (kind == "random-xmono") {
        out.document(envelope("linear_wiring", to_json(random_x_monotone(n, o.seed))));
    } else {
        throw CLI::ValidationError("kind", "unknown generator '" + kind + "'");
    }
    return kExitOk;
}

int run_verify(const Options& o, const std::string& target) {
    const Output out(o);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(target.data(), target.data() + target.size(), n);
    VerificationReport r;
    bool snapshot_ok = true;
    if (ec == std::errc() && ptr == target.data() + target.size()) {
        r = verify_enumeration(n, o.jobs);
        if (n == 6) {
            snapshot_ok = r.classes == kK6ClassSnapshot;
            out.status() << "class count " << r.classes << " vs snapshot " << kK6ClassSnapshot << ": "
                         << (snapshot_ok ? "match" : "MISMATCH") << "\n";
        }
    } else {
        const CrossingSet cs = crossings_of(load(target));
        r.n = cs.n();
        r.classes = 1;
        if (cs.n() >= 3 && !find_cf_ham_cycle(cs)) {
            r.conj1_ok = false;
            r.failures.push_back({cs, "cycle"});
        }
        for (Vertex a = 1; a <= cs.n(); ++a)
            for (Vertex b = a + 1; b <= cs.n(); ++b)
                if (!find_cf_ham_path(cs, a, b)) {
                    r.conj2_ok = false;
                    r.failures.push_back({cs, "path " + std::to_string(a) + "-" + std::to_string(b)});
                }
    }
    out.document(envelope("report", to_json(r)));
    const bool ok = r.failures.empty() && snapshot_ok;
    out.status() << "n=" << r.n << " classes=" << r.classes << " conj1 " << (r.conj1_ok ? "ok" : "FAILED") << " conj2 "
                 << (r.conj2_ok ? "ok" : "FAILED") << "\n";
    return ok ? kExitOk : kExitFailed;
}

int run_convert(const Options& o, const std::string& in, const std::string& target) {
    const Output out(o);
    const Model m = load(in);
    const CrossingSet before = crossings_of(m);
    Model result;
    bool star_ok = true;

    if (target == "xmono") {
        const auto view = linear_view(m);
        if (!view) throw Error(Errc::InvalidArgument, "cannot convert '" + m.kind + "' to an x-monotone wiring");
        // the wiring numbers vertices left to right; compare on the original labels
        const bool preserved = crossing_set(view->wiring).relabeled(view->original_of) == before;
        out.document(envelope("linear_wiring", to_json(view->wiring)));
        out.status() << "crossing set preserved: " << (preserved ? "yes" : "no") << "\n";
        if (m.kind == "xbounded") out.status() << "vertex order preserved: yes\n";
        return preserved ? kExitOk : kExitFailed;
    }
    if (target == "xbounded") {
        if (m.kind != "linear_wiring") throw Error(Errc::InvalidArgument, "xbounded needs a linear wiring");
        const XBoundedData xb = extract_xbounded(linear_wiring_from_json(m.payload));
        result = {"xbounded", to_json(xb)};
    } else if (target == "normalized" || target == "despiraled" || target == "cmon" || target == "strongcmon") {
        if (m.kind != "cylindrical") throw Error(Errc::InvalidArgument, target + " needs a cylindrical drawing");
        const CylindricalDrawing cd = cylindrical_from_json(m.payload);
        if (target == "normalized") {
            result = {"cylindrical", to_json(normalize_winding(cd))};
        } else if (target == "despiraled") {
            result = {"cylindrical", to_json(remove_double_spirals(normalize_winding(cd)))};
        } else if (target == "cmon") {
            result = {"circular_wiring", to_json(to_circular_wiring(remove_double_spirals(normalize_winding(cd))))};
        } else {
            const CircularWiring cw = to_strongly_c_monotone(cd);
            star_ok = is_strongly_c_monotone(cw);
            result = {"circular_wiring", to_json(cw)};
        }
    } else if (target == "crossings") {
        result = {"crossing_set", to_json(before)};
    } else {
        throw CLI::ValidationError("--to", "unknown target '" + target + "'");
    }

    const bool preserved = crossings_of(result) == before;
    out.document(envelope(result.kind, result.payload));
    out.status() << "crossing set preserved: " << (preserved ? "yes" : "no") << "\n";
    if (target == "strongcmon") out.status() << "star check: " << (star_ok ? "pass" : "FAIL") << "\n";
    return preserved && star_ok ? kExitOk : kExitFailed;
}

std::optional<VertexPath> parse_highlight(const std::string& text, bool& closed) {
    if (text.empty()) return std::nullopt;
    if (text.find_first_not_of("0123456789, ") == std::string::npos) {
        VertexPath p;
        std::size_t i = 0;
        while (i < text.size()) {
            const std::size_t j = text.find(',', i);
            p.push_back(std::stoi(text.substr(i, j - i)));
            if (j == std::string::npos) break;
            i = j + 1;
        }
        return p;
    }
    const Json doc = read_json_file(text);
    const Json& body = doc.contains("payload") ? doc.at("payload") : doc;
    closed = body.is_object() && body.value("closed", false);
    return path_from_json(body);
}

int run_render(const Options& o, const std::string& in, int size, const std::string& highlight) {
    const Output out(o);
    const Model m = load(in);
    RenderSpec spec;
    spec.size = size;
    spec.highlight = parse_highlight(highlight, spec.highlight_closed);

    if (m.kind == "circular_wiring") {
        out.text(render_svg(circular_wiring_from_json(m.payload), spec));
    } else if (m.kind == "cylindrical") {
        out.text(render_svg(cylindrical_from_json(m.payload), spec));
    } else if (auto view = linear_view(m)) {
        const auto pos = inverse(view->original_of);
        if (spec.highlight)
            for (Vertex& v : *spec.highlight) v = pos.at(static_cast<std::size_t>(v));
        spec.labels = view->original_of;
        out.text(render_svg(view->wiring, spec));
    } else {
        throw Error(Errc::UnrenderableModel, "no drawing model for '" + m.kind + "'");
    }
    return kExitOk;
}

int run_stats(const Options& o, const std::string& in) {
    const Output out(o);
    const Model m = load(in);
    const CrossingSet cs = crossings_of(m);
    int crossed = 0;
    for (const Edge& e : all_edges(cs.n())) crossed += cs.is_crossed(e) ? 1 : 0;
    Json s = {{"kind", m.kind},
              {"n", cs.n()},
              {"crossings", cs.size()},
              {"crossed_edges", crossed},
              {"uncrossed_edges", edge_count(cs.n()) - crossed}};
    if (cs.n() == 5) {
        const auto& refs = k5_reference_forms();
        const auto it = std::find(refs.begin(), refs.end(), canonical_crossing_form(cs));
        s["k5_class"] = it == refs.end() ? Json(nullptr) : Json(it - refs.begin());
    }
    if (m.kind == "cylindrical") {
        const CylindricalDrawing cd = cylindrical_from_json(m.payload);
        s["strongly_cylindrical"] = is_strongly_cylindrical(cd);
        s["double_spirals"] = find_double_spirals(normalize_winding(cd)).size();
        const RimReport rim = uncrossed_rim_edges(cd);
        s["crossed_rim_edges"] = rim.outer.crossed.size() + rim.inner.crossed.size();
    }
    if (m.kind == "circular_wiring") s["strongly_c_monotone"] = is_strongly_c_monotone(circular_wiring_from_json(m.payload));
    out.document(envelope("stats", s));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"drawkit: simple drawings of complete graphs"};
    app.require_subcommand(1);
    Options o;
    auto* seed = app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_option("--out", o.out, "output file (default: stdout)");
    app.add_option("--engine", o.engine, "auto, xmono, strongcmon, cylindrical, twisted or oracle")->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber)->capture_default_str();

    std::string kind, in, target, highlight;
    int n = 0, a = 0, b = 0, size = 600;
    bool strong = false;

    auto* gen = app.add_subcommand("gen", "generate a drawing");
    gen->add_option("kind", kind, "convex, twisted, hill, two-page, points, random-cyl, random-xmono")->required();
    gen->add_option("n", n, "number of vertices")->required();
    gen->add_flag("--strong", strong, "random-cyl: home-face circle edges only");

    auto* path = app.add_subcommand("path", "crossing-free Hamiltonian path between two vertices");
    path->add_option("in", in)->required()->check(CLI::ExistingFile);
    path->add_option("a", a)->required();
    path->add_option("b", b)->required();

    auto* verify = app.add_subcommand("verify", "check both conjectures for all classes of K_n or one drawing");
    verify->add_option("target", target, "n or a model file")->required();

    auto* convert = app.add_subcommand("convert", "convert between drawing models");
    convert->add_option("in", in)->required()->check(CLI::ExistingFile);
    convert->add_option("--to", target, "xmono, xbounded, normalized, despiraled, cmon, strongcmon, crossings")->required();

    auto* render = app.add_subcommand("render", "SVG picture of a drawing");
    render->add_option("in", in)->required()->check(CLI::ExistingFile);
    render->add_option("--size", size, "canvas size in pixels")->check(CLI::Range(100, 20000))->capture_default_str();
    render->add_option("--highlight", highlight, "path as 1,2,3 or a path JSON file");

    auto* stats = app.add_subcommand("stats", "crossing statistics of a drawing");
    stats->add_option("in", in)->required()->check(CLI::ExistingFile);

    // global options are accepted after the subcommand too
    for (auto* sub : {gen, path, verify, convert, render, stats}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    o.seed_given = seed->count() > 0;
    try {
        if (*gen) return run_gen(o, kind, n, strong);
        if (*path) return run_path(o, in, a, b);
        if (*verify) return run_verify(o, target);
        if (*convert) return run_convert(o, in, target);
        if (*render) return run_render(o, in, size, highlight);
        if (*stats) return run_stats(o, in);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::Parse || e.code() == Errc::InvalidArgument ? kExitUsage : kExitFailed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range&) {
        std::cerr << "error: vertex out of range\n";
        return kExitUsage;
    }
    return kExitUsage;
}
