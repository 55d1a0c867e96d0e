#ifndef DRAWKIT_RENDER_HPP
#define DRAWKIT_RENDER_HPP

#include "drawkit/circular.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/hampath.hpp"
#include "drawkit/monotone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drawkit {

struct RenderSpec {
    int size = 600;  // canvas width and height in pixels, at least 100
    std::vector<std::string> palette{"#4477aa", "#66ccee", "#228833", "#ccbb44", "#ee6677", "#aa3377", "#bbbbbb"};
    std::optional<VertexPath> highlight;
    bool highlight_closed = false;
    std::vector<Vertex> labels;  // shown name of vertex v is labels[v-1]; empty means v
};

// SVG 1.1 documents; coordinates are printed with six decimals. Throw InvalidArgument on a bad RenderSpec.

std::string render_svg(const LinearWiring& lw, const RenderSpec& spec);
std::string render_svg(const CircularWiring& cw, const RenderSpec& spec);
std::string render_svg(const CylindricalDrawing& cd, const RenderSpec& spec);

}  // namespace drawkit

#endif
