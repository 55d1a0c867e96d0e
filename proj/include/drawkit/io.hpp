#ifndef DRAWKIT_IO_HPP
#define DRAWKIT_IO_HPP

#include "drawkit/circular.hpp"
#include "drawkit/crossing_set.hpp"
#include "drawkit/cylindrical.hpp"
#include "drawkit/hampath.hpp"
#include "drawkit/monotone.hpp"
#include "drawkit/oracle.hpp"
#include "drawkit/points.hpp"
#include "drawkit/rotation.hpp"

#include <json.hpp>

#include <string>

namespace drawkit {

using Json = nlohmann::json;

// Every reader throws Error(Parse) on malformed input and lets model validation errors through.

Json to_json(const CrossingSet& cs);
CrossingSet crossing_set_from_json(const Json& j);

Json to_json(const RotationSystem& rs);
RotationSystem rotation_system_from_json(const Json& j);

Json to_json(const PointSet& ps);
PointSet points_from_json(const Json& j);

Json to_json(const LinearWiring& lw);
LinearWiring linear_wiring_from_json(const Json& j);

Json to_json(const XBoundedData& xb);
XBoundedData xbounded_from_json(const Json& j);

Json to_json(const CircularWiring& cw);
CircularWiring circular_wiring_from_json(const Json& j);

Json to_json(const CylindricalDrawing& cd);
CylindricalDrawing cylindrical_from_json(const Json& j);

Json path_to_json(const VertexPath& p, bool closed = false);
VertexPath path_from_json(const Json& j);

Json to_json(const VerificationReport& r);

/// {"kind": kind, "payload": payload}
Json envelope(const std::string& kind, Json payload);

/// Splits an envelope; throws Parse when `kind` or `payload` is missing.
std::pair<std::string, Json> open_envelope(const Json& doc);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace drawkit

#endif
