#pragma once

#include <iosfwd>
#include <string>

#include "bondagelab/plane_graph.hpp"

namespace bondagelab {

/// Parse the ".plg" text format:
///
///     planegraph <n>
///     v <id>: <neighbor ids, clockwise>
///
/// '#' starts a comment. Structural errors are reported as Error with the
/// build error code and the offending line number in the message.
PlaneGraph read_plg(std::istream& in);
PlaneGraph read_plg_file(const std::string& path);
PlaneGraph parse_plg(const std::string& text);

void write_plg(std::ostream& out, const PlaneGraph& g);
std::string to_plg(const PlaneGraph& g);

}  // namespace bondagelab
