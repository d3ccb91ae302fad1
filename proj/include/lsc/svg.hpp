#pragma once

#include <string>

#include "lsc/arrangement.hpp"
#include "lsc/cover_model.hpp"

namespace lsc {

struct SvgOptions {
    double width = 800;   // pixels; height follows the aspect ratio
    double margin = 20;
    bool shade_cells = true;
};

// Segments in black, chosen segments in red, bounded cells shaded and
// rectangular cells hatched. Coordinates are converted to double only here.
std::string render_svg(const Arrangement& arr, const Cover* chosen = nullptr, const SvgOptions& options = {});

}  // namespace lsc
