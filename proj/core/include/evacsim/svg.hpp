#ifndef EVACSIM_SVG_HPP
#define EVACSIM_SVG_HPP

#include <string>
#include <vector>

#include "evacsim/csv.hpp"

namespace evacsim {

/// Standalone survival-curve chart: x = step, y = remaining agents, one
/// polyline per curve, axis labels and a legend of curve labels. Output
/// is byte-deterministic for identical inputs (fixed canvas, fixed
/// palette, fixed number formatting). Requires at least one curve.
std::string render_survival_svg(const std::vector<SurvivalCurve>& curves,
                                const std::string& title);

}  // namespace evacsim

#endif  // EVACSIM_SVG_HPP
