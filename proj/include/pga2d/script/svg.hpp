#pragma once

#include "pga2d/script/evaluator.hpp"

#include <string>

namespace pga2d::script {

// 512x512 SVG of the drawable bindings: euclidean points as dots, euclidean
// lines clipped to the view, ideal points as arrows from the centroid of the
// euclidean points. The view fits the euclidean points with a 10% margin.
// Throws Error("nothing to render") when no binding is drawable.
std::string render_svg(const Environment& env, double tol = kDefaultTolerance);

// render_svg written to `path`; I/O failures throw Error with the OS message.
void write_svg(const Environment& env, const std::string& path, double tol = kDefaultTolerance);

} // namespace pga2d::script
