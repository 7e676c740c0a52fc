#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "encap/complement.hpp"
#include "encap/geom.hpp"

namespace encap {

/// Parses the line-oriented scene format:
///   dim <d>
///   body <name>
///   piece
///   <lt|le|eq> <a_1> ... <a_d> <b>     (a . x rel b)
/// `#` starts a comment. Errors are InputError with "line N:" prefixes.
Scene parse_scene(std::string_view text);
Scene read_scene_file(const std::string& path);

/// Canonical text: rationals in lowest terms, one constraint per line.
std::string write_scene(const Scene& scene);

struct Viewport {
    Rational x0, y0, x1, y1;
};

/// SVG of a planar scene: pieces clipped to the viewport, ordinary points
/// of the cover as hollow circles, ordinary lines dashed.
std::string render_svg(const Scene& scene, const std::optional<StrongCover>& cover, const Viewport& view);

}  // namespace encap
