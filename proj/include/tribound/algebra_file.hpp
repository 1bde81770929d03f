#pragma once

#include <string>

#include "tribound/algebra.hpp"

namespace tribound {

// Structured text format for user-supplied presentations:
//
//   # comment (runs to end of line)
//   name <string>
//   field <label>              (optional, default "custom")
//   gen degree=<int> height=<int>
//
// Blank lines are ignored, keys are case-sensitive, the order is fixed:
// name, then field, then the gen lines.  Integers are plain decimal with no
// sign.  Throws ParseError / DuplicateKeyError with 1-based line and column,
// and propagates InvalidGeneratorError from validation.
GradedPresentation parse_algebra_file(const std::string& text);

// Canonical rendering of a presentation in the same format;
// parse_algebra_file(render_algebra_file(p)) == p for normalized p.
std::string render_algebra_file(const GradedPresentation& pres);

}  // namespace tribound
