#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "chull/curve.hpp"

namespace chull {

/// Contents of a curve spec file. "trigonometric" and "binary_forms" specs
/// become a ProjectiveCurve; "quadric_pencil" stays a pencil.
struct CurveSpec {
  std::variant<ProjectiveCurve, QuadricPencilSpec> value;

  bool is_pencil() const { return std::holds_alternative<QuadricPencilSpec>(value); }
  const ProjectiveCurve& curve() const;
  const QuadricPencilSpec& pencil() const;
};

/// Throws ParseError with line and column for malformed JSON or fields, and
/// the curve errors for invalid content.
CurveSpec parse_spec(std::string_view json_text);
CurveSpec load_spec(const std::string& path);

/// Reads a file whole; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

/// Polynomial text of a file with surrounding whitespace removed.
Polynomial load_polynomial(const RingPtr& ring, const std::string& path);

}  // namespace chull
