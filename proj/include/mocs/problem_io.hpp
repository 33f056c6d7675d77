#pragma once

#include <string>
#include <string_view>

#include "mocs/problem.hpp"

namespace mocs {

/// Reads the line-oriented problem format:
///
///     variables
///       y1 : interval 0 1
///       y2 : set 0, 0.5, 1
///     objectives
///       F1 : max : y1 + y2
///     constraints
///       y1 + y2 <= 1
///
/// Blank lines and `#` comments are ignored; section headers may carry a
/// trailing colon. Errors are ParseError with 1-based line and 0-based
/// column. InvalidInput from the Problem constructor is rethrown as a
/// ParseError on line 0.
Problem parse_problem(std::string_view text);

/// Reads a problem file; a missing file is reported as a ParseError.
Problem load_problem(const std::string& path);

/// Renders `p` in the format accepted by parse_problem. Numbers use the
/// shortest exact decimal form, so parse_problem(format_problem(p)) is
/// semantically identical to `p`.
std::string format_problem(const Problem& p);

}  // namespace mocs
