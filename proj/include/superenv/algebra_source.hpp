#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "superenv/superalgebra.hpp"

namespace superenv {

/// Parses the line-oriented definition format:
///
///     # gl(1,1)
///     generator x even
///     generator y even
///     generator u odd
///     generator v odd
///     bracket [u,v] = x
///     bracket [y,u] = u
///     bracket [y,v] = -v
///
/// Generator lines come first and fix the basis order. Omitted brackets are
/// zero; the rest of the table follows from super antisymmetry. Throws
/// ParseError (with line and column in the message) on malformed input or
/// contradictory entries. The result is not validated.
LieSuperalgebra parse_algebra_file(std::string_view text);

/// Reads and parses a definition file; DomainError if it cannot be read.
LieSuperalgebra load_algebra_file(const std::filesystem::path& path);

/// Inverse of parse_algebra_file: generator lines, then one bracket line per
/// nonzero [b_i, b_j] with i < j, plus nonzero odd squares.
std::string write_algebra_file(const LieSuperalgebra& g);

/// Builtin specs: `gl(m,n)`, `sl(m,n)`, `abelian(p|q)`, joined by `(+)` for
/// direct sums, e.g. `gl(1,1) (+) abelian(2|0)`.
LieSuperalgebra parse_builtin(std::string_view spec);

} // namespace superenv
