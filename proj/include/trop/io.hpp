#pragma once

#include <optional>
#include <string>

#include "trop/classify.hpp"

namespace trop {
namespace io {

struct ParseError {
    std::string message;
    int line = 0; // 1-based; 0 when not applicable
    int column = 0;
    std::string str() const;
};

struct MatrixParse {
    std::optional<Matrix4> matrix;
    std::optional<ParseError> error;
};

/// 4 whitespace-separated rows of 4 rationals ("-3", "5/2", "1.5"),
/// '#' comments; or a JSON object {"matrix": [[...]]} when the first
/// non-space character is '{' (entries as numbers or "n/d" strings).
MatrixParse parse_matrix(const std::string& text);

/// Full JSON document for a built body: matrix, hypothesis flags, labeled
/// extremals, facets, edges, vectors, and classification when maximal.
/// Rationals are "n/d" strings throughout.
std::string polytrope_to_json(const Polytrope& p, const ClassVerdict* verdict);

/// Re-reads a polytrope_to_json document and rebuilds the exact structure
/// (used to validate the round trip).
Polytrope polytrope_from_json(const std::string& text);

/// OFF mesh: 20 vertices (12 decimal digits), 12 facet cycles, outward
/// orientation. Refuses (std::invalid_argument) non-maximal bodies.
std::string to_off(const Polytrope& p);

} // namespace io
} // namespace trop
