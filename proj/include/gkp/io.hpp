#pragma once

#include <string>
#include <vector>

#include "gkp/gkp_params.hpp"
#include "gkp/triangle.hpp"

namespace gkp {

/// Row normalization applied on export (per-row divisor), following the
/// conventions used for the OEIS-normalized triangles.
struct Normalization {
    enum class Kind { none, rising, factorial } kind = Kind::none;
    Rat c;         // base of the rising factorial for Kind::rising
    bool abs = false;

    /// Parses "none", "factorial" or "rising:<c>".
    static Normalization parse(const std::string& text, bool abs_flag);

    Rat apply(const Rat& value, long n) const;
};

/// Parses a comma-separated list "a,b,g,a',b',g'" of rationals.
GkpParams parse_params(const std::string& text);

/// CSV: one row per line, entries comma-separated, rationals as "p/q".
std::string triangle_to_csv(const Triangle& tri, const Normalization& norm);

/// JSON object {"params": [...], "n": N, "rows": [["1"], ...]} with every
/// number carried as a string so exactness survives the format.
std::string triangle_to_json(const Triangle& tri, const Normalization& norm);

/// OEIS b-file style: "index value" per line, rows linearized by n then k,
/// indices from 0.
std::string triangle_to_bfile(const Triangle& tri, const Normalization& norm);

std::string triangle_to_format(const Triangle& tri, const std::string& format,
                               const Normalization& norm);

/// Reads a triangle back from CSV text (rows only; params supplied by the
/// caller when needed).
std::vector<std::vector<Rat>> rows_from_csv(const std::string& text);

/// Reads a triangle (params + rows) back from the JSON format above.
Triangle triangle_from_json(const std::string& text);

} // namespace gkp
