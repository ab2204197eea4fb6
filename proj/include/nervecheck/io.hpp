#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nervecheck/cover.hpp"
#include "nervecheck/homology.hpp"
#include "nervecheck/metric.hpp"
#include "nervecheck/nerve_theorem.hpp"

namespace nervecheck::io {

/// All report documents use ordered JSON so output is byte-stable: field
/// order is insertion order, never hash order.
using json = nlohmann::ordered_json;

/// Signals malformed input files or option values; the command line maps it
/// to the input-error exit code.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational from "3/2", "-7", "1.25" (decimal digits only, any sign).
/// Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

/// Complex document: {"name": ..., "maximal_simplices": [["a","b"], ...]}.
/// Vertex labels may be JSON strings or integers (integers are converted to
/// their decimal strings).  The closure of the listed simplices is taken, so
/// any generating set is accepted.  "name" is optional.
SimplicialComplex complex_from_json(const json& doc);
json complex_to_json(const SimplicialComplex& k, const std::string& name);

/// Cover document: {"complex": <inline complex document or path string>,
/// "parts": {"U1": [["a","b"], ...], ...}}.  A relative complex path is
/// resolved against the cover file's directory.  Cover validity (subcomplex
/// and union conditions) is checked by the Cover constructor and surfaces
/// as CoverError.
SimplicialComplex load_complex(const std::string& path);
Cover load_cover(const std::string& path);

/// Points document, plain text, '#' comments and blank lines ignored.  Two
/// shapes are accepted: every line all-rational => coordinate rows (points
/// labeled "0", "1", ... in order); every line starting with a non-numeric
/// token => "<label> d_1 ... d_n" rows of a full distance matrix.
FiniteMetricSpace load_points(const std::string& path);

json group_to_json(const HomologyGroup& g);
json homology_to_json(const std::vector<HomologyGroup>& groups);
json hypothesis_to_json(const HypothesisReport& rep);
json theorem_to_json(const TheoremReport& rep);

}  // namespace nervecheck::io
