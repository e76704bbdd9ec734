#pragma once

#include <string>

#include <json.hpp>

#include "measkit/lebint.hpp"
#include "measkit/product.hpp"

namespace measkit {

using Json = nlohmann::ordered_json;

// All readers throw ParseError on malformed input.
Json parse_document(const std::string& text);

XReal read_xreal(const Json& j);
Rational read_rational(const Json& j);
// An integer size or an array of labels.
FiniteUniverse read_universe(const Json& j);
// {"universe": ..., "sigma": [[labels]...]} or "generators" instead of
// "sigma"; the power set when neither is given.
MeasurableSpace read_finite_space(const Json& j);
Mask read_mask(const FiniteUniverse& u, const Json& j);
SubsetFamily read_family(const FiniteUniverse& u, const Json& j);
// An interval string or an array of them.
IntervalSet read_interval_set(const Json& j);
// {"boxes": [[xset, yset], ...]}
BoxSet read_box_set(const Json& j);
MeasurableSet read_set(const MeasurableSpace& space, const Json& j);
Point read_point(const MeasurableSpace& space, const Json& j);
Measure read_measure(const Json& j);
// Function descriptors are read in the space of the measure they are
// integrated against: "map" needs a finite space, "step" supports are sets
// of that space, "pwl" lives on the line and "grid" on the plane.
MeasurableFn read_function(const Json& j, const MeasurableSpace& space);
StepFn2D read_grid(const Json& j);

Json write_xreal(const XReal& x);

}  // namespace measkit
