#pragma once

// JSON renderings of the domain types, shared by the CLI and the tests.
// Element format: {"n":3,"terms":[{"x":"101","re":"3/2","im":"0"}]} with x as
// an n-character bit string, coordinate 1 leftmost, terms ascending by mask.

#include <nlohmann/json.hpp>

#include "zee2/algebra.hpp"
#include "zee2/gf2.hpp"
#include "zee2/hurwitz.hpp"
#include "zee2/twist.hpp"

namespace zee2 {

using Json = nlohmann::ordered_json;

Json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const Json& j);

Json twist_to_json(const TwistSpec& spec);

/// Map file format: {"n":3,"rows":["100","110","111"]}; row i is the image
/// mask of the matrix row i, coordinate 1 leftmost.
Gl2Map map_from_json(const Json& j);

Json hr_instance_to_json(const HrInstance& inst, const HrVerification& v);
std::string hr_instance_to_text(const HrInstance& inst);

}  // namespace zee2
