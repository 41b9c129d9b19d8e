#pragma once

// JSON documents for the library types. Element encodings are canonical, so
// documents for equal objects are byte-identical.

#include <json.hpp>

#include "freedecomp/incidence.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/simplex.hpp"
#include "freedecomp/simplicial.hpp"

namespace freedecomp {

using Json = nlohmann::ordered_json;

Json to_json(const OrdinalMap& g);
Json to_json(const Composition& c);
// {"truncation", "levels", "faces": {"k": [d_0 table, ...]}, "degeneracies"}
Json to_json(const TruncatedSimplicialSet& x);
Json to_json(const CheckReport& r);
Json to_json(const InertPresheaf& a);
// Arity 2 uses "left"/"right"; other arities use "factors".
Json to_json(const TensorComb& t);
// Only the entries listed in `keep` (all when empty).
Json to_json(const ConvolutionFunction& f, const std::vector<bool>& keep = {});

// Inverses; malformed documents throw ParseError.
OrdinalMap ordinal_map_from_json(const Json& j);
Composition composition_from_json(const Json& j);
TruncatedSimplicialSet simplicial_set_from_json(const Json& j);
CheckReport check_report_from_json(const Json& j);
InertPresheaf presheaf_from_json(const Json& j);
TensorComb tensor_from_json(const Json& j);
ConvolutionFunction convolution_from_json(const Json& j);

}  // namespace freedecomp
