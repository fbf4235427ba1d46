#pragma once

#include <json.hpp>

#include "algdeg/degen.hpp"
#include "algdeg/modspan.hpp"

namespace algdeg {

using Json = nlohmann::json;

// Wire formats, stable and deterministic:
//   field:  {"type":"Q"} | {"type":"Fp","p":5}
//   scalar: "num/den" over Q (no "/1"), the residue over F_p
//   vector: {"n":3,"field":{...},"entries":[{"i":1,"j":2,"k":3,"value":"1"},...]}
//           sparse, ordered by flat position, zeros omitted
//   basis change: {"n":2,"field":{...},"rows":[["1","0"],["1","1"]]}

Json json_of(const FieldSpec& fs);
FieldSpec field_from_json(const Json& j);

Json json_of(const StructureVector& v);
StructureVector structure_vector_from_json(const Json& j);

Json json_of(const BasisChange& g);
BasisChange basis_change_from_json(const Json& j);

Json json_of(const WeightVector& q);
WeightVector weight_vector_from_json(const Json& j);

Json json_of(const DegenerationVerdict& v);
Json json_of(const ClassificationLabel& l);
Json json_of(const SubspaceBasis& s);
Json json_of(const CompositionReport& r);
Json json_of(const InvariantProfile& p, const StructureVector& v);

} // namespace algdeg
