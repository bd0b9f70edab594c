#pragma once

#include <json.hpp>

#include "polyenum/binary_matrix.hpp"
#include "polyenum/kparallel.hpp"
#include "polyenum/trees.hpp"

namespace polyenum {

// {"rows":r,"cols":c,"bits":["<top row>",...,"<bottom row>"]}
nlohmann::json matrixToJson(const BinaryMatrix& m);
BinaryMatrix matrixFromJson(const nlohmann::json& j);

// {"k":k,"alpha":["ee",...],"beta":["nn",...]}; parsing checks only the
// shape, not the decomposition constraints.
nlohmann::json decompositionToJson(const Decomposition& d);
Decomposition decompositionFromJson(const nlohmann::json& j);

// {"tree":"(()())","labels":["1","1'","2"]} with labels in preorder. The
// labels are optional when parsing; if given they must be the canonical
// ones (MalformedTree otherwise).
nlohmann::json treeToJson(const PlantedPlaneTree& t);
PlantedPlaneTree treeFromJson(const nlohmann::json& j);

}  // namespace polyenum
