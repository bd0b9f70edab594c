#include "polyenum/json_io.hpp"

#include "polyenum/error.hpp"

namespace polyenum {

nlohmann::json matrixToJson(const BinaryMatrix& m) {
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"bits", m.topRows()}};
}

BinaryMatrix matrixFromJson(const nlohmann::json& j) {
  try {
    BinaryMatrix m = BinaryMatrix::fromTopRows(j.at("bits").get<std::vector<std::string>>());
    if (j.contains("rows") && j.at("rows").get<int>() != m.rows()) throw Error(Errc::ParseError, "row count mismatch");
    if (j.contains("cols") && j.at("cols").get<int>() != m.cols()) throw Error(Errc::ParseError, "column count mismatch");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

nlohmann::json decompositionToJson(const Decomposition& d) {
  return nlohmann::json{{"k", d.k}, {"alpha", d.alpha}, {"beta", d.beta}};
}

Decomposition decompositionFromJson(const nlohmann::json& j) {
  try {
    Decomposition d;
    d.k = j.at("k").get<int>();
    d.alpha = j.at("alpha").get<std::vector<std::string>>();
    d.beta = j.at("beta").get<std::vector<std::string>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

nlohmann::json treeToJson(const PlantedPlaneTree& t) {
  std::vector<std::string> labels;
  for (TreeLabel l : t.preorderLabels()) labels.push_back(l.toString());
  return nlohmann::json{{"tree", t.toParens()}, {"labels", labels}};
}

PlantedPlaneTree treeFromJson(const nlohmann::json& j) {
  std::string word;
  std::vector<std::string> labels;
  try {
    word = j.at("tree").get<std::string>();
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  PlantedPlaneTree t = PlantedPlaneTree::fromParens(word);
  if (j.contains("labels")) {
    const auto expected = t.preorderLabels();
    if (labels.size() != expected.size()) throw Error(Errc::MalformedTree, "one label per node expected");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (TreeLabel::parse(labels[i]) != expected[i])
        throw Error(Errc::MalformedTree, "node " + std::to_string(i) + " should be labeled " + expected[i].toString());
  }
  return t;
}

}  // namespace polyenum
