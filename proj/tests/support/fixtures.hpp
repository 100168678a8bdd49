#pragma once

#include <filesystem>
#include <string>

#include "hilali/model.hpp"

namespace fixtures {

inline std::filesystem::path corpusDir() { return HILALI_CORPUS_DIR; }

inline hilali::Model corpusModel(const std::string& name) {
  return hilali::loadModel(corpusDir() / "models" / (name + ".model"));
}

inline hilali::Element expr(const hilali::Model& m, const std::string& text) {
  return hilali::parseExpression(text, m.universe());
}

}  // namespace fixtures
