#pragma once

#include <string>
#include <variant>

#include "gridsvm/logreg.hpp"
#include "gridsvm/svm.hpp"

namespace gridsvm::model_io {

// JSON envelope with a "model_type" tag ("svm" or "logreg"). Doubles are
// emitted with shortest round-trip precision, so reloaded models reproduce
// decision values exactly.
std::string to_json_string(const svm::SvmModel& model);
std::string to_json_string(const logreg::LogRegModel& model);

using AnyModel = std::variant<svm::SvmModel, logreg::LogRegModel>;

AnyModel from_json_string(const std::string& text);

void save_model(const std::string& path, const AnyModel& model);
AnyModel load_model(const std::string& path);

}  // namespace gridsvm::model_io
