#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drawkit/classes.hpp"
#include "drawkit/density.hpp"
#include "drawkit/drawing.hpp"
#include "drawkit/geometry.hpp"
#include "json.hpp"

namespace drawkit {

struct CheckRequest {
  std::optional<std::string> cls;  // a class name, or "k-planar"
  std::optional<int> k;
  bool simple = false;
  bool non_homotopic = false;
};

struct CheckOutcome {
  std::string name;
  bool holds = false;
  std::string witness;  // empty when the check holds
};

// Runs the requested predicates. RAC classes need the geometry and throw
// PreconditionFailed without it; unknown names throw UnknownClass.
std::vector<CheckOutcome> run_checks(const Drawing& d, const GeomDrawing* geometry, const CheckRequest& request);

nlohmann::json drawing_json(const Drawing& d);
nlohmann::json class_json(const ClassReport& r);
nlohmann::json check_json(const CheckOutcome& c);
nlohmann::json density_json(const DensityEvaluation& e);
nlohmann::json inequality_json(const InequalityReport& r);

std::string drawing_text(const Drawing& d);
std::string class_text(const ClassReport& r);
std::string check_text(const CheckOutcome& c);
std::string density_text(const DensityEvaluation& e);
std::string inequality_text(const InequalityReport& r);

// Straight-line picture of the planarization: one filled path per cell.
std::string export_svg(const Drawing& d);

}  // namespace drawkit
