#pragma once

#include <string>

#include "linfx/types.hpp"

namespace linfx {

/// On-disk instance: {"kind":"prop1"|"basis","n":int,"N":int,"gamma":float,
/// "rows":[[float,...],...],"sigma_prime":[int,...]?}.  Indices 0-based.
struct Instance {
  std::string kind;  // "prop1" | "basis"
  double gamma = 0.0;
  Matrix rows;
  std::vector<int> sigma_prime;  // basis kind only
};

ordered_json to_json(const Instance& inst);
Instance instance_from_json(const ordered_json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

FrameMatrix to_frame(const Instance& inst);        // kind == "prop1"
SignedBasisMatrix to_basis(const Instance& inst);  // kind == "basis"
Instance from_frame(const FrameMatrix& frame);
Instance from_basis(const SignedBasisMatrix& basis);

}  // namespace linfx
