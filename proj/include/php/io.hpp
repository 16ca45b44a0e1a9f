#pragma once

#include <string>

#include "json.hpp"
#include "php/core.hpp"
#include "php/designs.hpp"
#include "php/jumps.hpp"

namespace php {

// Family file: {"m":int, "n":int, "functions":[[int,...],...]}
nlohmann::ordered_json family_to_json(const FunctionFamily& family);
FunctionFamily family_from_json(const nlohmann::json& j);

// Witness file: {"forward":{"code":"code"}, "backward":{"code":"code"}},
// all codes as decimal strings.
nlohmann::ordered_json witness_to_json(const ReductionWitness& w);
ReductionWitness witness_from_json(const nlohmann::json& j);

// Design file: {"v":int,"blockSize":int,"lambda":int,"classes":[[[pt,...],...],...]}
nlohmann::ordered_json design_to_json(const ResolvableDesign& d);
ResolvableDesign design_from_json(const nlohmann::json& j);

// Latin square file: {"order":int,"grids":[[[int,...],...],...]}
nlohmann::ordered_json mols_to_json(const std::vector<LatinSquare>& squares);
std::vector<LatinSquare> mols_from_json(const nlohmann::json& j);

// Choice tree file: {"k":int,"m":int,"n":int,
//                    "nodes":{"sigma as comma string, empty for root":[colors...]}}
nlohmann::ordered_json cktree_to_json(const CkTree& t);
CkTree cktree_from_json(const nlohmann::json& j);

// AUC witness: family JSON plus a distinguished "g" color list.
nlohmann::ordered_json auc_to_json(const AucWitness& w);
AucWitness auc_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace php
