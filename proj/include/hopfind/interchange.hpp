#pragma once

#include <json.hpp>

#include "hopfind/constructors.hpp"
#include "hopfind/module.hpp"

namespace hopfind {

/*
 * Versioned JSON interchange format. Scalars are exact: a CycNum is the array
 * of its [numerator, denominator] coefficient pairs (length phi(N)); each side
 * is a JSON integer when it fits in 64 bits and a decimal string otherwise.
 * Structure tensors are sparse: mult/comult as [i, j, k, scalar] quadruples,
 * the antipode as [i, j, scalar] triplets, unit/counit as dense arrays.
 */
inline constexpr const char* kAlgebraFormat = "hopfind-algebra";
inline constexpr const char* kModuleFormat = "hopfind-module";
inline constexpr int kFormatVersion = 1;

nlohmann::json cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const CycField& f, const nlohmann::json& j);

nlohmann::json algebra_to_json(const HopfAlgebra& h);
HopfAlgebra algebra_from_json(const nlohmann::json& j);

void save_algebra(const std::string& path, const HopfAlgebra& h);
HopfAlgebra load_algebra(const std::string& path);

nlohmann::json module_to_json(const HModule& v);
HModule module_from_json(const HopfAlgebra& parent, const nlohmann::json& j);
HModule load_module(const HopfAlgebra& parent, const std::string& path);

// Cayley-table group file: {"order": n, "cayley": [[..]], "name": optional}
GroupPresentation group_from_json(const nlohmann::json& j);
GroupPresentation load_group(const std::string& path);

} // namespace hopfind
