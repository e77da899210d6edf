#pragma once

#include "lieaff/extension.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace lieaff::io {

using nlohmann::json;

// All indices in files are 1-based; rationals are strings ("-3/2", "7").

LieAlgebra algebraFromJson(const json& j);
json algebraToJson(const LieAlgebra& L);

KForm formFromJson(const json& j);
json formToJson(const KForm& f);

LiftData liftDataFromJson(const json& j);
json liftDataToJson(const LiftData& d);

json productToJson(const BilinearProduct& p);
BilinearProduct productFromJson(const json& j);

json vectorToJson(std::span<const Rational> v);
json tupleToJson(const IndexTuple& t);
json defectsToJson(const std::vector<VectorDefect>& d);
json defectsToJson(const std::vector<ScalarDefect>& d);
json contactReportToJson(const ContactReport& r);
json verdictToJson(const Verdict& v);

/// Reads and parses a JSON file; errors name the file, line and column.
json readJsonFile(const std::filesystem::path& path);
void writeJsonFile(const std::filesystem::path& path, const json& j);

LieAlgebra readAlgebra(const std::filesystem::path& path);
KForm readForm(const std::filesystem::path& path);
LiftData readLiftData(const std::filesystem::path& path);

/// Comma-separated rationals, e.g. "1,0,-1/2".
Vector parseRationalList(const std::string& text);

std::string formatVector(std::span<const Rational> v);
std::string formatTuple(const IndexTuple& t);
/// Linear combination in basis names, e.g. "e3 - 1/2 e4"; "0" for the zero vector.
std::string formatCombination(std::span<const Rational> v, const std::vector<std::string>& names);

} // namespace lieaff::io
