#pragma once
// JSON files for surfaces and parametrizations. Layout in docs/formats.md.

#include <string>
#include <vector>

#include <json.hpp>

#include "dp5/construct.hpp"
#include "dp5/parametrize.hpp"

namespace dp5::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

const std::vector<std::string>& x_names();  // x0..x5
const std::vector<std::string>& t_names();  // t0..t2

/// {"vars": [...], "terms": [[exponents...], "num/den"], ...} in grevlex order.
json to_json(const MPoly& f, const std::vector<std::string>& vars);
/// Throws InvalidInput if the variables differ from `vars` or a term is malformed.
MPoly multipoly_from_json(const json& j, const std::vector<std::string>& vars);

/// Surface file; `quintics` (forms in t0..t2) is written when non-empty.
json surface_to_json(const DP5Surface& s, const std::vector<MPoly>& quintics = {});
/// Parses and runs the shape and syzygy checks.
DP5Surface surface_from_json(const json& j);

json parametrization_to_json(const Parametrization& p);
Parametrization parametrization_from_json(const json& j);

/// Indented JSON with arrays of scalars kept on one line.
std::string dump(const json& j);

/// Reads a file; malformed JSON becomes InvalidInput naming the byte offset.
json read_file(const std::string& path);

}  // namespace dp5::io
