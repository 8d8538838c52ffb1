#pragma once

// JSON form of a profile:
//   { "n": 3, "r": 2, "betti": [1, 1, 1, 1],
//     "filtration": [["1111"], ["1111", "1100"], ["1100", "1010", "1001"]] }
// Each V_i may be given by any spanning set; output is canonical (RREF rows in
// ascending lexicographic order).

#include <filesystem>
#include <string>

#include "json.hpp"
#include "z2ring/cohomology.hpp"

namespace z2ring {

/// Throws ParseError on malformed documents. Does not validate the profile.
CohomProfile profile_from_json(const nlohmann::json& doc);
nlohmann::json profile_to_json(const CohomProfile& p);

CohomProfile load_profile(const std::filesystem::path& path);

}  // namespace z2ring
