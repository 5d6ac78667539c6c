#pragma once

#include "regseq/representation.hpp"

#include "json.hpp"

#include <string>

namespace regseq {

// On-disk format:
//   { "q": 2, "dim": 2,
//     "u": ["1", "0"],
//     "matrices": [[["1","0"],["0","1"]], ...],   // one row-major table per digit
//     "w": ["0", "1"] }
// Scalars are strings "p" or "p/q".
LinearRep rep_from_json(const nlohmann::json& j);
nlohmann::json rep_to_json(const LinearRep& rep);

// Throws std::runtime_error with the file name on I/O or format problems.
LinearRep load_rep(const std::string& path);
void save_rep(const LinearRep& rep, const std::string& path);

}  // namespace regseq
