#pragma once

#include "evidence/bias.hpp"
#include "evidence/e_process.hpp"
#include "evidence/relative_belief.hpp"

#include <string>

namespace evidence {

// Flat JSON objects with snake_case keys. Interval sets are [[lo, hi], ...];
// non-finite reals are written as null.
std::string to_json(const EvidenceReport& report);
std::string to_json(const BiasReport& report);
std::string to_json(const BiasE& result);
std::string to_json(const SequentialResult& result);

}  // namespace evidence
