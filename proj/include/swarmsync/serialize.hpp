#pragma once

#include <json.hpp>

#include "swarmsync/analysis.hpp"
#include "swarmsync/dynamics.hpp"

namespace swarmsync {

// Angles are emitted in radians with a *_deg companion.

nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const ReachabilityReport& r);
nlohmann::json to_json(const PerturbationBounds& b);
nlohmann::json to_json(const CriticalPointConfig& c);
nlohmann::json to_json(const AngleInterval& i);
nlohmann::json to_json(const RotatedFrame& f);

}  // namespace swarmsync
