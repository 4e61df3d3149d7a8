#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "swarmsync/dynamics.hpp"

namespace swarmsync::cli {

/// Shortest decimal text that round-trips the double; "nan"/"inf" otherwise.
std::string format_number(double v);

/// Columns: t, theta_1..N, x_1..N, y_1..N, u_1..N, p_mag, p_psi, U, WL, conserved.
/// Undefined p_psi and absent WL are written as empty fields.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj);

void write_file(const std::filesystem::path& path, const std::string& contents);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace swarmsync::cli
