#include "swarmsync/cli/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swarmsync::cli {

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj)
{
    const std::size_t n = traj.gains.size();
    out << "t";
    for (const char* prefix : {"theta_", "x_", "y_", "u_"})
        for (std::size_t k = 1; k <= n; ++k) out << ',' << prefix << k;
    out << ",p_mag,p_psi,U,WL,conserved\n";

    for (const auto& s : traj.samples) {
        out << format_number(s.state.t);
        for (double t : s.state.theta) out << ',' << format_number(t);
        for (const auto& r : s.state.positions) out << ',' << format_number(r.real());
        for (const auto& r : s.state.positions) out << ',' << format_number(r.imag());
        for (double u : s.control.u) out << ',' << format_number(u);
        out << ',' << format_number(s.p_mag) << ',';
        if (s.p_psi) out << format_number(*s.p_psi);
        out << ',' << format_number(s.U) << ',';
        if (s.WL) out << format_number(*s.WL);
        out << ',' << format_number(s.conserved) << '\n';
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << contents;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j)
{
    write_file(path, j.dump(2) + "\n");
}

}  // namespace swarmsync::cli
