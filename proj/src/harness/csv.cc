#include "prophet/harness/csv.h"

#include <cstdio>
#include <fstream>
#include <limits>
#include <system_error>

namespace prophet::harness {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void write_replications(std::ostream& out, const std::vector<RegretReport>& reports) {
  out << kReplicationHeader << '\n';
  for (const auto& report : reports) {
    for (const auto& r : report.records) {
      out << report.instance << ',' << report.policy << ',' << report.k << ',' << r.rep << ',' << r.seed << ','
          << format_number(r.v_off) << ',' << format_number(r.v_on) << ',' << format_number(r.regret) << ','
          << r.disagreements << ',' << r.forced_rejects << '\n';
    }
  }
}

void write_aggregate(std::ostream& out, const std::vector<RegretReport>& reports,
                     const std::map<std::string, double>& slopes) {
  out << kAggregateHeader << '\n';
  for (const auto& report : reports) {
    const auto it = slopes.find(report.policy);
    const double slope = it == slopes.end() ? std::numeric_limits<double>::quiet_NaN() : it->second;
    out << report.instance << ',' << report.policy << ',' << report.k << ',' << format_number(report.mean_regret)
        << ',' << format_number(report.stderr_regret) << ',' << format_number(report.ci90_lo) << ','
        << format_number(report.ci90_hi) << ',' << format_number(slope) << '\n';
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into " + path.string() + ": " + ec.message());
  }
}

}  // namespace prophet::harness
