#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "prophet/harness/replication.h"

namespace prophet::harness {

inline constexpr const char* kReplicationHeader =
    "instance,policy,k,rep,seed,v_off,v_on,regret,disagreements,forced_rejects";
inline constexpr const char* kAggregateHeader = "instance,policy,k,mean_regret,stderr,ci90_lo,ci90_hi,slope_loglog";

// "%.10g"
std::string format_number(double value);

void write_replications(std::ostream& out, const std::vector<RegretReport>& reports);

// `slopes` maps policy name to its sweep slope; missing entries print NaN.
void write_aggregate(std::ostream& out, const std::vector<RegretReport>& reports,
                     const std::map<std::string, double>& slopes = {});

// Writes to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace prophet::harness
