#pragma once

#include <memory>
#include <string>
#include <vector>

#include "prophet/policies/policy.h"

namespace prophet::policies {

struct PolicyOptions {
  int oracle_samples = 50;
  double irt_band = 0.25;
};

// bayes, rr, sr, irt, competitive, marginal, bayes-mc, bayes-mcl.
const std::vector<std::string>& policy_names();

// Builds a prototype for `instance`; throws ConfigError for unknown names
// or a policy that does not apply to the instance kind.
std::unique_ptr<Policy> make_policy(const std::string& name, const AllocationInstance& instance,
                                    const PolicyOptions& options = {});

}  // namespace prophet::policies
