#include "prophet/policies/registry.h"

#include "prophet/policies/bayes_selector.h"
#include "prophet/policies/competitive.h"
#include "prophet/policies/fluid_bayes.h"
#include "prophet/policies/marginal_allocation.h"
#include "prophet/policies/randomized.h"

namespace prophet::policies {

const std::vector<std::string>& policy_names() {
  static const std::vector<std::string> names = {"bayes",    "rr",       "sr",      "irt",
                                                 "competitive", "marginal", "bayes-mc", "bayes-mcl"};
  return names;
}

std::unique_ptr<Policy> make_policy(const std::string& name, const AllocationInstance& instance,
                                    const PolicyOptions& options) {
  if (name == "bayes") return std::make_unique<FluidBayesPolicy>();
  if (name == "rr") return std::make_unique<ResolveRandomizePolicy>();
  if (name == "sr") return std::make_unique<StaticRandomizedPolicy>();
  if (name == "irt") {
    if (!(options.irt_band >= 0.0 && options.irt_band <= 0.5)) throw ConfigError("IRT band must lie in [0, 0.5]");
    return std::make_unique<InfrequentResolvePolicy>(options.irt_band);
  }
  if (name == "competitive") return std::make_unique<CompetitivePolicy>(instance);
  if (name == "marginal") return std::make_unique<MarginalAllocationPolicy>(instance);
  if (name == "bayes-mc" || name == "bayes-mcl") {
    if (options.oracle_samples < 1) throw ConfigError("oracle samples must be at least 1");
    return std::make_unique<MonteCarloBayesPolicy>(options.oracle_samples, name == "bayes-mcl");
  }
  std::string valid;
  for (const auto& n : policy_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ConfigError("unknown policy '" + name + "'; valid names: " + valid);
}

}  // namespace prophet::policies
