#pragma once

#include <cstdint>
#include <vector>

#include "prophet/arrivals/model.h"
#include "prophet/offline/hindsight_dp.h"
#include "prophet/trace.h"

namespace prophet::offline {

// One online step in the DP's terms.
struct AuditStep {
  int t;
  int state;
  int action;
};

struct DisagreementRecord {
  int t = 0;
  int action = 0;
  bool was_satisfying = true;
  // V_off(t, S^t) - [reward + V_off(t - 1, S^{t-1})].
  double marginal_compensation = 0.0;
  std::int64_t exact_compensation = 0;  // meaningful when the table is exact
};

struct AuditReport {
  std::vector<DisagreementRecord> records;
  double total_compensation = 0.0;
  std::int64_t exact_total = 0;
  bool exact = false;
};

// Compensations paid along the steps; the states must follow the
// transitions of the table's model.
AuditReport coupling_audit(std::span<const AuditStep> steps, const OfflineValueTable& table);

// Audits an allocation trace against a table built on the same arrivals;
// throws UsageError when the arrival sequences differ.
AuditReport coupling_audit(const SimulationTrace& trace, const AllocationInstance& instance,
                           const OfflineValueTable& table);

// Ski rental: the policy's steps on a season with `snow_days` snowy days.
AuditReport ski_rental_audit(int horizon, int tau, int buy_cost, int snow_days);

// LP analogue used at scale: per period, v(P*[Z(t), B^t]) minus the reward
// and v(P*[Z(t-1), B^{t-1}]). The sum telescopes to v_off - v_on.
std::vector<double> lp_compensations(const AllocationInstance& instance, const arrivals::SamplePath& path,
                                     const SimulationTrace& trace);

}  // namespace prophet::offline
