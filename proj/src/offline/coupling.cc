#include "prophet/offline/coupling.h"

#include <cmath>

#include "prophet/offline/offline_value.h"
#include "prophet/policies/ski_rental.h"

namespace prophet::offline {

AuditReport coupling_audit(std::span<const AuditStep> steps, const OfflineValueTable& table) {
  AuditReport report;
  report.exact = table.exact();
  std::vector<Transition> moves;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    table.model().transitions(step.t, step.state, moves);
    const Transition* taken = nullptr;
    for (const auto& m : moves) {
      if (m.action == step.action) taken = &m;
    }
    if (taken == nullptr) throw UsageError("audited action is not available in the hindsight model");
    if (k + 1 < steps.size() && steps[k + 1].state != taken->next_state) {
      throw UsageError("audited states do not follow the model's transitions");
    }
    DisagreementRecord rec;
    rec.t = step.t;
    rec.action = step.action;
    rec.marginal_compensation =
        table.value(step.t, step.state) - (taken->reward + table.value(step.t - 1, taken->next_state));
    if (report.exact) {
      rec.exact_compensation = table.exact_value(step.t, step.state) -
                               (std::llround(taken->reward) + table.exact_value(step.t - 1, taken->next_state));
      rec.marginal_compensation = static_cast<double>(rec.exact_compensation);
      rec.was_satisfying = rec.exact_compensation == 0;
      report.exact_total += rec.exact_compensation;
    } else {
      rec.was_satisfying = rec.marginal_compensation <= 1e-9;
    }
    report.total_compensation += rec.marginal_compensation;
    report.records.push_back(rec);
  }
  return report;
}

AuditReport coupling_audit(const SimulationTrace& trace, const AllocationInstance& instance,
                           const OfflineValueTable& table) {
  if (trace.types != table.signals()) throw UsageError("trace and table were built on different arrivals");
  std::vector<AuditStep> steps;
  std::vector<int> budgets = trace.initial_budgets;
  for (const auto& period : trace.periods) {
    const auto bundle = policies::bundle_of(instance, period.type, period.action);
    steps.push_back({period.t, table.model().encode(budgets), bundle ? *bundle + 1 : 0});
    budgets = period.budgets_after;
  }
  return coupling_audit(steps, table);
}

AuditReport ski_rental_audit(int horizon, int tau, int buy_cost, int snow_days) {
  auto model = std::make_shared<SkiRentalHindsight>(horizon, buy_cost, snow_days);
  const auto table = solve_hindsight(model);
  std::vector<AuditStep> steps;
  int state = 1;
  for (int day = 1; day <= horizon; ++day) {
    const int t = horizon - day + 1;
    const auto a = policies::ski_rental_policy(tau, day, state == 0, day <= snow_days);
    const int action = a == policies::SkiAction::kRent  ? SkiRentalHindsight::kRent
                       : a == policies::SkiAction::kBuy ? SkiRentalHindsight::kBuy
                                                        : SkiRentalHindsight::kIdle;
    steps.push_back({t, state, action});
    if (action == SkiRentalHindsight::kBuy) state = 0;
  }
  return coupling_audit(steps, table);
}

std::vector<double> lp_compensations(const AllocationInstance& instance, const arrivals::SamplePath& path,
                                     const SimulationTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.periods.size());
  std::vector<int> budgets = trace.initial_budgets;
  double current = offline_lp_value(instance, path.tail_counts(path.horizon()), budgets);
  for (const auto& period : trace.periods) {
    const double next =
        period.t > 1 ? offline_lp_value(instance, path.tail_counts(period.t - 1), period.budgets_after) : 0.0;
    out.push_back(current - (period.reward + next));
    current = next;
    budgets = period.budgets_after;
  }
  return out;
}

}  // namespace prophet::offline
