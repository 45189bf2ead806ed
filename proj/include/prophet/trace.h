#pragma once

#include <vector>

#include "prophet/policies/action.h"

namespace prophet {

struct PeriodRecord {
  int t = 0;  // time-to-go
  double clock = 0.0;
  int type = 0;
  policies::Action action;
  double reward = 0.0;
  bool forced_reject = false;
  std::vector<int> budgets_after;
};

struct SimulationTrace {
  std::vector<int> initial_budgets;
  std::vector<int> types;  // arrival types in period order
  std::vector<PeriodRecord> periods;
  double total_reward = 0.0;
  int forced_rejects = 0;
};

}  // namespace prophet
