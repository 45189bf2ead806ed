#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prophet/instance.h"

namespace prophet::policies {

struct Action {
  enum class Kind { kReject, kAccept, kMatch, kAssign };

  Kind kind = Kind::kReject;
  int index = -1;  // resource for kMatch, bundle for kAssign

  static Action reject() { return {Kind::kReject, -1}; }
  static Action accept() { return {Kind::kAccept, -1}; }
  static Action match(int resource) { return {Kind::kMatch, resource}; }
  static Action assign(int bundle) { return {Kind::kAssign, bundle}; }

  bool is_reject() const { return kind == Kind::kReject; }
  friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(const Action& action);

struct Decision {
  Action action;
  // The rule wanted to serve the arrival but the budget could not cover it.
  bool forced_reject = false;
};

// The action that serves type j with bundle s, in the instance's own terms.
Action action_for_bundle(const AllocationInstance& instance, int type, int bundle);

// Bundle of type j used by `action`, or nullopt for reject. Throws
// UsageError if the action does not fit the instance kind or type.
std::optional<int> bundle_of(const AllocationInstance& instance, int type, const Action& action);

bool bundle_fits(const Bundle& bundle, std::span<const int> budgets);

// Reject first, then every feasible bundle in index order.
std::vector<Action> feasible_actions(const AllocationInstance& instance, int type, std::span<const int> budgets);

// Reward collected and budgets after the action; throws UsageError if the
// action is infeasible.
double apply_action(const AllocationInstance& instance, int type, const Action& action, std::vector<int>& budgets);

}  // namespace prophet::policies
