#include "prophet/policies/action.h"

namespace prophet::policies {

std::string to_string(const Action& action) {
  switch (action.kind) {
    case Action::Kind::kReject:
      return "reject";
    case Action::Kind::kAccept:
      return "accept";
    case Action::Kind::kMatch:
      return "match:" + std::to_string(action.index);
    case Action::Kind::kAssign:
      return "assign:" + std::to_string(action.index);
  }
  return "unknown";
}

Action action_for_bundle(const AllocationInstance& instance, int type, int bundle) {
  switch (instance.kind) {
    case InstanceKind::kPacking:
      return Action::accept();
    case InstanceKind::kMatching:
      return Action::match(instance.matched_resource(type, bundle));
    case InstanceKind::kAllocation:
      return Action::assign(bundle);
  }
  return Action::reject();
}

std::optional<int> bundle_of(const AllocationInstance& instance, int type, const Action& action) {
  const int count = static_cast<int>(instance.bundles[type].size());
  switch (action.kind) {
    case Action::Kind::kReject:
      return std::nullopt;
    case Action::Kind::kAccept:
      if (instance.kind != InstanceKind::kPacking) throw UsageError("accept is only defined for packing");
      return 0;
    case Action::Kind::kMatch:
      if (instance.kind != InstanceKind::kMatching) throw UsageError("match is only defined for matching");
      for (int s = 0; s < count; ++s) {
        if (instance.matched_resource(type, s) == action.index) return s;
      }
      throw UsageError("type has no edge to resource " + std::to_string(action.index));
    case Action::Kind::kAssign:
      if (instance.kind != InstanceKind::kAllocation) throw UsageError("assign is only defined for allocation");
      if (action.index < 0 || action.index >= count) throw UsageError("bundle index out of range");
      return action.index;
  }
  return std::nullopt;
}

bool bundle_fits(const Bundle& bundle, std::span<const int> budgets) {
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (bundle.consumption[i] > budgets[i]) return false;
  }
  return true;
}

std::vector<Action> feasible_actions(const AllocationInstance& instance, int type, std::span<const int> budgets) {
  std::vector<Action> out{Action::reject()};
  for (int s = 0; s < static_cast<int>(instance.bundles[type].size()); ++s) {
    if (bundle_fits(instance.bundles[type][s], budgets)) out.push_back(action_for_bundle(instance, type, s));
  }
  return out;
}

double apply_action(const AllocationInstance& instance, int type, const Action& action, std::vector<int>& budgets) {
  const auto s = bundle_of(instance, type, action);
  if (!s) return 0.0;
  const Bundle& b = instance.bundles[type][*s];
  if (!bundle_fits(b, budgets)) throw UsageError("action " + to_string(action) + " exceeds the remaining budget");
  for (int i = 0; i < instance.d; ++i) budgets[i] -= b.consumption[i];
  return b.reward;
}

}  // namespace prophet::policies
