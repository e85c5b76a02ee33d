#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pf/istate.hpp"
#include "pf/mappings.hpp"
#include "pf/space.hpp"

namespace pf {

enum class ISpaceKind {
  history,
  ndet,
  prob,
  sensor_feedback,
  stage_feedback,
  state_feedback,
};

// One agent: intrinsic spaces, transition and sensor models, I-space kind,
// and policy. Derived I-spaces plug in through custom_init/custom_itf.
struct AgentModel {
  std::string name;
  Space x_space;
  Space u_space;
  Space y_space;
  ISpaceKind kind = ISpaceKind::ndet;
  Transition xtf;
  Sensor sensor;
  Pmf prior;  // probabilistic kind; empty means uniform over x_space

  // Returns nullopt where the policy is undefined.
  std::function<std::optional<Elem>(const IState&)> policy;

  std::function<IState(Elem y1)> custom_init;
  std::function<IState(const IState&, Elem u, Elem y)> custom_itf;
};

// iota_1 from the first observation, per the agent's I-space kind.
IState initial_istate(const AgentModel& agent, Elem y1);

// phi(iota, u, y').
IState step_istate(const AgentModel& agent, const IState& istate, Elem u, Elem y);

// pi(iota); throws PolicyUndefinedError when the policy has no value.
Elem policy_action(const AgentModel& agent, const IState& istate);

// Totality and mode checks by enumeration over the agent's finite spaces.
// WindowError from a bounded-window realization counts as defined behavior.
void validate_agent(const AgentModel& agent);

}  // namespace pf
