#include "pf/agent.hpp"

#include "pf/filters.hpp"

namespace pf {

IState initial_istate(const AgentModel& agent, Elem y1) {
  if (agent.custom_init) return agent.custom_init(y1);
  switch (agent.kind) {
    case ISpaceKind::history:
    case ISpaceKind::sensor_feedback:
      return history_init(y1);
    case ISpaceKind::ndet:
    case ISpaceKind::state_feedback:
      return ndet_init(agent, y1);
    case ISpaceKind::prob:
      return prob_init(agent, y1);
    case ISpaceKind::stage_feedback:
      return StageIState{1};
  }
  throw Error("unknown I-space kind");
}

IState step_istate(const AgentModel& agent, const IState& istate, Elem u, Elem y) {
  if (agent.custom_itf) return agent.custom_itf(istate, u, y);
  switch (agent.kind) {
    case ISpaceKind::history:
      return history_step(std::get<HistoryIState>(istate), u, y);
    case ISpaceKind::sensor_feedback:
      return history_init(y);  // memoryless: keep only the latest observation
    case ISpaceKind::ndet:
    case ISpaceKind::state_feedback:
      return ndet_step(std::get<NdetIState>(istate), u, y, agent);
    case ISpaceKind::prob:
      return prob_step(std::get<ProbIState>(istate), u, y, agent);
    case ISpaceKind::stage_feedback:
      return StageIState{std::get<StageIState>(istate).stage + 1};
  }
  throw Error("unknown I-space kind");
}

Elem policy_action(const AgentModel& agent, const IState& istate) {
  if (!agent.policy) throw PolicyUndefinedError(agent.name + ": no policy");
  auto u = agent.policy(istate);
  if (!u) {
    throw PolicyUndefinedError(agent.name + ": policy undefined on I-state " +
                               istate_digest(istate, &agent.x_space));
  }
  return *u;
}

void validate_agent(const AgentModel& agent) {
  validate_space(agent.x_space);
  validate_space(agent.u_space);
  validate_space(agent.y_space);
  agent.xtf.mode();
  agent.sensor.mode();
  for (Elem x = 0; x < agent.x_space.size; ++x) {
    try {
      auto ys = agent.sensor.outcomes(x);
      if (ys.empty()) throw InvalidParamsError(agent.name + ": sensor not total");
      for (Elem y : ys) {
        if (y >= agent.y_space.size) {
          throw InvalidParamsError(agent.name + ": observation outside Y");
        }
      }
    } catch (const WindowError&) {
      // bounded-window realization: leaving the window is defined as an error
    }
    for (Elem u = 0; u < agent.u_space.size; ++u) {
      try {
        auto xs = agent.xtf.outcomes(x, u);
        if (xs.empty()) throw InvalidParamsError(agent.name + ": transition not total");
        for (Elem x2 : xs) {
          if (x2 >= agent.x_space.size) {
            throw InvalidParamsError(agent.name + ": successor outside X");
          }
        }
      } catch (const WindowError&) {
      }
    }
  }
}

}  // namespace pf
