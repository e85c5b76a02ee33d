#include "pf/filters.hpp"

#include <algorithm>

namespace pf {

NdetIState preimage(const Sensor& sensor, Elem y, const Space& x_space) {
  NdetIState out;
  for (Elem x = 0; x < x_space.size; ++x) {
    if (sensor.can_observe(x, y)) out.possible.push_back(x);
  }
  return out;  // already sorted by construction
}

HistoryIState history_init(Elem y1) {
  HistoryIState h;
  h.observations.push_back(y1);
  return h;
}

HistoryIState history_step(const HistoryIState& h, Elem u, Elem y) {
  HistoryIState out = h;
  out.actions.push_back(u);
  out.observations.push_back(y);
  return out;
}

NdetIState ndet_init(const AgentModel& agent, Elem y1) {
  return preimage(agent.sensor, y1, agent.x_space);
}

NdetIState ndet_predict(const NdetIState& current, Elem u, const Transition& xtf) {
  NdetIState out;
  for (Elem x : current.possible) {
    for (Elem x2 : xtf.outcomes(x, u)) out.possible.push_back(x2);
  }
  out.normalize();
  return out;
}

NdetIState ndet_update(const NdetIState& predicted, Elem y, const Sensor& sensor,
                       const Space& x_space) {
  NdetIState pre = preimage(sensor, y, x_space);
  NdetIState out;
  std::set_intersection(predicted.possible.begin(), predicted.possible.end(),
                        pre.possible.begin(), pre.possible.end(),
                        std::back_inserter(out.possible));
  return out;
}

NdetIState ndet_step(const NdetIState& current, Elem u, Elem y, const AgentModel& agent) {
  return ndet_update(ndet_predict(current, u, agent.xtf), y, agent.sensor, agent.x_space);
}

namespace {

ProbIState normalized_or_zero(std::vector<double> masses) {
  double total = 0.0;
  for (double m : masses) total += m;
  ProbIState out;
  if (total <= 0.0) {
    out.pmf.assign(masses.size(), 0.0);
    return out;
  }
  for (double& m : masses) m /= total;
  out.pmf = std::move(masses);
  return out;
}

}  // namespace

ProbIState prob_init(const AgentModel& agent, Elem y1) {
  std::vector<double> prior(agent.x_space.size, 0.0);
  if (agent.prior.empty()) {
    std::fill(prior.begin(), prior.end(), 1.0 / static_cast<double>(agent.x_space.size));
  } else {
    for (const auto& [e, m] : agent.prior) prior[e] = m;
  }
  for (Elem x = 0; x < agent.x_space.size; ++x) {
    prior[x] *= agent.sensor.likelihood(x, y1);
  }
  return normalized_or_zero(std::move(prior));
}

ProbIState prob_predict(const ProbIState& current, Elem u, const AgentModel& agent) {
  std::vector<double> next(agent.x_space.size, 0.0);
  switch (agent.xtf.mode()) {
    case Mode::det:
      for (Elem x = 0; x < current.pmf.size(); ++x) {
        if (current.pmf[x] > 0.0) next[agent.xtf.det(x, u)] += current.pmf[x];
      }
      break;
    case Mode::prob:
      for (Elem x = 0; x < current.pmf.size(); ++x) {
        if (current.pmf[x] <= 0.0) continue;
        for (const auto& [x2, m] : agent.xtf.prob(x, u)) next[x2] += m * current.pmf[x];
      }
      break;
    case Mode::ndet:
      throw Error("set-valued transitions cannot drive a Bayes filter");
  }
  ProbIState out;
  out.pmf = std::move(next);
  return out;
}

ProbIState prob_update(const ProbIState& predicted, Elem y, const AgentModel& agent) {
  std::vector<double> post(predicted.pmf.size(), 0.0);
  for (Elem x = 0; x < predicted.pmf.size(); ++x) {
    if (predicted.pmf[x] > 0.0) post[x] = predicted.pmf[x] * agent.sensor.likelihood(x, y);
  }
  return normalized_or_zero(std::move(post));
}

ProbIState prob_step(const ProbIState& current, Elem u, Elem y, const AgentModel& agent) {
  return prob_update(prob_predict(current, u, agent), y, agent);
}

}  // namespace pf
