#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "pf/agent.hpp"
#include "pf/istate.hpp"
#include "pf/mappings.hpp"
#include "pf/space.hpp"

namespace pf {

// All states that could have produced observation y. For set-valued sensors
// this is {x | y in H(x)}; for probabilistic sensors, the support of p(y|x).
NdetIState preimage(const Sensor& sensor, Elem y, const Space& x_space);

HistoryIState history_init(Elem y1);
HistoryIState history_step(const HistoryIState& h, Elem u, Elem y);

// Set filter: predict through the transition, then constrain by preimage.
NdetIState ndet_init(const AgentModel& agent, Elem y1);
NdetIState ndet_predict(const NdetIState& current, Elem u, const Transition& xtf);
NdetIState ndet_update(const NdetIState& predicted, Elem y, const Sensor& sensor,
                       const Space& x_space);
NdetIState ndet_step(const NdetIState& current, Elem u, Elem y, const AgentModel& agent);

// Bayes filter over a dense pmf. A zero normalizer yields the distinguished
// all-zero state rather than a renormalized lie.
ProbIState prob_init(const AgentModel& agent, Elem y1);
ProbIState prob_predict(const ProbIState& current, Elem u, const AgentModel& agent);
ProbIState prob_update(const ProbIState& predicted, Elem y, const AgentModel& agent);
ProbIState prob_step(const ProbIState& current, Elem u, Elem y, const AgentModel& agent);

// --- sufficiency checking -------------------------------------------------

// Single-agent view of a world that generates histories: initial universe
// states, a (possibly set-valued) step, and the observations each state emits.
struct SufficiencyInstance {
  std::size_t action_count = 0;
  std::vector<Elem> initial_universe;
  std::function<std::vector<Elem>(Elem omega, Elem u)> step;
  std::function<std::vector<Elem>(Elem omega)> observe;
};

struct SufficiencyViolation {
  HistoryIState history;  // the history being extended
  Elem u = kNoElem;
  Elem y = kNoElem;
};

struct SufficiencyReport {
  std::size_t histories_checked = 0;
  std::size_t transitions_checked = 0;
  std::vector<SufficiencyViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks that an incremental derived-I-space filter reproduces a history-based
// summary on every reachable history up to max_depth stages:
//   equal(kappa(eta + (u, y')), derived_itf(kappa(eta), u, y'))
// kappa is expected to be independent of derived_itf (e.g. brute force).
template <class DState>
SufficiencyReport check_sufficiency(
    const SufficiencyInstance& inst,
    const std::function<DState(const HistoryIState&)>& kappa,
    const std::function<DState(const DState&, Elem, Elem)>& derived_itf,
    const std::function<bool(const DState&, const DState&)>& equal, int max_depth,
    std::size_t max_violations = 32) {
  SufficiencyReport report;

  struct Node {
    HistoryIState history;
    std::vector<Elem> universe;  // states consistent with the history
    DState summary;
    int depth;
  };

  // Roots: group initial universe states by their first observation.
  std::deque<Node> queue;
  {
    std::vector<std::vector<Elem>> by_obs;
    std::vector<Elem> obs_values;
    for (Elem w : inst.initial_universe) {
      for (Elem y : inst.observe(w)) {
        std::size_t idx = 0;
        for (; idx < obs_values.size(); ++idx) {
          if (obs_values[idx] == y) break;
        }
        if (idx == obs_values.size()) {
          obs_values.push_back(y);
          by_obs.emplace_back();
        }
        by_obs[idx].push_back(w);
      }
    }
    for (std::size_t i = 0; i < obs_values.size(); ++i) {
      Node n;
      n.history = history_init(obs_values[i]);
      n.universe = std::move(by_obs[i]);
      n.summary = kappa(n.history);
      n.depth = 1;
      queue.push_back(std::move(n));
    }
  }

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++report.histories_checked;
    if (node.depth >= max_depth) continue;

    for (Elem u = 0; u < inst.action_count; ++u) {
      // Successor universe states, partitioned by the observation they emit.
      std::vector<Elem> obs_values;
      std::vector<std::vector<Elem>> by_obs;
      for (Elem w : node.universe) {
        for (Elem w2 : inst.step(w, u)) {
          for (Elem y : inst.observe(w2)) {
            std::size_t idx = 0;
            for (; idx < obs_values.size(); ++idx) {
              if (obs_values[idx] == y) break;
            }
            if (idx == obs_values.size()) {
              obs_values.push_back(y);
              by_obs.emplace_back();
            }
            auto& bucket = by_obs[idx];
            bool dup = false;
            for (Elem e : bucket) {
              if (e == w2) {
                dup = true;
                break;
              }
            }
            if (!dup) bucket.push_back(w2);
          }
        }
      }
      for (std::size_t i = 0; i < obs_values.size(); ++i) {
        Elem y = obs_values[i];
        Node child;
        child.history = history_step(node.history, u, y);
        child.universe = std::move(by_obs[i]);
        child.summary = kappa(child.history);
        child.depth = node.depth + 1;

        ++report.transitions_checked;
        DState incremental = derived_itf(node.summary, u, y);
        if (!equal(child.summary, incremental)) {
          if (report.violations.size() < max_violations) {
            report.violations.push_back({node.history, u, y});
          }
        }
        queue.push_back(std::move(child));
      }
    }
  }
  return report;
}

}  // namespace pf
