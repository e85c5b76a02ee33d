#pragma once

#include <functional>

#include "pf/agent.hpp"
#include "pf/istate.hpp"
#include "pf/world.hpp"

namespace pf {

// Model relation M over (I-state, x), correspondence C over (x, omega), and
// the reality relation R over (I-state, omega) derived from them. Scenarios
// declare these explicitly; defaults cover the standard filter I-states.
struct AgentRelations {
  double prob_epsilon = 1e-6;  // mass threshold defining M for pmf I-states

  std::function<bool(const IState&, Elem x)> model;
  std::function<bool(const IState&)> plausible;
  std::function<bool(const IState&, Elem omega)> reality;
  Correspondence corr;
};

// Wires the definitional M for set/pmf I-states over a finite X space,
// plausibility as "M is satisfiable", and R(iota, omega) as
// "exists x with M(iota, x) and C(x, omega)" computed by enumeration.
AgentRelations make_enumerated_relations(const Space& x_space, Correspondence corr,
                                         double prob_epsilon = 1e-6);

bool model_relates(const AgentRelations& rel, const IState& istate, Elem x);
bool reality_relates(const IState& istate, Elem omega, const AgentRelations& rel);

}  // namespace pf
