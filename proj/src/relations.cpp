#include "pf/relations.hpp"

namespace pf {

namespace {

bool default_model(const IState& istate, Elem x, double eps) {
  if (const auto* s = std::get_if<NdetIState>(&istate)) return s->contains(x);
  if (const auto* p = std::get_if<ProbIState>(&istate)) {
    return x < p->pmf.size() && p->pmf[x] >= eps;
  }
  if (std::get_if<StageIState>(&istate)) return true;  // a stage count constrains nothing
  throw Error("model relation undeclared for this I-state kind");
}

}  // namespace

AgentRelations make_enumerated_relations(const Space& x_space, Correspondence corr,
                                         double prob_epsilon) {
  AgentRelations rel;
  rel.prob_epsilon = prob_epsilon;
  rel.corr = corr;
  double eps = prob_epsilon;
  rel.model = [eps](const IState& istate, Elem x) { return default_model(istate, x, eps); };

  std::size_t n = x_space.size;
  rel.plausible = [eps, n](const IState& istate) {
    if (const auto* s = std::get_if<NdetIState>(&istate)) return !s->empty();
    if (const auto* p = std::get_if<ProbIState>(&istate)) {
      for (double m : p->pmf) {
        if (m >= eps) return true;
      }
      return false;
    }
    for (Elem x = 0; x < n; ++x) {
      if (default_model(istate, x, eps)) return true;
    }
    return false;
  };

  auto model = rel.model;
  auto contains = corr.contains;
  rel.reality = [model, contains, n](const IState& istate, Elem omega) {
    for (Elem x = 0; x < n; ++x) {
      if (model(istate, x) && contains(x, omega)) return true;
    }
    return false;
  };
  return rel;
}

bool model_relates(const AgentRelations& rel, const IState& istate, Elem x) {
  if (!rel.model) throw Error("model relation undeclared");
  return rel.model(istate, x);
}

bool reality_relates(const IState& istate, Elem omega, const AgentRelations& rel) {
  if (!rel.reality) throw Error("reality relation undeclared");
  return rel.reality(istate, omega);
}

}  // namespace pf
