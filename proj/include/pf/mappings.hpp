#pragma once

#include <functional>
#include <vector>

#include "pf/space.hpp"
#include "pf/types.hpp"

namespace pf {

enum class Mode { det, ndet, prob };

// State transition X x U -> X with exactly one determinism mode populated.
struct Transition {
  std::function<Elem(Elem, Elem)> det;
  std::function<std::vector<Elem>(Elem, Elem)> ndet;
  std::function<Pmf(Elem, Elem)> prob;

  Mode mode() const {
    int n = (det ? 1 : 0) + (ndet ? 1 : 0) + (prob ? 1 : 0);
    if (n != 1) throw InvalidParamsError("transition must have exactly one mode");
    if (det) return Mode::det;
    if (ndet) return Mode::ndet;
    return Mode::prob;
  }

  // All possible successors regardless of mode (prob: the support).
  std::vector<Elem> outcomes(Elem x, Elem u) const;
};

// Sensor mapping X -> Y (also used for universe sensors over Omega).
struct Sensor {
  std::function<Elem(Elem)> det;
  std::function<std::vector<Elem>(Elem)> ndet;
  std::function<Pmf(Elem)> prob;

  Mode mode() const {
    int n = (det ? 1 : 0) + (ndet ? 1 : 0) + (prob ? 1 : 0);
    if (n != 1) throw InvalidParamsError("sensor must have exactly one mode");
    if (det) return Mode::det;
    if (ndet) return Mode::ndet;
    return Mode::prob;
  }

  std::vector<Elem> outcomes(Elem x) const;

  // p(y | x). Deterministic sensors give indicator likelihoods; set-valued
  // sensors have no usable density and throw.
  double likelihood(Elem x, Elem y) const;

  // True iff observation y can arise from state x.
  bool can_observe(Elem x, Elem y) const;
};

Transition make_det_transition(std::function<Elem(Elem, Elem)> f);
Sensor make_det_sensor(std::function<Elem(Elem)> h);

}  // namespace pf
