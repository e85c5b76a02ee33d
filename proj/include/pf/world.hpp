#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pf/agent.hpp"
#include "pf/mappings.hpp"
#include "pf/space.hpp"

namespace pf {

// Universe transition function over the joint action of all agents.
struct Utf {
  std::function<Elem(Elem, std::span<const Elem>)> det;
  std::function<std::vector<Elem>(Elem, std::span<const Elem>)> ndet;
  std::function<Pmf(Elem, std::span<const Elem>)> prob;

  Mode mode() const {
    int n = (det ? 1 : 0) + (ndet ? 1 : 0) + (prob ? 1 : 0);
    if (n != 1) throw InvalidParamsError("universe transition must have exactly one mode");
    if (det) return Mode::det;
    if (ndet) return Mode::ndet;
    return Mode::prob;
  }
};

// Which intrinsic states stand for which universe states. alpha is the
// projection available when the relation is one-to-many and onto.
struct Correspondence {
  std::function<bool(Elem x, Elem omega)> contains;
  std::function<Elem(Elem omega)> alpha;

  bool has_alpha() const { return static_cast<bool>(alpha); }
};

// Third-person ground truth: universe space, its transition function, and the
// per-agent universe sensors and correspondences.
struct ExtrinsicWorld {
  Space omega;
  Utf utf;
  std::vector<Sensor> sensors;               // one per agent, omega -> y_i
  std::vector<Correspondence> correspondences;  // one per agent
};

// Enumeration check: whenever alpha exists, (alpha(omega), omega) must be in
// the correspondence for every omega. Throws InvalidParamsError on violation.
void validate_world(const ExtrinsicWorld& world);

}  // namespace pf
