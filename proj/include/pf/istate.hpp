#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pf/space.hpp"
#include "pf/types.hpp"

namespace pf {

// Full action/observation memory: (u_1..u_{k-1}, y_1..y_k).
struct HistoryIState {
  std::vector<Elem> actions;
  std::vector<Elem> observations;

  bool operator==(const HistoryIState&) const = default;
};

// Set of possible states. Sorted, unique. Empty encodes implausibility.
struct NdetIState {
  std::vector<Elem> possible;

  bool empty() const { return possible.empty(); }
  bool contains(Elem x) const;
  void normalize();  // sort + dedupe

  bool operator==(const NdetIState&) const = default;
};

// Dense pmf over the agent's X space. An all-zero pmf is the distinguished
// zero-evidence outcome, the probabilistic analogue of the empty set.
struct ProbIState {
  std::vector<double> pmf;

  double mass_sum() const;
  bool zero_evidence() const { return mass_sum() <= 0.0; }
};

// Stage-feedback memory: just the stage counter.
struct StageIState {
  std::uint32_t stage = 1;

  bool operator==(const StageIState&) const = default;
};

// Scenario-defined derived I-states (compressed encodings with their own ITF).
class DerivedState {
 public:
  virtual ~DerivedState() = default;
  virtual std::string digest() const = 0;
  virtual bool same(const DerivedState& other) const = 0;
};

using IState = std::variant<HistoryIState, NdetIState, ProbIState, StageIState,
                            std::shared_ptr<const DerivedState>>;

NdetIState make_ndet(std::vector<Elem> elems);
ProbIState make_uniform_prob(std::size_t n);

// Trace digest of an I-state: sorted element lists for set states, sorted
// (element, mass) pairs with 12 significant digits for pmfs. Labels come from
// x_space when provided.
std::string istate_digest(const IState& istate, const Space* x_space = nullptr);

bool istate_equal(const IState& a, const IState& b);

}  // namespace pf
