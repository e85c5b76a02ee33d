#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pf/types.hpp"

namespace pf {

// A finite enumerable space. Elements are indices 0..size-1; scenario code
// decides what they mean. Names and the metric are optional.
struct Space {
  std::size_t size = 0;
  std::vector<std::string> names;                // empty, or one per element
  std::function<double(Elem, Elem)> metric;      // empty if the space has none

  bool has_metric() const { return static_cast<bool>(metric); }

  std::string label(Elem e) const {
    if (e < names.size()) return names[e];
    return std::to_string(e);
  }

  Elem find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<Elem>(i);
    }
    return kNoElem;
  }
};

// Checks the basic space invariants: nonempty, unique names, and (when a
// metric is present) identity-of-indiscernibles plus symmetry on sampled
// pairs. Throws InvalidParamsError on violation.
void validate_space(const Space& s, std::uint64_t sample_seed = 1, int sample_pairs = 64);

// Contiguous integer window [lo, hi] realized as a Space with |a-b| metric.
// Keeps the int <-> Elem translation in one place.
struct IntWindow {
  int lo = 0;
  int hi = -1;

  IntWindow() = default;
  IntWindow(int lo_, int hi_) : lo(lo_), hi(hi_) {}

  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(int v) const { return v >= lo && v <= hi; }

  Elem to_elem(int v) const {
    if (!contains(v)) {
      throw WindowError("value " + std::to_string(v) + " outside window [" +
                        std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    return static_cast<Elem>(v - lo);
  }

  int value(Elem e) const { return lo + static_cast<int>(e); }

  Space space() const;
};

}  // namespace pf
