#include "pf/space.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <unordered_set>

namespace pf {

void validate_space(const Space& s, std::uint64_t sample_seed, int sample_pairs) {
  if (s.size == 0) throw InvalidParamsError("space must be nonempty");
  if (!s.names.empty()) {
    if (s.names.size() != s.size) {
      throw InvalidParamsError("space names must cover every element");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : s.names) {
      if (!seen.insert(n).second) {
        throw InvalidParamsError("duplicate element name: " + n);
      }
    }
  }
  if (s.has_metric()) {
    std::mt19937_64 rng(sample_seed);
    for (int i = 0; i < sample_pairs; ++i) {
      Elem a = static_cast<Elem>(rng() % s.size);
      Elem b = static_cast<Elem>(rng() % s.size);
      double dab = s.metric(a, b);
      double dba = s.metric(b, a);
      if (dab < 0.0 || dba < 0.0) throw InvalidParamsError("metric must be nonnegative");
      if (std::abs(dab - dba) > 1e-12) throw InvalidParamsError("metric must be symmetric");
      if (a == b && dab != 0.0) throw InvalidParamsError("metric(a,a) must be 0");
      if (a != b && dab == 0.0 && s.metric(a, b) == 0.0) {
        // Distinct elements at distance zero would break ball semantics.
        throw InvalidParamsError("metric identifies distinct elements");
      }
    }
  }
}

Space IntWindow::space() const {
  Space s;
  s.size = size();
  s.names.reserve(s.size);
  for (int v = lo; v <= hi; ++v) s.names.push_back(std::to_string(v));
  s.metric = [](Elem a, Elem b) {
    return std::abs(static_cast<double>(a) - static_cast<double>(b));
  };
  return s;
}

}  // namespace pf
