#include "pf/mappings.hpp"

#include <algorithm>

namespace pf {

namespace {

std::vector<Elem> support_of(const Pmf& p) {
  std::vector<Elem> out;
  out.reserve(p.size());
  for (const auto& [e, m] : p) {
    if (m > 0.0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Elem> Transition::outcomes(Elem x, Elem u) const {
  switch (mode()) {
    case Mode::det:
      return {det(x, u)};
    case Mode::ndet: {
      auto v = ndet(x, u);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
    case Mode::prob:
      return support_of(prob(x, u));
  }
  return {};
}

std::vector<Elem> Sensor::outcomes(Elem x) const {
  switch (mode()) {
    case Mode::det:
      return {det(x)};
    case Mode::ndet: {
      auto v = ndet(x);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
    case Mode::prob:
      return support_of(prob(x));
  }
  return {};
}

double Sensor::likelihood(Elem x, Elem y) const {
  switch (mode()) {
    case Mode::det:
      return det(x) == y ? 1.0 : 0.0;
    case Mode::ndet:
      throw Error("set-valued sensors have no likelihood; use a probabilistic sensor");
    case Mode::prob: {
      for (const auto& [e, m] : prob(x)) {
        if (e == y) return m;
      }
      return 0.0;
    }
  }
  return 0.0;
}

bool Sensor::can_observe(Elem x, Elem y) const {
  switch (mode()) {
    case Mode::det:
      return det(x) == y;
    case Mode::ndet: {
      auto v = ndet(x);
      return std::find(v.begin(), v.end(), y) != v.end();
    }
    case Mode::prob:
      return likelihood(x, y) > 0.0;
  }
  return false;
}

Transition make_det_transition(std::function<Elem(Elem, Elem)> f) {
  Transition t;
  t.det = std::move(f);
  return t;
}

Sensor make_det_sensor(std::function<Elem(Elem)> h) {
  Sensor s;
  s.det = std::move(h);
  return s;
}

}  // namespace pf
