#include "pf/istate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace pf {

namespace {

std::string format_mass(double m) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", m);
  return buf;
}

std::string elem_label(Elem e, const Space* sp) {
  return sp ? sp->label(e) : std::to_string(e);
}

}  // namespace

bool NdetIState::contains(Elem x) const {
  return std::binary_search(possible.begin(), possible.end(), x);
}

void NdetIState::normalize() {
  std::sort(possible.begin(), possible.end());
  possible.erase(std::unique(possible.begin(), possible.end()), possible.end());
}

double ProbIState::mass_sum() const {
  return std::accumulate(pmf.begin(), pmf.end(), 0.0);
}

NdetIState make_ndet(std::vector<Elem> elems) {
  NdetIState s{std::move(elems)};
  s.normalize();
  return s;
}

ProbIState make_uniform_prob(std::size_t n) {
  ProbIState p;
  p.pmf.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return p;
}

std::string istate_digest(const IState& istate, const Space* x_space) {
  struct Visitor {
    const Space* sp;

    std::string operator()(const HistoryIState& h) const {
      std::string out = "hist:u=[";
      for (std::size_t i = 0; i < h.actions.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(h.actions[i]);
      }
      out += "];y=[";
      for (std::size_t i = 0; i < h.observations.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(h.observations[i]);
      }
      out += ']';
      return out;
    }

    std::string operator()(const NdetIState& s) const {
      std::string out = "{";
      for (std::size_t i = 0; i < s.possible.size(); ++i) {
        if (i) out += ',';
        out += elem_label(s.possible[i], sp);
      }
      out += '}';
      return out;
    }

    std::string operator()(const ProbIState& p) const {
      std::string out = "{";
      bool first = true;
      for (std::size_t i = 0; i < p.pmf.size(); ++i) {
        if (p.pmf[i] <= 0.0) continue;
        if (!first) out += ',';
        first = false;
        out += '(';
        out += elem_label(static_cast<Elem>(i), sp);
        out += ':';
        out += format_mass(p.pmf[i]);
        out += ')';
      }
      out += '}';
      return out;
    }

    std::string operator()(const StageIState& s) const {
      return "k=" + std::to_string(s.stage);
    }

    std::string operator()(const std::shared_ptr<const DerivedState>& d) const {
      return d ? d->digest() : std::string("<null>");
    }
  };
  return std::visit(Visitor{x_space}, istate);
}

bool istate_equal(const IState& a, const IState& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ha = std::get_if<HistoryIState>(&a)) {
    return *ha == std::get<HistoryIState>(b);
  }
  if (const auto* na = std::get_if<NdetIState>(&a)) {
    return *na == std::get<NdetIState>(b);
  }
  if (const auto* pa = std::get_if<ProbIState>(&a)) {
    return pa->pmf == std::get<ProbIState>(b).pmf;
  }
  if (const auto* sa = std::get_if<StageIState>(&a)) {
    return *sa == std::get<StageIState>(b);
  }
  const auto& da = std::get<std::shared_ptr<const DerivedState>>(a);
  const auto& db = std::get<std::shared_ptr<const DerivedState>>(b);
  if (!da || !db) return da == db;
  return da->same(*db);
}

}  // namespace pf
