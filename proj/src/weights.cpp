#include "atlas/weights.hpp"

#include "atlas/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace atlas {

std::vector<WeightVec> WeightSystem::distinct_weights() const {
  std::set<RVec, RVecLexLess> seen;
  std::vector<WeightVec> out;
  for (const auto& [w, s] : weights) {
    if (seen.insert(w.coords()).second) out.emplace_back(system, w.coords());
  }
  std::sort(out.begin(), out.end(), WeightVecLexLess{});
  return out;
}

std::vector<int> SimpleRootPartition::pi_lambda() const {
  std::vector<int> out = rd;
  out.insert(out.end(), one.begin(), one.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The weight set of V_lambda is the closure of {lambda} under simple
// reflections together with the root strings they cut out: whenever the
// i-th coordinate of a known weight nu is k > 0, the whole string
// nu - alpha_i, ..., nu - k alpha_i consists of weights.
std::vector<RVec> irreducible_weight_set(const WeightVec& lambda, const Budgets& budgets) {
  const SpecPtr& spec = lambda.system();
  const auto& cartan = spec->cartan();
  std::set<RVec, RVecLexLess> seen;
  std::deque<RVec> queue;
  seen.insert(lambda.coords());
  queue.push_back(lambda.coords());
  auto insert = [&](const RVec& w) {
    if (seen.insert(w).second) {
      if (seen.size() > budgets.weights) {
        throw BudgetError("weight-set budget exceeded", seen.size());
      }
      queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    RVec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < spec->rank(); ++i) {
      Rational c = v(i);
      if (c == 0) continue;
      if (c > 0) {
        // The alpha_i-string from v down to s_i v.
        long long steps = boost::multiprecision::numerator(c).convert_to<long long>();
        RVec w = v;
        for (long long s = 1; s <= steps; ++s) {
          for (int j = 0; j < spec->rank(); ++j) w(j) -= Rational(cartan(i, j));
          insert(w);
        }
      } else {
        RVec w = v;
        for (int j = 0; j < spec->rank(); ++j) w(j) -= c * Rational(cartan(i, j));
        insert(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

WeightSystem weight_system(const std::vector<WeightVec>& highest, const Budgets& budgets) {
  if (highest.empty()) throw InputError("weight_system: no summands");
  WeightSystem ws;
  ws.system = highest.front().system();
  for (const auto& hw : highest) {
    if (hw.system()->key() != ws.system->key()) throw InputError("mismatched root systems");
    if (!hw.is_dominant() || !hw.is_integral()) {
      throw InputError("summand highest weights must be dominant integral");
    }
  }
  ws.summands = highest;
  for (size_t s = 0; s < highest.size(); ++s) {
    for (const RVec& v : irreducible_weight_set(highest[s], budgets)) {
      ws.weights.emplace_back(WeightVec(ws.system, v), static_cast<int>(s));
    }
  }
  return ws;
}

SimpleRootPartition partition_simple_roots(const WeightVec& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral()) {
    throw InputError("partition_simple_roots expects a dominant integral weight");
  }
  SimpleRootPartition part;
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda.coord(i) >= 2) {
      part.rd.push_back(i);
    } else if (lambda.coord(i) == 1) {
      part.one.push_back(i);
    } else {
      part.zero.push_back(i);
    }
  }
  return part;
}

bool is_root_distinct(const std::vector<WeightVec>& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      if (is_root(m[i] - m[j])) return false;
    }
  }
  return true;
}

bool orbit_root_distinct(const WeightVec& lambda, bool debug, const Budgets& budgets) {
  if (!lambda.is_dominant() || !lambda.is_integral()) {
    throw InputError("orbit_root_distinct expects a dominant integral weight");
  }
  bool by_partition = partition_simple_roots(lambda).one.empty();
  if (debug) {
    bool brute = is_root_distinct(weyl_orbit(lambda, budgets));
    if (brute != by_partition) {
      throw std::logic_error("orbit root-distinctness mismatch for " + rvec_key(lambda.coords()));
    }
  }
  return by_partition;
}

ConvexityReport convexity_verdict(const WeightVec& lambda) {
  ConvexityReport rep;
  rep.convex = orbit_root_distinct(lambda);
  rep.note = rep.convex ? "mu(P) = C(K lambda)" : "Pi_1 nonempty: orbit is not root-distinct";
  return rep;
}

bool verify_zero_witness(const ZeroWitness& w) {
  if (w.support.empty() || w.support.size() != w.coefficients.size()) return false;
  Rational total = 0;
  RVec sum = RVec::Zero(w.support.front().size());
  for (size_t i = 0; i < w.support.size(); ++i) {
    if (w.coefficients[i] <= 0) return false;
    total += w.coefficients[i];
    sum += w.coefficients[i] * w.support[i].coords();
  }
  if (total != 1) return false;
  if (!sum.isZero()) return false;
  return is_root_distinct(w.support);
}

namespace {

struct WitnessSearch {
  const SpecPtr& spec;
  const std::vector<WeightVec>& pts;
  const Budgets& budgets;
  unsigned long long scanned = 0;
  std::vector<int> chosen;
  // rows of the homogenized echelon span of the chosen points
  RMat echelon;
  int echelon_rows = 0;

  bool independent_if_added(const RVec& hom) {
    RVec v = hom;
    for (int r = 0; r < echelon_rows; ++r) {
      int pc = -1;
      for (int c = 0; c < echelon.cols(); ++c) {
        if (echelon(r, c) != 0) {
          pc = c;
          break;
        }
      }
      if (pc >= 0 && v(pc) != 0) v -= (v(pc) / echelon(r, pc)) * echelon.row(r).transpose();
    }
    return !v.isZero();
  }

  void push(const RVec& hom) {
    RVec v = hom;
    for (int r = 0; r < echelon_rows; ++r) {
      int pc = -1;
      for (int c = 0; c < echelon.cols(); ++c) {
        if (echelon(r, c) != 0) {
          pc = c;
          break;
        }
      }
      if (pc >= 0 && v(pc) != 0) v -= (v(pc) / echelon(r, pc)) * echelon.row(r).transpose();
    }
    echelon.row(echelon_rows++) = v.transpose();
  }

  std::optional<ZeroWitness> try_complete() {
    ++scanned;
    if (scanned > budgets.subsets) {
      throw BudgetError("zero-witness subset budget exceeded", scanned);
    }
    const int n = spec->rank();
    const int k = static_cast<int>(chosen.size());
    RMat a(n + 1, k);
    for (int c = 0; c < k; ++c) {
      a.block(0, c, n, 1) = pts[chosen[c]].coords();
      a(n, c) = 1;
    }
    RVec b = RVec::Zero(n + 1);
    b(n) = 1;
    SolveResult sol = solve(a, b);
    if (!sol.consistent || !sol.unique) return std::nullopt;
    for (int c = 0; c < k; ++c) {
      if (sol.x(c) <= 0) return std::nullopt;
    }
    ZeroWitness w;
    for (int c = 0; c < k; ++c) {
      w.support.push_back(pts[chosen[c]]);
      w.coefficients.push_back(sol.x(c));
    }
    return w;
  }

  std::optional<ZeroWitness> extend(size_t start, int remaining) {
    if (remaining == 0) return try_complete();
    for (size_t i = start; i < pts.size(); ++i) {
      bool rd = true;
      for (int c : chosen) {
        if (is_root(pts[i] - pts[c])) {  // the root set is symmetric
          rd = false;
          break;
        }
      }
      if (!rd) continue;
      RVec hom(spec->rank() + 1);
      hom.head(spec->rank()) = pts[i].coords();
      hom(spec->rank()) = 1;
      if (!independent_if_added(hom)) continue;
      RMat saved = echelon;
      int saved_rows = echelon_rows;
      chosen.push_back(static_cast<int>(i));
      push(hom);
      auto found = extend(i + 1, remaining - 1);
      if (found) return found;
      chosen.pop_back();
      echelon = saved;
      echelon_rows = saved_rows;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<ZeroWitness> zero_witness(const SpecPtr& spec,
                                        const std::vector<WeightVec>& weights,
                                        const Budgets& budgets) {
  std::set<RVec, RVecLexLess> seen;
  std::vector<WeightVec> pts;
  for (const auto& w : weights) {
    if (w.system()->key() != spec->key()) throw InputError("mismatched root systems");
    if (seen.insert(w.coords()).second) pts.emplace_back(spec, w.coords());
  }
  std::sort(pts.begin(), pts.end(), WeightVecLexLess{});
  WitnessSearch search{spec, pts, budgets};
  search.echelon = RMat::Zero(spec->rank() + 2, spec->rank() + 1);
  for (int size = 1; size <= spec->rank() + 1; ++size) {
    search.chosen.clear();
    search.echelon_rows = 0;
    auto found = search.extend(0, size);
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<ZeroWitness> zero_witness(const WeightSystem& ws, const Budgets& budgets) {
  return zero_witness(ws.system, ws.distinct_weights(), budgets);
}

WeightVec eps_weight(const SpecPtr& spec, int component,
                     const std::vector<long long>& eps_coeffs) {
  if (component < 0 || component >= static_cast<int>(spec->components().size())) {
    throw InputError("eps_weight: no such component");
  }
  const SimpleComponent& comp = spec->components()[component];
  if (comp.family != 'A') throw InputError("eps_weight: component is not of type A");
  if (static_cast<int>(eps_coeffs.size()) != comp.rank + 1) {
    throw InputError("eps_weight: expected " + std::to_string(comp.rank + 1) +
                     " epsilon coefficients");
  }
  RVec v = RVec::Zero(spec->rank());
  for (int i = 0; i < comp.rank; ++i) {
    v(comp.offset + i) = Rational(eps_coeffs[i] - eps_coeffs[i + 1]);
  }
  return WeightVec(spec, v);
}

}  // namespace atlas
