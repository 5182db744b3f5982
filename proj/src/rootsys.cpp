#include "atlas/rootsys.hpp"

#include "atlas/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace atlas {

namespace {

struct FamilyInfo {
  int min_rank;
  int max_rank;  // -1 = unbounded
};

const std::map<char, FamilyInfo>& family_table() {
  static const std::map<char, FamilyInfo> table = {
      {'A', {1, -1}}, {'B', {2, -1}}, {'C', {2, -1}}, {'D', {3, -1}},
      {'E', {6, 8}},  {'F', {4, 4}},  {'G', {2, 2}},
  };
  return table;
}

// Gram matrix of the simple roots in the standard epsilon realization.
RMat family_gram(char family, int n) {
  RMat g = RMat::Zero(n, n);
  auto bond = [&](int i, int j, const Rational& v) {
    g(i, j) = v;
    g(j, i) = v;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g(i, i) = (i == n - 1) ? 1 : 2;
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g(i, i) = (i == n - 1) ? 4 : 2;
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      bond(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1);
      bond(n - 3, n - 1, -1);
      break;
    case 'E': {
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      // Bourbaki: chain 1-3-4-5-6-7-8 with 2 attached to 4.
      const int chain[] = {1, 3, 4, 5, 6, 7, 8};
      for (int k = 0; k + 1 < 7; ++k) {
        if (chain[k] <= n && chain[k + 1] <= n) bond(chain[k] - 1, chain[k + 1] - 1, -1);
      }
      bond(2 - 1, 4 - 1, -1);
      break;
    }
    case 'F':
      g(0, 0) = 2;
      g(1, 1) = 2;
      g(2, 2) = 1;
      g(3, 3) = 1;
      bond(0, 1, -1);
      bond(1, 2, -1);
      bond(2, 3, Rational(-1, 2));
      break;
    case 'G':
      g(0, 0) = 2;
      g(1, 1) = 6;
      bond(0, 1, -3);
      break;
    default:
      throw InputError(std::string("unknown family: ") + family);
  }
  return g;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

unsigned long long family_weyl_order(char family, int n) {
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840ULL : (n == 7 ? 2903040ULL : 696729600ULL);
    case 'F': return 1152ULL;
    case 'G': return 12ULL;
  }
  return 0;
}

}  // namespace

std::shared_ptr<const RootSystemSpec> RootSystemSpec::parse(
    const std::string& text, std::vector<Rational> scale) {
  auto spec = std::shared_ptr<RootSystemSpec>(new RootSystemSpec());
  size_t pos = 0;
  std::string canon;
  while (pos < text.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    auto it = family_table().find(fam);
    if (it == family_table().end()) {
      throw InputError("root system grammar: expected family letter A-G at '" +
                       text.substr(pos) + "'");
    }
    ++pos;
    size_t digits = 0;
    int r = 0;
    while (pos + digits < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + digits]))) {
      r = r * 10 + (text[pos + digits] - '0');
      ++digits;
    }
    if (digits == 0) throw InputError("root system grammar: missing rank after " + std::string(1, fam));
    pos += digits;
    if (r < it->second.min_rank || (it->second.max_rank > 0 && r > it->second.max_rank)) {
      throw InputError("rank out of range for family " + std::string(1, fam) + ": " +
                       std::to_string(r));
    }
    spec->components_.push_back({fam, r, spec->rank_});
    spec->rank_ += r;
    if (!canon.empty()) canon += 'x';
    canon += fam;
    canon += std::to_string(r);
    if (pos < text.size()) {
      char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
      if (sep != 'x') throw InputError("root system grammar: expected 'x' separator");
      ++pos;
      if (pos == text.size()) throw InputError("root system grammar: trailing separator");
    }
  }
  if (spec->components_.empty()) throw InputError("empty root system string");
  spec->name_ = canon;
  if (scale.empty()) scale.assign(spec->components_.size(), Rational(1));
  if (scale.size() != spec->components_.size()) {
    throw InputError("scale list must have one entry per component");
  }
  for (const Rational& s : scale) {
    if (s <= 0) throw InputError("scale factors must be positive");
  }
  spec->scale_ = std::move(scale);
  spec->finish();
  return spec;
}

void RootSystemSpec::finish() {
  const int n = rank_;
  gram_ = RMat::Zero(n, n);
  for (size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    RMat block = family_gram(comp.family, comp.rank) * scale_[c];
    gram_.block(comp.offset, comp.offset, comp.rank, comp.rank) = block;
  }
  cartan_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational v = 2 * gram_(i, j) / gram_(j, j);
      Integer den = boost::multiprecision::denominator(v);
      if (den != 1) throw std::logic_error("non-integral Cartan entry");
      cartan_(i, j) = static_cast<int>(boost::multiprecision::numerator(v));
    }
  }
  // weight_gram = C^{-1} G C^{-T}: with x = C^T y (x fundamental coords of
  // sum y_i alpha_i) we get (nu | eta) = x^T weight_gram x'.
  RMat cr(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cr(i, j) = Rational(cartan_(i, j));
  RMat cinv = inverse(cr);
  weight_gram_ = cinv * gram_ * cinv.transpose();

  key_ = name_ + "|scale=";
  for (const Rational& s : scale_) {
    key_ += rational_str(s);
    key_ += ',';
  }

  // Positive roots: the W-orbits of the simple roots, positive half.
  // Simple-root coordinates of a vector with fundamental coords x are
  // y = C^{-T} x; a root is positive iff y >= 0.
  RMat cinv_t = cinv.transpose();
  std::set<RVec, RVecLexLess> all;
  std::deque<RVec> queue;
  for (int i = 0; i < n; ++i) {
    RVec alpha(n);
    for (int j = 0; j < n; ++j) alpha(j) = Rational(cartan_(i, j));
    if (all.insert(alpha).second) queue.push_back(alpha);
  }
  while (!queue.empty()) {
    RVec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (v(i) == 0) continue;
      RVec w = v;
      Rational c = v(i);
      for (int j = 0; j < n; ++j) w(j) -= c * Rational(cartan_(i, j));
      if (all.insert(w).second) queue.push_back(w);
    }
  }
  root_set_ = all;
  for (const RVec& r : all) {
    RVec y = cinv_t * r;
    bool nonneg = true;
    for (int j = 0; j < n; ++j) {
      if (y(j) < 0) {
        nonneg = false;
        break;
      }
    }
    if (nonneg) positive_roots_.push_back(r);
  }
}

unsigned long long RootSystemSpec::weyl_order() const {
  unsigned long long order = 1;
  for (const auto& comp : components_) order *= family_weyl_order(comp.family, comp.rank);
  return order;
}

bool WeightVec::is_integral() const {
  for (int i = 0; i < size(); ++i) {
    if (boost::multiprecision::denominator(coords_(i)) != 1) return false;
  }
  return true;
}

bool WeightVec::is_dominant() const {
  for (int i = 0; i < size(); ++i) {
    if (coords_(i) < 0) return false;
  }
  return true;
}

WeightVec WeightVec::operator+(const WeightVec& other) const {
  if (system_->key() != other.system_->key()) throw InputError("mismatched root systems");
  return WeightVec(system_, coords_ + other.coords_);
}

WeightVec WeightVec::operator-(const WeightVec& other) const {
  if (system_->key() != other.system_->key()) throw InputError("mismatched root systems");
  return WeightVec(system_, coords_ - other.coords_);
}

bool WeightVec::operator==(const WeightVec& other) const {
  return system_->key() == other.system_->key() && coords_ == other.coords_;
}

WeightVec make_weight(const SpecPtr& spec, const std::vector<Rational>& coords) {
  RVec v(spec->rank());
  if (static_cast<int>(coords.size()) != spec->rank()) {
    throw InputError("weight has " + std::to_string(coords.size()) +
                     " coordinates, system rank is " + std::to_string(spec->rank()));
  }
  for (int i = 0; i < spec->rank(); ++i) v(i) = coords[i];
  return WeightVec(spec, v);
}

WeightVec zero_weight(const SpecPtr& spec) {
  return WeightVec(spec, RVec::Zero(spec->rank()));
}

WeightVec fundamental_weight(const SpecPtr& spec, int i) {
  RVec v = RVec::Zero(spec->rank());
  v(i) = 1;
  return WeightVec(spec, v);
}

WeightVec simple_root(const SpecPtr& spec, int i) {
  RVec v(spec->rank());
  for (int j = 0; j < spec->rank(); ++j) v(j) = Rational(spec->cartan()(i, j));
  return WeightVec(spec, v);
}

Rational pairing(const WeightVec& nu, const WeightVec& eta) {
  if (nu.system()->key() != eta.system()->key()) throw InputError("mismatched root systems");
  return nu.coords().dot(nu.system()->weight_gram() * eta.coords());
}

Rational norm2(const WeightVec& nu) { return pairing(nu, nu); }

Rational cartan_integer(const WeightVec& alpha, const WeightVec& nu) {
  if (!is_root(alpha)) throw InputError("cartan_integer: alpha is not a root");
  return 2 * pairing(alpha, nu) / norm2(alpha);
}

WeightVec reflect(const WeightVec& alpha, const WeightVec& nu) {
  if (!is_root(alpha)) throw InputError("reflect: alpha is not a root");
  return nu - alpha * cartan_integer(alpha, nu);
}

WeightVec reflect_simple(int i, const WeightVec& nu) {
  RVec out = nu.coords();
  Rational c = out(i);
  if (c != 0) {
    const auto& cartan = nu.system()->cartan();
    for (int j = 0; j < nu.size(); ++j) out(j) -= c * Rational(cartan(i, j));
  }
  return WeightVec(nu.system(), out);
}

bool is_root(const WeightVec& nu) {
  return nu.system()->root_set_.count(nu.coords()) > 0;
}

std::vector<WeightVec> weyl_orbit(const WeightVec& nu, const Budgets& budgets) {
  std::vector<int> all(nu.size());
  for (int i = 0; i < nu.size(); ++i) all[i] = i;
  Budgets b = budgets;
  b.wlambda = b.orbit;
  return stabilizer_orbit({nu}, all, b);
}

std::vector<WeightVec> stabilizer_orbit(const std::vector<WeightVec>& seeds,
                                        const std::vector<int>& pi0,
                                        const Budgets& budgets) {
  if (seeds.empty()) return {};
  const SpecPtr& spec = seeds.front().system();
  std::set<RVec, RVecLexLess> seen;
  std::deque<RVec> queue;
  for (const auto& s : seeds) {
    if (s.system()->key() != spec->key()) throw InputError("mismatched root systems");
    if (seen.insert(s.coords()).second) queue.push_back(s.coords());
  }
  const auto& cartan = spec->cartan();
  while (!queue.empty()) {
    RVec v = queue.front();
    queue.pop_front();
    for (int i : pi0) {
      Rational c = v(i);
      if (c == 0) continue;
      RVec w = v;
      for (int j = 0; j < spec->rank(); ++j) w(j) -= c * Rational(cartan(i, j));
      if (seen.insert(w).second) {
        if (seen.size() > budgets.wlambda) {
          throw BudgetError("orbit budget exceeded", seen.size());
        }
        queue.push_back(w);
      }
    }
  }
  std::vector<WeightVec> out;
  out.reserve(seen.size());
  for (const RVec& v : seen) out.emplace_back(spec, v);
  return out;
}

std::pair<WeightVec, std::vector<int>> dominant_representative(const WeightVec& nu) {
  WeightVec cur = nu;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < cur.size(); ++i) {
      if (cur.coord(i) < 0) {
        cur = reflect_simple(i, cur);
        word.push_back(i);
        changed = true;
        break;
      }
    }
  }
  return {cur, word};
}

WeightVec dual_highest_weight(const WeightVec& lambda) {
  if (!lambda.is_dominant()) throw InputError("dual_highest_weight expects a dominant weight");
  return dominant_representative(-lambda).first;
}

WeightVec SubSystem::restrict(const WeightVec& ambient_weight) const {
  RVec v(spec->rank());
  for (int i = 0; i < spec->rank(); ++i) v(i) = ambient_weight.coord(ambient_of_local[i]);
  return WeightVec(spec, v);
}

namespace {

// Classify a connected sub-Dynkin-diagram and order its nodes per Bourbaki.
// `bond(i, j)` = cartan(i,j) * cartan(j,i) and the asymmetry of the Cartan
// entries identifies short vs long ends.
struct ComponentClassifier {
  const Eigen::MatrixXi& cartan;
  std::vector<int> nodes;  // ambient indices

  int bond(int a, int b) const { return cartan(a, b) * cartan(b, a); }

  std::vector<int> neighbors(int a) const {
    std::vector<int> out;
    for (int b : nodes) {
      if (b != a && cartan(a, b) != 0) out.push_back(b);
    }
    return out;
  }

  // Walk a path graph starting from `start`, returning the node order.
  std::vector<int> walk_chain(int start) const {
    std::vector<int> order = {start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int b : neighbors(cur)) {
        if (b != prev) next = b;
      }
      if (next < 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    return order;
  }

  std::pair<char, std::vector<int>> classify() const {
    const int k = static_cast<int>(nodes.size());
    if (k == 1) return {'A', nodes};

    int max_bond = 1;
    std::vector<std::pair<int, int>> multi_edges;
    int fork = -1;
    for (int a : nodes) {
      if (neighbors(a).size() > 2) fork = a;
      for (int b : neighbors(a)) {
        if (a < b && bond(a, b) > 1) multi_edges.push_back({a, b});
        max_bond = std::max(max_bond, bond(a, b));
      }
    }

    if (max_bond == 3) {  // G2; the node with |cartan entry| 3 toward the other is long
      int a = nodes[0], b = nodes[1];
      int short_node = std::abs(cartan(a, b)) == 3 ? b : a;
      int long_node = short_node == a ? b : a;
      return {'G', {short_node, long_node}};
    }

    if (max_bond == 2) {
      auto [u, v] = multi_edges.front();
      // cartan(u, v) = -2 means v is the short root of the double bond.
      int short_end = cartan(u, v) == -2 ? v : u;
      int long_end = short_end == u ? v : u;
      if (k == 2) {
        // B2 canonical: alpha_1 long, alpha_2 short.
        return {'B', {long_end, short_end}};
      }
      // Chain; orient from the end farther from the double bond.
      std::vector<int> ends;
      for (int a : nodes) {
        if (neighbors(a).size() == 1) ends.push_back(a);
      }
      if (ends.size() != 2 || fork >= 0) throw std::logic_error("unrecognized diagram");
      auto order = walk_chain(ends[0]);
      // F4: double bond in the middle, ordered long-long-short-short.
      bool interior = true;
      for (int e : ends) {
        if (e == short_end || e == long_end) interior = false;
      }
      if (interior) {
        if (k != 4) throw std::logic_error("unrecognized diagram");
        // Bourbaki F4 starts at the long end.
        if (cartan(order[1], order[2]) != -2) std::reverse(order.begin(), order.end());
        return {'F', order};
      }
      // B: short root at the end; C: long root at the end.
      if (neighbors(short_end).size() == 1) {
        if (order.back() != short_end) std::reverse(order.begin(), order.end());
        return {'B', order};
      }
      if (order.back() != long_end) std::reverse(order.begin(), order.end());
      return {'C', order};
    }

    // Simply laced: A (path), D (fork with two length-1 branches), E.
    if (fork < 0) {
      std::vector<int> ends;
      for (int a : nodes) {
        if (neighbors(a).size() <= 1) ends.push_back(a);
      }
      auto order = walk_chain(ends.front());
      // Either orientation gives the same Cartan matrix; pick the
      // lexicographically smaller ambient sequence for determinism.
      std::vector<int> rev(order.rbegin(), order.rend());
      return {'A', std::min(order, rev)};
    }
    // Branch lengths from the fork node.
    std::vector<std::vector<int>> branches;
    for (int b : neighbors(fork)) {
      std::vector<int> branch = {b};
      int prev = fork, cur = b;
      while (true) {
        int next = -1;
        for (int c : neighbors(cur)) {
          if (c != prev) next = c;
        }
        if (next < 0) break;
        branch.push_back(next);
        prev = cur;
        cur = next;
      }
      branches.push_back(branch);
    }
    if (branches.size() != 3) throw std::logic_error("unrecognized diagram");
    std::sort(branches.begin(), branches.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    size_t l0 = branches[0].size(), l1 = branches[1].size(), l2 = branches[2].size();
    if (l0 == 1 && l1 == 1) {
      // D_k: long branch then fork, two short branches last (Bourbaki).
      std::vector<int> order(branches[2].rbegin(), branches[2].rend());
      order.push_back(fork);
      // Tie-break the two end nodes deterministically.
      int x = branches[0][0], y = branches[1][0];
      order.push_back(std::min(x, y));
      order.push_back(std::max(x, y));
      return {'D', order};
    }
    if (l0 == 1 && l1 == 2 && l2 <= 4) {
      // E6/E7/E8, Bourbaki: alpha_2 is the short branch off alpha_4.
      std::vector<int> order;
      order.push_back(branches[1][1]);  // alpha_1
      order.push_back(branches[0][0]);  // alpha_2
      order.push_back(branches[1][0]);  // alpha_3
      order.push_back(fork);            // alpha_4
      for (int a : branches[2]) order.push_back(a);
      return {'E', order};
    }
    throw std::logic_error("unrecognized diagram");
  }
};

}  // namespace

SubSystem sub_root_system(const SpecPtr& spec, const std::vector<int>& simple_indices) {
  // Connected components of the induced diagram.
  std::vector<int> sorted = simple_indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> used(sorted.size(), false);
  std::vector<std::vector<int>> comps;
  for (size_t s = 0; s < sorted.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp;
    std::deque<size_t> queue = {s};
    used[s] = true;
    while (!queue.empty()) {
      size_t cur = queue.front();
      queue.pop_front();
      comp.push_back(sorted[cur]);
      for (size_t t = 0; t < sorted.size(); ++t) {
        if (!used[t] && spec->cartan()(sorted[cur], sorted[t]) != 0) {
          used[t] = true;
          queue.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());

  SubSystem out;
  std::string name;
  for (const auto& comp : comps) {
    ComponentClassifier cls{spec->cartan(), comp};
    auto [family, order] = cls.classify();
    if (!name.empty()) name += 'x';
    name += family;
    name += std::to_string(order.size());
    for (int ambient : order) out.ambient_of_local.push_back(ambient);
  }
  if (name.empty()) {
    out.spec = nullptr;
    return out;
  }
  out.spec = RootSystemSpec::parse(name);
  return out;
}

}  // namespace atlas
