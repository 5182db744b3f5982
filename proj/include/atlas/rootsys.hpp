#pragma once

#include "atlas/rational.hpp"

#include <memory>
#include <set>
#include <utility>

namespace atlas {

struct SimpleComponent {
  char family;  // 'A'..'G'
  int rank;
  int offset;  // index of the component's first simple root
};

// Immutable description of a product of simple root systems.
//
// Conventions:
//   * Bourbaki numbering of simple roots within each component.
//   * cartan.row(i) holds the fundamental coordinates of alpha_i, so
//     cartan(i, j) = 2 (alpha_i | alpha_j) / (alpha_j | alpha_j).
//   * gram(i, j) = (alpha_i | alpha_j) in the standard epsilon realization
//     (A/D/E roots have squared norm 2; B: long 2 / short 1; C: short 2 /
//     long 4; F4: long 2 / short 1; G2: short 2 / long 6), multiplied by the
//     per-component `scale` factor. The invariant form of the paper is
//     canonical only up to such a factor; every quantity this library
//     reports is either scale-invariant or labeled with the scale used.
class RootSystemSpec : public std::enable_shared_from_this<RootSystemSpec> {
 public:
  static std::shared_ptr<const RootSystemSpec> parse(
      const std::string& text, std::vector<Rational> scale = {});

  int rank() const { return rank_; }
  const std::vector<SimpleComponent>& components() const { return components_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  const RMat& gram() const { return gram_; }
  // Gram matrix of the fundamental weights; pairings of weights given in
  // fundamental coordinates go through this matrix.
  const RMat& weight_gram() const { return weight_gram_; }
  const std::vector<Rational>& scale() const { return scale_; }
  const std::string& name() const { return name_; }
  // name + scale; two specs interoperate iff their keys agree
  const std::string& key() const { return key_; }

  unsigned long long weyl_order() const;

  // Positive roots in fundamental coordinates, canonically sorted.
  const std::vector<RVec>& positive_roots() const { return positive_roots_; }

 private:
  RootSystemSpec() = default;
  void finish();  // derives gram/cartan/weight_gram/roots

  std::vector<SimpleComponent> components_;
  int rank_ = 0;
  Eigen::MatrixXi cartan_;
  RMat gram_;
  RMat weight_gram_;
  std::vector<Rational> scale_;
  std::string name_;
  std::string key_;
  std::vector<RVec> positive_roots_;
  std::set<RVec, RVecLexLess> root_set_;  // positive and negative

  friend bool is_root(const class WeightVec& nu);
};

using SpecPtr = std::shared_ptr<const RootSystemSpec>;

// A vector in the fundamental-weight basis of a RootSystemSpec. All
// arithmetic is exact.
class WeightVec {
 public:
  WeightVec() = default;
  WeightVec(SpecPtr system, RVec coords)
      : system_(std::move(system)), coords_(std::move(coords)) {
    if (coords_.size() != system_->rank()) {
      throw InputError("weight dimension does not match system rank");
    }
  }

  const SpecPtr& system() const { return system_; }
  const RVec& coords() const { return coords_; }
  Rational coord(int i) const { return coords_(i); }
  int size() const { return static_cast<int>(coords_.size()); }

  bool is_integral() const;
  bool is_dominant() const;
  bool is_zero() const { return coords_.isZero(); }

  WeightVec operator+(const WeightVec& other) const;
  WeightVec operator-(const WeightVec& other) const;
  WeightVec operator-() const { return WeightVec(system_, -coords_); }
  WeightVec operator*(const Rational& s) const { return WeightVec(system_, coords_ * s); }
  bool operator==(const WeightVec& other) const;
  bool operator!=(const WeightVec& other) const { return !(*this == other); }

 private:
  SpecPtr system_;
  RVec coords_;
};

struct WeightVecLexLess {
  bool operator()(const WeightVec& a, const WeightVec& b) const {
    return lex_less(a.coords(), b.coords());
  }
};

WeightVec make_weight(const SpecPtr& spec, const std::vector<Rational>& coords);
WeightVec zero_weight(const SpecPtr& spec);
WeightVec fundamental_weight(const SpecPtr& spec, int i);
WeightVec simple_root(const SpecPtr& spec, int i);

// The invariant bilinear form.
Rational pairing(const WeightVec& nu, const WeightVec& eta);
Rational norm2(const WeightVec& nu);

// n_{alpha, nu} = 2 (alpha | nu) / (alpha | alpha); alpha must be a root.
// For a simple root alpha_i this is the i-th fundamental coordinate of nu.
Rational cartan_integer(const WeightVec& alpha, const WeightVec& nu);

// s_alpha nu = nu - n_{alpha, nu} alpha for a root alpha.
WeightVec reflect(const WeightVec& alpha, const WeightVec& nu);
// Reflection in the i-th simple root; works on arbitrary rational vectors.
WeightVec reflect_simple(int i, const WeightVec& nu);

bool is_root(const WeightVec& nu);

// Breadth-first orbit under all simple reflections; canonically sorted.
std::vector<WeightVec> weyl_orbit(const WeightVec& nu, const Budgets& budgets = {});

// Closure of a set under the reflections {s_gamma : gamma in pi0}.
std::vector<WeightVec> stabilizer_orbit(const std::vector<WeightVec>& seeds,
                                        const std::vector<int>& pi0,
                                        const Budgets& budgets = {});

// The dominant element of the orbit of nu, together with a word of simple
// reflection indices; applying them left to right to nu gives the result.
std::pair<WeightVec, std::vector<int>> dominant_representative(const WeightVec& nu);

// -w_0 lambda, the highest weight of the dual representation.
WeightVec dual_highest_weight(const WeightVec& lambda);

// --- sub-root-systems ------------------------------------------------------

// The root subsystem generated by a subset of the simple roots, classified
// into standard families with Bourbaki numbering.
struct SubSystem {
  SpecPtr spec;                   // standard-normalized spec of the subsystem
  std::vector<int> ambient_of_local;  // local simple-root index -> ambient index
  // Restrict an ambient weight: fundamental coordinates at the kept roots.
  WeightVec restrict(const WeightVec& ambient_weight) const;
};

SubSystem sub_root_system(const SpecPtr& spec, const std::vector<int>& simple_indices);

}  // namespace atlas
