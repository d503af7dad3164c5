#ifndef LSA_ENERGY_HPP
#define LSA_ENERGY_HPP

#include <cstdint>
#include <vector>

#include "lsa/errors.hpp"

namespace lsa {

/// Binary assignment over variables. Entry values are 0 or 1; by convention
/// 1 means foreground.
struct Labeling {
  std::vector<std::uint8_t> bits;

  Labeling() = default;
  explicit Labeling(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static Labeling zeros(int n) { return Labeling(std::vector<std::uint8_t>(n, 0)); }
  static Labeling ones(int n) { return Labeling(std::vector<std::uint8_t>(n, 1)); }

  int size() const { return static_cast<int>(bits.size()); }
  std::uint8_t operator[](int p) const { return bits[p]; }
  std::uint8_t& operator[](int p) { return bits[p]; }

  bool operator==(const Labeling&) const = default;
};

/// One pairwise term w * s_p * s_q with p < q. Each unordered pair is stored
/// once; relative to a symmetric coefficient matrix m, w equals m_pq + m_qp.
struct PairTerm {
  int p = 0;
  int q = 0;
  double w = 0.0;
};

/// Quadratic pseudo-Boolean energy
///
///   E(S) = constant + sum_p unary[p]*s_p + sum_{p<q} w_pq*s_p*s_q.
///
/// Immutable after construction; safe to share read-only across solver
/// instances. The constructor canonicalizes the pair list (sorted
/// lexicographically) and rejects duplicates, out-of-range indices, p >= q,
/// and non-finite coefficients.
///
/// Evaluation order is deterministic: unaries ascending by index, then
/// pairwise terms ascending lexicographically, with nonpositive and positive
/// pair coefficients kept in separate accumulators. Splitting by sign makes
/// the submodular/supermodular decomposition reconstruct the original
/// evaluation bit-for-bit.
class BinaryEnergy {
public:
  BinaryEnergy() = default;
  BinaryEnergy(int num_vars, std::vector<double> unary,
               std::vector<PairTerm> pairwise, double constant);

  int num_vars() const { return num_vars_; }
  double constant() const { return constant_; }
  const std::vector<double>& unary() const { return unary_; }
  const std::vector<PairTerm>& pairwise() const { return pairwise_; }

private:
  int num_vars_ = 0;
  std::vector<double> unary_;
  std::vector<PairTerm> pairwise_;
  double constant_ = 0.0;
};

/// Accumulating constructor for BinaryEnergy. Repeated add_pair calls on the
/// same unordered pair sum their coefficients; a diagonal term (p == q) is
/// folded into the unary since s*s = s.
class EnergyBuilder {
public:
  explicit EnergyBuilder(int num_vars);

  void add_constant(double c) { constant_ += c; }
  void add_unary(int p, double u);
  void add_pair(int p, int q, double w);

  BinaryEnergy build() const;

private:
  int num_vars_;
  std::vector<double> unary_;
  std::vector<PairTerm> pairs_;  // unsorted, possibly duplicated
  double constant_ = 0.0;
};

/// A linear function of a labeling: constant + sum_p unary[p]*s_p.
struct LinearTerms {
  std::vector<double> unary;
  double constant = 0.0;
};

/// A labeling together with its exact energy under the minimized objective.
struct MinimizeResult {
  Labeling labeling;
  double energy = 0.0;
};

/// Split of an energy into a submodular part (all pairwise w <= 0, carrying
/// the full unary vector and constant) and the positive pair coefficients.
/// eval_energy(sub, S) + sup term sum reconstructs eval_energy(original, S)
/// exactly.
struct Decomposition {
  BinaryEnergy sub;
  std::vector<PairTerm> sup_pairs;  // all w > 0, lexicographically sorted
};

double eval_energy(const BinaryEnergy& e, const Labeling& s);

Decomposition decompose(const BinaryEnergy& e);

/// Number of positions where the two labelings differ.
int hamming(const Labeling& a, const Labeling& b);

/// Unary representation of the scaled Hamming distance to s0: returns (d, c)
/// with c + sum_p d_p*s_p = lambda * hamming(S, s0) for every labeling S.
LinearTerms hamming_unaries(const Labeling& s0, double lambda);

}

#endif
