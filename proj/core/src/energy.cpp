#include "lsa/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lsa {

BinaryEnergy::BinaryEnergy(int num_vars, std::vector<double> unary,
                           std::vector<PairTerm> pairwise, double constant)
: num_vars_(num_vars)
, unary_(std::move(unary))
, pairwise_(std::move(pairwise))
, constant_(constant)
{
  if (num_vars_ < 0)
    throw parameter_error("negative variable count");
  if (static_cast<int>(unary_.size()) != num_vars_)
    throw dimension_error("unary vector length " + std::to_string(unary_.size()) +
                          " does not match num_vars " + std::to_string(num_vars_));
  if (!std::isfinite(constant_))
    throw parameter_error("non-finite constant term");
  for (double u : unary_)
    if (!std::isfinite(u))
      throw parameter_error("non-finite unary coefficient");

  std::sort(pairwise_.begin(), pairwise_.end(), [](const PairTerm& a, const PairTerm& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  for (std::size_t i = 0; i < pairwise_.size(); ++i) {
    const PairTerm& t = pairwise_[i];
    if (t.p < 0 || t.q >= num_vars_)
      throw parameter_error("pair index out of range");
    if (t.p >= t.q)
      throw parameter_error("pair requires p < q");
    if (!std::isfinite(t.w))
      throw parameter_error("non-finite pairwise coefficient");
    if (i > 0 && pairwise_[i - 1].p == t.p && pairwise_[i - 1].q == t.q)
      throw parameter_error("duplicate pair (" + std::to_string(t.p) + "," +
                            std::to_string(t.q) + ")");
  }
}

EnergyBuilder::EnergyBuilder(int num_vars)
: num_vars_(num_vars)
, unary_(num_vars > 0 ? num_vars : 0, 0.0)
{
  if (num_vars < 0)
    throw parameter_error("negative variable count");
}

void EnergyBuilder::add_unary(int p, double u)
{
  if (p < 0 || p >= num_vars_)
    throw parameter_error("unary index out of range");
  unary_[p] += u;
}

void EnergyBuilder::add_pair(int p, int q, double w)
{
  if (p < 0 || p >= num_vars_ || q < 0 || q >= num_vars_)
    throw parameter_error("pair index out of range");
  if (p == q) {
    unary_[p] += w;  // s*s = s
    return;
  }
  if (p > q)
    std::swap(p, q);
  pairs_.push_back({p, q, w});
}

BinaryEnergy EnergyBuilder::build() const
{
  std::vector<PairTerm> sorted = pairs_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const PairTerm& a, const PairTerm& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  std::vector<PairTerm> merged;
  merged.reserve(sorted.size());
  for (const PairTerm& t : sorted) {
    if (!merged.empty() && merged.back().p == t.p && merged.back().q == t.q)
      merged.back().w += t.w;
    else
      merged.push_back(t);
  }
  return BinaryEnergy(num_vars_, unary_, std::move(merged), constant_);
}

double eval_energy(const BinaryEnergy& e, const Labeling& s)
{
  if (s.size() != e.num_vars())
    throw dimension_error("labeling length " + std::to_string(s.size()) +
                          " does not match num_vars " + std::to_string(e.num_vars()));
  double unary_acc = 0.0;
  const std::vector<double>& u = e.unary();
  for (int p = 0; p < e.num_vars(); ++p)
    if (s[p])
      unary_acc += u[p];

  // Nonpositive and positive pair coefficients accumulate separately so that
  // eval(sub) + sup-sum equals eval(original) bit-for-bit.
  double neg_acc = 0.0;
  double pos_acc = 0.0;
  for (const PairTerm& t : e.pairwise())
    if (s[t.p] && s[t.q])
      (t.w <= 0.0 ? neg_acc : pos_acc) += t.w;

  return ((e.constant() + unary_acc) + neg_acc) + pos_acc;
}

Decomposition decompose(const BinaryEnergy& e)
{
  std::vector<PairTerm> sub_pairs;
  std::vector<PairTerm> sup_pairs;
  for (const PairTerm& t : e.pairwise())
    (t.w <= 0.0 ? sub_pairs : sup_pairs).push_back(t);
  Decomposition dec;
  dec.sub = BinaryEnergy(e.num_vars(), e.unary(), std::move(sub_pairs), e.constant());
  dec.sup_pairs = std::move(sup_pairs);
  return dec;
}

int hamming(const Labeling& a, const Labeling& b)
{
  if (a.size() != b.size())
    throw dimension_error("labeling lengths differ");
  int d = 0;
  for (int p = 0; p < a.size(); ++p)
    d += a[p] != b[p];
  return d;
}

LinearTerms hamming_unaries(const Labeling& s0, double lambda)
{
  if (lambda < 0.0)
    throw parameter_error("hamming_unaries requires lambda >= 0");
  LinearTerms out;
  out.unary.resize(s0.size());
  int ones = 0;
  for (int p = 0; p < s0.size(); ++p) {
    out.unary[p] = s0[p] ? -lambda : lambda;
    ones += s0[p];
  }
  out.constant = lambda * ones;
  return out;
}

}
