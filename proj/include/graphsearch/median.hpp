#pragma once

#include "graphsearch/graph.hpp"

#include <cstdint>
#include <vector>

namespace graphsearch {

// Per-vertex likelihood weights, kept normalized to sum 1 over the
// support (or all-zero). The log2 of the true unnormalized total is
// tracked separately so (1-p)^K over hundreds of iterations cannot
// underflow; median selection and marking depend only on weight ratios.
class WeightVector {
public:
    static WeightVector uniform(const CandidateSet& support);
    // Normalizes a raw nonnegative vector; log2_total starts at log2(sum).
    static WeightVector from_raw(std::vector<double> raw);

    int n() const { return static_cast<int>(mu_.size()); }
    double at(int v) const { return mu_[static_cast<std::size_t>(v)]; }
    const std::vector<double>& values() const { return mu_; }
    // -infinity when the support is empty.
    double log2_total() const { return log2_total_; }
    bool empty() const;

    // Sum of normalized weights over the members of `set`, accumulated in
    // ascending vertex id order.
    double mass(const CandidateSet& set) const;

    // Multiplies members of `consistent` by p and everything else by 1-p,
    // then renormalizes; log2_total absorbs the shrink factor.
    void update(const CandidateSet& consistent, double p);
    // Marking: zeroes v and renormalizes the remainder.
    void zero(int v);

private:
    std::vector<double> mu_;
    double log2_total_ = 0.0;
    void renormalize(double removed_or_total);
};

// Phi(S,u) = sum over v in S of d(u,v), exact.
std::int64_t potential(const DistanceMatrix& dist, const CandidateSet& s, int u);
// Vertex minimizing Phi(S,.) over ALL of V (it need not lie in S);
// ties broken by lowest vertex id.
int median(const DistanceMatrix& dist, const CandidateSet& s);

// Phi_mu(u) = sum over v of mu(v) d(u,v) on normalized weights,
// accumulated in ascending vertex id order.
double weighted_potential(const DistanceMatrix& dist, const WeightVector& mu, int u);
int weighted_median(const DistanceMatrix& dist, const WeightVector& mu);

// Minimal distance ell such that strictly more than half of S lies
// within distance ell of v.
std::int64_t dir_potential(const DistanceMatrix& dist, const CandidateSet& s, int v);
int dir_median(const DistanceMatrix& dist, const CandidateSet& s);

} // namespace graphsearch
