#include "graphsearch/median.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphsearch {

WeightVector WeightVector::uniform(const CandidateSet& support) {
    WeightVector w;
    w.mu_.assign(static_cast<std::size_t>(support.universe()), 0.0);
    const int k = support.size();
    if (k == 0) {
        w.log2_total_ = -std::numeric_limits<double>::infinity();
        return w;
    }
    const double share = 1.0 / k;
    support.for_each([&](int v) { w.mu_[static_cast<std::size_t>(v)] = share; });
    w.log2_total_ = 0.0;
    return w;
}

WeightVector WeightVector::from_raw(std::vector<double> raw) {
    WeightVector w;
    w.mu_ = std::move(raw);
    double total = 0.0;
    for (double x : w.mu_) {
        if (x < 0.0 || !std::isfinite(x)) throw std::invalid_argument("weights must be finite and >= 0");
        total += x;
    }
    if (total <= 0.0) {
        std::fill(w.mu_.begin(), w.mu_.end(), 0.0);
        w.log2_total_ = -std::numeric_limits<double>::infinity();
        return w;
    }
    for (double& x : w.mu_) x /= total;
    w.log2_total_ = std::log2(total);
    return w;
}

bool WeightVector::empty() const {
    return std::all_of(mu_.begin(), mu_.end(), [](double x) { return x == 0.0; });
}

double WeightVector::mass(const CandidateSet& set) const {
    double total = 0.0;
    set.for_each([&](int v) { total += mu_[static_cast<std::size_t>(v)]; });
    return total;
}

void WeightVector::update(const CandidateSet& consistent, double p) {
    double total = 0.0;
    for (std::size_t v = 0; v < mu_.size(); ++v) {
        mu_[v] *= consistent.contains(static_cast<int>(v)) ? p : 1.0 - p;
        total += mu_[v];
    }
    renormalize(total);
}

void WeightVector::zero(int v) {
    const double removed = mu_[static_cast<std::size_t>(v)];
    mu_[static_cast<std::size_t>(v)] = 0.0;
    renormalize(1.0 - removed);
}

void WeightVector::renormalize(double total) {
    if (total <= 0.0) {
        std::fill(mu_.begin(), mu_.end(), 0.0);
        log2_total_ = -std::numeric_limits<double>::infinity();
        return;
    }
    for (double& x : mu_) x /= total;
    log2_total_ += std::log2(total);
}

std::int64_t potential(const DistanceMatrix& dist, const CandidateSet& s, int u) {
    if (s.empty()) throw std::invalid_argument("potential: empty candidate set");
    const auto row = dist.row(u);
    __int128 total = 0;
    s.for_each([&](int v) { total += row[static_cast<std::size_t>(v)]; });
    if (total > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("potential exceeds int64 range");
    return static_cast<std::int64_t>(total);
}

int median(const DistanceMatrix& dist, const CandidateSet& s) {
    if (s.empty()) throw std::invalid_argument("median: empty candidate set");
    const int n = dist.n();
    int best = 0;
    __int128 best_phi = std::numeric_limits<__int128>::max();
    for (int u = 0; u < n; ++u) {
        const auto row = dist.row(u);
        __int128 phi = 0;
        s.for_each([&](int v) { phi += row[static_cast<std::size_t>(v)]; });
        if (phi < best_phi) {
            best_phi = phi;
            best = u;
        }
    }
    return best;
}

double weighted_potential(const DistanceMatrix& dist, const WeightVector& mu, int u) {
    if (mu.empty()) throw std::invalid_argument("weighted_potential: empty support");
    const auto row = dist.row_d(u);
    const auto& w = mu.values();
    double phi = 0.0;
    for (std::size_t v = 0; v < w.size(); ++v) phi += w[v] * row[v];
    return phi;
}

int weighted_median(const DistanceMatrix& dist, const WeightVector& mu) {
    if (mu.empty()) throw std::invalid_argument("weighted_median: empty support");
    const int n = dist.n();
    const auto& w = mu.values();
    // Zero entries contribute an exact +0.0, so restricting the scan to
    // the support leaves the ascending-id sum bitwise unchanged.
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
        if (w[static_cast<std::size_t>(v)] != 0.0) support.push_back(v);
    const bool dense = static_cast<int>(support.size()) * 2 > n;
    int best = 0;
    double best_phi = std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
        const auto row = dist.row_d(u);
        double phi = 0.0;
        if (dense) {
            for (std::size_t v = 0; v < w.size(); ++v) phi += w[v] * row[v];
        } else {
            for (int v : support) phi += w[static_cast<std::size_t>(v)] * row[static_cast<std::size_t>(v)];
        }
        if (phi < best_phi) {
            best_phi = phi;
            best = u;
        }
    }
    return best;
}

std::int64_t dir_potential(const DistanceMatrix& dist, const CandidateSet& s, int v) {
    if (s.empty()) throw std::invalid_argument("dir_potential: empty candidate set");
    const auto row = dist.row(v);
    std::vector<std::int64_t> ds;
    ds.reserve(static_cast<std::size_t>(s.size()));
    s.for_each([&](int w) { ds.push_back(row[static_cast<std::size_t>(w)]); });
    // Need |S intersect Gamma_ell(v)| > |S|/2, i.e. at least floor(|S|/2)+1
    // members within distance ell; the smallest such ell is the
    // (floor(|S|/2)+1)-th smallest distance.
    const auto nth = ds.begin() + ds.size() / 2;
    std::nth_element(ds.begin(), nth, ds.end());
    return *nth;
}

int dir_median(const DistanceMatrix& dist, const CandidateSet& s) {
    if (s.empty()) throw std::invalid_argument("dir_median: empty candidate set");
    const int n = dist.n();
    int best = 0;
    std::int64_t best_phi = std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < n; ++v) {
        const std::int64_t phi = dir_potential(dist, s, v);
        if (phi < best_phi) {
            best_phi = phi;
            best = v;
        }
    }
    return best;
}

} // namespace graphsearch
