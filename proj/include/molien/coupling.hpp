#pragma once

#include <map>

#include "molien/series.hpp"

namespace molien {

/// Values of L_B allowed when coupling L_A with L_B to L: |L - L_A| <= L_B <= L + L_A.
struct TriangleRange {
    int l_a = 0;
    int l = 0;

    int lower() const { return l > l_a ? l - l_a : l_a - l; }
    int upper() const { return l + l_a; }
    bool contains(int l_b) const { return l_b >= lower() && l_b <= upper(); }
};

/// Multiplicity of (L) in (L_A) x (L_B): 1 inside the triangle, else 0.
int coupling_multiplicity(int l, int l_a, int l_b);

/// Series of g(N, L) through lambda^order built by coupling one vector with
/// N - 1 vectors, starting from lambda^L / (1 - lambda^2) for a single vector.
TruncatedSeries couple_series(int n_vectors, int target_l, int order);

/// couple_series for every L in [0, max_l]; empty when max_l < 0.
std::map<int, TruncatedSeries> memoized_series_table(int n_vectors, int max_l, int order);

}  // namespace molien
