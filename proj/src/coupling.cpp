#include "molien/coupling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace molien {

int coupling_multiplicity(int l, int l_a, int l_b) {
    if (l < 0 || l_a < 0 || l_b < 0) {
        return 0;
    }
    return TriangleRange{l_a, l}.contains(l_b) ? 1 : 0;
}

namespace {

TruncatedSeries one_vector_series(int l, int order) {
    std::vector<ExactRational> c(static_cast<std::size_t>(order + 1));
    for (int d = l; d <= order; d += 2) {
        c[static_cast<std::size_t>(d)] = 1;
    }
    return TruncatedSeries(order, std::move(c));
}

// table[L] for L = 0..order; g(N, L) has no terms below lambda^L so larger L vanish.
std::vector<TruncatedSeries> full_table(int n_vectors, int order) {
    std::vector<TruncatedSeries> single;
    for (int l = 0; l <= order; ++l) {
        single.push_back(one_vector_series(l, order));
    }
    std::vector<TruncatedSeries> current = single;
    for (int n = 2; n <= n_vectors; ++n) {
        // prefix[k] = current[0] + ... + current[k-1]
        std::vector<TruncatedSeries> prefix{TruncatedSeries(order)};
        for (const TruncatedSeries& s : current) {
            prefix.push_back(prefix.back() + s);
        }
        std::vector<TruncatedSeries> next;
        for (int l = 0; l <= order; ++l) {
            TruncatedSeries sum(order);
            for (int l_a = 0; l_a <= order; ++l_a) {
                const TriangleRange range{l_a, l};
                if (range.lower() > order) {
                    continue;
                }
                const int upper = std::min(range.upper(), order);
                sum += single[static_cast<std::size_t>(l_a)] *
                       (prefix[static_cast<std::size_t>(upper + 1)] - prefix[static_cast<std::size_t>(range.lower())]);
            }
            next.push_back(std::move(sum));
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace

TruncatedSeries couple_series(int n_vectors, int target_l, int order) {
    if (n_vectors < 1 || target_l < 0 || order < 0) {
        throw std::invalid_argument("couple_series: need N >= 1, L >= 0, order >= 0");
    }
    if (target_l > order) {
        return TruncatedSeries(order);
    }
    return full_table(n_vectors, order)[static_cast<std::size_t>(target_l)];
}

std::map<int, TruncatedSeries> memoized_series_table(int n_vectors, int max_l, int order) {
    if (n_vectors < 1 || order < 0) {
        throw std::invalid_argument("memoized_series_table: need N >= 1, order >= 0");
    }
    std::map<int, TruncatedSeries> out;
    if (max_l < 0) {
        return out;
    }
    const std::vector<TruncatedSeries> table = full_table(n_vectors, order);
    for (int l = 0; l <= max_l; ++l) {
        out.emplace(l, l <= order ? table[static_cast<std::size_t>(l)] : TruncatedSeries(order));
    }
    return out;
}

}  // namespace molien
