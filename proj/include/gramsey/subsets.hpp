#ifndef GRAMSEY_SUBSETS_HPP
#define GRAMSEY_SUBSETS_HPP

#include <cstdint>
#include <vector>

namespace gramsey {

// Advances c to the next k-subset of {0..n-1} in lexicographic order.
// Returns false (leaving c unspecified) when c was the last subset.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order until
// f returns false.
template <typename F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        std::vector<int> empty;
        f(static_cast<const std::vector<int>&>(empty));
        return;
    }
    std::vector<int> c = first_combination(k);
    do {
        if (!f(static_cast<const std::vector<int>&>(c))) return;
    } while (next_combination(c, n));
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace gramsey

#endif
