#include "adem/ez.hpp"

#include <map>
#include <mutex>

namespace adem {

namespace {

std::vector<ShufflePartition> enumerate_shuffles(int p, int q) {
    std::vector<ShufflePartition> out;
    const int n = p + q;
    // iterate over p-subsets of {0..n-1} in lexicographic order
    ShufflePartition::Index alpha(p);
    for (int i = 0; i < p; ++i) alpha[i] = i;
    while (true) {
        ShufflePartition sf;
        sf.alpha = alpha;
        int ai = 0;
        for (int v = 0; v < n; ++v) {
            if (ai < p && alpha[ai] == v)
                ++ai;
            else
                sf.beta.push_back(v);
        }
        for (int i = 0; i < p; ++i) sf.signature += alpha[i] - i;
        out.push_back(std::move(sf));
        if (p == 0) break;
        // next p-subset
        int k = p - 1;
        while (k >= 0 && alpha[k] == n - p + k) --k;
        if (k < 0) break;
        ++alpha[k];
        for (int j = k + 1; j < p; ++j) alpha[j] = alpha[j - 1] + 1;
    }
    return out;
}

constexpr int kShuffleCacheSize = 20;

}  // namespace

const std::vector<ShufflePartition>& shuffles(int p, int q) {
    if (p < kShuffleCacheSize && q < kShuffleCacheSize) {
        static std::vector<ShufflePartition> table[kShuffleCacheSize]
                                                  [kShuffleCacheSize];
        static std::once_flag flags[kShuffleCacheSize][kShuffleCacheSize];
        std::call_once(flags[p][q],
                       [&] { table[p][q] = enumerate_shuffles(p, q); });
        return table[p][q];
    }
    static std::mutex big_mutex;
    static std::map<std::pair<int, int>, std::vector<ShufflePartition>> big;
    std::lock_guard<std::mutex> lock(big_mutex);
    auto [it, inserted] = big.try_emplace({p, q});
    if (inserted) it->second = enumerate_shuffles(p, q);
    return it->second;
}

}  // namespace adem
