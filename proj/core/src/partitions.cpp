#include "dworkhg/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace dworkhg {

namespace {

void gen_partitions(int m, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(m - p, p, prefix, out);
        prefix.pop_back();
    }
}

void gen_exact(int m, int parts, int max_part, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (m == 0) out.push_back(prefix);
        return;
    }
    if (m < parts || m > parts * max_part) return;
    for (int p = std::min(m, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_exact(m - p, parts - 1, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions(int m) {
    if (m < 1) throw std::invalid_argument("partitions requires m >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    gen_partitions(m, m, prefix, out);
    return out;
}

std::vector<std::vector<int>> restricted_partitions(int m, int c) {
    if (m < 1 || c < 1) throw std::invalid_argument("restricted_partitions requires m, c >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    gen_exact(m, c, c - 1, prefix, out);
    return out;
}

std::vector<Monomial> basis_representatives(int n) {
    if (n < 2) throw std::invalid_argument("basis_representatives requires n >= 2");
    std::vector<Monomial> reps;
    int top = (n - 1 + 1) / 2;  // ceil((n-1)/2)
    for (int k = 1; k <= top; ++k) {
        for (auto& part : restricted_partitions(n * k, n)) {
            if (std::find(part.begin(), part.end(), 1) == part.end()) continue;
            reps.emplace_back(std::move(part));
        }
    }
    return reps;
}

}  // namespace dworkhg
