#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace oracle {

namespace {

void extend(int remaining, int cap, Parts& prefix, std::vector<Parts>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Parts> all_partitions(int n) {
    std::vector<Parts> out;
    Parts prefix;
    extend(n, n, prefix, out);
    return out;
}

Parts transpose_cells(const Parts& p) {
    std::set<std::pair<int, int>> flipped;
    for (int row = 0; row < static_cast<int>(p.size()); ++row) {
        for (int col = 0; col < p[static_cast<std::size_t>(row)]; ++col) flipped.insert({col, row});
    }
    std::map<int, int> row_lengths;
    for (auto [row, col] : flipped) row_lengths[row] = std::max(row_lengths[row], col + 1);
    Parts out;
    for (auto [row, len] : row_lengths) out.push_back(len);
    return out;
}

bool prefix_dominates(const Parts& p, const Parts& q) {
    long lhs = 0;
    long rhs = 0;
    for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
        lhs += i < p.size() ? p[i] : 0;
        rhs += i < q.size() ? q[i] : 0;
        if (lhs < rhs) return false;
    }
    return lhs == rhs;
}

bool parity_valid(const Parts& p, char kind) {
    int total = 0;
    std::map<int, int> mult;
    for (int x : p) {
        total += x;
        ++mult[x];
    }
    const int bad = kind == 'C' ? 1 : 0;
    if (kind == 'B' && total % 2 != 1) return false;
    if (kind != 'B' && total % 2 != 0) return false;
    for (auto [value, count] : mult) {
        if (value % 2 == bad && count % 2 == 1) return false;
    }
    return true;
}

std::vector<Parts> maximal_valid_minorants(const Parts& p, char kind) {
    int total = 0;
    for (int x : p) total += x;
    std::vector<Parts> candidates;
    for (auto& q : all_partitions(total)) {
        if (parity_valid(q, kind) && prefix_dominates(p, q)) candidates.push_back(q);
    }
    std::vector<Parts> maxima;
    for (const auto& q : candidates) {
        bool beaten = false;
        for (const auto& r : candidates) {
            if (r != q && prefix_dominates(r, q)) {
                beaten = true;
                break;
            }
        }
        if (!beaten) maxima.push_back(q);
    }
    return maxima;
}

Parts random_partition(int n, std::mt19937_64& rng) {
    Parts parts;
    int remaining = n;
    while (remaining > 0) {
        std::uniform_int_distribution<int> pick(1, remaining);
        const int part = pick(rng);
        parts.push_back(part);
        remaining -= part;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

}  // namespace oracle
