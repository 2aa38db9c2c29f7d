/**
 * @file oracles.hpp
 * @brief Brute-force reference computations used only by the tests.
 *
 * Nothing here calls the library's transpose, dominance, validity or collapse.
 * Partitions are plain vectors so that the oracles stay independent of the
 * library's Partition invariants.
 */

#ifndef NILWAVE_TESTS_ORACLES_HPP
#define NILWAVE_TESTS_ORACLES_HPP

#include <random>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Every partition of n, each weakly decreasing.
std::vector<Parts> all_partitions(int n);

/// Flips the set of Young-diagram cells across the diagonal.
Parts transpose_cells(const Parts& p);

bool prefix_dominates(const Parts& p, const Parts& q);

/// 'B', 'C' or 'D'.
bool parity_valid(const Parts& p, char kind);

/// All dominance-maximal kind-valid partitions dominated by p.
std::vector<Parts> maximal_valid_minorants(const Parts& p, char kind);

/// A random partition of n, drawn by uniform random compositions sorted.
Parts random_partition(int n, std::mt19937_64& rng);

}  // namespace oracle

#endif  // NILWAVE_TESTS_ORACLES_HPP
