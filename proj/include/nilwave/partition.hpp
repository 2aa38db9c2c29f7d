/**
 * @file partition.hpp
 * @brief Integer partitions and the classical nilpotent-orbit combinatorics on them.
 *
 * A partition is stored as a weakly decreasing sequence of positive parts. The
 * empty sequence is the zero partition. Orbits of the classical Lie algebras are
 * partitions subject to a parity rule depending on the type:
 *
 *   B: odd total, even parts occur with even multiplicity
 *   C: even total, odd parts occur with even multiplicity
 *   D: even total, even parts occur with even multiplicity
 *   A: no constraint
 */

#ifndef NILWAVE_PARTITION_HPP
#define NILWAVE_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilwave {

class Partition {
public:
    Partition() = default;

    /// Throws Error(InvalidInput) unless @p parts is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts and drops zero parts. Negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses "5,3,3,1,1" (whitespace tolerant). The empty string is the zero partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// parts()[i], or 0 past the end.
    int at(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    int multiplicity(int value) const noexcept;

    /// "(5,3,3,1,1)"; the zero partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& lhs, const Partition& rhs) {
        return lhs.parts_ <=> rhs.parts_;
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class ClassicalKind { A, B, C, D };

std::string_view to_string(ClassicalKind kind);
std::optional<ClassicalKind> parse_kind(std::string_view text);

/// Total of a rank-n orbit partition: n for A, 2n+1 for B, 2n for C and D.
int ambient_total(ClassicalKind kind, int rank);

Partition transpose(const Partition& p);
Partition partition_union(const Partition& p, const Partition& q);

/// Componentwise sum after zero padding; transpose of the union of transposes.
Partition pointwise_sum(const Partition& p, const Partition& q);

/// Dominance order. Throws Error(IncomparableDomain) when totals differ.
bool dominates(const Partition& p, const Partition& q);

bool is_valid(const Partition& p, ClassicalKind kind);

/// The kind-collapse: the dominance-greatest kind-valid partition dominated by @p p.
/// Throws Error(InvalidInput) when the total has the wrong parity for @p kind.
Partition collapse(const Partition& p, ClassicalKind kind);

Partition add_box_top(const Partition& p);

/// Throws Error(InvalidInput) on the zero partition.
Partition remove_box_bottom(const Partition& p);

/// Nilpotent orbit of a classical Lie algebra of the given kind and rank.
class TypedOrbit {
public:
    /// Throws Error(InvalidInput) if the partition is not a valid orbit of that kind and rank.
    TypedOrbit(ClassicalKind kind, int rank, Partition partition);

    ClassicalKind kind() const noexcept { return kind_; }
    int rank() const noexcept { return rank_; }
    const Partition& partition() const noexcept { return partition_; }

    std::string to_string() const;

    friend bool operator==(const TypedOrbit&, const TypedOrbit&) = default;

private:
    ClassicalKind kind_;
    int rank_;
    Partition partition_;
};

std::ostream& operator<<(std::ostream& os, const TypedOrbit& o);

}  // namespace nilwave

#endif  // NILWAVE_PARTITION_HPP
