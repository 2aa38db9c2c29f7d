/**
 * @file partition.cpp
 */

#include "nilwave/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "nilwave/error.hpp"

namespace nilwave {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "invalid-input";
        case ErrorCode::IncomparableDomain: return "incomparable-domain";
        case ErrorCode::UnsupportedKind: return "unsupported-kind";
        case ErrorCode::UncertifiedDuality: return "uncertified-duality";
        case ErrorCode::NoCuspidal: return "no-cuspidal";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::DataIntegrity: return "data-integrity";
    }
    return "unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw Error(ErrorCode::InvalidInput, "partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw Error(ErrorCode::InvalidInput, "partition parts must be weakly decreasing");
        }
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
        throw Error(ErrorCode::InvalidInput, "partition parts must be nonnegative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    auto all_space = std::all_of(text.begin(), text.end(), is_space);
    if (all_space) {
        return Partition();
    }
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos);
        while (!field.empty() && is_space(field.front())) field.remove_prefix(1);
        while (!field.empty() && is_space(field.back())) field.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
            throw Error(ErrorCode::InvalidInput,
                        "cannot parse partition part '" + std::string(field) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::string_view to_string(ClassicalKind kind) {
    switch (kind) {
        case ClassicalKind::A: return "A";
        case ClassicalKind::B: return "B";
        case ClassicalKind::C: return "C";
        case ClassicalKind::D: return "D";
    }
    return "?";
}

std::optional<ClassicalKind> parse_kind(std::string_view text) {
    if (text == "A" || text == "a") return ClassicalKind::A;
    if (text == "B" || text == "b") return ClassicalKind::B;
    if (text == "C" || text == "c") return ClassicalKind::C;
    if (text == "D" || text == "d") return ClassicalKind::D;
    return std::nullopt;
}

int ambient_total(ClassicalKind kind, int rank) {
    switch (kind) {
        case ClassicalKind::A: return rank;
        case ClassicalKind::B: return 2 * rank + 1;
        case ClassicalKind::C:
        case ClassicalKind::D: return 2 * rank;
    }
    return -1;
}

Partition transpose(const Partition& p) {
    std::vector<int> columns(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(columns));
}

Partition partition_union(const Partition& p, const Partition& q) {
    std::vector<int> merged;
    merged.reserve(p.length() + q.length());
    std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(), q.parts().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

Partition pointwise_sum(const Partition& p, const Partition& q) {
    std::vector<int> sum(std::max(p.length(), q.length()));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = p.at(i) + q.at(i);
    return Partition(std::move(sum));
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.total() != q.total()) {
        throw Error(ErrorCode::IncomparableDomain,
                    "dominance needs equal totals: " + p.to_string() + " vs " + q.to_string());
    }
    int lhs = 0;
    int rhs = 0;
    for (std::size_t i = 0; i < std::max(p.length(), q.length()); ++i) {
        lhs += p.at(i);
        rhs += q.at(i);
        if (lhs < rhs) return false;
    }
    return true;
}

namespace {

// Parity of the parts that must occur with even multiplicity, or -1 for type A.
int constrained_parity(ClassicalKind kind) {
    switch (kind) {
        case ClassicalKind::B:
        case ClassicalKind::D: return 0;
        case ClassicalKind::C: return 1;
        case ClassicalKind::A: return -1;
    }
    return -1;
}

bool total_parity_ok(int total, ClassicalKind kind) {
    switch (kind) {
        case ClassicalKind::A: return true;
        case ClassicalKind::B: return total % 2 == 1;
        case ClassicalKind::C:
        case ClassicalKind::D: return total % 2 == 0;
    }
    return false;
}

// Largest part of the constrained parity with odd multiplicity, or 0.
int largest_offending_part(const std::vector<int>& parts, int parity) {
    std::size_t i = 0;
    while (i < parts.size() && parts[i] > 0) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == parity && (j - i) % 2 == 1) return parts[i];
        i = j;
    }
    return 0;
}

}  // namespace

bool is_valid(const Partition& p, ClassicalKind kind) {
    if (!total_parity_ok(p.total(), kind)) return false;
    int parity = constrained_parity(kind);
    return parity < 0 || largest_offending_part(p.vec(), parity) == 0;
}

Partition collapse(const Partition& p, ClassicalKind kind) {
    if (!total_parity_ok(p.total(), kind)) {
        throw Error(ErrorCode::InvalidInput, std::string("total of ") + p.to_string() +
                                                 " has the wrong parity for a " +
                                                 std::string(to_string(kind)) + "-collapse");
    }
    int parity = constrained_parity(kind);
    if (parity < 0) return p;

    // Repeatedly lower the last copy of the largest offending part q by one and
    // raise the first later part smaller than q-1. A trailing zero is kept so the
    // raise always has a slot.
    std::vector<int> parts = p.vec();
    parts.push_back(0);
    for (int q = largest_offending_part(parts, parity); q != 0;
         q = largest_offending_part(parts, parity)) {
        auto last = std::find_if(parts.rbegin(), parts.rend(), [q](int x) { return x == q; });
        auto idx = static_cast<std::size_t>(std::distance(last, parts.rend()) - 1);
        --parts[idx];
        std::size_t k = idx + 1;
        while (k < parts.size() && parts[k] >= q - 1) ++k;
        if (k == parts.size()) parts.push_back(0);
        ++parts[k];
        if (parts.back() != 0) parts.push_back(0);
    }
    std::erase(parts, 0);
    return Partition(std::move(parts));
}

Partition add_box_top(const Partition& p) {
    if (p.empty()) return Partition{1};
    auto parts = p.vec();
    ++parts.front();
    return Partition(std::move(parts));
}

Partition remove_box_bottom(const Partition& p) {
    if (p.empty()) {
        throw Error(ErrorCode::InvalidInput, "cannot remove a box from the zero partition");
    }
    auto parts = p.vec();
    if (--parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

TypedOrbit::TypedOrbit(ClassicalKind kind, int rank, Partition partition)
    : kind_(kind), rank_(rank), partition_(std::move(partition)) {
    if (rank_ < 0) {
        throw Error(ErrorCode::InvalidInput, "orbit rank must be nonnegative");
    }
    if (partition_.total() != ambient_total(kind_, rank_)) {
        throw Error(ErrorCode::InvalidInput,
                    partition_.to_string() + " does not have total " +
                        std::to_string(ambient_total(kind_, rank_)) + " for type " +
                        std::string(nilwave::to_string(kind_)) + std::to_string(rank_));
    }
    if (!is_valid(partition_, kind_)) {
        throw Error(ErrorCode::InvalidInput, partition_.to_string() + " is not a valid type " +
                                                 std::string(nilwave::to_string(kind_)) + " partition");
    }
}

std::string TypedOrbit::to_string() const {
    return std::string(nilwave::to_string(kind_)) + std::to_string(rank_) + partition_.to_string();
}

std::ostream& operator<<(std::ostream& os, const TypedOrbit& o) { return os << o.to_string(); }

}  // namespace nilwave
