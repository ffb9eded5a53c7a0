#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

/// A finite preordered set: labeled elements 0..n-1 with a reflexive,
/// transitive relation.  2-cycles (x <= y <= x, x != y) are allowed; "x < y"
/// below always means x <= y and x != y.  Immutable after construction;
/// shared via shared_ptr so dependent objects stay valid.
class preorder {
public:
    static constexpr int max_elements = 64;

    /// Build from labels and generating pairs (label pairs); the reflexive-
    /// transitive closure is always taken.  Labels must be distinct and
    /// nonempty; pair endpoints must be known labels.
    static std::shared_ptr<const preorder>
    build(std::vector<std::string> labels,
          const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Same, but with index pairs.
    static std::shared_ptr<const preorder>
    build_indexed(std::vector<std::string> labels,
                  const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int x) const;
    /// Index of a label, -1 if unknown.
    int index_of(const std::string& label) const;

    bool leq(int x, int y) const;
    bool less(int x, int y) const { return x != y && leq(x, y); }
    /// Mutual comparability x <= y <= x (includes x == y).
    bool equivalent(int x, int y) const { return leq(x, y) && leq(y, x); }

    /// All comparable ordered pairs (x, y) with x <= y, lexicographic.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// { z : x <= z <= y }, ascending.  Errors unless x <= y.
    std::vector<int> interval(int x, int y) const;

    /// Antisymmetric (no 2-cycles)?
    bool is_poset() const;

    /// Partition into connected components (undirected comparability),
    /// each ascending, ordered by smallest member.
    std::vector<std::vector<int>> components() const;
    bool is_connected() const { return components().size() == 1; }

    /// Equivalence classes of mutual comparability, each ascending, ordered
    /// by smallest member.
    std::vector<std::vector<int>> equivalence_classes() const;

    /// Opposite order: x <=' y iff y <= x.  Labels preserved.
    std::shared_ptr<const preorder> dual() const;

    /// Induced subpreorder on the given elements (must be distinct, valid
    /// indices); keeps their labels, reindexes to 0..k-1 in the given order.
    std::shared_ptr<const preorder> induced(const std::vector<int>& elements) const;

    bool operator==(const preorder& rhs) const {
        return labels_ == rhs.labels_ && rows_ == rhs.rows_;
    }

private:
    preorder() = default;
    void check_index(int x) const;
    void finish(); // closure given, compute pairs_

    std::vector<std::string> labels_;
    std::vector<std::uint64_t> rows_; // rows_[x] bit y <=> x <= y
    std::vector<std::pair<int, int>> pairs_;
};

/// Visit every preorder on n labeled points ("1".."n"), in a fixed
/// deterministic order; return false from the visitor to stop early.
/// 1 <= n <= 5 (the count for n = 5 is already 6942... of 2^20 candidates).
void enumerate_preorders(int n, bool connected_only,
                         const std::function<bool(std::shared_ptr<const preorder>)>& visit);

/// Convenience: collect the enumeration into a vector.
std::vector<std::shared_ptr<const preorder>> all_preorders(int n,
                                                           bool connected_only = false);

} // namespace incalg
