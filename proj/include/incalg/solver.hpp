#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "incalg/operators.hpp"

namespace incalg {

/// A sparse vector over a field: (index, nonzero value), sorted by index.
using sparse_vec = std::vector<std::pair<std::size_t, scalar>>;

/// Incremental exact reduced row echelon form over a field.  Pivots are
/// normalized to 1 and cleared from all other rows, so the stored rows — and
/// hence the nullspace basis — are canonical regardless of insertion order.
class row_space {
public:
    row_space(ring field, std::size_t ncols);

    /// Reduce `row` against the current rows; if a nonzero residual remains,
    /// normalize and install it (updating existing rows), returning true.
    bool insert(sparse_vec row);

    /// Residual of `row` after full reduction, without inserting.
    sparse_vec reduce(sparse_vec row) const;
    bool contains(const sparse_vec& row) const { return reduce(row).empty(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    /// Canonical nullspace basis: one vector per free column, in ascending
    /// free-column order, with value 1 at the free column.
    std::vector<sparse_vec> nullspace_basis() const;

private:
    ring field_;
    std::size_t ncols_;
    std::map<std::size_t, sparse_vec> rows_; // pivot column -> row
};

/// Flat layout of a coefficient tensor: index = (rank of column (i,j) among
/// the lex-ordered comparable pairs) * #pairs + (rank of position (x,y)).
/// This layout is part of the output contract, so bases are reproducible.
struct coefficient_layout {
    explicit coefficient_layout(const preorder& p);

    std::size_t dim() const { return pairs.size() * pairs.size(); }
    std::size_t index(std::pair<int, int> column, std::pair<int, int> position) const;

    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, std::size_t> rank_of;
};

sparse_vec operator_to_flat(const linear_operator& op, const coefficient_layout& layout);
linear_operator operator_from_flat(std::shared_ptr<const preorder> order, ring field,
                                   const coefficient_layout& layout,
                                   const sparse_vec& v);

enum class space_kind { lie_derivations, derivations };
enum class solve_method { bruteforce, closed_form };

struct operator_basis {
    space_kind space;
    solve_method method;
    std::shared_ptr<const preorder> order;
    ring field;
    std::vector<linear_operator> basis;

    std::size_t rank() const { return basis.size(); }
};

/// Nullspace of the Lie-Leibniz equations over all basis pairs.  Any finite
/// preorder.  `field` must be Q or Z/p with p an odd prime (p = 2 only in
/// exploratory mode; composite moduli never).
operator_basis lie_derivation_nullspace(std::shared_ptr<const preorder> order,
                                        ring field, bool exploratory = false);

/// Nullspace of the Leibniz equations (plain derivations).
operator_basis derivation_nullspace(std::shared_ptr<const preorder> order,
                                    ring field, bool exploratory = false);

/// The closed-form parametrization of the Lie-derivation module on a
/// connected preorder: one diagonal-constant block per mutual-comparability
/// class, one inner block ad_{-e_pq} per ordered comparable pair p != q, and
/// the nullspace of the self-coefficient relations (chain additivity and
/// cycle antisymmetry).  Spans the same space as the brute-force nullspace.
operator_basis lie_derivation_closed_form(std::shared_ptr<const preorder> order,
                                          ring field, bool exploratory = false);

enum class span_relation { equal, a_subset_b, b_subset_a, incomparable };

struct span_comparison {
    span_relation relation;
    /// A basis vector of one side outside the other side's span, when not equal.
    std::optional<linear_operator> witness;
};

span_comparison compare_spans(const operator_basis& a, const operator_basis& b);

} // namespace incalg
