#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

/// A linear operator on the incidence algebra, stored column-wise: the image
/// of each standard basis element e_ij.  Columns not stored are zero.  The
/// coefficient tensor C^{ij}_{xy} is column(i,j) evaluated at (x,y).
class linear_operator {
public:
    using column_map = std::map<std::pair<int, int>, incidence_function>;

    static linear_operator zero(std::shared_ptr<const preorder> order, ring r);
    /// ad_g: column (i,j) = [g, e_ij].  Always a derivation.
    static linear_operator inner_derivation(const incidence_function& g);

    const std::shared_ptr<const preorder>& order() const { return order_; }
    const ring& coefficient_ring() const { return ring_; }

    /// Image of e_ij (zero function if the column is unset).
    incidence_function column(int i, int j) const;
    void set_column(int i, int j, incidence_function image);
    scalar coefficient(int i, int j, int x, int y) const;
    const column_map& columns() const { return columns_; }
    bool is_zero() const { return columns_.empty(); }

    incidence_function apply(const incidence_function& f) const;

    linear_operator operator+(const linear_operator& rhs) const;
    linear_operator operator-(const linear_operator& rhs) const;
    linear_operator operator-() const;
    linear_operator scaled(const scalar& c) const;
    bool operator==(const linear_operator& rhs) const;
    bool operator!=(const linear_operator& rhs) const { return !(*this == rhs); }

    /// The transported operator on the dual preorder: coefficient at (x, y)
    /// of column (i, j) equals C^{ji}_{yx} of this operator.  An involution.
    linear_operator transport_to_dual() const;

private:
    linear_operator(std::shared_ptr<const preorder> order, ring r)
        : order_(std::move(order)), ring_(r) {}

    std::shared_ptr<const preorder> order_;
    ring ring_;
    column_map columns_;
};

/// A failing basis pair (e_ij, e_kl) for a Leibniz-type identity.
struct leibniz_witness {
    std::pair<int, int> left;
    std::pair<int, int> right;
};

/// A column entry outside (or violating) the structural templates.
struct template_witness {
    std::pair<int, int> column;
    std::pair<int, int> position;
};

/// A violated coefficient relation with the indices it failed at.
struct relation_witness {
    std::string relation;
    std::vector<int> indices; // element indices, meaning depends on relation
};

/// First (lexicographic) basis pair violating D(ab) = D(a)b + aD(b),
/// or nullopt if none.
std::optional<leibniz_witness> derivation_violation(const linear_operator& op);
bool is_derivation(const linear_operator& op);

/// Same for L([a,b]) = [L(a),b] + [a,L(b)].
std::optional<leibniz_witness> lie_derivation_violation(const linear_operator& op);
bool is_lie_derivation(const linear_operator& op);

/// Structural-form check (connected preorders only): every diagonal column
/// L(e_ii) is supported on { (x,i) : x<i } + { (x,x) : all x } + { (i,y) : y>i },
/// and every off-diagonal column L(e_ij) equals
///   sum_{x<i} C_xi^ii e_xj + C_ij^ij e_ij + sum_{y>j} C_jy^jj e_iy
/// with the C's read from the diagonal columns.  The index ranges are literal:
/// with 2-cycles present, template terms may land on diagonal positions.
/// Returns the first offending (column, position), or nullopt.
std::optional<template_witness> structural_form_violation(const linear_operator& op);
bool matches_structural_form(const linear_operator& op);

/// Coefficient relations (connected preorders, structural form required):
///   offdiag_pair_sum:        C_ij^ii + C_ij^jj = 0            (i < j)
///   chain_additivity:        C_ij^ij + C_jk^jk = C_ik^ik      (i < j < k, i != k)
///   cycle_antisymmetry:      C_ij^ij + C_ji^ji = 0            (i < j < i)
///   diagonal_constancy:      C_ii^ii = C_xx^ii                (all i, x)
///   cycle_diagonal_equality: C_ii^ii = C_jj^jj                (i < j < i)
/// (The last family is what makes the characterization exact on preorders
/// with 2-cycles; it is vacuous on posets.)  Returns the first violated
/// relation in the order above, tuples in lexicographic order.
std::optional<relation_witness> constraint_violation(const linear_operator& op);
bool satisfies_constraints(const linear_operator& op);

} // namespace incalg
