#pragma once

#include <optional>
#include <vector>

#include "incalg/operators.hpp"

namespace incalg {

/// Result of splitting a Lie derivation L into a derivation part D and a
/// central part F with L = D + F.  The flags report what was actually
/// verified on the returned pair — the diagonal-based construction can fail
/// them on preorders with 2-cycles, and callers get the honest outcome.
struct decomposition {
    linear_operator derivation_part;
    linear_operator central_part;

    bool d_is_derivation;
    bool f_is_central_valued;
    bool f_kills_commutators;
    bool sum_equals_input;

    /// Filled when the corresponding flag is false.
    std::optional<leibniz_witness> d_witness;
    std::optional<std::pair<int, int>> f_noncentral_column;
    std::optional<leibniz_witness> f_commutator_witness;

    bool all_flags() const {
        return d_is_derivation && f_is_central_valued && f_kills_commutators &&
               sum_equals_input;
    }
};

/// Coefficient-based decomposition: D rebuilt from the structural templates
/// with the diagonal constants dropped (D(e_ii) keeps only the off-diagonal
/// template terms; off-diagonal columns are kept whole), F = L - D.
/// Requires: connected preorder, 2-torsion-free ring, L a Lie derivation.
/// For such input every flag comes back true.
decomposition decompose_by_coefficients(const linear_operator& op);

/// Diagonal-based decomposition: central part column (i,j) =
/// diagonal_part(L(e_ij)), derivation part = L - central part.  Requires a
/// connected preorder and L a Lie derivation; flags are computed, not
/// assumed (they can fail with 2-cycles present).
decomposition decompose_by_diagonal(const linear_operator& op);

/// A finite window of a conceptually locally finite preorder, with the
/// subset of elements whose intervals the window contains exactly.  For
/// those interior elements, restrictions f|_x^y computed inside the window
/// agree with the ambient ones.
struct window {
    std::shared_ptr<const preorder> order;
    std::vector<int> interior; // sorted element indices

    window(std::shared_ptr<const preorder> order_, std::vector<int> interior_);
    static window full(std::shared_ptr<const preorder> order_);

    bool is_interior(int x) const;
};

/// The extension L^(f)(x, y) := L(f|_x^y)(x, y), evaluated on demand.
/// Queries are restricted to interior x, y.
class extended_operator {
public:
    extended_operator(linear_operator op, window w);

    const window& win() const { return window_; }
    const linear_operator& base() const { return op_; }

    /// L^(f)(x, y) for interior x, y; zero when x, y are incomparable.
    scalar eval(const incidence_function& f, int x, int y) const;

    /// The operator (on the induced interior preorder) whose columns are the
    /// extension's values on interior basis elements.
    linear_operator restricted_to_interior() const;

private:
    linear_operator op_;
    window window_;
};

/// Does L(f)(x,y) = L(f|_x^y)(x,y)?  For x = y the identity is only a
/// theorem for derivations, so that query is refused unless L passes
/// is_derivation.  Requires x <= y.
bool locality_check(const linear_operator& op, const incidence_function& f, int x,
                    int y);

/// Diagonal audit for one input: the value map x -> L(f)(x,x) and whether it
/// is constant.  Result data, never a throw on non-constancy.
struct diagonal_audit {
    std::vector<std::pair<int, scalar>> values; // per element, ascending
    bool constant;
};

diagonal_audit diagonal_values(const linear_operator& op, const incidence_function& f);

/// Batch version over a sample of inputs (connected preorders only).
std::vector<diagonal_audit>
diagonal_constancy_audit(const linear_operator& op,
                         const std::vector<incidence_function>& sample);

} // namespace incalg
