#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "incalg/preorder.hpp"
#include "incalg/ring.hpp"

namespace incalg {

/// An element of the incidence algebra I(X, R): a function on the comparable
/// pairs of a finite preorder X with values in R.  Multiplication is
/// convolution, (f g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y).
/// Stored sparsely (nonzero entries only); value semantics.
class incidence_function {
public:
    using entry_map = std::map<std::pair<int, int>, scalar>;

    static incidence_function zero(std::shared_ptr<const preorder> order, ring r);
    /// e_xy: 1 at (x, y), 0 elsewhere.  Errors unless x <= y.
    static incidence_function basis_element(std::shared_ptr<const preorder> order,
                                            ring r, int x, int y);
    /// The multiplicative identity delta (1 on the diagonal).
    static incidence_function delta(std::shared_ptr<const preorder> order, ring r);
    /// The zeta function: 1 on every comparable pair.
    static incidence_function zeta(std::shared_ptr<const preorder> order, ring r);
    /// The Mobius function, the convolution inverse of zeta.  Defined for
    /// posets over any ring (its recursion only adds and subtracts);
    /// errors on a preorder with 2-cycles.
    static incidence_function mobius(std::shared_ptr<const preorder> order, ring r);

    const std::shared_ptr<const preorder>& order() const { return order_; }
    const ring& coefficient_ring() const { return ring_; }

    /// Entry at (x, y); zero for unset or incomparable positions.
    scalar at(int x, int y) const;
    /// Set an entry (x <= y required); zero values erase.
    void set(int x, int y, scalar v);
    void add_at(int x, int y, const scalar& v);

    const entry_map& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    incidence_function operator+(const incidence_function& rhs) const;
    incidence_function operator-(const incidence_function& rhs) const;
    incidence_function operator-() const;
    incidence_function scaled(const scalar& c) const;

    bool operator==(const incidence_function& rhs) const;
    bool operator!=(const incidence_function& rhs) const { return !(*this == rhs); }

    /// Restriction f|_x^y: keep entries (u, v) with x <= u <= v <= y.
    incidence_function restricted(int x, int y) const;
    /// Diagonal part f_d: keep entries (u, u).
    incidence_function diagonal_part() const;

    /// Commutes with every element (equivalently with every e_xy)?
    bool is_central() const;

    /// Errors unless rhs lives over the same preorder and ring.
    void check_compatible(const incidence_function& rhs) const;

private:
    incidence_function(std::shared_ptr<const preorder> order, ring r)
        : order_(std::move(order)), ring_(r) {}

    std::shared_ptr<const preorder> order_;
    ring ring_;
    entry_map entries_;
};

incidence_function convolve(const incidence_function& f, const incidence_function& g);
/// [f, g] = fg - gf.
incidence_function lie_bracket(const incidence_function& f, const incidence_function& g);
/// f o g = fg + gf.
incidence_function jordan_product(const incidence_function& f, const incidence_function& g);

/// The central primitive idempotents: for each connected component C, the
/// function that is 1 on {(x, x) : x in C}.  Ordered by smallest member.
std::vector<incidence_function>
component_idempotents(std::shared_ptr<const preorder> order, ring r);

} // namespace incalg
