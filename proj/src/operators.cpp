#include "incalg/operators.hpp"

namespace incalg {

namespace {

void check_same_context(const linear_operator& a, const linear_operator& b) {
    if (!(a.coefficient_ring() == b.coefficient_ring()))
        throw error(errc::ring_mismatch, "operators over " +
                                             a.coefficient_ring().name() + " and " +
                                             b.coefficient_ring().name());
    if (a.order() != b.order() && !(*a.order() == *b.order()))
        throw error(errc::invalid_argument, "operators over different preorders");
}

void require_connected_for(const linear_operator& op, const char* what) {
    if (!op.order()->is_connected())
        throw error(errc::unsupported,
                    std::string(what) + " requires a connected preorder");
}

} // namespace

linear_operator linear_operator::zero(std::shared_ptr<const preorder> order, ring r) {
    return linear_operator(std::move(order), r);
}

linear_operator linear_operator::inner_derivation(const incidence_function& g) {
    linear_operator op(g.order(), g.coefficient_ring());
    for (auto [i, j] : g.order()->pairs()) {
        auto e = incidence_function::basis_element(g.order(), g.coefficient_ring(), i, j);
        op.set_column(i, j, lie_bracket(g, e));
    }
    return op;
}

incidence_function linear_operator::column(int i, int j) const {
    if (!order_->leq(i, j))
        throw error(errc::not_comparable, "column needs " + order_->label(i) +
                                              " <= " + order_->label(j));
    auto it = columns_.find({i, j});
    if (it != columns_.end()) return it->second;
    return incidence_function::zero(order_, ring_);
}

void linear_operator::set_column(int i, int j, incidence_function image) {
    if (!order_->leq(i, j))
        throw error(errc::not_comparable, "column needs " + order_->label(i) +
                                              " <= " + order_->label(j));
    if (!(image.coefficient_ring() == ring_))
        throw error(errc::ring_mismatch, "column image over the wrong ring");
    if (image.order() != order_ && !(*image.order() == *order_))
        throw error(errc::invalid_argument, "column image over the wrong preorder");
    if (image.is_zero())
        columns_.erase({i, j});
    else
        columns_.insert_or_assign({i, j}, std::move(image));
}

scalar linear_operator::coefficient(int i, int j, int x, int y) const {
    auto it = columns_.find({i, j});
    if (!order_->leq(i, j))
        throw error(errc::not_comparable, "column needs " + order_->label(i) +
                                              " <= " + order_->label(j));
    if (it == columns_.end()) {
        order_->leq(x, y); // index validation
        return ring_.zero();
    }
    return it->second.at(x, y);
}

incidence_function linear_operator::apply(const incidence_function& f) const {
    if (!(f.coefficient_ring() == ring_))
        throw error(errc::ring_mismatch, "operand over the wrong ring");
    if (f.order() != order_ && !(*f.order() == *order_))
        throw error(errc::invalid_argument, "operand over the wrong preorder");
    auto out = incidence_function::zero(order_, ring_);
    for (const auto& [pos, v] : f.entries()) {
        auto it = columns_.find(pos);
        if (it == columns_.end()) continue;
        out = out + it->second.scaled(v);
    }
    return out;
}

linear_operator linear_operator::operator+(const linear_operator& rhs) const {
    check_same_context(*this, rhs);
    linear_operator out = *this;
    for (const auto& [col, img] : rhs.columns_)
        out.set_column(col.first, col.second, out.column(col.first, col.second) + img);
    return out;
}

linear_operator linear_operator::operator-() const {
    linear_operator out(order_, ring_);
    for (const auto& [col, img] : columns_) out.columns_.emplace(col, -img);
    return out;
}

linear_operator linear_operator::operator-(const linear_operator& rhs) const {
    return *this + (-rhs);
}

linear_operator linear_operator::scaled(const scalar& c) const {
    linear_operator out(order_, ring_);
    for (const auto& [col, img] : columns_) {
        auto scaled_img = img.scaled(c);
        if (!scaled_img.is_zero()) out.columns_.emplace(col, std::move(scaled_img));
    }
    return out;
}

bool linear_operator::operator==(const linear_operator& rhs) const {
    check_same_context(*this, rhs);
    return columns_ == rhs.columns_;
}

linear_operator linear_operator::transport_to_dual() const {
    auto dual_order = order_->dual();
    linear_operator out(dual_order, ring_);
    for (auto [i, j] : dual_order->pairs()) {
        auto img = incidence_function::zero(dual_order, ring_);
        for (auto [x, y] : dual_order->pairs()) {
            scalar v = coefficient(j, i, y, x);
            if (!v.is_zero()) img.set(x, y, v);
        }
        if (!img.is_zero()) out.columns_.emplace(std::pair{i, j}, std::move(img));
    }
    return out;
}

namespace {

// Shared scan for both Leibniz-type identities.  `lie` selects the bracket
// version; returns the first (lexicographic) failing ordered basis pair.
std::optional<leibniz_witness> leibniz_scan(const linear_operator& op, bool lie) {
    const auto& order = op.order();
    const ring r = op.coefficient_ring();
    const auto& pairs = order->pairs();
    for (auto a : pairs) {
        auto ea = incidence_function::basis_element(order, r, a.first, a.second);
        auto la = op.apply(ea);
        for (auto b : pairs) {
            auto eb = incidence_function::basis_element(order, r, b.first, b.second);
            auto lb = op.apply(eb);
            bool ok;
            if (lie) {
                auto lhs = op.apply(lie_bracket(ea, eb));
                auto rhs = lie_bracket(la, eb) + lie_bracket(ea, lb);
                ok = lhs == rhs;
            } else {
                auto lhs = op.apply(convolve(ea, eb));
                auto rhs = convolve(la, eb) + convolve(ea, lb);
                ok = lhs == rhs;
            }
            if (!ok) return leibniz_witness{a, b};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<leibniz_witness> derivation_violation(const linear_operator& op) {
    return leibniz_scan(op, false);
}

bool is_derivation(const linear_operator& op) {
    return !derivation_violation(op).has_value();
}

std::optional<leibniz_witness> lie_derivation_violation(const linear_operator& op) {
    return leibniz_scan(op, true);
}

bool is_lie_derivation(const linear_operator& op) {
    return !lie_derivation_violation(op).has_value();
}

std::optional<template_witness> structural_form_violation(const linear_operator& op) {
    require_connected_for(op, "the structural-form check");
    const auto& order = op.order();
    for (auto [i, j] : order->pairs()) {
        if (i == j) {
            // L(e_ii) may touch (x,i) for x<i, any (x,x), and (i,y) for y>i.
            for (auto [u, v] : order->pairs()) {
                bool permitted = (u == v) || (v == i && order->less(u, i)) ||
                                 (u == i && order->less(i, v));
                if (!permitted && !op.coefficient(i, i, u, v).is_zero())
                    return template_witness{{i, i}, {u, v}};
            }
        } else {
            // L(e_ij) = sum_{x<i} C_xi^ii e_xj + C_ij^ij e_ij
            //           + sum_{y>j} C_jy^jj e_iy, coefficients read from the
            // diagonal columns.  The three position families are disjoint,
            // 2-cycles included.
            for (auto [u, v] : order->pairs()) {
                scalar expected = op.coefficient_ring().zero();
                if (u == i && v == j)
                    continue; // self-coefficient C_ij^ij is free
                else if (v == j && order->less(u, i))
                    expected = op.coefficient(i, i, u, i);
                else if (u == i && order->less(j, v))
                    expected = op.coefficient(j, j, j, v);
                if (!(op.coefficient(i, j, u, v) == expected))
                    return template_witness{{i, j}, {u, v}};
            }
        }
    }
    return std::nullopt;
}

bool matches_structural_form(const linear_operator& op) {
    return !structural_form_violation(op).has_value();
}

std::optional<relation_witness> constraint_violation(const linear_operator& op) {
    require_connected_for(op, "the coefficient-relation check");
    if (auto w = structural_form_violation(op))
        throw error(errc::precondition,
                    "coefficient relations need the structural form; column (" +
                        op.order()->label(w->column.first) + "," +
                        op.order()->label(w->column.second) + ") fails at (" +
                        op.order()->label(w->position.first) + "," +
                        op.order()->label(w->position.second) + ")");
    const auto& p = op.order();
    const int n = p->size();

    // offdiag_pair_sum: C_ij^ii + C_ij^jj = 0 for i < j.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p->less(i, j) &&
                !(op.coefficient(i, i, i, j) + op.coefficient(j, j, i, j)).is_zero())
                return relation_witness{"offdiag_pair_sum", {i, j}};

    // chain_additivity: C_ij^ij + C_jk^jk = C_ik^ik for i < j < k, i != k.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (!(p->less(i, j) && p->less(j, k) && i != k)) continue;
                scalar lhs = op.coefficient(i, j, i, j) + op.coefficient(j, k, j, k);
                if (!(lhs == op.coefficient(i, k, i, k)))
                    return relation_witness{"chain_additivity", {i, j, k}};
            }

    // cycle_antisymmetry: C_ij^ij + C_ji^ji = 0 for i < j < i.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!(p->less(i, j) && p->less(j, i))) continue;
            if (!(op.coefficient(i, j, i, j) + op.coefficient(j, i, j, i)).is_zero())
                return relation_witness{"cycle_antisymmetry", {i, j}};
        }

    // diagonal_constancy: C_ii^ii = C_xx^ii for all i, x.
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x)
            if (!(op.coefficient(i, i, i, i) == op.coefficient(i, i, x, x)))
                return relation_witness{"diagonal_constancy", {i, x}};

    // cycle_diagonal_equality: C_ii^ii = C_jj^jj for i < j < i.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!(p->less(i, j) && p->less(j, i))) continue;
            if (!(op.coefficient(i, i, i, i) == op.coefficient(j, j, j, j)))
                return relation_witness{"cycle_diagonal_equality", {i, j}};
        }

    return std::nullopt;
}

bool satisfies_constraints(const linear_operator& op) {
    return !constraint_violation(op).has_value();
}

} // namespace incalg
