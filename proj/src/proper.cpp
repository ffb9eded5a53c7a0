#include "incalg/proper.hpp"

#include <algorithm>

namespace incalg {

namespace {

void require_connected(const linear_operator& op, const char* what) {
    if (!op.order()->is_connected())
        throw error(errc::unsupported,
                    std::string(what) + " requires a connected preorder");
}

void require_lie_derivation(const linear_operator& op, const char* what) {
    if (auto w = lie_derivation_violation(op)) {
        const auto& p = *op.order();
        throw error(errc::precondition,
                    std::string(what) + " requires a Lie derivation; the "
                                        "Lie-Leibniz identity fails at the basis pair ((" +
                        p.label(w->left.first) + "," + p.label(w->left.second) +
                        "),(" + p.label(w->right.first) + "," +
                        p.label(w->right.second) + "))");
    }
}

// Fill the verification flags of a candidate decomposition in place.
void verify(decomposition& dec, const linear_operator& original) {
    dec.d_witness = derivation_violation(dec.derivation_part);
    dec.d_is_derivation = !dec.d_witness.has_value();

    dec.f_is_central_valued = true;
    for (const auto& [col, img] : dec.central_part.columns())
        if (!img.is_central()) {
            dec.f_is_central_valued = false;
            dec.f_noncentral_column = col;
            break;
        }

    // F annihilates commutators: apply(F, [e_ij, e_kl]) = 0 for all pairs.
    const auto& order = original.order();
    const ring r = original.coefficient_ring();
    dec.f_kills_commutators = true;
    for (auto a : order->pairs()) {
        auto ea = incidence_function::basis_element(order, r, a.first, a.second);
        for (auto b : order->pairs()) {
            auto eb = incidence_function::basis_element(order, r, b.first, b.second);
            if (!dec.central_part.apply(lie_bracket(ea, eb)).is_zero()) {
                dec.f_kills_commutators = false;
                dec.f_commutator_witness = leibniz_witness{a, b};
                break;
            }
        }
        if (!dec.f_kills_commutators) break;
    }

    dec.sum_equals_input = (dec.derivation_part + dec.central_part) == original;
}

} // namespace

decomposition decompose_by_coefficients(const linear_operator& op) {
    require_connected(op, "the coefficient decomposition");
    if (!op.coefficient_ring().is_two_torsion_free())
        throw error(errc::unsupported,
                    "the coefficient decomposition requires a 2-torsion-free "
                    "ring; got " +
                        op.coefficient_ring().name());
    require_lie_derivation(op, "the coefficient decomposition");

    const auto& order = op.order();
    const ring r = op.coefficient_ring();
    auto d = linear_operator::zero(order, r);
    for (auto [i, j] : order->pairs()) {
        auto img = incidence_function::zero(order, r);
        if (i == j) {
            // D(e_ii) = sum_{x<i} C_xi^ii e_xi + sum_{y>i} C_iy^ii e_iy
            for (int x = 0; x < order->size(); ++x)
                if (order->less(x, i)) img.add_at(x, i, op.coefficient(i, i, x, i));
            for (int y = 0; y < order->size(); ++y)
                if (order->less(i, y)) img.add_at(i, y, op.coefficient(i, i, i, y));
        } else {
            // D(e_ij) = sum_{x<i} C_xi^ii e_xj + C_ij^ij e_ij
            //           + sum_{y>j} C_jy^jj e_iy
            for (int x = 0; x < order->size(); ++x)
                if (order->less(x, i)) img.add_at(x, j, op.coefficient(i, i, x, i));
            img.add_at(i, j, op.coefficient(i, j, i, j));
            for (int y = 0; y < order->size(); ++y)
                if (order->less(j, y)) img.add_at(i, y, op.coefficient(j, j, j, y));
        }
        d.set_column(i, j, std::move(img));
    }

    decomposition dec{d, op - d, false, false, false, false, {}, {}, {}};
    verify(dec, op);
    return dec;
}

decomposition decompose_by_diagonal(const linear_operator& op) {
    require_connected(op, "the diagonal decomposition");
    require_lie_derivation(op, "the diagonal decomposition");

    const auto& order = op.order();
    const ring r = op.coefficient_ring();
    auto central = linear_operator::zero(order, r);
    for (auto [i, j] : order->pairs())
        central.set_column(i, j, op.column(i, j).diagonal_part());

    decomposition dec{op - central, central, false, false, false, false, {}, {}, {}};
    verify(dec, op);
    return dec;
}

window::window(std::shared_ptr<const preorder> order_, std::vector<int> interior_)
    : order(std::move(order_)), interior(std::move(interior_)) {
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
    for (int x : interior)
        if (x < 0 || x >= order->size())
            throw error(errc::out_of_range, "interior element out of range");
    if (interior.empty())
        throw error(errc::invalid_argument, "a window needs a nonempty interior");
}

window window::full(std::shared_ptr<const preorder> order_) {
    std::vector<int> all(order_->size());
    for (int i = 0; i < order_->size(); ++i) all[i] = i;
    return window(std::move(order_), std::move(all));
}

bool window::is_interior(int x) const {
    return std::binary_search(interior.begin(), interior.end(), x);
}

extended_operator::extended_operator(linear_operator op, window w)
    : op_(std::move(op)), window_(std::move(w)) {
    if (op_.order() != window_.order && !(*op_.order() == *window_.order))
        throw error(errc::invalid_argument, "operator and window disagree");
}

scalar extended_operator::eval(const incidence_function& f, int x, int y) const {
    if (!window_.is_interior(x) || !window_.is_interior(y))
        throw error(errc::out_of_range,
                    "extension query outside the designated interior");
    if (f.order() != window_.order && !(*f.order() == *window_.order))
        throw error(errc::invalid_argument, "input over the wrong window");
    if (!window_.order->leq(x, y)) return op_.coefficient_ring().zero();
    return op_.apply(f.restricted(x, y)).at(x, y);
}

linear_operator extended_operator::restricted_to_interior() const {
    auto induced = window_.order->induced(window_.interior);
    const ring r = op_.coefficient_ring();
    auto out = linear_operator::zero(induced, r);
    for (auto [a, b] : induced->pairs()) {
        int i = window_.interior[a], j = window_.interior[b];
        auto e = incidence_function::basis_element(window_.order, r, i, j);
        auto img = incidence_function::zero(induced, r);
        for (auto [u, v] : induced->pairs()) {
            scalar val = eval(e, window_.interior[u], window_.interior[v]);
            if (!val.is_zero()) img.set(u, v, val);
        }
        out.set_column(a, b, std::move(img));
    }
    return out;
}

bool locality_check(const linear_operator& op, const incidence_function& f, int x,
                    int y) {
    if (!op.order()->leq(x, y))
        throw error(errc::not_comparable, "locality check needs x <= y");
    if (x == y && !is_derivation(op))
        throw error(errc::precondition,
                    "the diagonal locality identity is only available for "
                    "derivations");
    return op.apply(f).at(x, y) == op.apply(f.restricted(x, y)).at(x, y);
}

diagonal_audit diagonal_values(const linear_operator& op, const incidence_function& f) {
    diagonal_audit out;
    auto lf = op.apply(f);
    out.constant = true;
    for (int x = 0; x < op.order()->size(); ++x) {
        out.values.emplace_back(x, lf.at(x, x));
        if (!(out.values[x].second == out.values[0].second)) out.constant = false;
    }
    return out;
}

std::vector<diagonal_audit>
diagonal_constancy_audit(const linear_operator& op,
                         const std::vector<incidence_function>& sample) {
    require_connected(op, "the diagonal-constancy audit");
    std::vector<diagonal_audit> out;
    out.reserve(sample.size());
    for (const auto& f : sample) out.push_back(diagonal_values(op, f));
    return out;
}

} // namespace incalg
