#include "incalg/algebra.hpp"

namespace incalg {

incidence_function incidence_function::zero(std::shared_ptr<const preorder> order,
                                            ring r) {
    return incidence_function(std::move(order), r);
}

incidence_function incidence_function::basis_element(
    std::shared_ptr<const preorder> order, ring r, int x, int y) {
    if (!order->leq(x, y))
        throw error(errc::not_comparable, "basis element needs " + order->label(x) +
                                              " <= " + order->label(y));
    incidence_function f(std::move(order), r);
    f.set(x, y, r.one());
    return f;
}

incidence_function incidence_function::delta(std::shared_ptr<const preorder> order,
                                             ring r) {
    incidence_function f(std::move(order), r);
    for (int x = 0; x < f.order_->size(); ++x) f.set(x, x, r.one());
    return f;
}

incidence_function incidence_function::zeta(std::shared_ptr<const preorder> order,
                                            ring r) {
    incidence_function f(std::move(order), r);
    for (auto [x, y] : f.order_->pairs()) f.set(x, y, r.one());
    return f;
}

incidence_function incidence_function::mobius(std::shared_ptr<const preorder> order,
                                              ring r) {
    if (!order->is_poset())
        throw error(errc::unsupported,
                    "mobius function requires a poset (no 2-cycles)");
    incidence_function f(std::move(order), r);
    // mu(x, x) = 1;  mu(x, y) = -sum_{x <= z < y} mu(x, z).  Filling pairs in
    // lexicographic order would not do: z < y is not index order.  Recurse on
    // interval size instead, memoized in the entry map itself.
    const auto& p = *f.order_;
    std::map<std::pair<int, int>, scalar> memo;
    auto mu = [&](auto&& self, int x, int y) -> scalar {
        if (x == y) return r.one();
        auto it = memo.find({x, y});
        if (it != memo.end()) return it->second;
        scalar acc = r.zero();
        for (int z : p.interval(x, y)) // z ranges over x <= z < y; poset, so z != y suffices
            if (z != y) acc += self(self, x, z);
        scalar v = -acc;
        memo.emplace(std::pair{x, y}, v);
        return v;
    };
    for (auto [x, y] : p.pairs()) f.set(x, y, mu(mu, x, y));
    return f;
}

void incidence_function::check_compatible(const incidence_function& rhs) const {
    if (!(ring_ == rhs.ring_))
        throw error(errc::ring_mismatch, "elements over " + ring_.name() + " and " +
                                             rhs.ring_.name());
    if (order_ != rhs.order_ && !(*order_ == *rhs.order_))
        throw error(errc::invalid_argument, "elements over different preorders");
}

scalar incidence_function::at(int x, int y) const {
    order_->leq(x, y); // index validation
    auto it = entries_.find({x, y});
    return it == entries_.end() ? ring_.zero() : it->second;
}

void incidence_function::set(int x, int y, scalar v) {
    if (!order_->leq(x, y))
        throw error(errc::not_comparable, "entry needs " + order_->label(x) +
                                              " <= " + order_->label(y));
    if (v.is_zero())
        entries_.erase({x, y});
    else
        entries_.insert_or_assign({x, y}, std::move(v));
}

void incidence_function::add_at(int x, int y, const scalar& v) {
    set(x, y, at(x, y) + v);
}

incidence_function incidence_function::operator+(const incidence_function& rhs) const {
    check_compatible(rhs);
    incidence_function out = *this;
    for (const auto& [pos, v] : rhs.entries_) out.add_at(pos.first, pos.second, v);
    return out;
}

incidence_function incidence_function::operator-() const {
    incidence_function out(order_, ring_);
    for (const auto& [pos, v] : entries_) out.entries_.emplace(pos, -v);
    return out;
}

incidence_function incidence_function::operator-(const incidence_function& rhs) const {
    return *this + (-rhs);
}

incidence_function incidence_function::scaled(const scalar& c) const {
    incidence_function out(order_, ring_);
    if (c.is_zero()) return out;
    for (const auto& [pos, v] : entries_) {
        scalar w = c * v;
        if (!w.is_zero()) out.entries_.emplace(pos, std::move(w));
    }
    return out;
}

bool incidence_function::operator==(const incidence_function& rhs) const {
    check_compatible(rhs);
    return entries_ == rhs.entries_;
}

incidence_function incidence_function::restricted(int x, int y) const {
    if (!order_->leq(x, y))
        throw error(errc::not_comparable, "restriction needs " + order_->label(x) +
                                              " <= " + order_->label(y));
    incidence_function out(order_, ring_);
    for (const auto& [pos, v] : entries_)
        if (order_->leq(x, pos.first) && order_->leq(pos.second, y))
            out.entries_.emplace(pos, v);
    return out;
}

incidence_function incidence_function::diagonal_part() const {
    incidence_function out(order_, ring_);
    for (const auto& [pos, v] : entries_)
        if (pos.first == pos.second) out.entries_.emplace(pos, v);
    return out;
}

bool incidence_function::is_central() const {
    for (auto [x, y] : order_->pairs()) {
        auto e = basis_element(order_, ring_, x, y);
        if (!lie_bracket(*this, e).is_zero()) return false;
    }
    return true;
}

incidence_function convolve(const incidence_function& f, const incidence_function& g) {
    f.check_compatible(g);
    incidence_function out =
        incidence_function::zero(f.order(), f.coefficient_ring());
    const auto& ge = g.entries();
    for (const auto& [pf, vf] : f.entries()) {
        auto [x, z] = pf;
        // g entries with first coordinate z: contiguous in the ordered map
        for (auto it = ge.lower_bound({z, 0});
             it != ge.end() && it->first.first == z; ++it) {
            int y = it->first.second;
            if (!f.order()->leq(x, y)) continue;
            out.add_at(x, y, vf * it->second);
        }
    }
    return out;
}

incidence_function lie_bracket(const incidence_function& f, const incidence_function& g) {
    return convolve(f, g) - convolve(g, f);
}

incidence_function jordan_product(const incidence_function& f,
                                  const incidence_function& g) {
    return convolve(f, g) + convolve(g, f);
}

std::vector<incidence_function>
component_idempotents(std::shared_ptr<const preorder> order, ring r) {
    std::vector<incidence_function> out;
    for (const auto& comp : order->components()) {
        auto f = incidence_function::zero(order, r);
        for (int x : comp) f.set(x, x, r.one());
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace incalg
