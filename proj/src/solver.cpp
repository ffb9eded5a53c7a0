#include "incalg/solver.hpp"

#include <algorithm>

namespace incalg {

namespace {

void require_solver_field(const ring& field, bool exploratory) {
    if (!field.is_solver_field(exploratory))
        throw error(errc::unsupported,
                    "solving requires Q or Z/p with p an odd prime (p = 2 only in "
                    "exploratory mode); got " +
                        field.name());
}

// row -= factor * other, both sorted sparse vectors.
sparse_vec axpy(const sparse_vec& row, const scalar& factor, const sparse_vec& other) {
    sparse_vec out;
    out.reserve(row.size() + other.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < other.size()) {
        if (b == other.size() || (a < row.size() && row[a].first < other[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || other[b].first < row[a].first) {
            scalar v = -(factor * other[b].second);
            if (!v.is_zero()) out.emplace_back(other[b].first, std::move(v));
            ++b;
        } else {
            scalar v = row[a].second - factor * other[b].second;
            if (!v.is_zero()) out.emplace_back(row[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

sparse_vec scale_row(const sparse_vec& row, const scalar& factor) {
    sparse_vec out;
    out.reserve(row.size());
    for (const auto& [idx, v] : row) out.emplace_back(idx, factor * v);
    return out;
}

std::optional<scalar> coeff_at(const sparse_vec& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return std::nullopt;
}

} // namespace

row_space::row_space(ring field, std::size_t ncols) : field_(field), ncols_(ncols) {
    if (!field.is_field())
        throw error(errc::unsupported, "row reduction requires a field");
}

sparse_vec row_space::reduce(sparse_vec row) const {
    // Stored rows are in RREF (pivot first, value 1, pivot columns cleared
    // elsewhere), so one left-to-right sweep fully reduces.
    sparse_vec acc = std::move(row);
    std::size_t scan = 0;
    while (scan < acc.size()) {
        auto it = rows_.find(acc[scan].first);
        if (it == rows_.end()) {
            ++scan;
            continue;
        }
        acc = axpy(acc, acc[scan].second, it->second);
        // entries before `scan` are untouched (the eliminated row starts at
        // its pivot), so scan stays put
    }
    return acc;
}

bool row_space::insert(sparse_vec row) {
    sparse_vec r = reduce(std::move(row));
    if (r.empty()) return false;
    std::size_t pivot = r[0].first;
    scalar inv = *r[0].second.inverse();
    r = scale_row(r, inv);
    // Clear the new pivot column from every stored row.
    for (auto& [p, stored] : rows_) {
        auto c = coeff_at(stored, pivot);
        if (c) stored = axpy(stored, *c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<sparse_vec> row_space::nullspace_basis() const {
    std::vector<sparse_vec> out;
    for (std::size_t free_col = 0; free_col < ncols_; ++free_col) {
        if (rows_.count(free_col)) continue;
        sparse_vec v;
        for (const auto& [pivot, row] : rows_) {
            auto c = coeff_at(row, free_col);
            if (c) v.emplace_back(pivot, -*c);
        }
        v.emplace_back(free_col, field_.one());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

coefficient_layout::coefficient_layout(const preorder& p) : pairs(p.pairs()) {
    for (std::size_t k = 0; k < pairs.size(); ++k) rank_of.emplace(pairs[k], k);
}

std::size_t coefficient_layout::index(std::pair<int, int> column,
                                      std::pair<int, int> position) const {
    return rank_of.at(column) * pairs.size() + rank_of.at(position);
}

sparse_vec operator_to_flat(const linear_operator& op, const coefficient_layout& layout) {
    sparse_vec v;
    for (const auto& [col, img] : op.columns())
        for (const auto& [pos, value] : img.entries())
            v.emplace_back(layout.index(col, pos), value);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

linear_operator operator_from_flat(std::shared_ptr<const preorder> order, ring field,
                                   const coefficient_layout& layout,
                                   const sparse_vec& v) {
    auto op = linear_operator::zero(order, field);
    const std::size_t m = layout.pairs.size();
    std::map<std::pair<int, int>, incidence_function> cols;
    for (const auto& [idx, value] : v) {
        auto col = layout.pairs[idx / m];
        auto pos = layout.pairs[idx % m];
        auto it = cols.find(col);
        if (it == cols.end())
            it = cols.emplace(col, incidence_function::zero(order, field)).first;
        it->second.set(pos.first, pos.second, value);
    }
    for (auto& [col, img] : cols) op.set_column(col.first, col.second, std::move(img));
    return op;
}

namespace {

// Leibniz-type equations, one per basis pair (e_ij, e_kl) per output
// position (x, y), as rows in the flat unknowns C^{ab}_{uv}.  Expanding the
// residual on basis elements gives, for the Lie version,
//   delta_jk C^{il}_{xy} - delta_li C^{kj}_{xy} - [y=l] C^{ij}_{xk}
//   + [x=k] C^{ij}_{ly} - [x=i] C^{kl}_{jy} + [y=j] C^{kl}_{xi} = 0,
// and for the plain version
//   delta_jk C^{il}_{xy} - [y=l] C^{ij}_{xk} - [x=i] C^{kl}_{jy} = 0,
// where a term is dropped whenever its column or position pair is not
// comparable (those unknowns are identically zero).
class equation_builder {
public:
    equation_builder(const preorder& p, const ring& field,
                     const coefficient_layout& layout)
        : p_(p), field_(field), layout_(layout) {}

    void add_term(std::map<std::size_t, int>& acc, std::pair<int, int> col,
                  std::pair<int, int> pos, int sign) const {
        if (!p_.leq(col.first, col.second) || !p_.leq(pos.first, pos.second)) return;
        acc[layout_.index(col, pos)] += sign;
    }

    std::optional<sparse_vec> finish(const std::map<std::size_t, int>& acc) const {
        sparse_vec row;
        for (const auto& [idx, c] : acc) {
            if (c == 0) continue;
            scalar v = field_.from_int(c);
            if (!v.is_zero()) row.emplace_back(idx, std::move(v)); // c = +-2 can vanish mod small p
        }
        if (row.empty()) return std::nullopt;
        return row;
    }

    // Rows for the pair (A, B) = ((i,j), (k,l)) at every output position.
    void pair_rows(row_space& space, std::pair<int, int> a, std::pair<int, int> b,
                   bool lie) const {
        auto [i, j] = a;
        auto [k, l] = b;
        for (auto pos : layout_.pairs) {
            auto [x, y] = pos;
            std::map<std::size_t, int> acc;
            if (j == k) add_term(acc, {i, l}, {x, y}, +1);
            if (lie && l == i) add_term(acc, {k, j}, {x, y}, -1);
            if (y == l) add_term(acc, {i, j}, {x, k}, -1);
            if (lie && x == k) add_term(acc, {i, j}, {l, y}, +1);
            if (x == i) add_term(acc, {k, l}, {j, y}, -1);
            if (lie && y == j) add_term(acc, {k, l}, {x, i}, +1);
            if (auto row = finish(acc)) space.insert(std::move(*row));
        }
    }

private:
    const preorder& p_;
    const ring& field_;
    const coefficient_layout& layout_;
};

operator_basis nullspace_solve(std::shared_ptr<const preorder> order, ring field,
                               bool exploratory, bool lie) {
    require_solver_field(field, exploratory);
    coefficient_layout layout(*order);
    row_space space(field, layout.dim());
    equation_builder builder(*order, field, layout);
    const auto& pairs = layout.pairs;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        // The Lie residual is antisymmetric in (A, B) and vanishes for A = B,
        // so unordered pairs suffice there; plain Leibniz needs all ordered
        // pairs including A = B.
        for (std::size_t b = lie ? a + 1 : 0; b < pairs.size(); ++b)
            builder.pair_rows(space, pairs[a], pairs[b], lie);
    }
    operator_basis out{lie ? space_kind::lie_derivations : space_kind::derivations,
                       solve_method::bruteforce, order, field, {}};
    for (const auto& v : space.nullspace_basis())
        out.basis.push_back(operator_from_flat(order, field, layout, v));
    return out;
}

} // namespace

operator_basis lie_derivation_nullspace(std::shared_ptr<const preorder> order,
                                        ring field, bool exploratory) {
    return nullspace_solve(std::move(order), field, exploratory, true);
}

operator_basis derivation_nullspace(std::shared_ptr<const preorder> order, ring field,
                                    bool exploratory) {
    return nullspace_solve(std::move(order), field, exploratory, false);
}

operator_basis lie_derivation_closed_form(std::shared_ptr<const preorder> order,
                                          ring field, bool exploratory) {
    require_solver_field(field, exploratory);
    if (!order->is_connected())
        throw error(errc::unsupported,
                    "the closed form requires a connected preorder; "
                    "use the brute-force nullspace instead");
    operator_basis out{space_kind::lie_derivations, solve_method::closed_form, order,
                       field, {}};

    // Diagonal-constant block: for each mutual-comparability class c, the
    // operator T_c with T_c(e_ii) = delta for i in c.  (Classes, not single
    // elements: with 2-cycles the diagonal constants of equivalent elements
    // are forced equal.)
    auto delta = incidence_function::delta(order, field);
    for (const auto& cls : order->equivalence_classes()) {
        auto t = linear_operator::zero(order, field);
        for (int i : cls) t.set_column(i, i, delta);
        out.basis.push_back(std::move(t));
    }

    // Inner block: ad_{-e_pq} for each ordered comparable pair p != q.  These
    // realize the off-diagonal coefficients u_pq = C_pq^pp of the templates.
    for (auto [p, q] : order->pairs()) {
        if (p == q) continue;
        auto g = -incidence_function::basis_element(order, field, p, q);
        out.basis.push_back(linear_operator::inner_derivation(g));
    }

    // Self-coefficient block: t_ij = C_ij^ij over off-diagonal pairs, subject
    // to chain additivity (t_ij + t_jk = t_ik for i<j<k, i != k) and cycle
    // antisymmetry (t_ij + t_ji = 0 for 2-cycles).
    std::vector<std::pair<int, int>> offdiag;
    std::map<std::pair<int, int>, std::size_t> offdiag_rank;
    for (auto pr : order->pairs())
        if (pr.first != pr.second) {
            offdiag_rank.emplace(pr, offdiag.size());
            offdiag.push_back(pr);
        }
    const int n = order->size();
    row_space trels(field, offdiag.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!order->less(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                if (!order->less(j, k) || i == k) continue;
                std::map<std::size_t, int> acc;
                acc[offdiag_rank.at({i, j})] += 1;
                acc[offdiag_rank.at({j, k})] += 1;
                acc[offdiag_rank.at({i, k})] -= 1;
                sparse_vec row;
                for (const auto& [idx, c] : acc)
                    if (c != 0 && !field.from_int(c).is_zero())
                        row.emplace_back(idx, field.from_int(c));
                if (!row.empty()) trels.insert(std::move(row));
            }
            if (order->less(j, i) && i < j) { // each 2-cycle once
                sparse_vec row;
                row.emplace_back(offdiag_rank.at({i, j}), field.one());
                row.emplace_back(offdiag_rank.at({j, i}), field.one());
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                trels.insert(std::move(row));
            }
        }
    for (const auto& v : trels.nullspace_basis()) {
        auto t = linear_operator::zero(order, field);
        for (const auto& [idx, value] : v) {
            auto [i, j] = offdiag[idx];
            t.set_column(i, j,
                         incidence_function::basis_element(order, field, i, j)
                             .scaled(value));
        }
        out.basis.push_back(std::move(t));
    }
    return out;
}

span_comparison compare_spans(const operator_basis& a, const operator_basis& b) {
    if (!(a.field == b.field))
        throw error(errc::ring_mismatch, "bases over different fields");
    if (a.order != b.order && !(*a.order == *b.order))
        throw error(errc::invalid_argument, "bases over different preorders");

    coefficient_layout layout(*a.order);
    auto span_of = [&](const operator_basis& basis) {
        row_space space(basis.field, layout.dim());
        for (const auto& op : basis.basis) space.insert(operator_to_flat(op, layout));
        return space;
    };
    row_space span_a = span_of(a);
    row_space span_b = span_of(b);

    std::optional<linear_operator> a_outside, b_outside;
    for (const auto& op : a.basis)
        if (!span_b.contains(operator_to_flat(op, layout))) {
            a_outside = op;
            break;
        }
    for (const auto& op : b.basis)
        if (!span_a.contains(operator_to_flat(op, layout))) {
            b_outside = op;
            break;
        }

    if (!a_outside && !b_outside) return {span_relation::equal, std::nullopt};
    if (!a_outside) return {span_relation::a_subset_b, b_outside};
    if (!b_outside) return {span_relation::b_subset_a, a_outside};
    return {span_relation::incomparable, a_outside};
}

} // namespace incalg
