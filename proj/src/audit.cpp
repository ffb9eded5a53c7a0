#include "incalg/audit.hpp"

#include "incalg/rng.hpp"

namespace incalg {

namespace {

using json = json_io::json;

incidence_function random_function(rng& gen, const std::shared_ptr<const preorder>& p,
                                   const ring& r) {
    auto f = incidence_function::zero(p, r);
    for (auto [x, y] : p->pairs())
        if (gen.below(2) == 0) f.set(x, y, gen.small_scalar(r));
    return f;
}

linear_operator random_combination(rng& gen, const std::vector<linear_operator>& basis,
                                   const std::shared_ptr<const preorder>& p,
                                   const ring& r) {
    auto out = linear_operator::zero(p, r);
    for (const auto& op : basis) out = out + op.scaled(gen.small_scalar(r));
    return out;
}

linear_operator random_operator(rng& gen, const std::shared_ptr<const preorder>& p,
                                const ring& r) {
    auto out = linear_operator::zero(p, r);
    const auto& pairs = p->pairs();
    int k = 1 + gen.index(4);
    for (int t = 0; t < k; ++t) {
        auto col = pairs[gen.index(static_cast<int>(pairs.size()))];
        auto pos = pairs[gen.index(static_cast<int>(pairs.size()))];
        auto img = out.column(col.first, col.second);
        img.set(pos.first, pos.second, gen.small_nonzero_scalar(r));
        out.set_column(col.first, col.second, std::move(img));
    }
    return out;
}

json pair_json(const preorder& p, std::pair<int, int> pr) {
    return json::array({p.label(pr.first), p.label(pr.second)});
}

} // namespace

json audit_report::to_json() const {
    json doc;
    doc["preorder"] = preorder_doc;
    doc["ring"] = ring_name;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["lemmas"] = json::array();
    for (const auto& lemma : lemmas) {
        json l;
        l["name"] = lemma.name;
        l["pass"] = lemma.pass;
        l["fail"] = lemma.fail;
        l["counterexample"] = lemma.counterexample;
        if (!lemma.note.empty()) l["note"] = lemma.note;
        doc["lemmas"].push_back(std::move(l));
    }
    return doc;
}

audit_report lemma_audit_suite(std::shared_ptr<const preorder> order, ring r,
                               long long trials, std::uint64_t seed,
                               bool exploratory) {
    audit_report report;
    report.preorder_doc = json_io::preorder_to_json(*order);
    report.ring_name = r.name();
    report.seed = seed;
    report.trials = trials;

    rng gen(seed);
    const auto& p = *order;
    const bool connected = p.is_connected();
    const bool poset = p.is_poset();
    const bool solver_ring = r.is_solver_field(exploratory);

    auto section = [&](const std::string& name) -> lemma_outcome& {
        report.lemmas.push_back(lemma_outcome{name, 0, 0, nullptr, ""});
        return report.lemmas.back();
    };
    auto record = [](lemma_outcome& s, bool ok, const json& counterexample) {
        if (ok) {
            ++s.pass;
        } else {
            ++s.fail;
            if (s.counterexample.is_null()) s.counterexample = counterexample;
        }
    };

    // --- algebra laws -----------------------------------------------------
    {
        auto& s = section("matrix_unit_products");
        const auto& pairs = p.pairs();
        for (auto a : pairs)
            for (auto b : pairs) {
                auto ea = incidence_function::basis_element(order, r, a.first, a.second);
                auto eb = incidence_function::basis_element(order, r, b.first, b.second);
                auto expected = incidence_function::zero(order, r);
                if (a.second == b.first && p.leq(a.first, b.second))
                    expected.set(a.first, b.second, r.one());
                record(s, convolve(ea, eb) == expected,
                       json{{"left", pair_json(p, a)}, {"right", pair_json(p, b)}});
            }
    }
    {
        auto& s = section("corner_evaluation"); // e_xx f e_yy = f(x,y) e_xy
        for (long long t = 0; t < trials; ++t) {
            auto f = random_function(gen, order, r);
            int x = gen.index(p.size()), y = gen.index(p.size());
            auto exx = incidence_function::basis_element(order, r, x, x);
            auto eyy = incidence_function::basis_element(order, r, y, y);
            auto product = convolve(convolve(exx, f), eyy);
            auto expected = incidence_function::zero(order, r);
            if (p.leq(x, y)) expected.set(x, y, f.at(x, y));
            record(s, product == expected,
                   json{{"f", json_io::element_to_json(f)},
                        {"pair", pair_json(p, {x, y})}});
        }
    }
    {
        auto& s = section("associativity");
        for (long long t = 0; t < trials; ++t) {
            auto f = random_function(gen, order, r);
            auto g = random_function(gen, order, r);
            auto h = random_function(gen, order, r);
            record(s, convolve(convolve(f, g), h) == convolve(f, convolve(g, h)),
                   json{{"f", json_io::element_to_json(f)},
                        {"g", json_io::element_to_json(g)},
                        {"h", json_io::element_to_json(h)}});
        }
    }
    {
        auto& s = section("component_idempotents");
        auto idems = component_idempotents(order, r);
        auto sum = incidence_function::zero(order, r);
        bool ok = true;
        for (std::size_t i = 0; i < idems.size(); ++i) {
            sum = sum + idems[i];
            if (!(convolve(idems[i], idems[i]) == idems[i])) ok = false;
            if (!idems[i].is_central()) ok = false;
            for (std::size_t j = i + 1; j < idems.size(); ++j)
                if (!convolve(idems[i], idems[j]).is_zero()) ok = false;
        }
        if (!(sum == incidence_function::delta(order, r))) ok = false;
        record(s, ok, json{{"count", idems.size()}});
    }
    {
        auto& s = section("zeta_mobius_inverse");
        if (!poset) {
            s.note = "skipped: the Mobius function needs a poset";
        } else {
            auto zeta = incidence_function::zeta(order, r);
            auto mu = incidence_function::mobius(order, r);
            auto delta = incidence_function::delta(order, r);
            record(s, convolve(mu, zeta) == delta && convolve(zeta, mu) == delta,
                   json{{"mu", json_io::element_to_json(mu)}});
        }
    }

    // --- restriction machinery --------------------------------------------
    {
        auto& s = section("restriction_homomorphism");
        const auto& pairs = p.pairs();
        for (long long t = 0; t < trials; ++t) {
            auto f = random_function(gen, order, r);
            auto g = random_function(gen, order, r);
            auto [x, y] = pairs[gen.index(static_cast<int>(pairs.size()))];
            bool ok = convolve(f, g).restricted(x, y) ==
                      convolve(f.restricted(x, y), g.restricted(x, y));
            // window evaluation: (fg)(x,y) = (f|_x^y g)(x,y)
            ok = ok && convolve(f, g).at(x, y) ==
                           convolve(f.restricted(x, y), g).at(x, y);
            record(s, ok,
                   json{{"f", json_io::element_to_json(f)},
                        {"g", json_io::element_to_json(g)},
                        {"pair", pair_json(p, {x, y})}});
        }
    }
    {
        auto& s = section("restriction_nesting"); // (f|_x^y)|_u^v = f|_u^v
        const auto& pairs = p.pairs();
        for (long long t = 0; t < trials; ++t) {
            auto f = random_function(gen, order, r);
            auto [x, y] = pairs[gen.index(static_cast<int>(pairs.size()))];
            auto inside = p.interval(x, y);
            int u = inside[gen.index(static_cast<int>(inside.size()))];
            int v = inside[gen.index(static_cast<int>(inside.size()))];
            if (!p.leq(u, v)) std::swap(u, v);
            if (!p.leq(u, v)) continue; // interval members can be mutually incomparable
            record(s, f.restricted(x, y).restricted(u, v) == f.restricted(u, v),
                   json{{"f", json_io::element_to_json(f)},
                        {"outer", pair_json(p, {x, y})},
                        {"inner", pair_json(p, {u, v})}});
        }
    }

    if (!solver_ring) {
        auto& s = section("solver_sections");
        s.note = "skipped: ring " + r.name() +
                 " is not a solver-grade field (need Q or Z/p, p an odd prime)";
        return report;
    }

    // --- solve once, reuse ------------------------------------------------
    auto lie = lie_derivation_nullspace(order, r, exploratory);
    auto der = derivation_nullspace(order, r, exploratory);

    {
        auto& s = section("lie_basis_predicate");
        for (const auto& op : lie.basis)
            record(s, is_lie_derivation(op), json_io::operator_to_json(op));
    }
    {
        auto& s = section("derivation_basis_predicate");
        for (const auto& op : der.basis)
            record(s, is_derivation(op) && is_lie_derivation(op),
                   json_io::operator_to_json(op));
    }
    {
        auto& s = section("oracle_equivalence");
        if (!connected) {
            s.note = "skipped: the closed form needs a connected preorder";
        } else {
            auto closed = lie_derivation_closed_form(order, r, exploratory);
            auto cmp = compare_spans(closed, lie);
            record(s, cmp.relation == span_relation::equal,
                   cmp.witness ? json_io::operator_to_json(*cmp.witness) : json(nullptr));
        }
    }
    {
        auto& s = section("structural_form");
        if (!connected) {
            s.note = "skipped: the structural form is defined for connected preorders";
        } else {
            for (const auto& op : lie.basis)
                record(s, matches_structural_form(op), json_io::operator_to_json(op));
            for (long long t = 0; t < trials; ++t) {
                auto op = random_combination(gen, lie.basis, order, r);
                record(s, matches_structural_form(op), json_io::operator_to_json(op));
            }
        }
    }
    {
        auto& s = section("coefficient_relations");
        if (!connected) {
            s.note = "skipped: the coefficient relations are defined for connected preorders";
        } else {
            for (const auto& op : lie.basis)
                record(s, matches_structural_form(op) && satisfies_constraints(op),
                       json_io::operator_to_json(op));
        }
    }
    {
        auto& s = section("characterization_equivalence");
        if (!connected) {
            s.note = "skipped: needs a connected preorder";
        } else if (!r.is_two_torsion_free()) {
            s.note = "skipped: the characterization is proved over 2-torsion-free rings";
        } else {
            for (long long t = 0; t < trials; ++t) {
                linear_operator op = (t % 3 == 0)
                                         ? random_operator(gen, order, r)
                                         : random_combination(gen, lie.basis, order, r);
                if (t % 3 == 1) { // perturb a solution
                    auto noise = random_operator(gen, order, r);
                    op = op + noise;
                }
                bool lhs = is_lie_derivation(op);
                bool rhs = matches_structural_form(op) && satisfies_constraints(op);
                record(s, lhs == rhs,
                       json{{"operator", json_io::operator_to_json(op)},
                            {"is_lie_derivation", lhs},
                            {"structural_and_relations", rhs}});
            }
        }
    }
    {
        auto& s = section("locality_offdiagonal");
        for (long long t = 0; t < trials; ++t) {
            auto op = random_combination(gen, lie.basis, order, r);
            auto f = random_function(gen, order, r);
            auto image = op.apply(f);
            bool ok = true;
            json cx = nullptr;
            for (auto [x, y] : p.pairs()) {
                if (x == y) continue;
                if (!(image.at(x, y) == op.apply(f.restricted(x, y)).at(x, y))) {
                    ok = false;
                    cx = json{{"operator", json_io::operator_to_json(op)},
                              {"f", json_io::element_to_json(f)},
                              {"pair", pair_json(p, {x, y})}};
                    break;
                }
            }
            record(s, ok, cx);
        }
    }
    {
        auto& s = section("diagonal_locality_derivations");
        for (long long t = 0; t < trials; ++t) {
            auto op = random_combination(gen, der.basis, order, r);
            auto f = random_function(gen, order, r);
            auto image = op.apply(f);
            bool ok = true;
            json cx = nullptr;
            for (auto [x, y] : p.pairs()) {
                if (!(image.at(x, y) == op.apply(f.restricted(x, y)).at(x, y))) {
                    ok = false;
                    cx = json{{"operator", json_io::operator_to_json(op)},
                              {"f", json_io::element_to_json(f)},
                              {"pair", pair_json(p, {x, y})}};
                    break;
                }
            }
            record(s, ok, cx);
        }
    }
    {
        auto& s = section("diagonal_constancy");
        if (!connected) {
            s.note = "skipped: diagonal constancy is stated for connected preorders";
        } else {
            if (!poset)
                s.note = "recorded as findings: scope on non-posets is an open question";
            for (long long t = 0; t < trials; ++t) {
                std::size_t pick = gen.below(lie.basis.size() + 1);
                linear_operator op =
                    pick < lie.basis.size()
                        ? lie.basis[pick]
                        : random_combination(gen, lie.basis, order, r);
                auto f = random_function(gen, order, r);
                auto audit = diagonal_values(op, f);
                json values = json::object();
                for (const auto& [x, v] : audit.values) values[p.label(x)] = v.str();
                record(s, audit.constant,
                       json{{"operator", json_io::operator_to_json(op)},
                            {"f", json_io::element_to_json(f)},
                            {"diagonal", values}});
            }
        }
    }
    {
        auto& s = section("extension_agreement_derivations");
        auto w = window::full(order);
        for (long long t = 0; t < trials; ++t) {
            auto op = random_combination(gen, der.basis, order, r);
            extended_operator ext(op, w);
            auto f = random_function(gen, order, r);
            bool ok = true;
            json cx = nullptr;
            for (auto [x, y] : p.pairs())
                if (!(ext.eval(f, x, y) == op.apply(f).at(x, y))) {
                    ok = false;
                    cx = json{{"operator", json_io::operator_to_json(op)},
                              {"f", json_io::element_to_json(f)},
                              {"pair", pair_json(p, {x, y})}};
                    break;
                }
            ok = ok && is_derivation(ext.restricted_to_interior());
            record(s, ok, cx);
        }
    }
    {
        auto& s = section("extension_lie_offdiagonal_agreement");
        auto w = window::full(order);
        for (long long t = 0; t < trials; ++t) {
            auto op = random_combination(gen, lie.basis, order, r);
            extended_operator ext(op, w);
            auto f = random_function(gen, order, r);
            bool ok = true;
            json cx = nullptr;
            for (auto [x, y] : p.pairs()) {
                if (x == y) continue;
                if (!(ext.eval(f, x, y) == op.apply(f).at(x, y))) {
                    ok = false;
                    cx = json{{"operator", json_io::operator_to_json(op)},
                              {"f", json_io::element_to_json(f)},
                              {"pair", pair_json(p, {x, y})}};
                    break;
                }
            }
            record(s, ok, cx);
        }
    }
    {
        auto& s = section("extension_lie_interior_closure");
        s.note = "recorded as findings: extensions of Lie derivations with "
                 "nonzero diagonal constants alter diagonal behavior";
        auto w = window::full(order);
        for (const auto& op : lie.basis) {
            extended_operator ext(op, w);
            record(s, is_lie_derivation(ext.restricted_to_interior()),
                   json_io::operator_to_json(op));
        }
    }
    {
        auto& s = section("coefficient_decomposition");
        if (!connected) {
            s.note = "skipped: decomposition needs a connected preorder";
        } else if (!r.is_two_torsion_free()) {
            s.note = "skipped: the coefficient decomposition needs a 2-torsion-free ring";
        } else {
            for (long long t = 0; t < trials; ++t) {
                std::size_t pick = gen.below(lie.basis.size() + 1);
                linear_operator op =
                    pick < lie.basis.size()
                        ? lie.basis[pick]
                        : random_combination(gen, lie.basis, order, r);
                auto dec = decompose_by_coefficients(op);
                record(s, dec.all_flags(),
                       json{{"operator", json_io::operator_to_json(op)},
                            {"decomposition",
                             json_io::decomposition_to_json(dec, "coefficients", r)}});
            }
        }
    }
    {
        auto& s = section("diagonal_decomposition");
        if (!connected) {
            s.note = "skipped: decomposition needs a connected preorder";
        } else {
            if (!poset)
                s.note = "recorded as findings: the diagonal construction can fail "
                         "with 2-cycles present";
            for (long long t = 0; t < trials; ++t) {
                std::size_t pick = gen.below(lie.basis.size() + 1);
                linear_operator op =
                    pick < lie.basis.size()
                        ? lie.basis[pick]
                        : random_combination(gen, lie.basis, order, r);
                auto dec = decompose_by_diagonal(op);
                record(s, dec.all_flags(),
                       json{{"operator", json_io::operator_to_json(op)},
                            {"decomposition",
                             json_io::decomposition_to_json(dec, "diagonal", r)}});
            }
        }
    }
    {
        auto& s = section("decomposition_agreement");
        if (!connected) {
            s.note = "skipped: decomposition needs a connected preorder";
        } else if (!r.is_two_torsion_free()) {
            s.note = "skipped: the coefficient decomposition needs a 2-torsion-free ring";
        } else {
            if (!poset)
                s.note = "recorded as findings: the two constructions provably "
                         "differ on some non-poset inputs";
            for (long long t = 0; t < trials; ++t) {
                auto op = random_combination(gen, lie.basis, order, r);
                auto by_coeff = decompose_by_coefficients(op);
                auto by_diag = decompose_by_diagonal(op);
                bool ok = by_coeff.derivation_part == by_diag.derivation_part &&
                          by_coeff.central_part == by_diag.central_part;
                record(s, ok, json{{"operator", json_io::operator_to_json(op)}});
            }
        }
    }
    {
        auto& s = section("dual_transport");
        for (long long t = 0; t < trials; ++t) {
            auto op = random_combination(gen, lie.basis, order, r);
            auto transported = op.transport_to_dual();
            bool ok = is_lie_derivation(transported) &&
                      transported.transport_to_dual() == op;
            record(s, ok, json_io::operator_to_json(op));
        }
    }

    return report;
}

} // namespace incalg
