#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "incalg/error.hpp"
#include "incalg/rng.hpp"
#include "incalg/solver.hpp"

using incalg::errc;
using incalg::error;
using incalg::incidence_function;
using incalg::linear_operator;
using incalg::operator_basis;
using incalg::preorder;
using incalg::ring;
using incalg::span_relation;

namespace {

template <typename Fn>
errc thrown_code(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return errc::invalid_argument;
}

std::shared_ptr<const preorder> chain(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        if (i > 0) edges.push_back({i - 1, i});
    }
    return preorder::build_indexed(labels, edges);
}

std::shared_ptr<const preorder> two_cycle() {
    return preorder::build({"1", "2"}, {{"1", "2"}, {"2", "1"}});
}

// The full relation on three points: every pair comparable both ways.
std::shared_ptr<const preorder> full3() {
    return preorder::build_indexed({"1", "2", "3"},
                                   {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

} // namespace

TEST_CASE("rank fixtures") {
    ring q = ring::rationals();
    auto singleton = preorder::build({"1"}, {});
    CHECK(incalg::lie_derivation_nullspace(singleton, q).rank() == 1);
    CHECK(incalg::derivation_nullspace(singleton, q).rank() == 0);

    auto antichain = preorder::build({"1", "2"}, {});
    CHECK(incalg::lie_derivation_nullspace(antichain, q).rank() == 4);
    CHECK(incalg::derivation_nullspace(antichain, q).rank() == 0);

    auto t2 = chain(2);
    CHECK(incalg::lie_derivation_nullspace(t2, q).rank() == 4);
    CHECK(incalg::derivation_nullspace(t2, q).rank() == 2);

    auto m2 = two_cycle();
    CHECK(incalg::lie_derivation_nullspace(m2, q).rank() == 4);
    CHECK(incalg::derivation_nullspace(m2, q).rank() == 3);

    CHECK(incalg::lie_derivation_nullspace(chain(3), q).rank() == 8);
    CHECK(incalg::lie_derivation_nullspace(full3(), q).rank() == 9);
}

TEST_CASE("closed-form block ranks") {
    ring q = ring::rationals();
    // classes + ordered comparable pairs + self-coefficient nullity:
    CHECK(incalg::lie_derivation_closed_form(chain(2), q).rank() == 4);  // 2+1+1
    CHECK(incalg::lie_derivation_closed_form(two_cycle(), q).rank() == 4); // 1+2+1
    CHECK(incalg::lie_derivation_closed_form(chain(3), q).rank() == 8);  // 3+3+2
    CHECK(incalg::lie_derivation_closed_form(full3(), q).rank() == 9);   // 1+6+2
}

TEST_CASE("every solver vector satisfies its defining identity") {
    ring q = ring::rationals();
    for (auto p : {chain(3), two_cycle(), full3()}) {
        for (const auto& v : incalg::lie_derivation_nullspace(p, q).basis)
            CHECK(incalg::is_lie_derivation(v));
        for (const auto& v : incalg::lie_derivation_closed_form(p, q).basis)
            CHECK(incalg::is_lie_derivation(v));
        for (const auto& v : incalg::derivation_nullspace(p, q).basis) {
            CHECK(incalg::is_derivation(v));
            CHECK(incalg::is_lie_derivation(v)); // derivations are Lie derivations
        }
    }
}

TEST_CASE("the two oracles span the same space") {
    for (ring r : {ring::rationals(), ring::modular(3), ring::modular(97)}) {
        incalg::enumerate_preorders(3, true, [&](std::shared_ptr<const preorder> p) {
            auto closed = incalg::lie_derivation_closed_form(p, r);
            auto brute = incalg::lie_derivation_nullspace(p, r);
            auto cmp = incalg::compare_spans(closed, brute);
            CHECK(cmp.relation == span_relation::equal);
            CHECK_FALSE(cmp.witness.has_value());
            return true;
        });
    }
}

TEST_CASE("compare_spans detects strict containment and incomparability") {
    ring q = ring::rationals();
    auto p = chain(2);
    auto brute = incalg::lie_derivation_nullspace(p, q);
    REQUIRE(brute.rank() == 4);

    operator_basis truncated = brute;
    truncated.basis.pop_back();
    auto cmp = incalg::compare_spans(truncated, brute);
    CHECK(cmp.relation == span_relation::a_subset_b);
    REQUIRE(cmp.witness.has_value());
    CHECK(incalg::is_lie_derivation(*cmp.witness)); // the missing direction

    auto flipped = incalg::compare_spans(brute, truncated);
    CHECK(flipped.relation == span_relation::b_subset_a);

    // Two independent lines: incomparable spans.
    operator_basis left = brute;
    left.basis = {brute.basis[0]};
    operator_basis right = brute;
    right.basis = {brute.basis[1]};
    CHECK(incalg::compare_spans(left, right).relation ==
          span_relation::incomparable);

    CHECK(incalg::compare_spans(brute, brute).relation == span_relation::equal);
}

TEST_CASE("solver ring gates") {
    auto p = chain(2);
    CHECK(thrown_code([&] {
        incalg::lie_derivation_nullspace(p, ring::integers());
    }) == errc::unsupported);
    CHECK(thrown_code([&] {
        incalg::lie_derivation_nullspace(p, ring::modular(6));
    }) == errc::unsupported);
    CHECK(thrown_code([&] {
        incalg::lie_derivation_nullspace(p, ring::modular(2));
    }) == errc::unsupported);
    // Z/2 passes in exploratory mode and still yields genuine solutions.
    auto basis2 = incalg::lie_derivation_nullspace(p, ring::modular(2), true);
    for (const auto& v : basis2.basis) CHECK(incalg::is_lie_derivation(v));
    // Composite moduli stay rejected even in exploratory mode.
    CHECK(thrown_code([&] {
        incalg::lie_derivation_nullspace(p, ring::modular(6), true);
    }) == errc::unsupported);
}

TEST_CASE("closed form requires connectivity, brute force does not") {
    ring q = ring::rationals();
    auto islands = preorder::build({"a", "b"}, {});
    CHECK(thrown_code([&] { incalg::lie_derivation_closed_form(islands, q); }) ==
          errc::unsupported);
    CHECK(incalg::lie_derivation_nullspace(islands, q).rank() == 4);
}

TEST_CASE("solving is deterministic") {
    ring q = ring::rationals();
    auto p = full3();
    auto a = incalg::lie_derivation_nullspace(p, q);
    auto b = incalg::lie_derivation_nullspace(p, q);
    REQUIRE(a.rank() == b.rank());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}

TEST_CASE("solution spaces are closed under the module operations") {
    ring f3 = ring::modular(3);
    auto p = two_cycle();
    auto basis = incalg::lie_derivation_nullspace(p, f3).basis;
    incalg::rng gen(4);
    for (int t = 0; t < 10; ++t) {
        auto combo = linear_operator::zero(p, f3);
        for (const auto& v : basis) combo = combo + v.scaled(gen.small_scalar(f3));
        CHECK(incalg::is_lie_derivation(combo));
    }
}

TEST_CASE("brute force and closed form agree across every connected 3-point preorder over a large prime") {
    ring big = ring::modular(10007);
    incalg::enumerate_preorders(3, true, [&](std::shared_ptr<const preorder> p) {
        auto cmp = incalg::compare_spans(incalg::lie_derivation_closed_form(p, big),
                                         incalg::lie_derivation_nullspace(p, big));
        CHECK(cmp.relation == span_relation::equal);
        return true;
    });
}

TEST_CASE("derivation module sits inside the Lie-derivation module") {
    ring q = ring::rationals();
    incalg::enumerate_preorders(3, true, [&](std::shared_ptr<const preorder> p) {
        auto der = incalg::derivation_nullspace(p, q);
        auto lie = incalg::lie_derivation_nullspace(p, q);
        auto cmp = incalg::compare_spans(der, lie);
        bool contained = cmp.relation == span_relation::equal ||
                         cmp.relation == span_relation::a_subset_b;
        CHECK(contained);
        CHECK(der.rank() <= lie.rank());
        return true;
    });
}
