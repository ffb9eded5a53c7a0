#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "incalg/error.hpp"
#include "incalg/preorder.hpp"

using incalg::errc;
using incalg::error;
using incalg::preorder;

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

} // namespace

TEST_CASE("closure is taken automatically") {
    auto p = chain(3); // generators 1<2, 2<3 only
    CHECK(p->size() == 3);
    CHECK(p->leq(0, 2)); // implied by transitivity
    CHECK(p->leq(0, 0)); // reflexivity is free
    CHECK_FALSE(p->leq(2, 0));
    CHECK(p->less(0, 1));
    CHECK_FALSE(p->less(0, 0));
    CHECK(p->pairs() ==
          std::vector<std::pair<int, int>>{
              {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("labels and lookup") {
    auto p = preorder::build({"a", "b"}, {{"a", "b"}});
    CHECK(p->label(0) == "a");
    CHECK(p->label(1) == "b");
    CHECK(p->index_of("b") == 1);
    CHECK(p->index_of("zzz") == -1);
    CHECK(thrown_code([&] { p->label(2); }) == errc::out_of_range);
    CHECK(thrown_code([&] { p->label(-1); }) == errc::out_of_range);
}

TEST_CASE("construction validation") {
    CHECK(thrown_code([] { preorder::build({}, {}); }) == errc::invalid_argument);
    CHECK(thrown_code([] { preorder::build({"a", "a"}, {}); }) ==
          errc::invalid_argument);
    CHECK(thrown_code([] { preorder::build({""}, {}); }) == errc::invalid_argument);
    CHECK(thrown_code([] { preorder::build({"a"}, {{"a", "b"}}); }) ==
          errc::invalid_argument);
    CHECK(thrown_code([] {
        std::vector<std::string> labels;
        for (int i = 0; i < 65; ++i) labels.push_back(std::to_string(i));
        preorder::build(labels, {});
    }) == errc::invalid_argument);
    CHECK(thrown_code([] { preorder::build_indexed({"a"}, {{0, 5}}); }) ==
          errc::out_of_range);
}

TEST_CASE("two-cycles are allowed and strictness is index-based") {
    auto m2 = preorder::build({"1", "2"}, {{"1", "2"}, {"2", "1"}});
    CHECK(m2->leq(0, 1));
    CHECK(m2->leq(1, 0));
    CHECK(m2->less(0, 1)); // x < y means x <= y and x != y, even in a cycle
    CHECK(m2->less(1, 0));
    CHECK(m2->equivalent(0, 1));
    CHECK_FALSE(m2->is_poset());
    CHECK(chain(2)->is_poset());
    CHECK(m2->pairs().size() == 4);
}

TEST_CASE("intervals") {
    auto p = chain(4);
    CHECK(p->interval(0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(p->interval(1, 2) == std::vector<int>{1, 2});
    CHECK(p->interval(2, 2) == std::vector<int>{2});
    CHECK(thrown_code([&] { p->interval(2, 0); }) == errc::not_comparable);

    auto m2 = preorder::build({"1", "2"}, {{"1", "2"}, {"2", "1"}});
    CHECK(m2->interval(0, 0) == std::vector<int>{0, 1}); // cycles fatten intervals
}

TEST_CASE("components and connectivity") {
    auto two_islands = preorder::build({"a", "b", "c"}, {{"a", "b"}});
    auto comps = two_islands->components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK_FALSE(two_islands->is_connected());
    CHECK(chain(3)->is_connected());

    // V-shape a > b < c is connected through the common lower bound.
    auto vee = preorder::build({"a", "b", "c"}, {{"b", "a"}, {"b", "c"}});
    CHECK(vee->is_connected());
}

TEST_CASE("equivalence classes of mutual comparability") {
    auto p = preorder::build({"1", "2", "3"},
                             {{"1", "2"}, {"2", "1"}, {"2", "3"}});
    auto classes = p->equivalence_classes();
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<int>{0, 1});
    CHECK(classes[1] == std::vector<int>{2});

    auto poset = chain(3);
    CHECK(poset->equivalence_classes().size() == 3); // all singletons
}

TEST_CASE("dual is an involution that flips the order") {
    auto p = chain(3);
    auto d = p->dual();
    CHECK(d->leq(2, 0));
    CHECK_FALSE(d->leq(0, 2));
    CHECK(d->label(0) == "1"); // labels stay put
    CHECK(*d->dual() == *p);

    incalg::enumerate_preorders(3, false, [](std::shared_ptr<const preorder> q) {
        CHECK(*q->dual()->dual() == *q);
        return true;
    });
}

TEST_CASE("induced subpreorders") {
    auto p = chain(4);
    auto sub = p->induced({1, 3});
    CHECK(sub->size() == 2);
    CHECK(sub->label(0) == "2");
    CHECK(sub->label(1) == "4");
    CHECK(sub->leq(0, 1));
    CHECK_FALSE(sub->leq(1, 0));
    CHECK(thrown_code([&] { p->induced({1, 1}); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { p->induced({}); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { p->induced({7}); }) == errc::out_of_range);
}

TEST_CASE("enumeration counts match the known sequence") {
    // Numbers of distinct reflexive-transitive relations on n labeled points.
    CHECK(incalg::all_preorders(1).size() == 1);
    CHECK(incalg::all_preorders(2).size() == 4);
    CHECK(incalg::all_preorders(3).size() == 29);
    CHECK(incalg::all_preorders(4).size() == 355);
    CHECK(incalg::all_preorders(2, true).size() == 3);
    CHECK(incalg::all_preorders(3, true).size() == 19);
    CHECK(incalg::all_preorders(4, true).size() == 233);

    std::size_t count5 = 0;
    incalg::enumerate_preorders(5, false, [&](std::shared_ptr<const preorder>) {
        ++count5;
        return true;
    });
    CHECK(count5 == 6942);

    CHECK(thrown_code([] { incalg::all_preorders(0); }) == errc::invalid_argument);
    CHECK(thrown_code([] { incalg::all_preorders(6); }) == errc::invalid_argument);
}

TEST_CASE("enumeration is deterministic, deduplicated, and stoppable") {
    auto first = incalg::all_preorders(3);
    auto second = incalg::all_preorders(3);
    REQUIRE(first.size() == second.size());
    std::set<std::vector<std::pair<int, int>>> seen;
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(*first[i] == *second[i]);
        CHECK(first[i]->size() == 3);
        seen.insert(first[i]->pairs());
    }
    CHECK(seen.size() == first.size()); // no relation repeats

    int visits = 0;
    incalg::enumerate_preorders(3, false, [&](std::shared_ptr<const preorder>) {
        return ++visits < 5;
    });
    CHECK(visits == 5);
}

TEST_CASE("every enumerated relation is transitive and reflexive") {
    incalg::enumerate_preorders(3, false, [](std::shared_ptr<const preorder> p) {
        int n = p->size();
        for (int x = 0; x < n; ++x) {
            CHECK(p->leq(x, x));
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (p->leq(x, y) && p->leq(y, z)) CHECK(p->leq(x, z));
        }
        return true;
    });
}
