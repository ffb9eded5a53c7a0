#include "incalg/preorder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace incalg {

namespace {

// Reflexive-transitive closure of bitmask rows (Warshall).
void close(std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int x = 0; x < n; ++x) rows[x] |= 1ull << x;
    for (int z = 0; z < n; ++z)
        for (int x = 0; x < n; ++x)
            if (rows[x] >> z & 1) rows[x] |= rows[z];
}

bool is_transitive(const std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int x = 0; x < n; ++x) {
        std::uint64_t reach = rows[x];
        std::uint64_t super = 0;
        for (int z = 0; z < n; ++z)
            if (reach >> z & 1) super |= rows[z];
        if ((super & ~reach) != 0) return false;
    }
    return true;
}

bool connected(const std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return true;
    // Undirected comparability graph, flood fill from 0.
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (int x = 0; x < n; ++x) {
            if (!(frontier >> x & 1)) continue;
            next |= rows[x];
            for (int y = 0; y < n; ++y)
                if (rows[y] >> x & 1) next |= 1ull << y;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 64 ? ~0ull : (1ull << n) - 1);
}

} // namespace

void preorder::check_index(int x) const {
    if (x < 0 || x >= size())
        throw error(errc::out_of_range,
                    "element index " + std::to_string(x) + " out of range");
}

const std::string& preorder::label(int x) const {
    check_index(x);
    return labels_[x];
}

int preorder::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

bool preorder::leq(int x, int y) const {
    check_index(x);
    check_index(y);
    return rows_[x] >> y & 1;
}

void preorder::finish() {
    pairs_.clear();
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            if (rows_[x] >> y & 1) pairs_.emplace_back(x, y);
}

std::shared_ptr<const preorder>
preorder::build_indexed(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& pairs) {
    const int n = static_cast<int>(labels.size());
    if (n == 0)
        throw error(errc::invalid_argument, "a preorder needs at least one element");
    if (n > max_elements)
        throw error(errc::invalid_argument,
                    "at most " + std::to_string(max_elements) + " elements supported");
    for (int i = 0; i < n; ++i) {
        if (labels[i].empty())
            throw error(errc::invalid_argument, "element labels must be nonempty");
        for (int j = i + 1; j < n; ++j)
            if (labels[i] == labels[j])
                throw error(errc::invalid_argument,
                            "duplicate element label '" + labels[i] + "'");
    }
    auto p = std::shared_ptr<preorder>(new preorder());
    p->labels_ = std::move(labels);
    p->rows_.assign(n, 0);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw error(errc::out_of_range, "relation pair index out of range");
        p->rows_[x] |= 1ull << y;
    }
    close(p->rows_);
    p->finish();
    return p;
}

std::shared_ptr<const preorder>
preorder::build(std::vector<std::string> labels,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        index.emplace(labels[i], i);
    std::vector<std::pair<int, int>> ipairs;
    ipairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a);
        if (ia == index.end())
            throw error(errc::invalid_argument, "unknown label '" + a + "' in relation");
        auto ib = index.find(b);
        if (ib == index.end())
            throw error(errc::invalid_argument, "unknown label '" + b + "' in relation");
        ipairs.emplace_back(ia->second, ib->second);
    }
    return build_indexed(std::move(labels), ipairs);
}

std::vector<int> preorder::interval(int x, int y) const {
    if (!leq(x, y))
        throw error(errc::not_comparable,
                    "interval requires " + labels_[x] + " <= " + labels_[y]);
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
}

bool preorder::is_poset() const {
    for (int x = 0; x < size(); ++x)
        for (int y = x + 1; y < size(); ++y)
            if (leq(x, y) && leq(y, x)) return false;
    return true;
}

std::vector<std::vector<int>> preorder::components() const {
    const int n = size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> members, stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y = 0; y < n; ++y)
                if (comp[y] < 0 && (leq(x, y) || leq(y, x))) {
                    comp[y] = id;
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> preorder::equivalence_classes() const {
    const int n = size();
    std::vector<bool> done(n, false);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::vector<int> cls;
        for (int y = 0; y < n; ++y)
            if (equivalent(x, y)) {
                cls.push_back(y);
                done[y] = true;
            }
        out.push_back(std::move(cls));
    }
    return out;
}

std::shared_ptr<const preorder> preorder::dual() const {
    auto p = std::shared_ptr<preorder>(new preorder());
    p->labels_ = labels_;
    p->rows_.assign(size(), 0);
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            if (rows_[x] >> y & 1) p->rows_[y] |= 1ull << x;
    p->finish();
    return p;
}

std::shared_ptr<const preorder>
preorder::induced(const std::vector<int>& elements) const {
    if (elements.empty())
        throw error(errc::invalid_argument, "induced subset is empty");
    const int k = static_cast<int>(elements.size());
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        check_index(elements[i]);
        labels[i] = labels_[elements[i]];
    }
    auto p = std::shared_ptr<preorder>(new preorder());
    p->labels_ = std::move(labels); // build() would re-verify distinctness; do it here
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p->labels_[i] == p->labels_[j])
                throw error(errc::invalid_argument, "induced subset repeats an element");
    p->rows_.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (leq(elements[i], elements[j])) p->rows_[i] |= 1ull << j;
    p->finish();
    return p;
}

void enumerate_preorders(
    int n, bool connected_only,
    const std::function<bool(std::shared_ptr<const preorder>)>& visit) {
    if (n < 1 || n > 5)
        throw error(errc::invalid_argument, "enumeration supports 1 <= n <= 5");
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);

    // Off-diagonal pair k <-> (x, y), lexicographic.
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) slots.emplace_back(x, y);

    const std::uint32_t total = 1u << slots.size();
    std::vector<std::uint64_t> rows(n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        for (int x = 0; x < n; ++x) rows[x] = 1ull << x;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) rows[slots[k].first] |= 1ull << slots[k].second;
        if (!is_transitive(rows)) continue;
        if (connected_only && !connected(rows)) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rows[x] >> y & 1) pairs.emplace_back(x, y);
        if (!visit(preorder::build_indexed(labels, pairs))) return;
    }
}

std::vector<std::shared_ptr<const preorder>> all_preorders(int n, bool connected_only) {
    std::vector<std::shared_ptr<const preorder>> out;
    enumerate_preorders(n, connected_only, [&](std::shared_ptr<const preorder> p) {
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

} // namespace incalg
