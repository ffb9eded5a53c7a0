#include "incalg/json_io.hpp"

#include <set>

namespace incalg::json_io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
    throw error(errc::parse, msg);
}

std::string need_string(const json& v, const std::string& where) {
    if (!v.is_string()) parse_fail(where + ": expected a string");
    return v.get<std::string>();
}

const json& need_array(const json& v, const std::string& where) {
    if (!v.is_array()) parse_fail(where + ": expected an array");
    return v;
}

const json& need_field(const json& doc, const char* key, const std::string& where) {
    if (!doc.is_object()) parse_fail(where + ": expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) parse_fail(where + ": missing field '" + std::string(key) + "'");
    return *it;
}

int need_element(const preorder& p, const std::string& label, const std::string& where) {
    int idx = p.index_of(label);
    if (idx < 0) parse_fail(where + ": unknown element '" + label + "'");
    return idx;
}

} // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

std::shared_ptr<const preorder> preorder_from_json(const json& doc) {
    const auto& elems = need_array(need_field(doc, "elements", "preorder"), "elements");
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        labels.push_back(need_string(elems[i], "elements[" + std::to_string(i) + "]"));

    const auto& rels = need_array(need_field(doc, "relations", "preorder"), "relations");
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(rels.size());
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const std::string where = "relations[" + std::to_string(i) + "]";
        const auto& pair = need_array(rels[i], where);
        if (pair.size() != 2) parse_fail(where + ": expected a pair of labels");
        pairs.emplace_back(need_string(pair[0], where + "[0]"),
                           need_string(pair[1], where + "[1]"));
    }
    return preorder::build(std::move(labels), pairs);
}

std::shared_ptr<const preorder> preorder_from_string(const std::string& text) {
    return preorder_from_json(parse_document(text));
}

json preorder_to_json(const preorder& p) {
    json doc;
    doc["elements"] = json::array();
    for (int i = 0; i < p.size(); ++i) doc["elements"].push_back(p.label(i));
    doc["relations"] = json::array();
    for (auto [x, y] : p.pairs())
        doc["relations"].push_back(json::array({p.label(x), p.label(y)}));
    return doc;
}

std::string validate_preorder_document(const std::string& text) {
    json doc;
    std::shared_ptr<const preorder> p;
    try {
        doc = parse_document(text);
        p = preorder_from_json(doc);
    } catch (const error& e) {
        return e.what();
    }
    // The stated relation list must equal its own closure: no missing
    // reflexive pairs, no missing transitive consequences.
    std::set<std::pair<int, int>> stated;
    for (const auto& rel : doc["relations"]) {
        auto pair = std::make_pair(p->index_of(rel[0].get<std::string>()),
                                   p->index_of(rel[1].get<std::string>()));
        if (!stated.insert(pair).second)
            return "duplicate relation pair [\"" + p->label(pair.first) + "\",\"" +
                   p->label(pair.second) + "\"]";
    }
    for (auto [x, y] : p->pairs())
        if (!stated.count({x, y}))
            return "relations are not closed: pair [\"" + p->label(x) + "\",\"" +
                   p->label(y) + "\"] is implied but not stated";
    return {};
}

incidence_function element_from_json(std::shared_ptr<const preorder> order, ring r,
                                     const json& doc) {
    auto f = incidence_function::zero(order, r);
    const auto& entries = need_array(need_field(doc, "entries", "element"), "entries");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        const auto& e = entries[i];
        int x = need_element(*order, need_string(need_field(e, "from", where), where + ".from"),
                             where + ".from");
        int y = need_element(*order, need_string(need_field(e, "to", where), where + ".to"),
                             where + ".to");
        if (!order->leq(x, y))
            parse_fail(where + ": (" + order->label(x) + "," + order->label(y) +
                       ") is not a comparable pair");
        scalar v = r.parse_scalar(need_string(need_field(e, "value", where), where + ".value"));
        if (!seen.emplace(x, y).second)
            parse_fail(where + ": duplicate entry for (" + order->label(x) + "," +
                       order->label(y) + ")");
        f.set(x, y, std::move(v));
    }
    return f;
}

json element_to_json(const incidence_function& f) {
    json doc;
    doc["entries"] = json::array();
    for (const auto& [pos, v] : f.entries()) {
        json e;
        e["from"] = f.order()->label(pos.first);
        e["to"] = f.order()->label(pos.second);
        e["value"] = v.str();
        doc["entries"].push_back(std::move(e));
    }
    return doc;
}

linear_operator operator_from_json(std::shared_ptr<const preorder> order, ring r,
                                   const json& doc) {
    auto op = linear_operator::zero(order, r);
    const auto& cols = need_array(need_field(doc, "columns", "operator"), "columns");
    std::set<std::pair<int, int>> seen;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string where = "columns[" + std::to_string(c) + "]";
        const auto& col = cols[c];
        int i = need_element(*order, need_string(need_field(col, "i", where), where + ".i"),
                             where + ".i");
        int j = need_element(*order, need_string(need_field(col, "j", where), where + ".j"),
                             where + ".j");
        if (!order->leq(i, j))
            parse_fail(where + ": (" + order->label(i) + "," + order->label(j) +
                       ") is not a comparable pair");
        if (!seen.emplace(i, j).second)
            parse_fail(where + ": duplicate column (" + order->label(i) + "," +
                       order->label(j) + ")");
        op.set_column(i, j,
                      element_from_json(order, r, need_field(col, "image", where)));
    }
    return op;
}

json operator_to_json(const linear_operator& op) {
    json doc;
    doc["columns"] = json::array();
    for (const auto& [col, img] : op.columns()) {
        json c;
        c["i"] = op.order()->label(col.first);
        c["j"] = op.order()->label(col.second);
        c["image"] = element_to_json(img);
        doc["columns"].push_back(std::move(c));
    }
    return doc;
}

json basis_to_json(const operator_basis& basis) {
    json doc;
    doc["rank"] = basis.rank();
    doc["method"] =
        basis.method == solve_method::bruteforce ? "bruteforce" : "closed_form";
    doc["kind"] =
        basis.space == space_kind::lie_derivations ? "lie" : "derivation";
    doc["basis"] = json::array();
    for (const auto& op : basis.basis) doc["basis"].push_back(operator_to_json(op));
    return doc;
}

json span_comparison_to_json(const span_comparison& cmp) {
    json doc;
    switch (cmp.relation) {
    case span_relation::equal:
        doc["relation"] = "equal";
        break;
    case span_relation::a_subset_b:
        doc["relation"] = "A_subset_B";
        break;
    case span_relation::b_subset_a:
        doc["relation"] = "B_subset_A";
        break;
    case span_relation::incomparable:
        doc["relation"] = "incomparable";
        break;
    }
    if (cmp.witness)
        doc["witness"] = operator_to_json(*cmp.witness);
    else
        doc["witness"] = nullptr;
    return doc;
}

json decomposition_to_json(const decomposition& dec, const std::string& method,
                           const ring& r) {
    const auto& p = *dec.derivation_part.order();
    json doc;
    doc["method"] = method;
    doc["ring"] = r.name();
    json flags;
    flags["d_is_derivation"] = dec.d_is_derivation;
    flags["f_is_central_valued"] = dec.f_is_central_valued;
    flags["f_kills_commutators"] = dec.f_kills_commutators;
    flags["sum_equals_input"] = dec.sum_equals_input;
    doc["flags"] = std::move(flags);
    doc["derivation_part"] = operator_to_json(dec.derivation_part);
    doc["central_part"] = operator_to_json(dec.central_part);
    json witnesses = json::object();
    auto pair_json = [&](std::pair<int, int> pr) {
        return json::array({p.label(pr.first), p.label(pr.second)});
    };
    if (dec.d_witness)
        witnesses["d_is_derivation"] =
            json::array({pair_json(dec.d_witness->left), pair_json(dec.d_witness->right)});
    if (dec.f_noncentral_column)
        witnesses["f_is_central_valued"] = pair_json(*dec.f_noncentral_column);
    if (dec.f_commutator_witness)
        witnesses["f_kills_commutators"] =
            json::array({pair_json(dec.f_commutator_witness->left),
                         pair_json(dec.f_commutator_witness->right)});
    doc["witnesses"] = std::move(witnesses);
    return doc;
}

} // namespace incalg::json_io
