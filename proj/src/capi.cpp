#include "incalg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "incalg/algebra.hpp"
#include "incalg/audit.hpp"
#include "incalg/error.hpp"
#include "incalg/json_io.hpp"
#include "incalg/operators.hpp"
#include "incalg/preorder.hpp"
#include "incalg/proper.hpp"
#include "incalg/ring.hpp"
#include "incalg/solver.hpp"

struct incalg_preorder {
    std::shared_ptr<const incalg::preorder> p;
};

struct incalg_element {
    incalg::incidence_function f;
};

namespace {

thread_local std::string g_last_error;

incalg_status status_of(incalg::errc code) {
    switch (code) {
    case incalg::errc::parse:
        return INCALG_ERROR_PARSE;
    case incalg::errc::unsupported:
        return INCALG_ERROR_UNSUPPORTED;
    case incalg::errc::precondition:
        return INCALG_ERROR_PRECONDITION;
    default:
        return INCALG_ERROR_INVALID;
    }
}

template <typename Fn>
incalg_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const incalg::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return INCALG_ERROR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return INCALG_ERROR_INVALID;
    }
}

incalg_status fail_invalid(const char* msg) {
    g_last_error = msg;
    return INCALG_ERROR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

incalg_element* wrap_element(incalg::incidence_function f) {
    return new incalg_element{std::move(f)};
}

std::string json_text(const incalg::json_io::json& doc) { return doc.dump(2); }

incalg::ring parse_ring(const char* text) {
    if (text == nullptr)
        throw incalg::error(incalg::errc::invalid_argument, "null ring name");
    return incalg::ring::parse(text);
}

std::shared_ptr<const incalg::preorder> parse_order(const char* json) {
    if (json == nullptr)
        throw incalg::error(incalg::errc::invalid_argument, "null preorder document");
    return incalg::json_io::preorder_from_string(json);
}

/// Binary element operation plumbing shared by add/convolve/bracket/jordan.
template <typename Op>
incalg_status element_binary(const incalg_element* a, const incalg_element* b,
                             incalg_element** out, Op&& op) {
    if (a == nullptr || b == nullptr || out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(op(a->f, b->f));
        return INCALG_OK;
    });
}

} // namespace

extern "C" {

const char* incalg_version(void) { return "0.1.0"; }

const char* incalg_last_error(void) { return g_last_error.c_str(); }

void incalg_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */
/* Rings                                                               */
/* ------------------------------------------------------------------ */

incalg_status incalg_ring_canonical_name(const char* ring, char** name_out) {
    if (name_out == nullptr) return fail_invalid("null output argument");
    return guarded([&] {
        *name_out = dup_string(parse_ring(ring).name());
        return INCALG_OK;
    });
}

incalg_status incalg_ring_is_solver_field(const char* ring, int exploratory,
                                          int* solver_field_out) {
    if (solver_field_out == nullptr) return fail_invalid("null output argument");
    return guarded([&] {
        *solver_field_out = parse_ring(ring).is_solver_field(exploratory != 0) ? 1 : 0;
        return INCALG_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Preorders                                                           */
/* ------------------------------------------------------------------ */

incalg_status incalg_preorder_parse(const char* json, incalg_preorder** out) {
    if (out == nullptr) return fail_invalid("null output argument");
    return guarded([&] {
        *out = new incalg_preorder{parse_order(json)};
        return INCALG_OK;
    });
}

void incalg_preorder_free(incalg_preorder* p) { delete p; }

incalg_status incalg_preorder_to_json(const incalg_preorder* p, char** json_out) {
    if (p == nullptr || json_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *json_out = dup_string(json_text(incalg::json_io::preorder_to_json(*p->p)));
        return INCALG_OK;
    });
}

incalg_status incalg_preorder_validate_json(const char* json,
                                            char** diagnostic_out) {
    if (diagnostic_out != nullptr) *diagnostic_out = nullptr;
    if (json == nullptr) return fail_invalid("null preorder document");
    return guarded([&]() -> incalg_status {
        std::string diagnostic = incalg::json_io::validate_preorder_document(json);
        if (diagnostic.empty()) return INCALG_OK;
        g_last_error = diagnostic;
        if (diagnostic_out != nullptr) *diagnostic_out = dup_string(diagnostic);
        return diagnostic.rfind("invalid JSON", 0) == 0 ? INCALG_ERROR_PARSE
                                                        : INCALG_ERROR_INVALID;
    });
}

int incalg_preorder_size(const incalg_preorder* p) {
    return p == nullptr ? 0 : p->p->size();
}

incalg_status incalg_preorder_leq(const incalg_preorder* p, int i, int j,
                                  int* leq_out) {
    if (p == nullptr || leq_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        if (i < 0 || j < 0 || i >= p->p->size() || j >= p->p->size())
            throw incalg::error(incalg::errc::invalid_argument,
                                "element index out of range");
        *leq_out = p->p->leq(i, j) ? 1 : 0;
        return INCALG_OK;
    });
}

incalg_status incalg_preorder_label(const incalg_preorder* p, int i,
                                    char** label_out) {
    if (p == nullptr || label_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        if (i < 0 || i >= p->p->size())
            throw incalg::error(incalg::errc::invalid_argument,
                                "element index out of range");
        *label_out = dup_string(p->p->label(i));
        return INCALG_OK;
    });
}

incalg_status incalg_preorder_index_of(const incalg_preorder* p,
                                       const char* label, int* index_out) {
    if (p == nullptr || label == nullptr || index_out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        int idx = p->p->index_of(label);
        if (idx < 0)
            throw incalg::error(incalg::errc::invalid_argument,
                                std::string("unknown element label: ") + label);
        *index_out = idx;
        return INCALG_OK;
    });
}

int incalg_preorder_is_poset(const incalg_preorder* p) {
    return (p != nullptr && p->p->is_poset()) ? 1 : 0;
}

int incalg_preorder_is_connected(const incalg_preorder* p) {
    return (p != nullptr && p->p->is_connected()) ? 1 : 0;
}

incalg_status incalg_preorder_dual(const incalg_preorder* p,
                                   incalg_preorder** out) {
    if (p == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = new incalg_preorder{p->p->dual()};
        return INCALG_OK;
    });
}

incalg_status incalg_enumerate_preorders(int n, int connected_only,
                                         incalg_preorder_visitor visitor,
                                         void* user_data,
                                         unsigned long long* count_out) {
    if (visitor == nullptr) return fail_invalid("null visitor");
    if (count_out != nullptr) *count_out = 0;
    return guarded([&] {
        unsigned long long seen = 0;
        incalg::enumerate_preorders(
            n, connected_only != 0,
            [&](const std::shared_ptr<const incalg::preorder>& p) {
                std::string doc = incalg::json_io::preorder_to_json(*p).dump();
                ++seen;
                return visitor(doc.c_str(), user_data) != 0;
            });
        if (count_out != nullptr) *count_out = seen;
        return INCALG_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Incidence-algebra elements                                          */
/* ------------------------------------------------------------------ */

incalg_status incalg_element_parse(const incalg_preorder* p, const char* ring,
                                   const char* json, incalg_element** out) {
    if (p == nullptr || json == nullptr || out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        auto r = parse_ring(ring);
        auto doc = incalg::json_io::parse_document(json);
        *out = wrap_element(incalg::json_io::element_from_json(p->p, r, doc));
        return INCALG_OK;
    });
}

void incalg_element_free(incalg_element* f) { delete f; }

incalg_status incalg_element_to_json(const incalg_element* f, char** json_out) {
    if (f == nullptr || json_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *json_out = dup_string(json_text(incalg::json_io::element_to_json(f->f)));
        return INCALG_OK;
    });
}

incalg_status incalg_element_delta(const incalg_preorder* p, const char* ring,
                                   incalg_element** out) {
    if (p == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(
            incalg::incidence_function::delta(p->p, parse_ring(ring)));
        return INCALG_OK;
    });
}

incalg_status incalg_element_zeta(const incalg_preorder* p, const char* ring,
                                  incalg_element** out) {
    if (p == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(
            incalg::incidence_function::zeta(p->p, parse_ring(ring)));
        return INCALG_OK;
    });
}

incalg_status incalg_element_mobius(const incalg_preorder* p, const char* ring,
                                    incalg_element** out) {
    if (p == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(
            incalg::incidence_function::mobius(p->p, parse_ring(ring)));
        return INCALG_OK;
    });
}

incalg_status incalg_element_basis(const incalg_preorder* p, const char* ring,
                                   int i, int j, incalg_element** out) {
    if (p == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(incalg::incidence_function::basis_element(
            p->p, parse_ring(ring), i, j));
        return INCALG_OK;
    });
}

incalg_status incalg_element_add(const incalg_element* a,
                                 const incalg_element* b,
                                 incalg_element** out) {
    return element_binary(a, b, out,
                          [](const auto& x, const auto& y) { return x + y; });
}

incalg_status incalg_element_negate(const incalg_element* a,
                                    incalg_element** out) {
    if (a == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(-a->f);
        return INCALG_OK;
    });
}

incalg_status incalg_element_scale(const incalg_element* a, const char* scalar,
                                   incalg_element** out) {
    if (a == nullptr || scalar == nullptr || out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(a->f.scaled(a->f.coefficient_ring().parse_scalar(scalar)));
        return INCALG_OK;
    });
}

incalg_status incalg_element_convolve(const incalg_element* a,
                                      const incalg_element* b,
                                      incalg_element** out) {
    return element_binary(a, b, out, [](const auto& x, const auto& y) {
        return incalg::convolve(x, y);
    });
}

incalg_status incalg_element_lie_bracket(const incalg_element* a,
                                         const incalg_element* b,
                                         incalg_element** out) {
    return element_binary(a, b, out, [](const auto& x, const auto& y) {
        return incalg::lie_bracket(x, y);
    });
}

incalg_status incalg_element_jordan(const incalg_element* a,
                                    const incalg_element* b,
                                    incalg_element** out) {
    return element_binary(a, b, out, [](const auto& x, const auto& y) {
        return incalg::jordan_product(x, y);
    });
}

incalg_status incalg_element_restrict(const incalg_element* a, int x, int y,
                                      incalg_element** out) {
    if (a == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        if (!a->f.order()->leq(x, y))
            throw incalg::error(incalg::errc::not_comparable,
                                "restriction endpoints are not comparable");
        *out = wrap_element(a->f.restricted(x, y));
        return INCALG_OK;
    });
}

incalg_status incalg_element_diagonal(const incalg_element* a,
                                      incalg_element** out) {
    if (a == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *out = wrap_element(a->f.diagonal_part());
        return INCALG_OK;
    });
}

incalg_status incalg_element_at(const incalg_element* a, int i, int j,
                                char** value_out) {
    if (a == nullptr || value_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        *value_out = dup_string(a->f.at(i, j).str());
        return INCALG_OK;
    });
}

incalg_status incalg_element_is_central(const incalg_element* a,
                                        int* central_out) {
    if (a == nullptr || central_out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        *central_out = a->f.is_central() ? 1 : 0;
        return INCALG_OK;
    });
}

incalg_status incalg_element_is_zero(const incalg_element* a, int* zero_out) {
    if (a == nullptr || zero_out == nullptr) return fail_invalid("null argument");
    *zero_out = a->f.is_zero() ? 1 : 0;
    return INCALG_OK;
}

incalg_status incalg_element_equals(const incalg_element* a,
                                    const incalg_element* b, int* equal_out) {
    if (a == nullptr || b == nullptr || equal_out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        *equal_out = (a->f == b->f) ? 1 : 0;
        return INCALG_OK;
    });
}

/* ------------------------------------------------------------------ */
/* Solvers, decomposition, audit                                       */
/* ------------------------------------------------------------------ */

incalg_status incalg_basis_json(const char* preorder_json, const char* ring,
                                const char* kind, const char* method,
                                int exploratory, char** json_out) {
    if (kind == nullptr || method == nullptr || json_out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        auto order = parse_order(preorder_json);
        auto r = parse_ring(ring);
        std::string k = kind;
        std::string m = method;
        if (k != "lie" && k != "derivation")
            throw incalg::error(incalg::errc::invalid_argument,
                                "kind must be \"lie\" or \"derivation\", got \"" +
                                    k + "\"");
        if (m != "bruteforce" && m != "closed_form" && m != "both")
            throw incalg::error(
                incalg::errc::invalid_argument,
                "method must be \"bruteforce\", \"closed_form\", or \"both\", got \"" +
                    m + "\"");
        if (k == "derivation" && m != "bruteforce")
            throw incalg::error(incalg::errc::invalid_argument,
                                "the closed form characterizes Lie derivations; "
                                "kind \"derivation\" supports method \"bruteforce\" only");
        bool exp = exploratory != 0;
        incalg::json_io::json out;
        out["ring"] = r.name();
        if (m == "both") {
            auto closed = incalg::lie_derivation_closed_form(order, r, exp);
            auto brute = incalg::lie_derivation_nullspace(order, r, exp);
            auto cmp = incalg::compare_spans(closed, brute);
            out["kind"] = "lie";
            out["closed_form"] = incalg::json_io::basis_to_json(closed);
            out["bruteforce"] = incalg::json_io::basis_to_json(brute);
            out["comparison"] = incalg::json_io::span_comparison_to_json(cmp);
        } else {
            incalg::operator_basis basis =
                (k == "derivation")
                    ? incalg::derivation_nullspace(order, r, exp)
                    : (m == "closed_form")
                          ? incalg::lie_derivation_closed_form(order, r, exp)
                          : incalg::lie_derivation_nullspace(order, r, exp);
            incalg::json_io::json basis_doc = incalg::json_io::basis_to_json(basis);
            for (const auto& [key, value] : basis_doc.items()) out[key] = value;
        }
        *json_out = dup_string(json_text(out));
        return INCALG_OK;
    });
}

incalg_status incalg_decompose_json(const char* preorder_json, const char* ring,
                                    const char* operator_json,
                                    const char* method, int* all_flags_out,
                                    char** json_out) {
    if (operator_json == nullptr || method == nullptr || json_out == nullptr)
        return fail_invalid("null argument");
    return guarded([&] {
        auto order = parse_order(preorder_json);
        auto r = parse_ring(ring);
        std::string m = method;
        auto op = incalg::json_io::operator_from_json(
            order, r, incalg::json_io::parse_document(operator_json));
        incalg::decomposition dec = [&] {
            if (m == "coefficients") return incalg::decompose_by_coefficients(op);
            if (m == "diagonal") return incalg::decompose_by_diagonal(op);
            throw incalg::error(
                incalg::errc::invalid_argument,
                "method must be \"coefficients\" or \"diagonal\", got \"" + m +
                    "\"");
        }();
        if (all_flags_out != nullptr) *all_flags_out = dec.all_flags() ? 1 : 0;
        *json_out =
            dup_string(json_text(incalg::json_io::decomposition_to_json(dec, m, r)));
        return INCALG_OK;
    });
}

incalg_status incalg_audit_json(const char* preorder_json, const char* ring,
                                long long trials, unsigned long long seed,
                                int exploratory, char** json_out) {
    if (json_out == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        auto order = parse_order(preorder_json);
        auto r = parse_ring(ring);
        if (trials < 1)
            throw incalg::error(incalg::errc::invalid_argument,
                                "trials must be at least 1");
        auto report =
            incalg::lemma_audit_suite(order, r, trials, seed, exploratory != 0);
        *json_out = dup_string(json_text(report.to_json()));
        return INCALG_OK;
    });
}

} // extern "C"
