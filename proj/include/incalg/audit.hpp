#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "incalg/json_io.hpp"

namespace incalg {

/// One audited identity: how often it held, how often it failed, and the
/// first (lexicographically chosen) counterexample if any.  A section that
/// cannot run in the given context (non-poset, non-field ring, disconnected
/// preorder, ...) reports zero counts and says why in `note`.
struct lemma_outcome {
    std::string name;
    long long pass = 0;
    long long fail = 0;
    json_io::json counterexample = nullptr;
    std::string note;
};

struct audit_report {
    json_io::json preorder_doc;
    std::string ring_name;
    std::uint64_t seed = 0;
    long long trials = 0;
    std::vector<lemma_outcome> lemmas;

    json_io::json to_json() const;
};

/// Run every identity audit on one preorder: algebra laws, restriction
/// machinery, both solvers and their span comparison, the structural
/// characterization, locality, diagonal constancy, extension behavior, both
/// decompositions, and dual transport.  Deterministic for a given seed.
/// Never throws on mathematical findings — failures are data in the report.
/// Sections that need solving are skipped (with a note) unless the ring is a
/// solver-grade field.
audit_report lemma_audit_suite(std::shared_ptr<const preorder> order, ring r,
                               long long trials, std::uint64_t seed,
                               bool exploratory = false);

} // namespace incalg
