#pragma once

// Registry of closed-form equalities, each checked by evaluating two
// independently computed sides.

#include "stieltjes/precision.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stj {

using SideFn = std::function<Real(const PrecisionContext&)>;

// One parameter point of an entry. Entries with a single point use an
// empty label.
struct Sample {
    std::string label;
    SideFn lhs;
    SideFn rhs;
};

struct IdentityEntry {
    std::string id;
    std::string description;
    std::string paper_anchor;
    std::string lhs_route;
    std::string rhs_route;
    std::vector<Sample> samples;
    // Absolute tolerance 10^exponent; unset means 10^-(target_digits - 5).
    std::optional<int> tolerance_exponent;
    std::string tolerance_note;
    std::set<std::string> tags;

    Real tolerance(const PrecisionContext& ctx) const;
    bool has_tag(const std::string& t) const { return tags.count(t) > 0; }
};

class Catalog {
public:
    // Throws DomainError for a duplicate id, an empty anchor, no samples,
    // equal lhs/rhs route labels or an override without a note.
    void add(IdentityEntry e);
    const std::vector<IdentityEntry>& entries() const { return entries_; }
    const IdentityEntry* find(const std::string& id) const;
    std::set<std::string> all_tags() const;

private:
    std::vector<IdentityEntry> entries_;
};

// Built once; every entry listed in the README.
const Catalog& builtin_catalog();

struct SampleResult {
    std::string label;
    Real lhs;
    Real rhs;
    Real abs_error;
};

struct EntryResult {
    std::string id;
    std::string description;
    std::string paper_anchor;
    std::string lhs_route;
    std::string rhs_route;
    // Values of the sample with the largest error.
    Real lhs;
    Real rhs;
    Real abs_error;
    Real tolerance;
    bool pass = false;
    std::string error;     // set when evaluation threw
    double elapsed_ms = 0;
    std::vector<SampleResult> samples;
};

struct CatalogSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct IdentityReport {
    int digits = 0;
    std::vector<EntryResult> entries;
    CatalogSummary summary;
};

struct CatalogFilter {
    std::vector<std::string> ids;
    std::vector<std::string> tags;
    // Slow entries run only when named by id, selected with tag "slow",
    // or when this is set.
    bool include_slow = false;
};

// Entries run one after another in registration order; a failing or
// throwing entry never stops the batch. Throws std::invalid_argument for an
// unknown id or tag.
IdentityReport run_catalog(const Catalog& catalog, const CatalogFilter& filter,
                           const PrecisionContext& ctx);

// Evaluates a single entry.
EntryResult run_entry(const IdentityEntry& e, const PrecisionContext& ctx);

} // namespace stj
