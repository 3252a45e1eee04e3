#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/matroid.hpp"
#include "fano/types.hpp"

namespace fano {

// Tri-state classification flags; nullopt means the check timed out.
struct ClassFlags {
    std::optional<bool> smooth_fano;
    std::optional<bool> usfp;
    std::optional<bool> sfpdg;
    std::optional<bool> dual_ut_free;
    std::optional<bool> dual_dmp;
};

struct ClassificationRecord {
    std::string id;
    std::size_t dim = 0;
    ClassFlags flags;
    std::vector<std::string> notes;
    std::optional<Digraph> sfpdg_witness;
    double seconds = 0.0;
};

struct CorpusEntry {
    std::string id;
    std::size_t dim = 0;
    IntMatrix vertices{1, 1};
};

// JSON-lines corpus: {"id": "...", "dim": n, "vertices": [[...], ...]} per line.
// Throws std::runtime_error with a line number on parse or validation errors
// (row length != dim, duplicate ids).
std::vector<CorpusEntry> load_corpus(const std::string& path);

// polyDB-style JSON export (single object, array of objects, or JSON lines).
// VERTICES rows are homogeneous with leading coordinate 1, which is stripped;
// rows with a different leading entry are rejected with diagnostics.  Unknown
// fields are ignored.
std::vector<CorpusEntry> import_polydb(const std::string& path);

// Serialize entries in the corpus JSON-lines format, sorted by id.
std::string corpus_jsonl(std::vector<CorpusEntry> entries);

// All five flags for one polytope.  Never throws on classification failures:
// a polytope that is not smooth Fano gets smooth_fano = false, the remaining
// flags false, and a diagnostic note.  sfpdg_budget_ms > 0 bounds the SFPdG
// search; on timeout the flag is left unknown.
ClassificationRecord classify_polytope(const CorpusEntry& entry, long long sfpdg_budget_ms = 0);

struct ClassifyOptions {
    std::size_t jobs = 1;          // 0 = hardware concurrency
    int max_dim = -1;              // skip entries above this dimension; -1 = no limit
    long long sfpdg_budget_ms = 0; // 0 = unbounded
};

// One table row: how many records in this dimension have each flag true.
struct DimCounts {
    std::size_t dim = 0;
    std::size_t total = 0;
    std::size_t smooth_fano = 0;
    std::size_t dual_ut_free = 0;
    std::size_t dual_dmp = 0;
    std::size_t sfpdg = 0;
    std::size_t usfp = 0;
    std::size_t unknown = 0;  // records with at least one timed-out flag
};

struct ClassifySummary {
    std::vector<ClassificationRecord> records;  // sorted by id
    std::vector<DimCounts> counts;              // sorted by dim
};

// Deterministic regardless of options.jobs.
ClassifySummary classify_corpus(const std::vector<CorpusEntry>& corpus,
                                const ClassifyOptions& options = {});

struct InclusionReport {
    // Hard implication failures (deeply monotone dual without UT-free dual or
    // without USFP, SFPdG without USFP).
    std::vector<std::string> violations;
    // Records with a UT-free dual that are not USFPs: counterexamples to the
    // conjectured inclusion of UT-free monotone polytopes among USFP duals.
    std::vector<std::string> utfree_not_usfp;
    // Records with a UT-free dual that are not SFPdGs; informational only.
    std::vector<std::string> utfree_not_sfpdg;
    bool ok() const { return violations.empty(); }
};

InclusionReport check_inclusions(const std::vector<ClassificationRecord>& records);

// All smooth Fano polygons up to unimodular equivalence (exactly 5), found by
// exhaustive search over subsets of the 8 primitive points of [-1,1]^2.
std::vector<CorpusEntry> generate_dim2_corpus();

// format: "md", "csv", or "json".
std::string format_table(const ClassifySummary& summary, const std::string& format);

// One JSON object per record, sorted by id.
std::string records_jsonl(const ClassifySummary& summary);

}  // namespace fano
