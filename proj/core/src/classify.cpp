#include "fano/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fano/monotone.hpp"
#include "fano/polytope.hpp"

namespace fano {
namespace {

using nlohmann::json;

std::string pad4(std::size_t n) {
    std::string s = std::to_string(n);
    return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

json vertices_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_ll(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json flag_json(const std::optional<bool>& f) { return f.has_value() ? json(*f) : json("unknown"); }

CorpusEntry entry_from_polydb(const json& j, std::size_t ordinal) {
    if (!j.is_object())
        throw std::runtime_error("import_polydb: record " + std::to_string(ordinal) +
                                 " is not a JSON object");
    CorpusEntry entry;
    if (j.contains("_id") && j["_id"].is_string())
        entry.id = j["_id"].get<std::string>();
    else if (j.contains("id") && j["id"].is_string())
        entry.id = j["id"].get<std::string>();
    else
        entry.id = "polydb." + std::to_string(ordinal);

    if (!j.contains("VERTICES") || !j["VERTICES"].is_array() || j["VERTICES"].empty())
        throw std::runtime_error("import_polydb: record '" + entry.id + "' has no VERTICES array");

    std::vector<std::vector<Int>> rows;
    std::size_t rix = 0;
    for (const auto& row : j["VERTICES"]) {
        ++rix;
        if (!row.is_array() || row.size() < 2)
            throw std::runtime_error("import_polydb: record '" + entry.id + "' row " +
                                     std::to_string(rix) + " is too short");
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::runtime_error("import_polydb: record '" + entry.id + "' row " +
                                         std::to_string(rix) + " has a non-integer coordinate");
        }
        if (row[0].get<long long>() != 1)
            throw std::runtime_error("import_polydb: record '" + entry.id + "' row " +
                                     std::to_string(rix) + " has leading coordinate " +
                                     std::to_string(row[0].get<long long>()) +
                                     " (expected the homogenizing 1)");
        std::vector<Int> r;
        for (std::size_t c = 1; c < row.size(); ++c) r.push_back(Int(row[c].get<long long>()));
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows) {
        if (r.size() != rows[0].size())
            throw std::runtime_error("import_polydb: record '" + entry.id + "' has ragged rows");
    }
    entry.dim = rows[0].size();
    entry.vertices = IntMatrix::from_rows(rows);
    return entry;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_corpus: cannot open " + path);
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "load_corpus: line " + std::to_string(lineno) + ": ";
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error(where + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("dim") || !j.contains("vertices"))
            throw std::runtime_error(where + "expected an object with id, dim, vertices");
        if (!j["id"].is_string()) throw std::runtime_error(where + "id must be a string");
        CorpusEntry entry;
        entry.id = j["id"].get<std::string>();
        if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
            throw std::runtime_error(where + "entry '" + entry.id + "': dim must be a positive integer");
        entry.dim = j["dim"].get<std::size_t>();
        if (!j["vertices"].is_array() || j["vertices"].empty())
            throw std::runtime_error(where + "entry '" + entry.id + "': vertices must be a nonempty array");
        std::vector<std::vector<Int>> rows;
        for (const auto& row : j["vertices"]) {
            if (!row.is_array() || row.size() != entry.dim)
                throw std::runtime_error(where + "entry '" + entry.id + "': vertex row length != dim");
            std::vector<Int> r;
            for (const auto& x : row) {
                if (!x.is_number_integer())
                    throw std::runtime_error(where + "entry '" + entry.id + "': non-integer coordinate");
                r.push_back(Int(x.get<long long>()));
            }
            rows.push_back(std::move(r));
        }
        entry.vertices = IntMatrix::from_rows(rows);
        if (!seen.insert(entry.id).second)
            throw std::runtime_error(where + "duplicate id '" + entry.id + "'");
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CorpusEntry> import_polydb(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("import_polydb: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::vector<CorpusEntry> out;
    json whole;
    bool whole_ok = true;
    try {
        whole = json::parse(text);
    } catch (const json::parse_error&) {
        whole_ok = false;
    }
    if (whole_ok) {
        if (whole.is_array()) {
            std::size_t ordinal = 0;
            for (const auto& rec : whole) out.push_back(entry_from_polydb(rec, ordinal++));
        } else {
            out.push_back(entry_from_polydb(whole, 0));
        }
        return out;
    }
    // JSON-lines export
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error("import_polydb: line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(entry_from_polydb(j, lineno));
    }
    return out;
}

std::string corpus_jsonl(std::vector<CorpusEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    std::ostringstream os;
    for (const auto& e : entries) {
        json j;
        j["id"] = e.id;
        j["dim"] = e.dim;
        j["vertices"] = vertices_json(e.vertices);
        os << j.dump() << "\n";
    }
    return os.str();
}

ClassificationRecord classify_polytope(const CorpusEntry& entry, long long sfpdg_budget_ms) {
    const auto start = std::chrono::steady_clock::now();
    ClassificationRecord rec;
    rec.id = entry.id;
    rec.dim = entry.dim;
    try {
        const LatticePolytope p(entry.vertices);
        const auto sf = is_smooth_fano(p);
        rec.flags.smooth_fano = static_cast<bool>(sf);
        if (!sf) {
            rec.flags.usfp = false;
            rec.flags.sfpdg = false;
            rec.flags.dual_ut_free = false;
            rec.flags.dual_dmp = false;
            rec.notes.push_back(std::string("not smooth Fano: ") +
                                (!sf.fano       ? "fails the Fano conditions"
                                 : !sf.simplicial ? "not simplicial"
                                                  : "a facet basis is not unimodular"));
        } else {
            rec.flags.usfp = is_unimodular_polytope(p);
            const auto sr = is_sfpdg(p, sfpdg_budget_ms);
            if (sr.status == SearchStatus::timeout) {
                rec.notes.push_back("sfpdg search timed out");
            } else {
                rec.flags.sfpdg = (sr.status == SearchStatus::found);
                if (sr.witness) rec.sfpdg_witness = sr.witness;
            }
            const auto q = dual_polytope(p);
            rec.flags.dual_ut_free = is_ut_free(q);
            rec.flags.dual_dmp = is_deeply_smooth(q);
        }
    } catch (const std::exception& e) {
        rec.notes.push_back(std::string("classification error: ") + e.what());
        auto settle = [](std::optional<bool>& f) {
            if (!f.has_value()) f = false;
        };
        settle(rec.flags.smooth_fano);
        settle(rec.flags.usfp);
        settle(rec.flags.sfpdg);
        settle(rec.flags.dual_ut_free);
        settle(rec.flags.dual_dmp);
    }
    rec.seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

ClassifySummary classify_corpus(const std::vector<CorpusEntry>& corpus, const ClassifyOptions& options) {
    std::vector<const CorpusEntry*> selected;
    for (const auto& e : corpus) {
        if (options.max_dim < 0 || e.dim <= static_cast<std::size_t>(options.max_dim))
            selected.push_back(&e);
    }

    std::size_t jobs =
        options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
    jobs = std::min(jobs, std::max<std::size_t>(selected.size(), 1));

    std::vector<ClassificationRecord> records(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) break;
            records[i] = classify_polytope(*selected[i], options.sfpdg_budget_ms);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(records.begin(), records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) { return a.id < b.id; });

    std::map<std::size_t, DimCounts> by_dim;
    for (const auto& r : records) {
        auto& c = by_dim[r.dim];
        c.dim = r.dim;
        c.total += 1;
        auto add = [](std::size_t& slot, const std::optional<bool>& f) {
            if (f.has_value() && *f) slot += 1;
        };
        add(c.smooth_fano, r.flags.smooth_fano);
        add(c.dual_ut_free, r.flags.dual_ut_free);
        add(c.dual_dmp, r.flags.dual_dmp);
        add(c.sfpdg, r.flags.sfpdg);
        add(c.usfp, r.flags.usfp);
        if (!r.flags.smooth_fano.has_value() || !r.flags.usfp.has_value() ||
            !r.flags.sfpdg.has_value() || !r.flags.dual_ut_free.has_value() ||
            !r.flags.dual_dmp.has_value())
            c.unknown += 1;
    }
    ClassifySummary summary;
    summary.records = std::move(records);
    for (const auto& [d, c] : by_dim) summary.counts.push_back(c);
    return summary;
}

InclusionReport check_inclusions(const std::vector<ClassificationRecord>& records) {
    InclusionReport report;
    auto yes = [](const std::optional<bool>& f) { return f.has_value() && *f; };
    auto no = [](const std::optional<bool>& f) { return f.has_value() && !*f; };
    for (const auto& r : records) {
        if (yes(r.flags.dual_dmp) && no(r.flags.dual_ut_free))
            report.violations.push_back(r.id + ": deeply monotone dual is not UT-free");
        if (yes(r.flags.dual_dmp) && no(r.flags.usfp))
            report.violations.push_back(r.id + ": Theorem 7 violation: deeply monotone dual but not a USFP");
        if (yes(r.flags.sfpdg) && no(r.flags.usfp))
            report.violations.push_back(r.id + ": SFPdG but not a USFP");
        if (yes(r.flags.dual_ut_free) && no(r.flags.usfp)) report.utfree_not_usfp.push_back(r.id);
        if (yes(r.flags.dual_ut_free) && no(r.flags.sfpdg)) report.utfree_not_sfpdg.push_back(r.id);
    }
    return report;
}

std::vector<CorpusEntry> generate_dim2_corpus() {
    const std::vector<std::vector<Int>> pts = {{1, 0},  {0, 1},  {-1, 0}, {0, -1},
                                               {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    std::vector<LatticePolytope> classes;
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        if (__builtin_popcount(mask) < 3) continue;
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < 8; ++i) {
            if ((mask >> i) & 1u) rows.push_back(pts[i]);
        }
        const LatticePolytope p = LatticePolytope::from_rows(rows);
        if (p.vertex_count() != rows.size()) continue;  // subset with a non-extreme point
        if (!static_cast<bool>(is_smooth_fano(p))) continue;
        bool dup = false;
        for (const auto& c : classes) {
            if (unimodular_equivalent(c, p)) {
                dup = true;
                break;
            }
        }
        if (!dup) classes.push_back(p);
    }
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CorpusEntry e;
        e.id = "SF.2." + pad4(i);
        e.dim = 2;
        e.vertices = classes[i].vertices();
        out.push_back(std::move(e));
    }
    return out;
}

std::string format_table(const ClassifySummary& summary, const std::string& format) {
    if (format == "md") {
        std::ostringstream os;
        os << "| dim | SFPs | UT-free | DMPs | SFPdGs | USFPs |\n";
        os << "|----:|-----:|--------:|-----:|-------:|------:|\n";
        for (const auto& c : summary.counts) {
            os << "| " << c.dim << " | " << c.smooth_fano << " | " << c.dual_ut_free << " | "
               << c.dual_dmp << " | " << c.sfpdg << " | " << c.usfp << " |\n";
        }
        for (const auto& c : summary.counts) {
            if (c.unknown > 0)
                os << "\n[^dim" << c.dim << "]: " << c.unknown
                   << " record(s) in dim " << c.dim << " have timed-out flags (counted as unknown)\n";
        }
        return os.str();
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "dim,sfps,ut_free,dmps,sfpdgs,usfps,total,unknown\n";
        for (const auto& c : summary.counts) {
            os << c.dim << ',' << c.smooth_fano << ',' << c.dual_ut_free << ',' << c.dual_dmp << ','
               << c.sfpdg << ',' << c.usfp << ',' << c.total << ',' << c.unknown << "\n";
        }
        return os.str();
    }
    if (format == "json") {
        json rows = json::array();
        for (const auto& c : summary.counts) {
            json row;
            row["dim"] = c.dim;
            row["sfps"] = c.smooth_fano;
            row["ut_free"] = c.dual_ut_free;
            row["dmps"] = c.dual_dmp;
            row["sfpdgs"] = c.sfpdg;
            row["usfps"] = c.usfp;
            row["total"] = c.total;
            row["unknown"] = c.unknown;
            rows.push_back(std::move(row));
        }
        return rows.dump(2) + "\n";
    }
    throw std::invalid_argument("format_table: unknown format '" + format + "'");
}

std::string records_jsonl(const ClassifySummary& summary) {
    std::ostringstream os;
    for (const auto& r : summary.records) {
        json j;
        j["id"] = r.id;
        j["dim"] = r.dim;
        j["flags"] = {{"smooth_fano", flag_json(r.flags.smooth_fano)},
                      {"usfp", flag_json(r.flags.usfp)},
                      {"sfpdg", flag_json(r.flags.sfpdg)},
                      {"dual_ut_free", flag_json(r.flags.dual_ut_free)},
                      {"dual_dmp", flag_json(r.flags.dual_dmp)}};
        j["seconds"] = r.seconds;
        if (!r.notes.empty()) j["notes"] = r.notes;
        if (r.sfpdg_witness.has_value()) {
            json arrows = json::array();
            for (const auto& [a, b] : r.sfpdg_witness->arrows) arrows.push_back({a, b});
            j["sfpdg_witness"] = {{"vertices", r.sfpdg_witness->vertex_count}, {"arrows", arrows}};
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace fano
