#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fano/classify.hpp"
#include "fano/polytope.hpp"

using namespace fano;

namespace {

std::string data_path(const std::string& name) {
    return std::string(FANO_DATA_DIR) + "/" + name;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        path = std::string("/tmp/fano_test_") + std::to_string(reinterpret_cast<std::uintptr_t>(this));
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const DimCounts* row(const ClassifySummary& s, std::size_t dim) {
    for (const auto& c : s.counts)
        if (c.dim == dim) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("corpus loading validates its input line by line") {
    CHECK_THROWS_WITH_AS(load_corpus("/no/such/file.jsonl"),
                         "load_corpus: cannot open /no/such/file.jsonl", std::runtime_error);

    TempFile bad_json("{\"id\": \"a\", \"dim\": 2, \"vertices\": [[1,0],[0,1],[-1,-1]]}\nnot json\n");
    CHECK_THROWS_AS(load_corpus(bad_json.path), std::runtime_error);
    try {
        load_corpus(bad_json.path);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    TempFile dup(
        "{\"id\": \"a\", \"dim\": 2, \"vertices\": [[1,0],[0,1],[-1,-1]]}\n"
        "{\"id\": \"a\", \"dim\": 2, \"vertices\": [[1,0],[0,1],[-1,-1]]}\n");
    CHECK_THROWS_AS(load_corpus(dup.path), std::runtime_error);

    TempFile ragged("{\"id\": \"a\", \"dim\": 2, \"vertices\": [[1,0],[0,1,5]]}\n");
    CHECK_THROWS_AS(load_corpus(ragged.path), std::runtime_error);

    TempFile blank_ok("\n{\"id\": \"a\", \"dim\": 2, \"vertices\": [[1,0],[0,1],[-1,-1]]}\n\n");
    CHECK(load_corpus(blank_ok.path).size() == 1);
}

TEST_CASE("the generated dim-2 corpus matches the bundled one up to equivalence") {
    auto gen = generate_dim2_corpus();
    REQUIRE(gen.size() == 5);
    auto bundled = load_corpus(data_path("corpus_dim2.jsonl"));
    REQUIRE(bundled.size() == 5);
    for (const auto& g : gen) {
        CHECK(g.dim == 2);
        LatticePolytope p(g.vertices);
        CHECK(bool(is_smooth_fano(p)));
        int matches = 0;
        for (const auto& b : bundled)
            if (unimodular_equivalent(p, LatticePolytope(b.vertices)).has_value()) ++matches;
        CHECK(matches == 1);
    }
    // pairwise inequivalent
    for (std::size_t i = 0; i < gen.size(); ++i)
        for (std::size_t j = i + 1; j < gen.size(); ++j)
            CHECK_FALSE(unimodular_equivalent(LatticePolytope(gen[i].vertices),
                                              LatticePolytope(gen[j].vertices))
                            .has_value());
}

TEST_CASE("classification rows reproduce the dims 2-3 counts") {
    auto s2 = classify_corpus(generate_dim2_corpus(), ClassifyOptions{});
    const auto* r2 = row(s2, 2);
    REQUIRE(r2 != nullptr);
    CHECK(r2->total == 5);
    CHECK(r2->smooth_fano == 5);
    CHECK(r2->dual_ut_free == 5);
    CHECK(r2->dual_dmp == 5);
    CHECK(r2->sfpdg == 5);
    CHECK(r2->usfp == 5);
    CHECK(r2->unknown == 0);

    auto s3 = classify_corpus(load_corpus(data_path("corpus_dim3.jsonl")), ClassifyOptions{});
    const auto* r3 = row(s3, 3);
    REQUIRE(r3 != nullptr);
    CHECK(r3->smooth_fano == 18);
    CHECK(r3->dual_ut_free == 16);
    CHECK(r3->dual_dmp == 16);
    CHECK(r3->sfpdg == 16);
    CHECK(r3->usfp == 16);
}

TEST_CASE("classification is deterministic across job counts") {
    auto corpus = load_corpus(data_path("corpus_dim2.jsonl"));
    ClassifyOptions serial;
    serial.jobs = 1;
    ClassifyOptions parallel;
    parallel.jobs = 3;
    // drop the wall-clock field before comparing
    auto stable = [](const ClassifySummary& s) {
        std::vector<nlohmann::json> out;
        std::istringstream lines(records_jsonl(s));
        for (std::string line; std::getline(lines, line);) {
            auto j = nlohmann::json::parse(line);
            j.erase("seconds");
            out.push_back(std::move(j));
        }
        return out;
    };
    CHECK(stable(classify_corpus(corpus, serial)) == stable(classify_corpus(corpus, parallel)));
}

TEST_CASE("max_dim filters the corpus") {
    auto corpus = load_corpus(data_path("corpus_dim3.jsonl"));
    ClassifyOptions opts;
    opts.max_dim = 2;
    auto s = classify_corpus(corpus, opts);
    CHECK(s.records.empty());
}

TEST_CASE("table formatting snapshots") {
    auto s = classify_corpus(generate_dim2_corpus(), ClassifyOptions{});
    CHECK(format_table(s, "csv") ==
          "dim,sfps,ut_free,dmps,sfpdgs,usfps,total,unknown\n2,5,5,5,5,5,5,0\n");
    CHECK(format_table(s, "md") ==
          "| dim | SFPs | UT-free | DMPs | SFPdGs | USFPs |\n"
          "|----:|-----:|--------:|-----:|-------:|------:|\n"
          "| 2 | 5 | 5 | 5 | 5 | 5 |\n");
    auto parsed = nlohmann::json::parse(format_table(s, "json"));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["dim"] == 2);
    CHECK(parsed[0]["sfps"] == 5);
    CHECK(parsed[0]["usfps"] == 5);
    CHECK_THROWS_AS(format_table(s, "yaml"), std::invalid_argument);
}

TEST_CASE("per-record JSON lines carry ids, dims and flags") {
    auto s = classify_corpus(generate_dim2_corpus(), ClassifyOptions{});
    std::istringstream lines(records_jsonl(s));
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("id"));
        CHECK(j.contains("dim"));
        CHECK(j.contains("flags"));
        CHECK(j["flags"]["smooth_fano"] == true);
        ++n;
    }
    CHECK(n == 5);
}

TEST_CASE("inclusion checking on dims 2-3 finds nothing") {
    for (int dim : {2, 3}) {
        auto s = classify_corpus(load_corpus(data_path("corpus_dim" + std::to_string(dim) +
                                                        ".jsonl")),
                                 ClassifyOptions{});
        auto rep = check_inclusions(s.records);
        CHECK(rep.ok());
        CHECK(rep.violations.empty());
        CHECK(rep.utfree_not_usfp.empty());
        CHECK(rep.utfree_not_sfpdg.empty());
    }
}

TEST_CASE("inclusion checking surfaces the two dim-4 UT-free non-USFP records") {
    auto s = classify_corpus(load_corpus(data_path("corpus_dim4.jsonl")), ClassifyOptions{});
    const auto* r4 = row(s, 4);
    REQUIRE(r4 != nullptr);
    CHECK(r4->smooth_fano == 124);
    CHECK(r4->dual_ut_free == 74);
    CHECK(r4->dual_dmp == 72);
    CHECK(r4->sfpdg == 95);
    CHECK(r4->usfp == 96);

    auto rep = check_inclusions(s.records);
    CHECK(rep.ok());  // the proved implications hold
    CHECK(rep.violations.empty());
    // the UT-free => USFP-dual inclusion is conjectural and genuinely fails twice
    CHECK(rep.utfree_not_usfp == std::vector<std::string>{"SF.4.0012", "SF.4.0013"});
    CHECK(rep.utfree_not_sfpdg == std::vector<std::string>{"SF.4.0012", "SF.4.0013"});
}

TEST_CASE("polyDB-style imports") {
    auto entries = import_polydb(data_path("samples/polydb_sample.json"));
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].id == "F.2D.0000");
    CHECK(entries[0].dim == 2);
    CHECK(entries[1].id == "F.4D.0037");
    CHECK(entries[1].dim == 4);
    CHECK(entries[1].vertices.rows() == 9);

    auto s = classify_corpus(entries, ClassifyOptions{});
    for (const auto& r : s.records) {
        if (r.id != "F.4D.0037") continue;
        CHECK(r.flags.smooth_fano == std::optional<bool>(true));
        CHECK(r.flags.usfp == std::optional<bool>(true));
        CHECK(r.flags.sfpdg == std::optional<bool>(false));
    }

    TempFile bad_lead("[{\"_id\": \"x\", \"VERTICES\": [[0, 1, 0]]}]");
    CHECK_THROWS_AS(import_polydb(bad_lead.path), std::runtime_error);
    TempFile ragged("[{\"_id\": \"x\", \"VERTICES\": [[1, 1, 0], [1, 1]]}]");
    CHECK_THROWS_AS(import_polydb(ragged.path), std::runtime_error);
}

TEST_CASE("corpus serialization round trips") {
    auto gen = generate_dim2_corpus();
    TempFile f(corpus_jsonl(gen));
    auto back = load_corpus(f.path);
    REQUIRE(back.size() == gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) {
        CHECK(back[i].id == gen[i].id);
        CHECK(back[i].dim == gen[i].dim);
        CHECK(back[i].vertices.rows() == gen[i].vertices.rows());
    }
}

TEST_CASE("single-entry classification handles failures without throwing") {
    CorpusEntry bad;
    bad.id = "weighted";
    bad.dim = 2;
    bad.vertices = IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-2)}});
    auto r = classify_polytope(bad);
    CHECK(r.id == "weighted");
    REQUIRE(r.flags.smooth_fano.has_value());
    CHECK_FALSE(*r.flags.smooth_fano);
    CHECK_FALSE(r.flags.usfp.value_or(true));
    CHECK_FALSE(r.flags.sfpdg.value_or(true));
    CHECK_FALSE(r.flags.dual_ut_free.value_or(true));
    CHECK_FALSE(r.flags.dual_dmp.value_or(true));
    CHECK_FALSE(r.notes.empty());

    CorpusEntry tri;
    tri.id = "tri";
    tri.dim = 2;
    tri.vertices = IntMatrix::from_rows({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}});
    auto s = classify_polytope(tri);
    CHECK(s.flags.smooth_fano.value_or(false));
    CHECK(s.flags.usfp.value_or(false));
    CHECK(s.flags.sfpdg.value_or(false));
    CHECK(s.flags.dual_ut_free.value_or(false));
    CHECK(s.flags.dual_dmp.value_or(false));
    REQUIRE(s.sfpdg_witness.has_value());
    CHECK(s.sfpdg_witness->arrows.size() == 3);
    CHECK(s.seconds >= 0.0);
}
