#include <doctest.h>

#include <algorithm>
#include <set>

#include "fano/classify.hpp"
#include "fano/linalg.hpp"
#include "fano/monotone.hpp"
#include "fano/polytope.hpp"
#include "fano/tu.hpp"

using namespace fano;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<long long>> data) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : data) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r);
}

const IntMatrix kTriangle = rows({{1, 0}, {0, 1}, {-1, -1}});
const IntMatrix kSquare = rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});

std::vector<CorpusEntry> bundled(int dim) {
    return load_corpus(std::string(FANO_DATA_DIR) + "/corpus_dim" + std::to_string(dim) +
                       ".jsonl");
}

}  // namespace

TEST_CASE("corner frames at simple vertices") {
    LatticePolytope sq(kSquare);
    std::size_t corner = 0;
    while (sq.vertex(corner) != std::vector<Int>{Int(1), Int(1)}) ++corner;
    auto f = corner_frame(sq, corner);
    std::set<std::vector<Int>> dirs(f.directions.begin(), f.directions.end());
    CHECK(dirs == std::set<std::vector<Int>>{{Int(-1), Int(0)}, {Int(0), Int(-1)}});

    auto q = dual_polytope(LatticePolytope(kTriangle));
    std::size_t vi = 0;
    while (q.vertex(vi) != std::vector<Int>{Int(2), Int(-1)}) ++vi;
    auto g = corner_frame(q, vi);
    std::set<std::vector<Int>> gdirs(g.directions.begin(), g.directions.end());
    CHECK(gdirs == std::set<std::vector<Int>>{{Int(-1), Int(0)}, {Int(-1), Int(1)}});

    // frames are lattice bases on every dims 2-3 dual
    for (int dim : {2, 3})
        for (const auto& e : bundled(dim)) {
            auto d = dual_polytope(LatticePolytope(e.vertices));
            for (std::size_t v = 0; v < d.vertex_count(); ++v) {
                auto frame = corner_frame(d, v);
                auto dt = det(IntMatrix::from_rows(frame.directions));
                CHECK((dt == 1 || dt == -1));
            }
        }
}

TEST_CASE("corner frames reject non-simple vertices") {
    LatticePolytope octa(
        rows({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
    CHECK_THROWS_AS(corner_frame(octa, 0), std::domain_error);
}

TEST_CASE("deep smoothness of the reference polygons") {
    CHECK(is_deeply_smooth(LatticePolytope(kSquare)));
    CHECK(is_deeply_smooth(dual_polytope(LatticePolytope(kTriangle))));
}

TEST_CASE("exactly two dim-3 duals are not deeply monotone") {
    std::set<std::string> not_dmp, not_utfree;
    for (const auto& e : bundled(3)) {
        auto q = dual_polytope(LatticePolytope(e.vertices));
        if (!is_deeply_smooth(q)) not_dmp.insert(e.id);
        if (!is_ut_free(q)) not_utfree.insert(e.id);
    }
    CHECK(not_dmp == std::set<std::string>{"SF.3.0007", "SF.3.0008"});
    CHECK(not_utfree == std::set<std::string>{"SF.3.0007", "SF.3.0008"});
}

TEST_CASE("the two unimodular-triangle notions differ on the standard triangle") {
    LatticePolytope t(kTriangle);
    CHECK_FALSE(is_ut_free(t));              // all three edges are primitive
    CHECK(is_ut_free_normalized_area(t));    // but the normalized area is 3
    auto q = dual_polytope(t);
    CHECK(is_ut_free(q));
    CHECK(is_ut_free_normalized_area(q));
}

TEST_CASE("the notions agree on every dims 2-3 corpus dual") {
    for (int dim : {2, 3})
        for (const auto& e : bundled(dim)) {
            auto q = dual_polytope(LatticePolytope(e.vertices));
            CHECK(is_ut_free(q) == is_ut_free_normalized_area(q));
        }
}

TEST_CASE("the nine-vertex USFP fixture has a dual that is not UT-free") {
    LatticePolytope p(fixture("example2"));
    auto q = dual_polytope(p);
    CHECK_FALSE(is_ut_free(q));
    CHECK_FALSE(is_deeply_smooth(q));
}

TEST_CASE("first displacements of the square faces") {
    LatticePolytope sq(kSquare);
    for (const auto& f : faces(sq)) {
        auto d = first_displacement(sq, f);
        CHECK(d.is_lattice);
        CHECK(d.slice.has_value());
        CHECK(d.is_reflexive_after_recentering);
        CHECK(d.normal_match);
        CHECK(d.slice_vertices.size() == d.slice->vertex_count());
    }
}

TEST_CASE("displacement-based deep smoothness matches the direct definition") {
    for (const auto& e : bundled(2)) {
        auto q = dual_polytope(LatticePolytope(e.vertices));
        CHECK(deeply_smooth_via_displacements(q) == is_deeply_smooth(q));
    }
}

TEST_CASE("vertices of UT-free monotone polytopes close their corner frames") {
    LatticePolytope sq(kSquare);
    for (std::size_t v = 0; v < sq.vertex_count(); ++v) CHECK(lemma7_holds(sq, v));
    auto q = dual_polytope(LatticePolytope(kTriangle));
    for (std::size_t v = 0; v < q.vertex_count(); ++v) CHECK(lemma7_holds(q, v));
}

TEST_CASE("frame pair sums stay inside the symmetric point set") {
    auto report = theorem6_witnesses(LatticePolytope(kSquare));
    CHECK(report.all_ok);
    CHECK(report.entries.size() == 4);  // four vertices, one frame pair each
    for (const auto& entry : report.entries) {
        CHECK(entry.u1_in);
        CHECK(entry.u2_in);
        CHECK((entry.sum_in || entry.diff_in));
        CHECK(entry.ok);
    }
    CHECK(theorem6_witnesses(dual_polytope(LatticePolytope(kTriangle))).all_ok);
}
