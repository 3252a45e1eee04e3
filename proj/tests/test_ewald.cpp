#include <doctest.h>

#include <algorithm>
#include <set>

#include "fano/classify.hpp"
#include "fano/ewald.hpp"
#include "fano/linalg.hpp"
#include "fano/polytope.hpp"

using namespace fano;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<long long>> data) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : data) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r);
}

const IntMatrix kTriangle = rows({{1, 0}, {0, 1}, {-1, -1}});

std::vector<CorpusEntry> bundled(int dim) {
    return load_corpus(std::string(FANO_DATA_DIR) + "/corpus_dim" + std::to_string(dim) +
                       ".jsonl");
}

}  // namespace

TEST_CASE("symmetric point set of the triangle dual") {
    LatticePolytope t(kTriangle);
    auto e = ewald_points(t);
    std::vector<std::vector<Int>> expected{
        {Int(-1), Int(0)}, {Int(-1), Int(1)}, {Int(0), Int(-1)}, {Int(0), Int(0)},
        {Int(0), Int(1)},  {Int(1), Int(-1)}, {Int(1), Int(0)}};
    CHECK(e == expected);
}

TEST_CASE("weak Ewald witness on the triangle") {
    LatticePolytope t(kTriangle);
    auto w = weak_ewald(t);
    REQUIRE(w.has_value());
    CHECK(w->kind == EwaldKind::weak);
    REQUIRE(w->basis.size() == 2);
    auto e = ewald_points(t);
    for (const auto& b : w->basis)
        CHECK(std::find(e.begin(), e.end(), b) != e.end());
    auto d = det(IntMatrix::from_rows(w->basis));
    CHECK((d == 1 || d == -1));
}

TEST_CASE("strong Ewald transform normalizes each vertex into the unit box") {
    LatticePolytope t(kTriangle);
    auto tr = strong_ewald_transform(t, 0);
    REQUIRE(tr.rows() == 2);
    auto img = matmul(t.vertices(), tr);
    CHECK(img.at(0, 0) == 1);
    CHECK(img.at(0, 1) == 1);
    CHECK(img.at(1, 0) == 0);
    CHECK(img.at(1, 1) == -1);
    CHECK(img.at(2, 0) == -1);
    CHECK(img.at(2, 1) == 0);

    for (std::size_t vi = 0; vi < 3; ++vi) {
        auto m = matmul(t.vertices(), strong_ewald_transform(t, vi));
        for (std::size_t j = 0; j < 2; ++j) CHECK(m.at(vi, j) == 1);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                CHECK((m.at(i, j) >= -1 && m.at(i, j) <= 1));
    }
    CHECK_THROWS_AS(strong_ewald_transform(t, 9), std::invalid_argument);
}

TEST_CASE("strong and star Ewald succeed on the dim-2 corpus") {
    for (const auto& e : bundled(2)) {
        LatticePolytope p(e.vertices);
        auto strong = strong_ewald(p);
        CHECK(strong.ok());
        CHECK(strong.witnesses.size() == p.vertex_count());
        auto star = star_ewald(p);
        CHECK(star.ok());
        CHECK(star.witnesses.size() == faces(dual_polytope(p)).size());
    }
}

TEST_CASE("star Ewald points satisfy the definitional predicate") {
    LatticePolytope t(kTriangle);
    auto q = dual_polytope(t);
    auto e = ewald_points(t);
    const auto& qf = q.facets();
    for (const auto& face : faces(q)) {
        auto lambda = find_star_ewald_point(t, face);
        CHECK(std::find(e.begin(), e.end(), lambda) != e.end());
        std::size_t hits = 0, blocks = 0;
        for (std::size_t j : face.facet_indices) {
            Int ip = 0;
            for (std::size_t c = 0; c < lambda.size(); ++c) ip += lambda[c] * -qf[j].normal[c];
            if (ip == -1) ++hits;
            if (ip == 1) ++blocks;
        }
        CHECK(hits == 1);
        CHECK(blocks == 0);
    }
}

TEST_CASE("Ewald checks require smooth Fano input") {
    LatticePolytope notsmooth(rows({{1, 0}, {0, 1}, {-1, -2}}));
    CHECK_THROWS_AS(weak_ewald(notsmooth), std::domain_error);
    CHECK_THROWS_AS(strong_ewald(notsmooth), std::domain_error);
    CHECK_THROWS_AS(star_ewald(notsmooth), std::domain_error);
    CHECK_THROWS_AS(ewald_points(notsmooth), std::domain_error);
}
