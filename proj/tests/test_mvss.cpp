#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "nervecheck/double_complex.hpp"
#include "nervecheck/spectral.hpp"
#include "oracles.hpp"

using namespace nervecheck;

namespace {

int grid_dim(const DoubleComplex& dc, int p, int q) { return dc.dim(p, q); }

}  // namespace

TEST_CASE("double complex of the triangle cover has the documented ranks")
{
    Cover cover = fixtures::triangle_cover();
    DoubleComplex dc = build_double_complex(cover, 2, 2);

    CHECK(grid_dim(dc, 0, 0) == 6);  // two vertices per closed edge
    CHECK(grid_dim(dc, 0, 1) == 3);
    CHECK(grid_dim(dc, 1, 0) == 3);  // one vertex per pairwise intersection
    CHECK(grid_dim(dc, 1, 1) == 0);
    CHECK(grid_dim(dc, 2, 0) == 0);  // empty triple intersection

    CHECK(check_bicomplex(dc));
}

TEST_CASE("bases are ordered lexicographically")
{
    DoubleComplex dc = build_double_complex(fixtures::triangle_cover(), 1, 1);
    const auto& b = dc.basis[1][0];
    REQUIRE(b.size() == 3);
    CHECK(b[0].first.labels() == std::vector<std::string>{"a", "b"});
    CHECK(b[0].second.labels() == std::vector<std::string>{"b"});
    CHECK(b[1].first.labels() == std::vector<std::string>{"a", "c"});
    CHECK(b[2].first.labels() == std::vector<std::string>{"b", "c"});
}

TEST_CASE("check_bicomplex detects a flipped sign")
{
    // Facet cover of the tetrahedron boundary: pairwise intersections are
    // closed edges and triple intersections are vertices, so every d' entry
    // participates in either d'd' = 0 or the commuting square.
    DoubleComplex dc = build_double_complex(fixtures::facet_cover(fixtures::boundary_delta(3)), 2, 1);
    REQUIRE(check_bicomplex(dc));

    for (int p = 1; p <= dc.p_max; ++p)
        for (int q = 0; q <= dc.q_max; ++q)
            for (const auto& [rc, v] : dc.d_prime[p][q].entries()) {
                DoubleComplex mutant = dc;
                mutant.d_prime[p][q].set(rc.first, rc.second, -v);
                CHECK(!check_bicomplex(mutant));
            }
}

TEST_CASE("empty cover yields an empty double complex")
{
    Cover cover(SimplicialComplex(), {});
    DoubleComplex dc = build_double_complex(cover, 2, 2);
    CHECK(check_bicomplex(dc));
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            CHECK(dc.dim(p, q) == 0);
    ChainComplexZ tot = total_complex(dc);
    CHECK(homology(tot, CoefficientSpec::integers()).size() == 5);
    for (const auto& g : homology(tot, CoefficientSpec::integers()))
        CHECK(g.is_zero());
}

TEST_CASE("total complex squares to zero and computes base homology")
{
    for (const Cover& cover :
         {fixtures::triangle_cover(), fixtures::hexagon_two_arc_cover(),
          fixtures::hexagon_three_arc_cover(), fixtures::facet_cover(fixtures::rp2())}) {
        const int p_max = static_cast<int>(cover.size()) - 1;
        const int q_max = std::max(cover.base().dim(), 0);
        DoubleComplex dc = build_double_complex(cover, p_max, q_max);
        ChainComplexZ tot = total_complex(dc);
        CHECK(tot.composites_zero());
        CHECK(homology_equal(homology(tot, CoefficientSpec::integers()),
                             homology(cover.base(), CoefficientSpec::integers())));
    }
}

TEST_CASE("total complex rejects broken differentials")
{
    DoubleComplex dc =
        build_double_complex(fixtures::facet_cover(fixtures::boundary_delta(3)), 2, 1);
    auto [rc, v] = *dc.d_prime[1][0].entries().begin();
    dc.d_prime[1][0].set(rc.first, rc.second, -v);
    CHECK_THROWS_AS(total_complex(dc), std::invalid_argument);
}

TEST_CASE("row homology: rows are exact away from p = 0")
{
    Cover cover = fixtures::triangle_cover();
    DoubleComplex dc = build_double_complex(cover, 2, 1);

    auto row0 = row_homology(dc, 0, CoefficientSpec::integers());
    REQUIRE(row0.size() == 3);
    CHECK(row0[0] == HomologyGroup{3, {}});  // C_0(X) has rank 3
    CHECK(row0[1].is_zero());
    CHECK(row0[2].is_zero());

    auto row1 = row_homology(dc, 1, CoefficientSpec::integers());
    CHECK(row1[0] == HomologyGroup{3, {}});  // C_1(X) has rank 3
    CHECK(row1[1].is_zero());
    CHECK(row1[2].is_zero());

    for (const auto& coeff : {CoefficientSpec::prime(2), CoefficientSpec::rationals()}) {
        auto r = row_homology(dc, 0, coeff);
        CHECK(r[0].free_rank == 3);
        CHECK(r[1].is_zero());
    }

    CHECK_THROWS_AS(row_homology(dc, 5, CoefficientSpec::integers()),
                    std::invalid_argument);
}

TEST_CASE("nf complex is a cone")
{
    Cover cover = fixtures::triangle_cover();
    SimplicialComplex nb = nf_complex(cover, Simplex::of_labels({"b"}));
    CHECK(nb.size() == 3);  // vertices a, b and the edge between the labels
    CHECK(nb.contains(Simplex::of_labels({"a", "b"})));
    CHECK(is_homologically_trivial(nb, 4));

    SimplicialComplex ne = nf_complex(cover, Simplex::of_labels({"a", "b"}));
    CHECK(ne.size() == 1);  // only the part labeled "a" contains that edge

    CHECK_THROWS_AS(nf_complex(cover, Simplex::of_labels({"a", "b", "c"})),
                    std::invalid_argument);

    const SimplicialComplex rp2 = fixtures::rp2();
    const Cover rp2_cover = fixtures::facet_cover(rp2);
    for (const auto& tau : rp2.simplices())
        CHECK(is_homologically_trivial(nf_complex(rp2_cover, tau), 3));
}

TEST_CASE("e1 bottom row of the hexagon two-arc cover")
{
    Cover cover = fixtures::hexagon_two_arc_cover();
    DoubleComplex dc = build_double_complex(cover, 1, 1);
    ChainComplexZ e1 = e1_bottom_row(dc, cover);

    REQUIRE(e1.top_degree() == 1);
    CHECK(e1.dims[0] == 2);  // both arcs are connected
    CHECK(e1.dims[1] == 2);  // U1 ^ U2 has two components, {1} and {4}
    CHECK(e1.composites_zero());

    // d1 sends both components to (U2) - (U1); homology is Z in degrees 0, 1.
    auto h = homology(e1, CoefficientSpec::integers());
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1] == HomologyGroup{1, {}});

    const auto row = detail::build_e1_row(cover, 1);
    REQUIRE(row.basis[1].size() == 2);
    CHECK(row.basis[1][0].second == VertexId{"1"});
    CHECK(row.basis[1][1].second == VertexId{"4"});
    CHECK(row.cc.d[1].at(0, 0) == -1);
    CHECK(row.cc.d[1].at(1, 0) == 1);
    CHECK(row.cc.d[1].at(0, 1) == -1);
    CHECK(row.cc.d[1].at(1, 1) == 1);
}

TEST_CASE("e1 bottom row matches nerve homology for good fixtures")
{
    for (const Cover& cover :
         {fixtures::triangle_cover(), fixtures::hexagon_three_arc_cover(),
          fixtures::facet_cover(fixtures::boundary_delta(3))}) {
        const int p_max = static_cast<int>(cover.size()) - 1;
        DoubleComplex dc = build_double_complex(cover, p_max, 0);
        auto h_row = homology(e1_bottom_row(dc, cover), CoefficientSpec::integers());
        auto h_nerve = homology(nerve(cover), CoefficientSpec::integers());
        CHECK(homology_equal(h_row, h_nerve));
    }
}

TEST_CASE("first filtration pages of the triangle cover")
{
    DoubleComplex dc = build_double_complex(fixtures::triangle_cover(), 2, 2);
    SpectralSequence ss =
        ss_pages(dc, FiltrationSide::first, CoefficientSpec::rationals(), 3);

    REQUIRE(ss.pages.size() == 3);
    const PageTable& e1 = ss.pages[0];
    CHECK(e1.dim(0, 0) == 3);
    CHECK(e1.dim(1, 0) == 3);
    CHECK(e1.dim(0, 1) == 0);
    CHECK(e1.dims.size() == 2);

    const PageTable& e2 = ss.pages[1];
    CHECK(e2.dim(0, 0) == 1);
    CHECK(e2.dim(1, 0) == 1);
    CHECK(e2.dims.size() == 2);

    CHECK(ss.pages[2] == (PageTable{3, e2.dims}));
    CHECK(ss.stabilized);
}

TEST_CASE("second filtration collapses to the first column")
{
    for (const Cover& cover :
         {fixtures::triangle_cover(), fixtures::hexagon_two_arc_cover(),
          fixtures::facet_cover(fixtures::rp2())}) {
        const int p_max = static_cast<int>(cover.size()) - 1;
        const int q_max = std::max(cover.base().dim(), 0);
        DoubleComplex dc = build_double_complex(cover, p_max, q_max);
        const int r_max = std::max(2, q_max + 1);

        for (const auto& field :
             {CoefficientSpec::rationals(), CoefficientSpec::prime(2)}) {
            SpectralSequence ss = ss_pages(dc, FiltrationSide::second, field, r_max);
            CHECK(ss.stabilized);
            const PageTable& e2 = ss.pages[1];
            auto betti = homology(cover.base(), field);
            for (const auto& [pq, d] : e2.dims)
                CHECK(pq.first == 0);  // collapse: nothing off the first column
            for (int q = 0; q <= q_max + 1; ++q)
                CHECK(e2.dim(0, q) == group_at(betti, q).free_rank);

            // The abutment recovers the total homology degreewise.
            const PageTable& last = ss.pages.back();
            for (int n = 0; n <= p_max + q_max; ++n)
                CHECK(last.total(n) == group_at(betti, n).free_rank);
        }
    }
}

TEST_CASE("first filtration abutment matches base homology over a field")
{
    Cover cover = fixtures::hexagon_three_arc_cover();
    DoubleComplex dc = build_double_complex(cover, 2, 1);
    SpectralSequence ss =
        ss_pages(dc, FiltrationSide::first, CoefficientSpec::rationals(), 4);
    CHECK(ss.stabilized);
    auto betti = homology(cover.base(), CoefficientSpec::rationals());
    for (int n = 0; n <= 3; ++n)
        CHECK(ss.pages.back().total(n) == group_at(betti, n).free_rank);
}

TEST_CASE("ss_pages rejects bad arguments")
{
    DoubleComplex dc = build_double_complex(fixtures::triangle_cover(), 1, 1);
    CHECK_THROWS_AS(ss_pages(dc, FiltrationSide::first, CoefficientSpec::integers(), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(ss_pages(dc, FiltrationSide::first, CoefficientSpec::rationals(), 0),
                    std::invalid_argument);
}
