#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "nervecheck/cli.hpp"
#include "nervecheck/io.hpp"

using namespace nervecheck;
using io::json;

namespace {

/// Scratch directory next to the test binary; wiped on teardown.
struct TempDir {
    std::filesystem::path root;

    TempDir() : root(std::filesystem::current_path() / "test_cli_tmp")
    {
        std::filesystem::create_directories(root);
    }
    ~TempDir() { std::filesystem::remove_all(root); }

    std::string write_text(const std::string& name, const std::string& content) const
    {
        const auto path = root / name;
        std::ofstream(path) << content;
        return path.string();
    }
    std::string write_doc(const std::string& name, const json& doc) const
    {
        return write_text(name, doc.dump(2) + "\n");
    }
};

// Built from raw JSON: nested brace-init would turn [["a","b"],...] into an
// object, the classic nlohmann initializer-list ambiguity.
json triangle_cover_doc()
{
    return json::parse(R"({
      "complex": {"name": "triangle",
                  "maximal_simplices": [["a","b"],["b","c"],["a","c"]]},
      "parts": {"a": [["a","b"]], "b": [["b","c"]], "c": [["a","c"]]}
    })");
}

json two_arc_cover_doc()
{
    return json::parse(R"({
      "complex": {"name": "hexagon",
                  "maximal_simplices": [["1","2"],["2","3"],["3","4"],
                                        ["4","5"],["5","6"],["1","6"]]},
      "parts": {"U1": [["1","2"],["2","3"],["3","4"]],
                "U2": [["4","5"],["5","6"],["1","6"]]}
    })");
}

struct RunResult {
    int code = 0;
    json doc;
    std::string raw;
};

template <typename F>
RunResult run(F&& f)
{
    std::ostringstream out, err;
    RunResult r;
    r.code = f(out, err);
    r.raw = out.str();
    r.doc = json::parse(r.raw);
    return r;
}

}  // namespace

TEST_CASE("parse_rational accepts fractions, decimals and integers exactly")
{
    CHECK(io::parse_rational("3/2") == Rat(3, 2));
    CHECK(io::parse_rational("-7") == Rat(-7));
    CHECK(io::parse_rational("1.5") == Rat(3, 2));
    CHECK(io::parse_rational("+0.25") == Rat(1, 4));
    CHECK(io::parse_rational("-0.1") == Rat(-1, 10));
    CHECK(io::parse_rational(".5") == Rat(1, 2));
    CHECK(io::parse_rational("02") == Rat(2));

    for (const char* bad : {"", "x", "1/0", "1.2.3", "1e5", "1/", "/2", "- 4"})
        CHECK_THROWS_AS(io::parse_rational(bad), io::ParseError);
}

TEST_CASE("complex documents round-trip through JSON")
{
    const SimplicialComplex k = fixtures::rp2();
    const json doc = io::complex_to_json(k, "rp2");
    CHECK(io::complex_from_json(doc) == k);

    CHECK_THROWS_AS(io::complex_from_json(json::object()), io::ParseError);
    CHECK_THROWS_AS(io::complex_from_json(json{{"maximal_simplices", {{json::array()}}}}),
                    io::ParseError);
}

TEST_CASE("integer vertex labels are accepted and normalized to strings")
{
    const json doc = json::parse(R"({"maximal_simplices": [[0, 1], [1, 2]]})");
    const SimplicialComplex k = io::complex_from_json(doc);
    CHECK(k.contains(Simplex::of_labels({"0", "1"})));
    CHECK(k.contains(Simplex::of_labels({"2"})));
}

TEST_CASE("cover files load with inline complexes and with path references")
{
    TempDir tmp;
    const std::string inline_path = tmp.write_doc("cover_inline.json", triangle_cover_doc());
    const Cover a = io::load_cover(inline_path);
    CHECK(a.size() == 3);
    CHECK(a.base().dim() == 1);

    tmp.write_doc("base.json", io::complex_to_json(fixtures::hexagon(), "hexagon"));
    json by_ref = two_arc_cover_doc();
    by_ref["complex"] = "base.json";  // relative to the cover file
    const Cover b = io::load_cover(tmp.write_doc("cover_ref.json", by_ref));
    CHECK(b.size() == 2);
    CHECK(b.base() == fixtures::hexagon());
}

TEST_CASE("invalid covers surface as CoverError, not parse errors")
{
    TempDir tmp;
    json doc = triangle_cover_doc();
    doc["parts"]["a"] = json::array({json::array({"a", "z"})});  // vertex outside base
    const std::string path = tmp.write_doc("bad_cover.json", doc);
    CHECK_THROWS_AS(io::load_cover(path), CoverError);
}

TEST_CASE("points files accept coordinates and labeled matrices")
{
    TempDir tmp;
    const std::string coords = tmp.write_text("pts.txt", "# square\n0 0\n1 0\n1 1\n0 1\n");
    const FiniteMetricSpace s1 = io::load_points(coords);
    CHECK(s1.size() == 4);
    CHECK(s1.labels()[2] == "2");
    CHECK(s1.squared_distance(0, 2) == Rat(2));

    const std::string matrix =
        tmp.write_text("mat.txt", "x 0 1 3/2\ny 1 0 1\nz 3/2 1 0\n");
    const FiniteMetricSpace s2 = io::load_points(matrix);
    CHECK(s2.size() == 3);
    CHECK(s2.labels() == std::vector<std::string>{"x", "y", "z"});
    CHECK(s2.squared_distance(0, 2) == Rat(9, 4));

    CHECK_THROWS_AS(io::load_points(tmp.write_text("mixed.txt", "0 0\nx 1 0\n")),
                    io::ParseError);
    CHECK_THROWS_AS(io::load_points(tmp.write_text("empty.txt", "# nothing\n")),
                    io::ParseError);
    CHECK_THROWS_AS(io::load_points(tmp.write_text("ragged.txt", "x 0 1\ny 1 0 2\n")),
                    io::ParseError);
}

TEST_CASE("homology command reports RP2 torsion and honors exit codes")
{
    TempDir tmp;
    const std::string path = tmp.write_doc("rp2.json", io::complex_to_json(fixtures::rp2(), "rp2"));

    const auto res = run([&](auto& out, auto& err) {
        return cli::cmd_homology(path, CoefficientSpec::integers(), false, out, err);
    });
    CHECK(res.code == cli::exit_ok);
    CHECK(res.doc["groups"][1]["torsion"] == json::array({2}));
    CHECK(res.doc["groups"][2]["free_rank"] == 0);

    const auto mod2 = run([&](auto& out, auto& err) {
        return cli::cmd_homology(path, CoefficientSpec::prime(2), false, out, err);
    });
    CHECK(mod2.doc["groups"][2]["free_rank"] == 1);  // RP2 over F_2

    const auto missing = run([&](auto& out, auto& err) {
        return cli::cmd_homology("no_such_file.json", CoefficientSpec::integers(), false, out,
                                 err);
    });
    CHECK(missing.code == cli::exit_input);
    CHECK(missing.doc.contains("error"));
}

TEST_CASE("nerve command output is a valid complex document and is deterministic")
{
    TempDir tmp;
    const std::string path = tmp.write_doc("cover.json", triangle_cover_doc());

    const auto once = run([&](auto& out, auto& err) {
        return cli::cmd_nerve(path, std::nullopt, out, err);
    });
    const auto twice = run([&](auto& out, auto& err) {
        return cli::cmd_nerve(path, std::nullopt, out, err);
    });
    CHECK(once.code == cli::exit_ok);
    CHECK(once.raw == twice.raw);  // byte-for-byte reproducible

    const SimplicialComplex reparsed = io::complex_from_json(once.doc);
    CHECK(reparsed == nerve(io::load_cover(path)));
    CHECK(reparsed.simplices_of_dim(1).size() == 3);  // triangle nerve is a triangle
}

TEST_CASE("nerve command maps cover violations to exit 3 with diagnostics")
{
    TempDir tmp;
    json doc = triangle_cover_doc();
    doc["parts"].erase("c");  // union no longer covers the base
    const std::string path = tmp.write_doc("uncovered.json", doc);

    const auto res = run([&](auto& out, auto& err) {
        return cli::cmd_nerve(path, std::nullopt, out, err);
    });
    CHECK(res.code == cli::exit_cover);
    CHECK(!res.doc["offending_simplices"].empty());
}

TEST_CASE("check command: theorem mode on the fixtures")
{
    TempDir tmp;
    const std::string tri = tmp.write_doc("tri.json", triangle_cover_doc());
    const std::string arcs = tmp.write_doc("arcs.json", two_arc_cover_doc());

    cli::CheckOptions opt;
    opt.mode = "theorem";
    opt.k = 1;
    opt.trace = true;

    const auto good = run([&](auto& out, auto& err) {
        return cli::cmd_check(tri, opt, out, err);
    });
    CHECK(good.code == cli::exit_ok);
    CHECK(good.doc["hypothesis"]["passed"] == true);
    CHECK(good.doc["conclusion1"] == json::array({true, true}));
    CHECK(good.doc["conclusion2"] == "vacuous");
    CHECK(good.doc["trace"]["chain_map_ok"] == true);
    CHECK(good.doc["trace"]["g_maps"][1]["iso"] == true);

    const auto info = run([&](auto& out, auto& err) {
        return cli::cmd_check(arcs, opt, out, err);
    });
    CHECK(info.code == cli::exit_ok);  // hypothesis failure is informational
    CHECK(info.doc["hypothesis"]["passed"] == false);
    CHECK(info.doc["hypothesis"]["violations"][0]["sigma"] == json::array({"U1", "U2"}));
    CHECK(info.doc["conclusion1"] == json::array({true, false}));

    cli::CheckOptions bad = opt;
    bad.k = -1;
    CHECK(run([&](auto& out, auto& err) { return cli::cmd_check(tri, bad, out, err); }).code ==
          cli::exit_input);

    cli::CheckOptions wrong_mode = opt;
    wrong_mode.mode = "nonsense";
    CHECK(run([&](auto& out, auto& err) {
              return cli::cmd_check(tri, wrong_mode, out, err);
          }).code == cli::exit_input);
}

TEST_CASE("check command: prop1, collapse, dowker, gmap modes")
{
    TempDir tmp;
    const std::string tri = tmp.write_doc("tri.json", triangle_cover_doc());
    const std::string arcs = tmp.write_doc("arcs.json", two_arc_cover_doc());

    cli::CheckOptions prop1;
    prop1.mode = "prop1";
    for (const auto* path : {&tri, &arcs}) {
        const auto res = run([&](auto& out, auto& err) {
            return cli::cmd_check(*path, prop1, out, err);
        });
        CHECK(res.code == cli::exit_ok);
        CHECK(res.doc["passed"] == true);
        for (const auto& row : res.doc["rows"])
            CHECK(row["exact"] == true);
    }

    cli::CheckOptions collapse;
    collapse.mode = "collapse";
    const auto col = run([&](auto& out, auto& err) {
        return cli::cmd_check(tri, collapse, out, err);
    });
    CHECK(col.code == cli::exit_ok);
    CHECK(col.doc["coefficients"] == "q");
    CHECK(col.doc["collapsed_to_first_column"] == true);
    CHECK(col.doc["abutment_matches_betti"] == true);

    cli::CheckOptions collapse_z = collapse;
    collapse_z.coeff = CoefficientSpec::integers();
    collapse_z.coeff_given = true;
    CHECK(run([&](auto& out, auto& err) {
              return cli::cmd_check(tri, collapse_z, out, err);
          }).code == cli::exit_input);

    cli::CheckOptions dowker;
    dowker.mode = "dowker";
    const auto dk = run([&](auto& out, auto& err) {
        return cli::cmd_check(arcs, dowker, out, err);
    });
    CHECK(dk.code == cli::exit_ok);
    CHECK(dk.doc["homology_equal"] == true);
    CHECK(dk.doc["col_complex_is_nerve"] == true);

    cli::CheckOptions dowker_trunc = dowker;
    dowker_trunc.max_dim = 1;
    CHECK(run([&](auto& out, auto& err) {
              return cli::cmd_check(tri, dowker_trunc, out, err);
          }).code == cli::exit_ok);

    cli::CheckOptions gmap;
    gmap.mode = "gmap";
    const auto gm = run([&](auto& out, auto& err) {
        return cli::cmd_check(tri, gmap, out, err);
    });
    CHECK(gm.code == cli::exit_ok);
    CHECK(gm.doc["m_max"] == 1);
    CHECK(gm.doc["chain_map_ok"] == true);
}

TEST_CASE("rips command matches the square fixtures")
{
    TempDir tmp;
    const std::string pts = tmp.write_text("square.txt", "0 0\n1 0\n1 1\n0 1\n");

    const auto loop = run([&](auto& out, auto& err) {
        return cli::cmd_rips(pts, "1.2", 3, CoefficientSpec::integers(), out, err);
    });
    CHECK(loop.code == cli::exit_ok);
    CHECK(loop.doc["homology"][1]["free_rank"] == 1);

    const auto filled = run([&](auto& out, auto& err) {
        return cli::cmd_rips(pts, "1.5", 3, CoefficientSpec::integers(), out, err);
    });
    CHECK(filled.code == cli::exit_ok);
    CHECK(filled.doc["homology"][1]["free_rank"] == 0);
    CHECK(filled.doc["homology"][2]["free_rank"] == 0);
    CHECK(filled.doc["homology"][3]["free_rank"] == 0);

    CHECK(run([&](auto& out, auto& err) {
              return cli::cmd_rips(pts, "0", 3, CoefficientSpec::integers(), out, err);
          }).code == cli::exit_input);
    CHECK(run([&](auto& out, auto& err) {
              return cli::cmd_rips(pts, "abc", 3, CoefficientSpec::integers(), out, err);
          }).code == cli::exit_input);
}

TEST_CASE("coefficient specs parse and reject as the flag promises")
{
    CHECK(cli::parse_coeff("z") == CoefficientSpec::integers());
    CHECK(cli::parse_coeff("q") == CoefficientSpec::rationals());
    CHECK(cli::parse_coeff("p:7") == CoefficientSpec::prime(7));
    for (const char* bad : {"", "Z", "p:", "p:4", "p:x", "f2"})
        CHECK_THROWS_AS(cli::parse_coeff(bad), io::ParseError);
}
