#include "nervecheck/cli.hpp"

#include <filesystem>

#include "nervecheck/double_complex.hpp"
#include "nervecheck/dowker.hpp"
#include "nervecheck/io.hpp"
#include "nervecheck/spectral.hpp"

namespace nervecheck::cli {

using io::json;

namespace {

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int fail_input(std::ostream& out, std::ostream& err, const std::string& message)
{
    json doc;
    doc["error"] = message;
    emit(out, doc);
    err << "error: " << message << "\n";
    return exit_input;
}

int fail_cover(std::ostream& out, std::ostream& err, const CoverError& e)
{
    json doc;
    doc["error"] = e.what();
    json offending = json::array();
    for (const Simplex& s : e.offending_simplices)
        offending.push_back(s.labels());
    doc["offending_simplices"] = offending;
    emit(out, doc);
    err << "invalid cover: " << e.what() << "\n";
    return exit_cover;
}

int mode_theorem(const Cover& cover, const CheckOptions& options, std::ostream& out,
                 std::ostream& err)
{
    const int k = options.k.value_or(1);
    try {
        const TheoremReport rep = check_theorem(cover, k, options.trace);
        json doc;
        doc["mode"] = "theorem";
        doc.update(io::theorem_to_json(rep));
        emit(out, doc);
        if (rep.hypothesis.passed)
            err << "theorem holds at k=" << k << " (hypotheses satisfied)\n";
        else
            err << "hypotheses fail at k=" << k << " ("
                << rep.hypothesis.violations.size()
                << " violation(s)); conclusions reported for information\n";
        return exit_ok;
    } catch (const TheoremFalsified& e) {
        json doc;
        doc["mode"] = "theorem";
        doc["falsified"] = true;
        doc["message"] = e.what();
        doc.update(io::theorem_to_json(e.report));
        emit(out, doc);
        err << "THEOREM FALSIFIED (implementation bug): " << e.what() << "\n";
        return exit_falsified;
    }
}

int mode_prop1(const Cover& cover, const CoefficientSpec& coeff, std::ostream& out,
               std::ostream& err)
{
    const SimplicialComplex nv = nerve(cover);
    const int p_max = std::max(nv.dim(), 0);
    const int q_max = std::max(cover.base().dim(), 0);
    const DoubleComplex dc = build_double_complex(cover, p_max, q_max);

    bool passed = true;
    json rows = json::array();
    for (int q = 0; q <= q_max; ++q) {
        const auto groups = row_homology(dc, q, coeff);
        const int expected =
            static_cast<int>(cover.base().simplices_of_dim(q).size());
        const HomologyGroup& at0 = groups[0];
        bool row_ok = at0.free_rank == expected && at0.torsion.empty();
        for (int p = 1; p <= p_max; ++p)
            row_ok = row_ok && group_at(groups, p).is_zero();
        passed = passed && row_ok;

        json row;
        row["q"] = q;
        row["expected_rank_at_p0"] = expected;
        row["groups"] = io::homology_to_json(groups);
        row["exact"] = row_ok;
        rows.push_back(std::move(row));
    }

    json doc;
    doc["mode"] = "prop1";
    doc["coefficients"] = coeff.name();
    doc["p_max"] = p_max;
    doc["q_max"] = q_max;
    doc["rows"] = std::move(rows);
    doc["passed"] = passed;
    emit(out, doc);
    err << (passed ? "all rows exact for p > 0\n" : "row exactness FAILED\n");
    return passed ? exit_ok : exit_property;
}

int mode_collapse(const Cover& cover, const CoefficientSpec& coeff, std::ostream& out,
                  std::ostream& err)
{
    const SimplicialComplex nv = nerve(cover);
    const int p_max = std::max(nv.dim(), 0);
    const int q_max = std::max(cover.base().dim(), 0);
    const DoubleComplex dc = build_double_complex(cover, p_max, q_max);
    const int r_max = std::max(2, q_max + 1);

    const SpectralSequence ss = ss_pages(dc, FiltrationSide::second, coeff, r_max);
    const auto betti = homology(cover.base(), coeff);

    const PageTable& e2 = ss.pages[1];
    bool collapsed = true;
    for (const auto& [pq, d] : e2.dims)
        if (pq.first != 0 && d != 0)
            collapsed = false;
    bool first_column_ok = true;
    for (int q = 0; q <= q_max; ++q)
        if (e2.dim(0, q) != group_at(betti, q).free_rank)
            first_column_ok = false;
    bool abutment_ok = true;
    for (int n = 0; n <= p_max + q_max; ++n)
        if (ss.pages.back().total(n) != group_at(betti, n).free_rank)
            abutment_ok = false;

    const bool passed = ss.stabilized && collapsed && first_column_ok && abutment_ok;

    json pages = json::array();
    for (const PageTable& page : ss.pages) {
        json cells = json::array();
        for (const auto& [pq, d] : page.dims) {
            json cell;
            cell["p"] = pq.first;
            cell["q"] = pq.second;
            cell["dim"] = d;
            cells.push_back(std::move(cell));
        }
        json p;
        p["r"] = page.r;
        p["cells"] = std::move(cells);
        pages.push_back(std::move(p));
    }

    json doc;
    doc["mode"] = "collapse";
    doc["coefficients"] = coeff.name();
    doc["r_max"] = r_max;
    doc["betti"] = io::homology_to_json(betti);
    doc["pages"] = std::move(pages);
    doc["stabilized"] = ss.stabilized;
    doc["collapsed_to_first_column"] = collapsed;
    doc["first_column_matches_betti"] = first_column_ok;
    doc["abutment_matches_betti"] = abutment_ok;
    doc["passed"] = passed;
    emit(out, doc);
    err << (passed ? "second spectral sequence collapses at E^2\n"
                   : "collapse check FAILED\n");
    return passed ? exit_ok : exit_property;
}

int mode_dowker(const Cover& cover, const CheckOptions& options, std::ostream& out,
                std::ostream& err)
{
    DowkerRelation rel;
    for (const VertexId& v : cover.base().vertices())
        rel.row_labels.push_back(v.label);
    rel.col_labels = cover.labels();
    for (const std::string& label : rel.col_labels)
        for (const VertexId& v : cover.part(label).vertices())
            rel.pairs.emplace(v.label, label);
    rel.validate();

    const auto [row_complex, col_complex] = dowker_pair(rel, options.max_dim);
    const auto h_rows = homology(row_complex, CoefficientSpec::integers());
    const auto h_cols = homology(col_complex, CoefficientSpec::integers());

    // Truncation changes top-degree homology on both sides independently, so
    // with max_dim set only degrees < max_dim are comparable.
    bool equal;
    if (options.max_dim.has_value()) {
        equal = true;
        for (int d = 0; d < *options.max_dim; ++d)
            if (group_at(h_rows, d) != group_at(h_cols, d))
                equal = false;
    } else {
        equal = homology_equal(h_rows, h_cols);
    }

    const bool nerve_match = col_complex == nerve(cover, options.max_dim);
    const bool passed = equal && nerve_match;

    json doc;
    doc["mode"] = "dowker";
    doc["rows"] = static_cast<int>(rel.row_labels.size());
    doc["cols"] = static_cast<int>(rel.col_labels.size());
    if (options.max_dim.has_value())
        doc["max_dim"] = *options.max_dim;
    doc["h_row_complex"] = io::homology_to_json(h_rows);
    doc["h_col_complex"] = io::homology_to_json(h_cols);
    doc["homology_equal"] = equal;
    doc["col_complex_is_nerve"] = nerve_match;
    doc["passed"] = passed;
    emit(out, doc);
    err << (passed ? "Dowker duality confirmed on the membership relation\n"
                   : "Dowker comparison FAILED\n");
    return passed ? exit_ok : exit_property;
}

int mode_gmap(const Cover& cover, const CheckOptions& options, std::ostream& out,
              std::ostream& err)
{
    const int m_max = options.k.value_or(std::max(nerve(cover).dim(), 0));
    if (m_max < 0)
        return fail_input(out, err, "gmap: --k must be >= 0");
    const bool ok = check_g_chain_map(cover, m_max);

    json doc;
    doc["mode"] = "gmap";
    doc["m_max"] = m_max;
    doc["chain_map_ok"] = ok;
    doc["passed"] = ok;
    emit(out, doc);
    err << (ok ? "g is a chain map\n" : "g chain-map identity FAILED\n");
    return ok ? exit_ok : exit_property;
}

}  // namespace

CoefficientSpec parse_coeff(const std::string& text)
{
    if (text == "z")
        return CoefficientSpec::integers();
    if (text == "q")
        return CoefficientSpec::rationals();
    if (text.rfind("p:", 0) == 0) {
        std::int64_t p = 0;
        try {
            p = std::stoll(text.substr(2));
        } catch (const std::exception&) {
            throw io::ParseError("invalid prime in coefficient spec: '" + text + "'");
        }
        try {
            return CoefficientSpec::prime(p);
        } catch (const std::invalid_argument& e) {
            throw io::ParseError(e.what());
        }
    }
    throw io::ParseError("unknown coefficients '" + text + "' (expected z, q, or p:<prime>)");
}

int cmd_homology(const std::string& path, const CoefficientSpec& coeff, bool reduced,
                 std::ostream& out, std::ostream& err)
{
    try {
        const SimplicialComplex k = io::load_complex(path);
        const auto groups = homology(k, coeff, reduced);
        json doc;
        doc["input"] = path;
        doc["coefficients"] = coeff.name();
        doc["reduced"] = reduced;
        doc["dim"] = k.dim();
        doc["groups"] = io::homology_to_json(groups);
        emit(out, doc);
        err << "computed homology in degrees 0.." << std::max(k.dim(), 0) << "\n";
        return exit_ok;
    } catch (const io::ParseError& e) {
        return fail_input(out, err, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(out, err, e.what());
    }
}

int cmd_nerve(const std::string& path, std::optional<int> max_dim, std::ostream& out,
              std::ostream& err)
{
    try {
        const Cover cover = io::load_cover(path);
        const SimplicialComplex nv = nerve(cover, max_dim);
        const std::string name = std::filesystem::path(path).stem().string() + "-nerve";
        emit(out, io::complex_to_json(nv, name));
        err << "nerve has " << nv.size() << " simplices, dim " << nv.dim() << "\n";
        return exit_ok;
    } catch (const io::ParseError& e) {
        return fail_input(out, err, e.what());
    } catch (const CoverError& e) {
        return fail_cover(out, err, e);
    } catch (const std::invalid_argument& e) {
        return fail_input(out, err, e.what());
    }
}

int cmd_rips(const std::string& path, const std::string& r_text, std::optional<int> max_dim,
             const CoefficientSpec& coeff, std::ostream& out, std::ostream& err)
{
    try {
        const FiniteMetricSpace space = io::load_points(path);
        const Rat r = io::parse_rational(r_text);
        if (r <= 0)
            return fail_input(out, err, "rips: --r must be positive");
        const int dim_cap = max_dim.value_or(static_cast<int>(space.size()) - 1);
        const SimplicialComplex k = vietoris_rips(space, r, dim_cap);

        json doc;
        doc["input"] = path;
        doc["r"] = r.str();
        doc["max_dim"] = dim_cap;
        doc["complex"] = io::complex_to_json(k, "rips");
        doc["coefficients"] = coeff.name();
        doc["homology"] = io::homology_to_json(homology(k, coeff));
        emit(out, doc);
        err << "Rips complex at r=" << r.str() << ": " << k.size() << " simplices\n";
        return exit_ok;
    } catch (const io::ParseError& e) {
        return fail_input(out, err, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(out, err, e.what());
    }
}

int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out,
              std::ostream& err)
{
    try {
        const Cover cover = io::load_cover(path);

        if (options.mode == "theorem" || options.mode == "gmap" ||
            options.mode == "dowker") {
            if (options.coeff_given && options.coeff != CoefficientSpec::integers())
                return fail_input(out, err, "mode '" + options.mode +
                                                "' verifies integral homology; omit "
                                                "--coeff or pass z");
        }
        if (options.k.has_value() && *options.k < 0)
            return fail_input(out, err, "--k must be >= 0");

        if (options.mode == "theorem")
            return mode_theorem(cover, options, out, err);
        if (options.mode == "prop1") {
            const auto coeff =
                options.coeff_given ? options.coeff : CoefficientSpec::integers();
            return mode_prop1(cover, coeff, out, err);
        }
        if (options.mode == "collapse") {
            const auto coeff =
                options.coeff_given ? options.coeff : CoefficientSpec::rationals();
            if (!coeff.is_field())
                return fail_input(out, err,
                                  "mode 'collapse' needs field coefficients (q or p:<prime>)");
            return mode_collapse(cover, coeff, out, err);
        }
        if (options.mode == "dowker")
            return mode_dowker(cover, options, out, err);
        if (options.mode == "gmap")
            return mode_gmap(cover, options, out, err);
        return fail_input(out, err, "unknown mode '" + options.mode +
                                        "' (expected theorem, prop1, collapse, dowker, gmap)");
    } catch (const io::ParseError& e) {
        return fail_input(out, err, e.what());
    } catch (const CoverError& e) {
        return fail_cover(out, err, e);
    } catch (const std::invalid_argument& e) {
        return fail_input(out, err, e.what());
    }
}

}  // namespace nervecheck::cli
