#include "nervecheck/io.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace nervecheck::io {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Int parse_integer(const std::string& text)
{
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    if (!all_digits(body))
        throw ParseError("not an integer: '" + text + "'");
    Int v(body);
    return negative ? -v : v;
}

json parse_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return doc;
}

std::vector<std::vector<std::string>> labels_from_json(const json& arr, const std::string& what)
{
    if (!arr.is_array())
        throw ParseError(what + " must be an array of simplices");
    std::vector<std::vector<std::string>> out;
    for (const json& simplex : arr) {
        if (!simplex.is_array() || simplex.empty())
            throw ParseError(what + ": each simplex must be a nonempty array of labels");
        std::vector<std::string> labels;
        for (const json& v : simplex) {
            if (v.is_string())
                labels.push_back(v.get<std::string>());
            else if (v.is_number_integer())
                labels.push_back(std::to_string(v.get<long long>()));
            else
                throw ParseError(what + ": vertex labels must be strings or integers");
        }
        out.push_back(std::move(labels));
    }
    return out;
}

/// Torsion coefficients are emitted as numbers when they fit in 64 bits and
/// as decimal strings otherwise, so the document stays lossless.
json int_to_json(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return static_cast<std::int64_t>(v);
    return v.str();
}

}  // namespace

Rat parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const Int num = parse_integer(text.substr(0, slash));
        const Int den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator: '" + text + "'");
        return Rat(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (!all_digits(frac))
            throw ParseError("not a number: '" + text + "'");
        bool negative = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            negative = head[0] == '-';
            head.erase(0, 1);
        }
        if (head.empty())
            head = "0";
        if (!all_digits(head))
            throw ParseError("not a number: '" + text + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        const Rat value = Rat(Int(head) * scale + Int(frac), scale);
        return negative ? -value : value;
    }
    return Rat(parse_integer(text));
}

SimplicialComplex complex_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("maximal_simplices"))
        throw ParseError("complex document needs a 'maximal_simplices' field");
    try {
        return SimplicialComplex::closure(
            labels_from_json(doc.at("maximal_simplices"), "maximal_simplices"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid simplex: ") + e.what());
    }
}

json complex_to_json(const SimplicialComplex& k, const std::string& name)
{
    json doc;
    doc["name"] = name;
    json simplices = json::array();
    for (const Simplex& s : k.maximal_simplices())
        simplices.push_back(s.labels());
    doc["maximal_simplices"] = std::move(simplices);
    return doc;
}

SimplicialComplex load_complex(const std::string& path)
{
    return complex_from_json(parse_json_file(path));
}

Cover load_cover(const std::string& path)
{
    const json doc = parse_json_file(path);
    if (!doc.is_object() || !doc.contains("complex") || !doc.contains("parts"))
        throw ParseError("cover document needs 'complex' and 'parts' fields");

    SimplicialComplex base;
    const json& cx = doc.at("complex");
    if (cx.is_string()) {
        std::filesystem::path ref(cx.get<std::string>());
        if (ref.is_relative())
            ref = std::filesystem::path(path).parent_path() / ref;
        base = load_complex(ref.string());
    } else {
        base = complex_from_json(cx);
    }

    if (!doc.at("parts").is_object())
        throw ParseError("'parts' must map labels to simplex lists");
    std::map<std::string, SimplicialComplex, LabelLess> parts;
    for (const auto& [label, simplices] : doc.at("parts").items()) {
        try {
            parts.emplace(label, SimplicialComplex::closure(
                                     labels_from_json(simplices, "part '" + label + "'")));
        } catch (const std::invalid_argument& e) {
            throw ParseError("part '" + label + "': " + e.what());
        }
    }
    return Cover(std::move(base), std::move(parts));
}

FiniteMetricSpace load_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (!tokens.empty())
            rows.push_back(std::move(tokens));
    }
    if (rows.empty())
        throw ParseError(path + ": no points");

    const auto is_rational = [](const std::string& s) {
        try {
            parse_rational(s);
            return true;
        } catch (const ParseError&) {
            return false;
        }
    };

    const bool coordinates = is_rational(rows.front().front());
    if (coordinates) {
        std::vector<std::vector<Rat>> points;
        for (const auto& row : rows) {
            std::vector<Rat> p;
            for (const auto& t : row)
                p.push_back(parse_rational(t));
            points.push_back(std::move(p));
        }
        try {
            return FiniteMetricSpace::from_coordinates(points);
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    std::vector<std::string> labels;
    std::vector<std::vector<Rat>> dist;
    for (const auto& row : rows) {
        if (is_rational(row.front()))
            throw ParseError(path + ": mixed coordinate and matrix rows");
        labels.push_back(row.front());
        std::vector<Rat> d;
        for (std::size_t i = 1; i < row.size(); ++i)
            d.push_back(parse_rational(row[i]));
        dist.push_back(std::move(d));
    }
    try {
        return FiniteMetricSpace::from_distances(dist, labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json group_to_json(const HomologyGroup& g)
{
    json doc;
    doc["free_rank"] = g.free_rank;
    json torsion = json::array();
    for (const Int& t : g.torsion)
        torsion.push_back(int_to_json(t));
    doc["torsion"] = std::move(torsion);
    return doc;
}

json homology_to_json(const std::vector<HomologyGroup>& groups)
{
    json arr = json::array();
    for (std::size_t d = 0; d < groups.size(); ++d) {
        json item;
        item["degree"] = static_cast<int>(d);
        item.update(group_to_json(groups[d]));
        arr.push_back(std::move(item));
    }
    return arr;
}

json hypothesis_to_json(const HypothesisReport& rep)
{
    json doc;
    doc["k"] = rep.k;
    doc["passed"] = rep.passed;
    json violations = json::array();
    for (const HypothesisViolation& v : rep.violations) {
        json item;
        item["sigma"] = v.sigma;
        item["degree"] = v.degree;
        item["group"] = group_to_json(v.group);
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    return doc;
}

json theorem_to_json(const TheoremReport& rep)
{
    json doc;
    doc["k"] = rep.k;
    doc["hypothesis"] = hypothesis_to_json(rep.hypothesis);
    doc["h_base"] = homology_to_json(rep.h_base);
    doc["h_nerve"] = homology_to_json(rep.h_nerve);
    doc["conclusion1"] = rep.conclusion1;
    switch (rep.conclusion2) {
        case Conclusion2::vacuous: doc["conclusion2"] = "vacuous"; break;
        case Conclusion2::confirmed: doc["conclusion2"] = "confirmed"; break;
        case Conclusion2::violated: doc["conclusion2"] = "violated"; break;
    }
    if (rep.trace.has_value()) {
        const ProofTrace& tr = *rep.trace;
        json trace;
        trace["e2_bottom"] = homology_to_json(tr.e2_bottom);
        json gs = json::array();
        for (const GMapCheck& g : tr.g_maps) {
            json item;
            item["m"] = g.m;
            item["rows"] = g.rows;
            item["cols"] = g.cols;
            item["rank"] = g.rank;
            item["iso"] = g.iso;
            gs.push_back(std::move(item));
        }
        trace["g_maps"] = std::move(gs);
        trace["chain_map_ok"] = tr.chain_map_ok;
        trace["e2_matches_nerve"] = tr.e2_matches_nerve;
        trace["surjection_rank_ok"] = tr.surjection_rank_ok;
        doc["trace"] = std::move(trace);
    }
    return doc;
}

}  // namespace nervecheck::io
