#pragma once

#include <string>

#include <json.hpp>

#include "ladder/classgroup.hpp"
#include "ladder/classifier.hpp"
#include "ladder/ladder.hpp"
#include "ladder/monomial.hpp"

namespace ladder {

inline json to_json(const Ladder& Y)
{
    return json{{"m", Y.rows()}, {"n", Y.cols()}, {"lo", Y.lo_bounds()}, {"hi", Y.hi_bounds()}};
}

inline Ladder ladder_from_json(const json& j)
{
    require(j.is_object() && j.contains("m") && j.contains("n") && j.contains("lo") && j.contains("hi"),
            errc::not_a_ladder, "ladder JSON needs m, n, lo, hi");
    return Ladder(j.at("m").get<int>(), j.at("n").get<int>(), j.at("lo").get<std::vector<int>>(),
                  j.at("hi").get<std::vector<int>>());
}

/// Accepts either the JSON object format or the '#'/'.' grid.
inline Ladder parse_ladder(const std::string& text)
{
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        json j = json::parse(text, nullptr, true, true);
        return ladder_from_json(j);
    }
    return parse_grid(text);
}

inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }

inline json to_json(const CornerData& cd)
{
    json lower = json::array(), upper = json::array();
    for (const Cell& c : cd.lower) lower.push_back(to_json(c));
    for (const Cell& c : cd.upper) upper.push_back(to_json(c));
    return json{{"h", cd.h()}, {"k", cd.k()}, {"lower", lower}, {"upper", upper}};
}

inline json to_json(const EtaKappa& ek)
{
    return json{{"eta1", ek.eta1}, {"eta2", ek.eta2}, {"kappa1", ek.kappa1}, {"kappa2", ek.kappa2}};
}

inline json to_json(const ShapeReport& s)
{
    return json{{"path_connected", s.path_connected},
                {"one_sided", s.one_sided},
                {"two_sided", s.two_sided},
                {"coincidental_corners", s.coincidental_corners},
                {"thick", s.thick},
                {"thin", s.thin},
                {"is_spine", s.is_spine},
                {"is_rectangle", s.is_rectangle}};
}

inline json to_json(const DivisorClass& c)
{
    json q = json::array(), p = json::array();
    for (int i = 1; i <= c.h + 1; ++i) q.push_back(c.q(i));
    for (int j = 1; j <= c.k; ++j) p.push_back(c.p(j));
    return json{{"q", q}, {"p", p}};
}

inline json flat_json(const DivisorClass& c) { return json(c.coeffs); }

inline json to_json(const Monomial& m)
{
    // sorted cell list with multiplicities
    json out = json::array();
    size_t i = 0;
    const auto& cells = m.cells();
    while (i < cells.size()) {
        size_t j = i;
        while (j < cells.size() && cells[j] == cells[i]) ++j;
        out.push_back(json::array({cells[i].row, cells[i].col, j - i}));
        i = j;
    }
    return out;
}

inline json to_json(const MonomialIdeal& I)
{
    json gens = json::array();
    for (const Monomial& g : I.gens) gens.push_back(to_json(g));
    return json{{"generators", gens}};
}

inline json to_json(const ClassGroupMap& map)
{
    CornerData cd = corners(map.domain);
    json images = json::array();
    for (size_t idx = 0; idx < map.images.size(); ++idx) {
        std::string label = idx <= static_cast<size_t>(cd.h())
                                ? "q" + std::to_string(idx + 1)
                                : "p" + std::to_string(idx - static_cast<size_t>(cd.h()));
        images.push_back(json{{"basis", label}, {"image", to_json(map.images[idx])}});
    }
    json kernel = json::array();
    for (const auto& kb : map.kernel_basis) kernel.push_back(to_json(kb));
    return json{{"move", move_name(map.move)},
                {"domain", to_json(map.domain)},
                {"codomain", to_json(map.codomain)},
                {"images", images},
                {"kernel_basis", kernel}};
}

inline json to_json(const ClassificationResult& res)
{
    json out;
    out["status"] = status_name(res.status);
    if (res.status == ClassificationResult::Status::ExactSet) {
        json classes = json::array();
        for (const auto& c : res.classes) classes.push_back(flat_json(c));
        out["classes"] = classes;
        out["size"] = res.classes.size();
    }
    if (res.bound) out["bound"] = *res.bound;
    if (!res.reason.empty()) out["reason"] = res.reason;
    json trace = json::array();
    for (const auto& e : res.trace) trace.push_back(json{{"anchor", e.anchor}, {"data", e.data}});
    out["trace"] = trace;
    return out;
}

inline json to_json(const Candidate& c)
{
    json conds = json::array();
    for (const auto& sc : c.side_conditions)
        conds.push_back(json{{"description", sc.description}, {"satisfied", sc.satisfied}});
    return json{{"label", c.label},
                {"origin", c.origin},
                {"class", to_json(c.cls)},
                {"side_conditions", conds},
                {"live", c.live}};
}

} // namespace ladder
