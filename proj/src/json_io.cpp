#include "wcm/json_io.hpp"

#include <istream>
#include <sstream>

namespace wcm {

namespace {

Json set_json(const LabelSet& s) {
    return Json(s.elems);
}

LabelSet set_from_json(const Json& j, int n) {
    return LabelSet(n, j.get<std::vector<int>>());
}

} // namespace

Json web_to_json(const Rank1Web& w) {
    return Json{{"kind", "rank1"}, {"k", w.k}, {"n", w.n}, {"leaves", set_json(w.leaves)}};
}

Json web_to_json(const Rank2Web& w) {
    return Json{{"kind", "rank2"}, {"k", w.k},           {"n", w.n},
                {"R", set_json(w.R)}, {"S", set_json(w.S)}, {"T", set_json(w.T)},
                {"V", set_json(w.V)}};
}

Json web_to_json(const TripodWeb& w) {
    return Json{{"kind", "tripod"}, {"k", w.k}, {"n", w.n},
                {"L1", w.L1},       {"L2", w.L2}, {"L3", w.L3}};
}

Json web_to_json(const Web& w) {
    return std::visit([](const auto& v) { return web_to_json(v); }, w);
}

Web web_from_json(const Json& j) {
    require(j.is_object() && j.contains("kind"), errc::io, "web json needs a kind field");
    std::string kind = j.at("kind");
    int k = j.at("k"), n = j.at("n");
    if (kind == "rank1")
        return make_rank1_web(k, n, set_from_json(j.at("leaves"), n));
    if (kind == "rank2")
        return make_rank2_web(k, n, set_from_json(j.at("R"), n), set_from_json(j.at("S"), n),
                              set_from_json(j.at("T"), n), set_from_json(j.at("V"), n));
    if (kind == "tripod")
        return TripodWeb{k, n, j.at("L1").get<std::vector<int>>(),
                         j.at("L2").get<std::vector<int>>(), j.at("L3").get<std::vector<int>>()};
    fail(errc::io, "unknown web kind: " + kind);
}

Json profile_to_json(const Rank2Profile& p) {
    return Json{{"n", p.n}, {"top", p.top}, {"bottom", p.bottom}, {"compact", p.compact()}};
}

Rank2Profile profile_from_json(const Json& j) {
    return make_rank2_profile(j.at("n"), j.at("top"), j.at("bottom"));
}

namespace {

Json polymat_json(const PolyMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json module_to_json(const ExplicitModule& m) {
    Json x = Json::array(), y = Json::array();
    for (int p = 0; p < m.spec.n; ++p) {
        x.push_back(polymat_json(m.x[p]));
        y.push_back(polymat_json(m.y[p]));
    }
    return Json{{"k", m.spec.k}, {"n", m.spec.n}, {"N", m.N},
                {"rank", m.r},   {"x", x},        {"y", y}};
}

Json identity_report_to_json(const IdentityReport& r) {
    return Json{{"name", r.name},
                {"ok", r.ok},
                {"samples", r.samples},
                {"signs", r.signs},
                {"message", r.message}};
}

Json suite_report_to_json(const SuiteReport& r) {
    Json items = Json::array();
    for (const auto& id : r.identities)
        items.push_back(identity_report_to_json(id));
    return Json{{"ok", r.ok}, {"identities", items}};
}

Json ses_report_to_json(const SesReport& r) {
    Json j{{"name", r.name},   {"ok", r.ok},          {"message", r.message},
           {"hom_dim", r.hom_dim}, {"dims_ok", r.dims_ok}};
    if (r.ok) {
        Json coeffs = Json::array();
        for (const Rat& c : r.f_coeffs)
            coeffs.push_back(rat_str(c));
        j["f_coeffs"] = coeffs;
        Json f = Json::array(), proj = Json::array(), iso = Json::array();
        for (const PolyMat& m : r.f)
            f.push_back(polymat_json(m));
        for (const PolyMat& m : r.proj)
            proj.push_back(polymat_json(m));
        for (const PolyMat& m : r.iso)
            iso.push_back(polymat_json(m));
        j["f"] = f;
        j["coker_projection"] = proj;
        j["iso"] = iso;
    }
    return j;
}

Json ses_case_to_json(const SesCaseReport& r) {
    return Json{{"name", r.name},
                {"ok", r.ok},
                {"base", ses_report_to_json(r.base)},
                {"stability", ses_report_to_json(r.stable)}};
}

Json ses_suite_to_json(const SesSuiteReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases)
        cases.push_back(ses_case_to_json(c));
    return Json{{"ok", r.ok}, {"cases", cases}};
}

GrassPoint read_point_tsv(std::istream& in) {
    std::vector<std::vector<Rat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok)
            row.push_back(parse_rat(tok));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    require(!rows.empty(), errc::io, "empty point matrix");
    int k = static_cast<int>(rows.size());
    int n = static_cast<int>(rows[0].size());
    QMatrix m(k, n);
    for (int i = 0; i < k; ++i) {
        require(static_cast<int>(rows[i].size()) == n, errc::io, "ragged point matrix");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = rows[i][j];
    }
    return make_grass_point(k, n, std::move(m));
}

FunctionExpr read_expr_file(std::istream& in) {
    FunctionExpr e;
    bool first = true;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : line) {
            if (ch == ';') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        require(parts.size() >= 2, errc::io, "expression line needs 'coef; web-json; ...'");
        Rat coef = parse_rat([&] {
            std::string s = parts[0];
            s.erase(remove_if(s.begin(), s.end(), ::isspace), s.end());
            return s;
        }());
        std::vector<Web> factors;
        for (size_t i = 1; i < parts.size(); ++i)
            factors.push_back(web_from_json(Json::parse(parts[i])));
        if (first) {
            require(!factors.empty(), errc::io, "expression term needs at least one web");
            e = FunctionExpr(web_k(factors[0]), web_n(factors[0]));
            first = false;
        }
        e.add_term(coef, std::move(factors));
    }
    require(!first, errc::io, "empty expression file");
    return e;
}

} // namespace wcm
