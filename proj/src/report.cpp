#include "circa/report.hpp"

#include "circa/errors.hpp"

namespace circa {

Json to_json(const Certificate& cert) {
    Json j;
    j["n"] = cert.row.size();
    j["row"] = cert.row.to_string();
    Json screen = Json::object();
    for (const auto& [d, value] : cert.screen.values) screen[std::to_string(d)] = format_rational(value);
    j["screen"] = std::move(screen);
    j["vanishing"] = cert.screen.vanishing;
    j["verdict"] = to_string(cert.verdict);
    j["decided_by"] = to_string(cert.path);
    if (cert.witness_d) j["witness_d"] = *cert.witness_d;
    if (cert.determinant) j["determinant"] = format_rational(*cert.determinant);
    return j;
}

Json conditions_to_json(std::uint64_t n, const std::vector<DivisorCondition>& conditions,
                        bool with_templates) {
    Json j;
    j["n"] = n;
    Json list = Json::array();
    for (const auto& c : conditions) list.push_back({{"d", c.d}, {"coeffs", c.coeffs}});
    j["conditions"] = std::move(list);
    if (with_templates) {
        if (auto cat = template_conditions(n)) {
            Json t;
            t["shape"] = to_string(cat->shape);
            Json conds = Json::array();
            for (const auto& c : cat->conditions) {
                Json e{{"d", c.d}, {"identity", c.identity}, {"coeffs", c.coeffs}};
                if (c.printed) {
                    e["printed_coeffs"] = *c.printed;
                    e["correction"] = c.correction;
                }
                conds.push_back(std::move(e));
            }
            t["conditions"] = std::move(conds);
            const TemplateMatchReport rep = templates_match_generic(n);
            t["matches"] = rep.matches;
            t["mismatches"] = rep.mismatches;
            t["printed_discrepancies"] = rep.printed_discrepancies;
            j["templates"] = std::move(t);
        } else {
            j["templates"] = nullptr;
        }
    }
    return j;
}

std::vector<DivisorCondition> conditions_from_json(const Json& doc) {
    try {
        const auto n = doc.at("n").get<std::uint64_t>();
        std::vector<DivisorCondition> out;
        for (const auto& e : doc.at("conditions")) {
            DivisorCondition c{n, e.at("d").get<std::uint64_t>(),
                               e.at("coeffs").get<std::vector<std::int64_t>>()};
            if (c.coeffs.size() != n) throw InvalidInput("coefficient vector length differs from n");
            out.push_back(std::move(c));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed condition catalog: ") + e.what());
    }
}

Json to_json(const ZeroOneReport& r) {
    Json j;
    j["n"] = r.n;
    j["ones"] = r.ones;
    j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
    j["tested"] = r.tested;
    j["singular"] = r.singular;
    j["nonsingular"] = r.nonsingular;
    j["decided_by_screen"] = r.decided_by_screen;
    j["guaranteed"] = r.guaranteed ? Json(*r.guaranteed) : Json(nullptr);
    j["consistent"] = r.consistent();
    j["first_singular"] = r.first_singular ? Json(*r.first_singular) : Json(nullptr);
    return j;
}

Json to_json(const TagGrid& grid) {
    Json j;
    j["primes"] = grid.primes;
    j["exponents"] = grid.exponents;
    Json cells = Json::array();
    for (std::size_t mi = 0; mi < grid.exponents.size(); ++mi) {
        for (std::size_t pi = 0; pi < grid.primes.size(); ++pi) {
            const TagSet& t = grid.cells[mi][pi];
            Json tags = Json::array();
            if (t.contains(FamilyTag::Diamond)) tags.push_back("diamond");
            if (t.contains(FamilyTag::Star)) tags.push_back("star");
            if (t.contains(FamilyTag::StarStar)) tags.push_back("star-star");
            cells.push_back({{"p", grid.primes[pi]}, {"m", grid.exponents[mi]}, {"tags", tags}});
        }
    }
    j["cells"] = std::move(cells);
    return j;
}

Json to_json(const std::vector<QuarterPrimePair>& pairs) {
    Json list = Json::array();
    for (const auto& p : pairs) {
        list.push_back({{"q", p.q}, {"p", p.p}, {"r", p.r}, {"r_mod_4", p.r % 4},
                        {"qualifies", p.qualifies}});
    }
    return list;
}

}  // namespace circa
