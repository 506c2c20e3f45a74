#include "plcs/io.hpp"

#include "json.hpp"

namespace plcs {

using nlohmann::json;

std::string rational_to_string(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

Rat rational_from_string(const std::string& s) {
    auto parse_int = [](const std::string& t) {
        require(!t.empty() && t.find_first_not_of("-0123456789") == std::string::npos &&
                    (t[0] != '-' || t.size() > 1),
                "not an integer: '" + t + "'");
        return Int(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash)), q = parse_int(s.substr(slash + 1));
    require(q != 0, "zero denominator in '" + s + "'");
    return Rat(p, q);
}

namespace {

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

long extra_depth_of(const GSScheme& x, long branch) {
    long ess = x.tree.essential_count_on_branch(branch);
    return x.branches[(size_t)branch].depth - std::max(ess, 1L);
}

json scheme_json(const GSScheme& x) {
    json branches = json::array();
    for (size_t b = 0; b < x.branches.size(); ++b) {
        json terms = json::array();
        for (auto& [n, c] : x.branches[b].xi.terms)
            terms.push_back(json::array({n, rational_to_string(c)}));
        branches.push_back({{"den", x.branches[b].xi.den},
                            {"extra_depth", extra_depth_of(x, (long)b)},
                            {"terms", terms}});
    }
    return json{{"branches", branches}, {"centre", "origin"}};
}

GSScheme scheme_of_json(const json& j) {
    require(j.is_object() && j.contains("branches") && j["branches"].is_array(),
            "scheme object must have a 'branches' array");
    if (j.contains("centre")) require(j["centre"] == "origin", "only centre 'origin' is supported");
    std::vector<FractionalSeries> series;
    std::vector<long> extras;
    for (auto& b : j["branches"]) {
        require(b.is_object() && b.contains("den") && b["den"].is_number_integer(),
                "branch needs an integer 'den'");
        long den = b["den"].get<long>();
        require(den >= 1, "'den' must be >= 1");
        std::map<long, Rat> terms;
        if (b.contains("terms")) {
            require(b["terms"].is_array(), "'terms' must be an array of [num, coeff] pairs");
            for (auto& t : b["terms"]) {
                require(t.is_array() && t.size() == 2 && t[0].is_number_integer() &&
                            t[1].is_string(),
                        "term must be [integer numerator, \"p/q\" coefficient]");
                long n = t[0].get<long>();
                require(n >= 0 && !terms.count(n), "term numerators must be distinct and >= 0");
                terms[n] = rational_from_string(t[1].get<std::string>());
            }
        }
        long extra = 0;
        if (b.contains("extra_depth")) {
            require(b["extra_depth"].is_number_integer(), "'extra_depth' must be an integer");
            extra = b["extra_depth"].get<long>();
        }
        series.emplace_back(den, std::move(terms));
        extras.push_back(extra);
    }
    return build_scheme(series, extras);
}

json tree_json(const GSScheme& x) {
    json nodes = json::array();
    for (auto& n : x.tree.nodes) {
        if (!n.marked) continue;
        json branches = json::array();
        for (auto& [b, m] : n.branch_mult) branches.push_back(b);
        bool on_l = false;
        for (long mk : n.markers) on_l = on_l || mk == MARKER_Y;
        nodes.push_back({{"branches", branches},
                         {"essential", n.essential},
                         {"id", n.id},
                         {"m", n.m},
                         {"mhat", (std::int64_t)n.mhat},
                         {"onL", on_l},
                         {"parent", n.parent}});
    }
    return json{{"nodes", nodes}};
}

} // namespace

std::string scheme_to_json(const GSScheme& x) { return scheme_json(x).dump(); }

GSScheme scheme_from_json(const std::string& text) { return scheme_of_json(parse_or_throw(text)); }

std::vector<GSScheme> schemes_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    std::vector<GSScheme> out;
    if (j.is_array())
        for (auto& e : j) out.push_back(scheme_of_json(e));
    else
        out.push_back(scheme_of_json(j));
    return out;
}

std::string tree_to_json(const GSScheme& x) { return tree_json(x).dump(); }

std::string invariants_to_json(const GSScheme& x) {
    json j{{"deg", (std::int64_t)x.deg},   {"delta", (std::int64_t)x.delta},
           {"gs1", x.in_GS1},              {"mt", x.mt},
           {"mts", x.mt_s},                {"mu", (std::int64_t)x.mu},
           {"s", x.in_S},                  {"tree", tree_json(x)}};
    return j.dump();
}

std::string bound_report_to_json(const BoundReport& r) {
    json checks = json::array();
    for (auto& c : r.checks)
        checks.push_back({{"holds", c.holds},
                          {"label", c.label},
                          {"lhs", c.lhs},
                          {"note", c.note},
                          {"rhs", c.rhs}});
    json j{{"checks", checks},
           {"deg", (std::int64_t)r.deg},
           {"gs1", r.gs1},
           {"mt", r.mt},
           {"mts", r.mt_s},
           {"mu", (std::int64_t)r.mu},
           {"ordinary", r.ordinary},
           {"sigma", r.sigma_value}};
    return j.dump();
}

std::string cohomology_to_json(const Cohomology& c) {
    json j{{"ambient", c.ambient},
           {"h0", (std::int64_t)c.h0},
           {"h1", (std::int64_t)c.h1},
           {"rank", c.rank},
           {"rows", c.rows}};
    return j.dump();
}

std::string matrix_to_csv(const std::vector<std::vector<Rat>>& rows) {
    std::string out;
    for (auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += rational_to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

} // namespace plcs
