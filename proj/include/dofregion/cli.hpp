// SPDX-License-Identifier: Apache-2.0
//
// dofregion: exact DoF regions of the two-user MIMO broadcast channel
// Copyright (C) 2026 dofregion authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DOFREGION_CLI_HPP
#define DOFREGION_CLI_HPP

#include <dofregion/analysis.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dofregion::cli
{

using Json = nlohmann::ordered_json;

// A failure attributable to one command-line argument
class UsageError : public std::runtime_error
{
public:
    UsageError(const std::string &arg, const std::string &what) : std::runtime_error(arg + ": " + what) {}
};

// Decimal companion of an exact value; approximate renderings start with '~'
inline std::string decimal_text(const Rational &r)
{
    auto [text, exact] = r.decimal();
    return exact ? text : "~" + text;
}

// Sets obj[key] to "p/q" and obj[key + "_decimal"] to its decimal rendering
inline void put(Json &obj, const std::string &key, const Rational &r)
{
    obj[key] = r.str();
    obj[key + "_decimal"] = decimal_text(r);
}

inline void put(Json &obj, const std::string &key, const DofPoint &p)
{
    obj[key] = Json::array({p.d1.str(), p.d2.str(), p.d0.str()});
    obj[key + "_decimal"] = Json::array({decimal_text(p.d1), decimal_text(p.d2), decimal_text(p.d0)});
}

inline Json halfspaces_json(const Polytope &p)
{
    Json out = Json::array();
    for (const auto &h : p.halfspaces)
    {
        Json j;
        j["label"] = h.label;
        j["coefficients"] = Json::array({h.a1.str(), h.a2.str(), h.a0.str()});
        j["coefficients_decimal"] = Json::array({decimal_text(h.a1), decimal_text(h.a2), decimal_text(h.a0)});
        put(j, "bound", h.b);
        j["text"] = h.str();
        out.push_back(j);
    }
    return out;
}

inline void put_vertices(Json &obj, const std::vector<DofPoint> &vertices)
{
    Json exact = Json::array(), approx = Json::array();
    for (const auto &v : vertices)
    {
        Json j;
        put(j, "v", v);
        exact.push_back(j["v"]);
        approx.push_back(j["v_decimal"]);
    }
    obj["vertices"] = exact;
    obj["vertices_decimal"] = approx;
}

// Corner points are reported in the user's receiver order
inline Json corners_json(const std::vector<CornerPoint> &corners, const NormalizedConfig *n)
{
    Json out = Json::array();
    for (const auto &c : corners)
    {
        Json j;
        j["label"] = c.label;
        j["exists"] = c.exists;
        if (c.point)
            put(j, "point", n ? n->to_original(*c.point) : *c.point);
        else
            j["point"] = nullptr;
        j["condition"] = c.condition;
        j["faces"] = Json::array({c.faces[0], c.faces[1], c.faces[2]});
        out.push_back(j);
    }
    return out;
}

inline Json allocation_json(const PowerAllocation &a)
{
    Json j;
    put(j, "A1", a.A1);
    put(j, "A2", a.A2);
    return j;
}

inline Json audit_json(const AuditReport &r)
{
    Json j;
    j["name"] = r.name;
    j["passed"] = r.passed();
    j["mismatches"] = Json::array();
    for (const auto &m : r.mismatches)
        j["mismatches"].push_back({{"subject", m.subject}, {"expected", m.expected}, {"actual", m.actual}});
    return j;
}

inline std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

struct Options
{
    int m = 0, n1 = 0, n2 = 0;
    std::string alpha1, alpha2, model = "imperfect", grid_step = "1/20", output, format = "json", label;
};

inline Rational parse_alpha(const std::string &text, const std::string &flag)
{
    Rational r;
    try
    {
        r = Rational::parse(text);
    }
    catch (const std::exception &e)
    {
        throw UsageError(flag, e.what());
    }
    if (r < 0 || r > 1)
        throw UsageError(flag, r.str() + " lies outside [0, 1]");
    return r;
}

inline AntennaConfig parse_config(const Options &o)
{
    for (auto [v, flag] : {std::pair{o.m, "--m"}, {o.n1, "--n1"}, {o.n2, "--n2"}})
        if (v < 1)
            throw UsageError(flag, "antenna count must be a positive integer, got " + std::to_string(v));
    return AntennaConfig(o.m, o.n1, o.n2);
}

inline CsitQuality parse_csit(const Options &o)
{
    return CsitQuality(parse_alpha(o.alpha1, "--alpha1"), parse_alpha(o.alpha2, "--alpha2"));
}

inline Json header(const std::string &command, const AntennaConfig &c, const CsitQuality *q)
{
    Json j;
    j["command"] = command;
    Json cfg;
    cfg["m"] = c.m;
    cfg["n1"] = c.n1;
    cfg["n2"] = c.n2;
    if (q)
    {
        put(cfg, "alpha1", q->alpha1);
        put(cfg, "alpha2", q->alpha2);
    }
    j["config"] = cfg;
    if (q)
    {
        auto [n, nq] = normalize(c, *q);
        Json nj;
        nj["m"] = n.m;
        nj["n1"] = n.n1;
        nj["n2"] = n.n2;
        nj["receivers_swapped"] = n.receivers_swapped;
        put(nj, "alpha1", nq.alpha1);
        put(nj, "alpha2", nq.alpha2);
        nj["case"] = to_string(classify_case(n, nq));
        if (n.degenerate())
            nj["alpha0"] = nullptr;
        else
            put(nj, "alpha0", alpha0(n, nq));
        j["normalized"] = nj;
    }
    return j;
}

// Output of one command: a JSON document and the equivalent CSV table
struct Result
{
    Json json;
    std::vector<std::vector<std::string>> table;
    int status = 0;
};

inline void vertex_table(Result &r, const std::vector<DofPoint> &vertices)
{
    r.table.push_back({"d1", "d2", "d0"});
    for (const auto &v : vertices)
        r.table.push_back({v.d1.str(), v.d2.str(), v.d0.str()});
}

inline Result cmd_region(const Options &o, bool delayed)
{
    const AntennaConfig c = parse_config(o);
    const CsitQuality q = parse_csit(o);
    if (o.model != "imperfect" && o.model != "delayed")
        throw UsageError("--model", "expected 'imperfect' or 'delayed', got '" + o.model + "'");
    delayed = delayed || o.model == "delayed";

    Result r;
    r.json = header(delayed ? "delayed" : "region", c, &q);
    r.json["model"] = delayed ? "delayed" : "imperfect";
    const Polytope p = delayed ? region_delayed(c, q) : region_theorem1(c, q);
    const auto vertices = enumerate_vertices(p);
    r.json["halfspaces"] = halfspaces_json(p);
    put_vertices(r.json, vertices);
    if (delayed)
        r.json["corners"] = corners_json(delayed_corners(c, q), nullptr);
    vertex_table(r, vertices);
    return r;
}

inline Result cmd_corners(const Options &o)
{
    const AntennaConfig c = parse_config(o);
    const CsitQuality q = parse_csit(o);
    auto [n, nq] = normalize(c, q);
    const auto catalog = corner_catalog(n, nq);

    Result r;
    r.json = header("corners", c, &q);
    r.json["model"] = "imperfect";
    r.json["corners"] = corners_json(catalog, &n);
    r.table.push_back({"label", "exists", "d1", "d2", "d0", "condition"});
    for (const auto &cp : catalog)
    {
        std::vector<std::string> row{cp.label, cp.exists ? "true" : "false", "", "", ""};
        if (cp.point)
        {
            const DofPoint p = n.to_original(*cp.point);
            row[2] = p.d1.str(), row[3] = p.d2.str(), row[4] = p.d0.str();
        }
        row.push_back(cp.condition);
        r.table.push_back(row);
    }
    return r;
}

inline Result cmd_recipe(const Options &o)
{
    const AntennaConfig c = parse_config(o);
    const CsitQuality q = parse_csit(o);
    if (o.label.empty())
        throw UsageError("--label", "a corner label is required");
    auto [n, nq] = normalize(c, q);

    Recipe rec;
    try
    {
        rec = recipe_for_corner(o.label, n, nq);
    }
    catch (const std::invalid_argument &e)
    {
        throw UsageError("--label", e.what());
    }
    const DofPoint achieved = n.to_original(evaluate_recipe(rec, n, nq));
    const AchievabilityBounds b = recipe_bounds(rec, n, nq);

    Json j;
    j["label"] = o.label;
    j["mode"] = rec.mode() == RecipeMode::Single ? "single" : "space-time";
    if (const auto *a = std::get_if<PowerAllocation>(&rec.allocation))
        j["allocation"] = allocation_json(*a);
    else
    {
        const auto &st = std::get<SpaceTimeAllocation>(rec.allocation);
        Json sj;
        put(sj, "rho", st.rho);
        sj["phase1"] = allocation_json(st.phase1);
        sj["phase2"] = allocation_json(st.phase2);
        j["allocation"] = sj;
    }
    put(j, "d0", rec.d0);
    put(j, "dc_to_user1", rec.dc_to_user1);
    put(j, "dc_to_user2", rec.dc_to_user2);
    Json bj;
    put(bj, "dc1", b.dc1);
    put(bj, "dc2", b.dc2);
    put(bj, "dp1_max", b.dp1_max);
    put(bj, "dp2_max", b.dp2_max);
    j["bounds"] = bj;
    put(j, "achieved", achieved);

    Result r;
    r.json = header("recipe", c, &q);
    r.json["model"] = "imperfect";
    r.json["recipe"] = j;
    r.table.push_back({"label", "mode", "d0", "dc_to_user1", "dc_to_user2", "d1", "d2", "d0_achieved"});
    r.table.push_back({o.label, j["mode"].get<std::string>(), rec.d0.str(), rec.dc_to_user1.str(), rec.dc_to_user2.str(),
                       achieved.d1.str(), achieved.d2.str(), achieved.d0.str()});
    return r;
}

inline Result cmd_sumdof(const Options &o)
{
    const AntennaConfig c = parse_config(o);
    const CsitQuality q = parse_csit(o);
    auto [n, nq] = normalize(c, q);
    const Rational formula = sum_dof_formula(n, nq), lp = sum_dof_lp(c, q), priv = sum_dof_private(c, q);

    Result r;
    r.json = header("sumdof", c, &q);
    r.json["model"] = "imperfect";
    put(r.json, "formula", formula);
    put(r.json, "lp", lp);
    put(r.json, "private_only", priv);
    r.json["case"] = to_string(classify_case(n, nq));
    r.table.push_back({"case", "formula", "lp", "private_only"});
    r.table.push_back({to_string(classify_case(n, nq)), formula.str(), lp.str(), priv.str()});
    return r;
}

inline Result cmd_audit(const Options &o)
{
    const AntennaConfig c = parse_config(o);
    const CsitQuality q = parse_csit(o);
    Result r;
    r.json = header("audit", c, &q);
    r.json["model"] = "imperfect";
    r.json["audits"] = Json::array();
    r.table.push_back({"audit", "passed", "mismatches"});
    for (const auto &a : run_audits(c, q))
    {
        r.json["audits"].push_back(audit_json(a));
        r.table.push_back({a.name, a.passed() ? "true" : "false", std::to_string(a.mismatches.size())});
        if (!a.passed())
            r.status = 2;
    }
    return r;
}

inline Result cmd_sweep(const Options &o)
{
    const AntennaConfig c = parse_config(o);
    Rational step;
    try
    {
        step = Rational::parse(o.grid_step);
    }
    catch (const std::exception &e)
    {
        throw UsageError("--grid-step", e.what());
    }
    std::vector<CsitQuality> grid;
    try
    {
        grid = uniform_grid(step);
    }
    catch (const std::invalid_argument &e)
    {
        throw UsageError("--grid-step", e.what());
    }

    Result r;
    r.json = header("sweep", c, nullptr);
    r.json["model"] = "imperfect";
    put(r.json, "grid_step", step);
    r.json["rows"] = Json::array();
    r.table.push_back({"alpha1", "alpha2", "case", "sum_dof", "sum_dof_lp", "corner_count", "audits_passed",
                       "delayed_contained"});
    for (const auto &row : sweep(c, grid))
    {
        Json j;
        put(j, "alpha1", row.alpha1);
        put(j, "alpha2", row.alpha2);
        j["case"] = to_string(row.which);
        put(j, "sum_dof", row.sum_dof_formula);
        put(j, "sum_dof_lp", row.sum_dof_lp);
        j["corner_count"] = row.corner_count;
        j["audits_passed"] = row.audits_passed;
        j["delayed_contained"] = row.delayed_contained;
        r.json["rows"].push_back(j);
        r.table.push_back({row.alpha1.str(), row.alpha2.str(), to_string(row.which), row.sum_dof_formula.str(),
                           row.sum_dof_lp.str(), std::to_string(row.corner_count),
                           row.audits_passed ? "true" : "false", row.delayed_contained ? "true" : "false"});
    }
    return r;
}

inline void write_result(const Result &r, const std::string &format, std::ostream &os)
{
    if (format == "json")
    {
        os << r.json.dump(2) << "\n";
        return;
    }
    for (const auto &row : r.table)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_quote(row[i]);
        os << "\n";
    }
}

// Exit status: 0 success, 1 usage error, 2 some audit reported a mismatch
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact DoF regions of the two-user MIMO broadcast channel with hybrid messages"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App *sub, bool needs_alpha)
    {
        sub->add_option("--m", o.m, "transmit antennas M")->required();
        sub->add_option("--n1", o.n1, "antennas at receiver 1")->required();
        sub->add_option("--n2", o.n2, "antennas at receiver 2")->required();
        if (needs_alpha)
        {
            sub->add_option("--alpha1", o.alpha1, "CSIT quality toward receiver 1 (p/q or decimal)")->required();
            sub->add_option("--alpha2", o.alpha2, "CSIT quality toward receiver 2 (p/q or decimal)")->required();
        }
        sub->add_option("--output", o.output, "write to this file instead of standard output");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *region = app.add_subcommand("region", "halfspaces and vertices of the DoF region");
    common(region, true);
    region->add_option("--model", o.model, "imperfect or delayed");
    auto *corners = app.add_subcommand("corners", "labeled corner catalog with existence verdicts");
    common(corners, true);
    auto *recipe = app.add_subcommand("recipe", "power exponents and multicast split reaching a corner");
    common(recipe, true);
    recipe->add_option("--label", o.label, "corner label, e.g. P123")->required();
    auto *sumdof = app.add_subcommand("sumdof", "closed-form and LP sum-DoF");
    common(sumdof, true);
    auto *delayed = app.add_subcommand("delayed", "delayed-CSIT region and corners");
    common(delayed, true);
    auto *audit = app.add_subcommand("audit", "run every audit at one parameter point");
    common(audit, true);
    auto *sweep_cmd = app.add_subcommand("sweep", "audit a uniform grid of CSIT qualities");
    common(sweep_cmd, false);
    sweep_cmd->add_option("--grid-step", o.grid_step, "grid spacing dividing 1, e.g. 1/20");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        std::string msg = e.what();
        if (msg.empty())
            msg = "invalid arguments";
        err << "error: " << msg.substr(0, msg.find('\n')) << "\n";
        return 1;
    }

    Result r;
    try
    {
        if (region->parsed())
            r = cmd_region(o, false);
        else if (corners->parsed())
            r = cmd_corners(o);
        else if (recipe->parsed())
            r = cmd_recipe(o);
        else if (sumdof->parsed())
            r = cmd_sumdof(o);
        else if (delayed->parsed())
            r = cmd_region(o, true);
        else if (audit->parsed())
            r = cmd_audit(o);
        else
            r = cmd_sweep(o);
    }
    catch (const UsageError &e)
    {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (o.output.empty())
        write_result(r, o.format, out);
    else
    {
        std::ofstream file(o.output);
        if (!file)
        {
            err << "error: --output: cannot open '" << o.output << "' for writing\n";
            return 1;
        }
        write_result(r, o.format, file);
    }
    return r.status;
}

} // namespace dofregion::cli

#endif
