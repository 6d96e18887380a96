// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The dofregion Authors
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

#include "dofregion/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dofregion/version.hpp"

namespace dofregion
{

namespace
{

using Json = nlohmann::ordered_json;

// Shortest round-trip representation, stable across runs.
std::string num(double x)
{
    x += 0.0; // no "-0"
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision)
    {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x)
            break;
    }
    return buf;
}

Json provenance_json(const Provenance& p)
{
    Json j;
    j["tool"] = "dofregion";
    j["version"] = version;
    j["command"] = p.command;
    j["seed"] = p.seed;
    j["trials"] = p.trials;
    if (!p.law.empty())
    {
        j["law"] = p.law;
        j["coherence_t"] = p.coherence_t;
    }
    return j;
}

std::string provenance_line(const Provenance& p)
{
    std::string line = std::string("# dofregion ") + version + " command=" + p.command +
                       " seed=" + std::to_string(p.seed) + " trials=" + std::to_string(p.trials);
    if (!p.law.empty())
        line += " law=" + p.law + " coherence_t=" + std::to_string(p.coherence_t);
    return line + "\n";
}

Json config_json(const AntennaConfig& c)
{
    return Json{{"m1", c.m1}, {"n1", c.n1}, {"m2", c.m2}, {"n2", c.n2}};
}

Json region_body(const DofRegion& r)
{
    Json j;
    j["config"] = config_json(r.config);
    j["case"] = to_string(r.case_label);
    j["swapped"] = r.swapped;
    j["L"] = r.l_value;
    j["mu"] = r.tradeoff_slope ? Json(*r.tradeoff_slope) : Json(nullptr);
    Json hp = Json::array();
    for (const auto& h : r.halfplanes)
        hp.push_back(Json{{"a1", h.a1 + 0.0}, {"a2", h.a2 + 0.0}, {"b", h.b + 0.0}});
    j["halfplanes"] = hp;
    Json vs = Json::array();
    for (const auto& v : r.vertices)
        vs.push_back(Json::array({v.d1 + 0.0, v.d2 + 0.0}));
    j["vertices"] = vs;
    return j;
}

Json estimate_json(const Estimate& e)
{
    return Json{{"mean_bits", e.mean}, {"std_err", e.std_err}, {"trials", e.trials}};
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

// Quotes a CSV field when it contains a separator or a quote.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

double parse_double(const std::string& s, std::size_t line_no)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(s, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": '" + s + "' is not a number");
    return v;
}

} // namespace

std::string region_json(const DofRegion& exact, const DofRegion& previous, const Provenance& prov)
{
    Json j = region_body(exact);
    j["previous_outer_bound"] = Json{{"halfplanes", region_body(previous)["halfplanes"]},
                                     {"vertices", region_body(previous)["vertices"]}};
    j["provenance"] = provenance_json(prov);
    return dump(j);
}

std::string boundary_csv(const DofRegion& exact, const DofRegion& previous, const Provenance& prov, double step)
{
    std::string out = provenance_line(prov) + "region,d1,d2\n";
    for (const auto& [name, r] : {std::pair<const char*, const DofRegion*>{"exact", &exact}, {"previous", &previous}})
        for (const auto& p : sample_boundary(*r, step))
            out += std::string(name) + "," + num(p.d1) + "," + num(p.d2) + "\n";
    return out;
}

std::string sweep_csv(std::span<const SweepRow> rows, const Provenance& prov)
{
    std::string out = provenance_line(prov) + "gamma_db,quantity,mean_bits,std_err,trials,seed\n";
    for (const auto& r : rows)
        out += num(r.gamma_db) + "," + r.quantity + "," + num(r.value.mean) + "," + num(r.value.std_err) + "," +
               std::to_string(r.value.trials) + "," + std::to_string(prov.seed) + "\n";
    return out;
}

std::string sweep_json(std::span<const SweepRow> rows, const Provenance& prov)
{
    Json arr = Json::array();
    for (const auto& r : rows)
    {
        Json j{{"gamma_db", r.gamma_db}, {"quantity", r.quantity}};
        j.update(estimate_json(r.value));
        arr.push_back(j);
    }
    return dump(Json{{"rows", arr}, {"provenance", provenance_json(prov)}});
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in, std::uint64_t* seed)
{
    std::vector<SweepRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::map<std::string, std::size_t> col;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        const auto fields = split(line, ',');
        if (!header_seen)
        {
            for (std::size_t i = 0; i < fields.size(); ++i)
                col[fields[i]] = i;
            for (const char* need : {"gamma_db", "quantity", "mean_bits", "std_err", "trials"})
                if (!col.contains(need))
                    throw std::runtime_error(std::string("sweep CSV header lacks column '") + need + "'");
            header_seen = true;
            continue;
        }
        if (fields.size() < col.size())
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + std::to_string(col.size()) +
                                     " fields");
        SweepRow r;
        r.gamma_db = parse_double(fields[col["gamma_db"]], line_no);
        r.quantity = fields[col["quantity"]];
        r.value.mean = parse_double(fields[col["mean_bits"]], line_no);
        r.value.std_err = parse_double(fields[col["std_err"]], line_no);
        r.value.trials = static_cast<std::size_t>(parse_double(fields[col["trials"]], line_no));
        if (seed != nullptr && col.contains("seed"))
        {
            try
            {
                *seed = std::stoull(fields[col["seed"]]);
            }
            catch (const std::exception&)
            {
                throw std::runtime_error("line " + std::to_string(line_no) + ": bad seed");
            }
        }
        rows.push_back(std::move(r));
    }
    if (!header_seen)
        throw std::runtime_error("sweep CSV has no header row");
    return rows;
}

std::vector<std::pair<std::string, double>> sweep_slopes(std::span<const SweepRow> rows)
{
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> curves;
    for (const auto& r : rows)
    {
        if (!curves.contains(r.quantity))
            order.push_back(r.quantity);
        curves[r.quantity].emplace_back(db_to_linear(r.gamma_db), r.value.mean);
    }
    std::vector<std::pair<std::string, double>> out;
    for (const auto& q : order)
        out.emplace_back(q, dof_slope(curves[q]));
    return out;
}

std::string slopes_csv(std::span<const std::pair<std::string, double>> slopes, const Provenance& prov)
{
    std::string out = provenance_line(prov) + "quantity,slope\n";
    for (const auto& [q, s] : slopes)
        out += csv_field(q) + "," + num(s) + "\n";
    return out;
}

std::string slopes_json(std::span<const std::pair<std::string, double>> slopes, const Provenance& prov)
{
    Json arr = Json::array();
    for (const auto& [q, s] : slopes)
        arr.push_back(Json{{"quantity", q}, {"slope", s}});
    return dump(Json{{"slopes", arr}, {"provenance", provenance_json(prov)}});
}

namespace
{

bool on_hull(const AchievableRegion& ar, const OperatingPoint& p)
{
    return std::any_of(ar.hull.begin(), ar.hull.end(), [&](RatePair h) {
        return std::abs(h.r1 - p.r1.mean) < 1e-12 && std::abs(h.r2 - p.r2.mean) < 1e-12;
    });
}

} // namespace

std::string achievable_json(std::span<const AchievableRegion> regions, std::span<const double> gammas_db,
                            const Provenance& prov)
{
    Json arr = Json::array();
    for (std::size_t k = 0; k < regions.size(); ++k)
    {
        const auto& ar = regions[k];
        Json pts = Json::array();
        for (const auto& p : ar.points)
            pts.push_back(Json{{"label", p.label},
                               {"r1", estimate_json(p.r1)},
                               {"r2", estimate_json(p.r2)},
                               {"on_hull", on_hull(ar, p)}});
        Json hull = Json::array();
        for (const auto& h : ar.hull)
            hull.push_back(Json::array({h.r1, h.r2}));
        auto mac = [](const MacPentagon& m) {
            return Json{{"receiver", m.receiver},
                        {"r1", estimate_json(m.r1)},
                        {"r2", estimate_json(m.r2)},
                        {"sum", estimate_json(m.sum)}};
        };
        arr.push_back(Json{{"gamma_db", gammas_db[k]},
                           {"points", pts},
                           {"hull", hull},
                           {"mac1", mac(ar.mac1)},
                           {"mac2", mac(ar.mac2)}});
    }
    return dump(Json{{"regions", arr}, {"provenance", provenance_json(prov)}});
}

std::string achievable_csv(std::span<const AchievableRegion> regions, std::span<const double> gammas_db,
                           const Provenance& prov)
{
    std::string out = provenance_line(prov) + "gamma_db,label,r1,r1_std_err,r2,r2_std_err,on_hull\n";
    for (std::size_t k = 0; k < regions.size(); ++k)
        for (const auto& p : regions[k].points)
            out += num(gammas_db[k]) + "," + p.label + "," + num(p.r1.mean) + "," + num(p.r1.std_err) + "," +
                   num(p.r2.mean) + "," + num(p.r2.std_err) + "," + (on_hull(regions[k], p) ? "1" : "0") + "\n";
    return out;
}

std::string reports_json(std::span<const SuiteReport> reports, const Provenance& prov)
{
    Json arr = Json::array();
    bool all = true;
    for (const auto& r : reports)
    {
        Json checks = Json::array();
        for (const auto& c : r.checks)
            checks.push_back(Json{{"description", c.description},
                                  {"observed", c.observed},
                                  {"bound_or_target", c.bound_or_target},
                                  {"margin", c.margin},
                                  {"pass", c.pass}});
        arr.push_back(Json{{"suite_name", r.suite_name},
                           {"seed", r.seed},
                           {"trials", r.trials},
                           {"passed", r.passed()},
                           {"checks", checks}});
        all = all && r.passed();
    }
    return dump(Json{{"passed", all}, {"suites", arr}, {"provenance", provenance_json(prov)}});
}

std::string reports_csv(std::span<const SuiteReport> reports, const Provenance& prov)
{
    std::string out = provenance_line(prov) + "suite,description,observed,bound_or_target,margin,pass\n";
    for (const auto& r : reports)
        for (const auto& c : r.checks)
        {
            out += csv_field(r.suite_name) + "," + csv_field(c.description) + "," + num(c.observed) + "," + num(c.bound_or_target) + "," +
                   num(c.margin) + "," + (c.pass ? "1" : "0") + "\n";
        }
    return out;
}

} // namespace dofregion
