// Copyright 2026 The radpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "radpair/app/run_config.hpp"

#include <fstream>
#include <set>

#include "radpair/errors.hpp"

namespace radpair::app {

namespace {

using nlohmann::json;

double number(const json& doc, const char* key, double fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json& v = doc.at(key);
    if (!v.is_number())
        throw ConfigError(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

std::uint64_t count(const json& doc, const char* key, std::uint64_t fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json& v = doc.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw ConfigError(std::string("key '") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::string word(const json& doc, const char* key, const std::string& fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json& v = doc.at(key);
    if (!v.is_string())
        throw ConfigError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

[[noreturn]] void bad_choice(const char* key, const std::string& value)
{
    throw ConfigError(std::string("key '") + key + "' has unsupported value '" + value + "'");
}

} // namespace

RunConfig RunConfig::from_json(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    static const std::set<std::string> known = {"theory", "k_s",   "k_t",    "omega",
                                                "initial", "t_end", "dt",     "n_traj",
                                                "seed",    "recombination", "conditioning"};
    for (const auto& item : doc.items())
        if (!known.contains(item.key()))
            throw ConfigError("unknown key '" + item.key() + "'");

    RunConfig c;
    if (!doc.contains("theory"))
        throw ConfigError("missing required key 'theory'");
    const std::string theory = word(doc, "theory", "");
    if (theory == "kominis")
        c.theory = Theory::Kominis;
    else if (theory == "jones-hore")
        c.theory = Theory::JonesHore;
    else
        bad_choice("theory", theory);

    c.k_s = number(doc, "k_s", c.k_s);
    c.k_t = number(doc, "k_t", c.k_t);
    c.omega = number(doc, "omega", c.omega);
    c.t_end = number(doc, "t_end", c.t_end);
    c.dt = number(doc, "dt", c.dt);
    c.n_traj = count(doc, "n_traj", c.n_traj);
    c.seed = count(doc, "seed", c.seed);

    const std::string initial = word(doc, "initial", "coherent-st");
    if (initial == "coherent-st")
        c.initial = InitialState::CoherentST;
    else if (initial == "singlet")
        c.initial = InitialState::Singlet;
    else if (initial == "triplet")
        c.initial = InitialState::Triplet;
    else
        bad_choice("initial", initial);

    const std::string recombination = word(doc, "recombination", "off");
    if (recombination == "on")
        c.recombination = true;
    else if (recombination == "off")
        c.recombination = false;
    else
        bad_choice("recombination", recombination);

    const std::string conditioning = word(doc, "conditioning", "all");
    if (conditioning == "all")
        c.conditioning = Conditioning::All;
    else if (conditioning == "non-reacted")
        c.conditioning = Conditioning::NonReacted;
    else
        bad_choice("conditioning", conditioning);

    c.scenario().validate();
    return c;
}

RunConfig RunConfig::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
    return from_json(doc);
}

json RunConfig::to_json() const
{
    static const char* initial_names[] = {"coherent-st", "singlet", "triplet"};
    json doc;
    doc["theory"] = std::string(to_string(theory));
    doc["k_s"] = k_s;
    doc["k_t"] = k_t;
    doc["omega"] = omega;
    doc["initial"] = initial_names[static_cast<int>(initial)];
    doc["t_end"] = t_end;
    doc["dt"] = dt;
    doc["n_traj"] = n_traj;
    doc["seed"] = seed;
    doc["recombination"] = recombination ? "on" : "off";
    doc["conditioning"] = conditioning == Conditioning::All ? "all" : "non-reacted";
    return doc;
}

Scenario RunConfig::scenario() const
{
    Scenario s;
    s.space = st_space();
    s.theory = theory;
    s.hamiltonian = mixing_hamiltonian(s.space, omega);
    s.k_s = k_s;
    s.k_t = k_t;
    switch (initial) {
    case InitialState::CoherentST:
        s.psi0 = coherent_st_state(s.space);
        break;
    case InitialState::Singlet:
        s.psi0 = singlet_state(s.space);
        break;
    case InitialState::Triplet:
        s.psi0 = triplet_state(s.space);
        break;
    }
    s.rho0 = s.psi0->density();
    s.t_end = t_end;
    s.dt = dt;
    return s;
}

EnsembleConfig RunConfig::ensemble() const
{
    EnsembleConfig e;
    e.scenario = scenario();
    e.n_traj = n_traj;
    e.master_seed = seed;
    e.recombination_enabled = recombination;
    return e;
}

} // namespace radpair::app
