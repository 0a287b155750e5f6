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

#include "radpair/app/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "radpair/app/csv.hpp"
#include "radpair/ensemble.hpp"
#include "radpair/errors.hpp"

namespace radpair::app {

namespace {

namespace fs = std::filesystem;

int guarded(std::ostream& err, const std::function<void()>& body)
{
    try {
        body();
        return kOk;
    } catch (const ConfigError& e) {
        err << "config: " << e.what() << '\n';
        return kConfigError;
    } catch (const EnsembleError& e) {
        err << "ensemble: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalError& e) {
        err << "numeric: " << e.what() << '\n';
        return kNumericError;
    }
}

std::ofstream open_output(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file '" + path.string() + "'");
    return out;
}

template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write)
{
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file = open_output(path);
    write(file);
}

std::string default_events_path(const std::string& out)
{
    if (out.empty())
        return "events.csv";
    const std::string suffix = ".csv";
    if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
        return out.substr(0, out.size() - suffix.size()) + ".events.csv";
    return out + ".events.csv";
}

bool info_gain_applies(const RunConfig& config, bool ensemble)
{
    if (config.theory != Theory::JonesHore)
        return false;
    return !ensemble || config.conditioning == Conditioning::All;
}

// Per-step observables of a single trajectory (dead states read as zero).
std::vector<DiagnosticRow> trajectory_rows(const Trajectory& traj, const SpinSpace& space)
{
    std::vector<DiagnosticRow> rows(traj.times.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const BasicObservables b = basic_observables(traj.states[i].density(), space);
        rows[i].t = traj.times[i];
        rows[i].qs = b.qs;
        rows[i].qt = b.qt;
        rows[i].trace = b.trace;
        rows[i].purity = b.purity;
    }
    return rows;
}

using EventPredicate = std::function<bool(const std::vector<TrajectoryEvent>&)>;

std::size_t find_trajectory(const EnsembleConfig& config, const EventPredicate& wanted,
                            const char* what)
{
    for (std::size_t index = 0; index < config.n_traj; ++index)
        if (wanted(run_trajectory(config, index).events))
            return index;
    throw NumericalError(config.scenario.t_end,
                         std::string("no trajectory matching '") + what + "' within the search range");
}

bool kinds_are(const std::vector<TrajectoryEvent>& events, std::initializer_list<EventKind> kinds)
{
    if (events.size() != kinds.size())
        return false;
    std::size_t i = 0;
    for (EventKind k : kinds)
        if (events[i++].kind != k)
            return false;
    return true;
}

class FigureWriter {
public:
    FigureWriter(fs::path dir, std::ostream& log, bool quiet) : dir_(std::move(dir)), log_(log), quiet_(quiet)
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec)
            throw ConfigError("cannot create output directory '" + dir_.string() + "'");
    }

    void panel(const std::string& name, const std::vector<DiagnosticRow>& rows,
               const std::vector<std::string>& columns)
    {
        std::ofstream out = open_output(dir_ / name);
        write_rows(out, rows, columns);
        note(name);
    }

    template <class RowFn>
    void table(const std::string& name, std::string_view header, std::size_t n_rows, RowFn&& row)
    {
        std::ofstream out = open_output(dir_ / name);
        out << header << '\n';
        for (std::size_t i : decimate(n_rows)) {
            const std::vector<std::optional<double>> cells = row(i);
            for (std::size_t c = 0; c < cells.size(); ++c)
                out << (c ? "," : "") << format_value(cells[c]);
            out << '\n';
        }
        note(name);
    }

    void config(const std::string& name, const RunConfig& config)
    {
        std::ofstream out = open_output(dir_ / name);
        out << config.to_json().dump(2) << '\n';
        note(name);
    }

    void events(const std::string& name, const std::vector<std::pair<std::size_t, Trajectory>>& picked)
    {
        std::ofstream out = open_output(dir_ / name);
        out << "traj_index,time,kind,channel\n";
        for (const auto& [index, traj] : picked)
            for (const TrajectoryEvent& e : traj.events)
                out << index << ',' << format_value(e.time) << ',' << to_string(e.kind) << ','
                    << (e.channel ? std::string(to_string(*e.channel)) : std::string("NA")) << '\n';
        note(name);
    }

private:
    void note(const std::string& name)
    {
        if (!quiet_)
            log_ << "wrote " << (dir_ / name).string() << '\n';
    }

    fs::path dir_;
    std::ostream& log_;
    bool quiet_;
};

RunConfig desk_config(Theory theory, double t_end)
{
    RunConfig c;
    c.theory = theory;
    c.t_end = t_end;
    return c;
}

void figure_1(FigureWriter& w)
{
    const RunConfig c = desk_config(Theory::JonesHore, 10.0);
    const auto rows = run_evolve(c);
    w.config("fig1_config.json", c);
    w.panel("fig1a.csv", rows, {"t", "qs"});
    w.panel("fig1b.csv", rows, {"t", "qt"});
    w.panel("fig1c.csv", rows, {"t", "trace"});
    w.panel("fig1d.csv", rows, {"t", "purity"});
}

void figure_2(FigureWriter& w)
{
    const RunConfig c = desk_config(Theory::JonesHore, 15.0);
    const auto rows = run_evolve(c);
    w.config("fig2_config.json", c);
    w.panel("fig2a.csv", rows, {"t", "qs_norm"});
    w.panel("fig2b.csv", rows, {"t", "qt_norm"});
    w.panel("fig2c.csv", rows, {"t", "purity_norm"});
}

void figure_3(FigureWriter& w)
{
    RunConfig c = desk_config(Theory::JonesHore, 10.0);
    c.n_traj = 1000;
    c.seed = 3;
    const EnsembleConfig e = c.ensemble();
    const std::size_t reacting = find_trajectory(
        e, [](const auto& ev) { return kinds_are(ev, {EventKind::Recombine}); }, "recombine");
    const std::size_t locked = find_trajectory(
        e, [](const auto& ev) { return kinds_are(ev, {EventKind::ProjectTriplet}); }, "project-triplet");
    const Trajectory a = run_trajectory(e, reacting);
    const Trajectory b = run_trajectory(e, locked);
    w.config("fig3_config.json", c);
    w.panel("fig3a.csv", trajectory_rows(a, e.scenario.space), {"t", "qs", "trace"});
    w.panel("fig3b.csv", trajectory_rows(b, e.scenario.space), {"t", "qs", "trace"});
    w.events("fig3_events.csv", {{reacting, a}, {locked, b}});
}

void figure_4(FigureWriter& w)
{
    const RunConfig c = desk_config(Theory::JonesHore, 20.0);
    const auto rows = run_evolve(c);
    w.config("fig4_config.json", c);
    w.panel("fig4.csv", rows, {"t", "svn", "info_gain"});
}

void figure_7(FigureWriter& w)
{
    RunConfig c = desk_config(Theory::Kominis, 10.0);
    c.omega = 5.0;
    c.initial = InitialState::Singlet;
    c.recombination = true;
    c.n_traj = 1000;
    c.seed = 7;
    const EnsembleConfig e = c.ensemble();
    // outcome Q_S = 0, later Q_S = 1, then recombination
    const std::size_t index = find_trajectory(
        e,
        [](const std::vector<TrajectoryEvent>& ev) {
            if (ev.size() < 3 || ev.back().kind != EventKind::Recombine)
                return false;
            std::size_t i = 0;
            while (i < ev.size() && ev[i].kind != EventKind::ProjectTriplet)
                ++i;
            while (i < ev.size() && ev[i].kind != EventKind::ProjectSinglet)
                ++i;
            return i + 1 < ev.size();
        },
        "project-triplet, project-singlet, recombine");
    const Trajectory traj = run_trajectory(e, index);
    w.config("fig7_config.json", c);
    w.panel("fig7.csv", trajectory_rows(traj, e.scenario.space), {"t", "qs", "qt", "trace"});
    w.events("fig7_events.csv", {{index, traj}});
}

void figure_8(FigureWriter& w, int threads)
{
    RunConfig c = desk_config(Theory::Kominis, 10.0);
    c.recombination = true;
    c.n_traj = 1000;
    c.seed = 8;
    const EnsembleConfig e = c.ensemble();
    const std::size_t reacting = find_trajectory(
        e,
        [](const auto& ev) { return kinds_are(ev, {EventKind::ProjectSinglet, EventKind::Recombine}); },
        "project-singlet, recombine");
    const std::size_t locked = find_trajectory(
        e, [](const auto& ev) { return kinds_are(ev, {EventKind::ProjectTriplet}); }, "project-triplet");
    const Trajectory a = run_trajectory(e, reacting);
    const Trajectory b = run_trajectory(e, locked);
    w.config("fig8ab_config.json", c);
    w.panel("fig8a.csv", trajectory_rows(a, e.scenario.space), {"t", "qs", "trace"});
    w.panel("fig8b.csv", trajectory_rows(b, e.scenario.space), {"t", "qs", "trace"});
    w.events("fig8_events.csv", {{reacting, a}, {locked, b}});

    RunConfig avg = desk_config(Theory::Kominis, 10.0);
    avg.n_traj = 10000;
    avg.seed = 8;
    avg.recombination = false;
    avg.conditioning = Conditioning::NonReacted;
    const TrajectoryRun ensemble = run_trajectories(avg, threads);
    const auto master = run_evolve(desk_config(Theory::Kominis, 10.0));
    w.config("fig8c_config.json", avg);
    w.config("fig8c_master_config.json", desk_config(Theory::Kominis, 10.0));
    w.table("fig8c.csv", "t,purity_ensemble,purity_master", ensemble.rows.size(), [&](std::size_t i) {
        return std::vector<std::optional<double>>{ensemble.rows[i].t, ensemble.rows[i].purity_norm,
                                                  master[i].purity};
    });
}

} // namespace

std::vector<DiagnosticRow> run_evolve(const RunConfig& config)
{
    const Scenario scenario = config.scenario();
    const RhoSeries series = evolve(scenario);
    return diagnose(series, scenario.space, scenario.k_s, info_gain_applies(config, false));
}

TrajectoryRun run_trajectories(const RunConfig& config, int threads)
{
    const EnsembleConfig ensemble = config.ensemble();
    if (ensemble.n_traj < 1)
        throw ConfigError("trajectories need n_traj >= 1");
    EnsembleResult result = accumulate_ensemble(ensemble, threads);
    if (config.conditioning == Conditioning::NonReacted) {
        if (auto t = first_empty_time(result))
            throw EnsembleError(*t, "non-reacted ensemble is empty from t=" + format_value(*t));
    }
    const RhoSeries series = ensemble_average(result, config.conditioning);
    TrajectoryRun run;
    run.rows = diagnose(series, ensemble.scenario.space, ensemble.scenario.k_s,
                        info_gain_applies(config, true));
    run.events = std::move(result.events);
    return run;
}

int cmd_evolve(const std::string& config_path, const CommandOptions& options, std::ostream& out,
               std::ostream& err)
{
    return guarded(err, [&] {
        const RunConfig config = RunConfig::load(config_path);
        const auto rows = run_evolve(config);
        emit(options.out, out, [&](std::ostream& os) { write_diagnostics(os, rows); });
    });
}

int cmd_trajectories(const std::string& config_path, const CommandOptions& options,
                     std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const RunConfig config = RunConfig::load(config_path);
        const TrajectoryRun run = run_trajectories(config, options.threads);
        emit(options.out, out, [&](std::ostream& os) { write_diagnostics(os, run.rows); });
        const std::string events_path =
            options.events.empty() ? default_events_path(options.out) : options.events;
        std::ofstream events = open_output(events_path);
        write_events(events, run.events);
        if (!options.quiet)
            err << "wrote events to " << events_path << '\n';
    });
}

int cmd_figure(int id, const CommandOptions& options, std::ostream& log, std::ostream& err)
{
    return guarded(err, [&] {
        FigureWriter w(options.out.empty() ? fs::path(".") : fs::path(options.out), log, options.quiet);
        switch (id) {
        case 1:
            figure_1(w);
            break;
        case 2:
            figure_2(w);
            break;
        case 3:
            figure_3(w);
            break;
        case 4:
            figure_4(w);
            break;
        case 7:
            figure_7(w);
            break;
        case 8:
            figure_8(w, options.threads);
            break;
        default:
            throw ConfigError("unknown figure id " + std::to_string(id) + " (expected 1, 2, 3, 4, 7 or 8)");
        }
    });
}

} // namespace radpair::app
