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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "radpair/app/commands.hpp"

int main(int argc, char** argv)
{
    using namespace radpair::app;

    CLI::App app{"Radical-ion-pair spin dynamics: master equations, quantum trajectories, entropy diagnostics"};
    app.require_subcommand(1);

    CommandOptions options;
    std::string config_path;
    int figure_id = 0;
    VerifyOptions verify;
    std::string fault;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", options.out, "Output path (default: stdout)");
        sub->add_option("--threads", options.threads, "Worker threads, 0 = auto; results do not depend on it")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--quiet", options.quiet, "Suppress progress messages");
    };

    auto* evolve = app.add_subcommand("evolve", "Integrate the master equation and write diagnostics CSV");
    evolve->add_option("config", config_path, "JSON run configuration")->required();
    add_common(evolve);

    auto* trajectories = app.add_subcommand("trajectories", "Run a trajectory ensemble; write the averaged CSV and an event log");
    trajectories->add_option("config", config_path, "JSON run configuration")->required();
    trajectories->add_option("--events", options.events, "Event log path (default derived from --out)");
    add_common(trajectories);

    auto* figure = app.add_subcommand("figure", "Regenerate a figure dataset (1, 2, 3, 4, 7, 8)");
    figure->add_option("id", figure_id, "Figure number")->required();
    figure->add_option("--out", options.out, "Output directory (default: .)");
    figure->add_option("--threads", options.threads, "Worker threads, 0 = auto")->check(CLI::NonNegativeNumber);
    figure->add_flag("--quiet", options.quiet, "Suppress progress messages");

    auto* check = app.add_subcommand("verify", "Run the oracle and equivalence checks");
    check->add_option("--threads", verify.threads, "Worker threads, 0 = auto")->check(CLI::NonNegativeNumber);
    check->add_option("--inject-fault", fault, "Harness self-test: 'kominis-sign'")
        ->check(CLI::IsMember({"kominis-sign"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config: " << e.what() << '\n';
        return kConfigError;
    }

    if (*evolve)
        return cmd_evolve(config_path, options, std::cout, std::cerr);
    if (*trajectories)
        return cmd_trajectories(config_path, options, std::cout, std::cerr);
    if (*figure)
        return cmd_figure(figure_id, options, std::cout, std::cerr);
    verify.inject_kominis_sign_fault = fault == "kominis-sign";
    return cmd_verify(verify, std::cout, std::cerr);
}
