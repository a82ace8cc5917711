#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sa/scenario.hpp"

// Exit codes: 0 the scenario ran and the verdict is in the output, 1 the
// input failed validation, 2 the scenario hits an unsupported case, 3 an
// enumeration exceeded its budget.
int main(int argc, char** argv) {
    CLI::App app{"decides strong approximation away from a set of places for forms of SL_n over "
                 "function fields of p-adic curves"};
    app.require_subcommand(1);

    std::string run_file;
    std::string format = "text";
    bool with_oracle = false;
    int oracle_workers = 0;
    CLI::App* run = app.add_subcommand("run", "evaluate a scenario file and print the report");
    run->add_option("scenario", run_file, "scenario file (json)")->required();
    run->add_option("--format", format, "output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_flag("--oracle", with_oracle, "also run the finite-support enumeration check");
    run->add_option("--oracle-workers", oracle_workers,
                    "worker threads for the enumeration (0 = automatic)");

    std::string validate_file;
    CLI::App* validate =
        app.add_subcommand("validate", "check a scenario file against the model invariants");
    validate->add_option("scenario", validate_file, "scenario file (json)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) {
            const sa::Scenario scenario = sa::load_scenario(run_file);
            const sa::Report report =
                sa::run_scenario(scenario, sa::RunOptions{with_oracle, oracle_workers});
            std::cout << sa::render(report,
                                    format == "json" ? sa::Format::json : sa::Format::text);
        } else {
            const sa::Scenario scenario = sa::load_scenario(validate_file);
            std::cout << "ok: scenario '" << scenario.name << "' is valid ("
                      << scenario.curve.places().size() << " places, mode " << scenario.mode
                      << ")\n";
        }
        return 0;
    } catch (const sa::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sa::unsupported_case_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
