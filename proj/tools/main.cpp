#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cpf/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Conway potential function of colored braid closures via reduced colored "
                 "Gassner matrices"};
    app.require_subcommand(1);

    std::string format = "text";
    if (const char* env = std::getenv("CPF_FORMAT")) {
        const std::string value(env);
        if (value == "text" || value == "json" || value == "latex") format = value;
    }

    cpf::cli::Invocation inv;
    std::string batch_input = "-";

    const auto add_braid_opts = [&](CLI::App* sub) {
        sub->add_option("--braid", inv.braid,
                        "braid word as whitespace-separated nonzero integers, e.g. \"-1 -1\"")
            ->required();
        sub->add_option("--colors", inv.colors, "comma-separated strand colors, e.g. \"1,2\"")
            ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "potential function of the braid closure");
    add_braid_opts(compute);

    CLI::App* axis = app.add_subcommand("axis", "potential of the closure together with the braid axis");
    add_braid_opts(axis);

    CLI::App* verify = app.add_subcommand("verify", "run the randomized verification suite");
    verify->add_option("--trials", inv.config.trials, "trial count per check (0 = per-check default)");
    verify->add_option("--max-strands", inv.config.max_strands, "maximum strand count");
    verify->add_option("--max-len", inv.config.max_len, "maximum sampled word length");
    verify->add_option("--max-colors", inv.config.max_colors, "maximum color count");
    verify->add_option("--seed", inv.config.seed, "base seed");
    verify->add_option("--check", inv.checks, "check name(s) to run (default: all)")
        ->check(CLI::IsMember(cpf::verify::check_names()));

    CLI::App* batch = app.add_subcommand("batch", "one JSON task per input line");
    batch->add_option("--input", batch_input, "input file, '-' for standard input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : 1;
    }

    try {
        inv.format = cpf::cli::parse_format(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (compute->parsed()) inv.command = cpf::cli::Invocation::Command::compute;
    if (axis->parsed()) inv.command = cpf::cli::Invocation::Command::axis;
    if (verify->parsed()) inv.command = cpf::cli::Invocation::Command::verify;
    if (batch->parsed()) inv.command = cpf::cli::Invocation::Command::batch;

    std::ifstream file;
    std::istream* in = &std::cin;
    if (batch->parsed() && batch_input != "-") {
        file.open(batch_input);
        if (!file) {
            std::cerr << "error: cannot open input file '" << batch_input << "'\n";
            return 1;
        }
        in = &file;
    }

    return cpf::cli::run(inv, *in, std::cout, std::cerr);
}
