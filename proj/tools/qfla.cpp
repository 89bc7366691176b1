#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qfla/errors.hpp"
#include "qfla/runner.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for quasi-Frobenius Lie algebras, Lie bialgebras, "
                 "and Drinfeld doubles"};
    app.require_subcommand(1);

    std::string run_file;
    qfla::RunOptions options;
    std::string machine_path;
    std::string only_task;
    std::string adhoc;
    long long max_dim = qfla::kSymbolicDetMaxDim;

    CLI::App* run = app.add_subcommand("run", "execute a workspace's task sections");
    run->add_option("workspace", run_file, "workspace file")->required();
    run->add_option("--seed", options.seed, "seed for the Frobenius witness search");
    run->add_option("--machine", machine_path, "write a machine-readable report to this file");
    run->add_option("--max-dim", max_dim, "symbolic determinant guard override");
    run->add_option("--only", only_task, "run only the named task");
    run->add_option("--cmd", adhoc, "run a single command instead of the file's tasks");

    std::string check_file;
    CLI::App* check = app.add_subcommand("check", "parse a workspace and report its sections");
    check->add_option("workspace", check_file, "workspace file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (run->parsed()) {
            const auto text = read_file(run_file);
            if (!text) {
                std::cerr << "cannot read '" << run_file << "'\n";
                return 2;
            }
            options.max_dim = static_cast<Eigen::Index>(max_dim);
            if (!only_task.empty()) options.only_task = only_task;
            if (!adhoc.empty()) options.command = adhoc;
            const qfla::ws::Document doc = qfla::ws::parse_workspace(*text);
            if (options.only_task && doc.tasks.count(*options.only_task) == 0) {
                std::cerr << "no task named '" << *options.only_task << "'\n";
                return 2;
            }
            if (options.command) {
                std::istringstream head(*options.command);
                std::string first;
                head >> first;
                if (first == "not") head >> first;
                if (!qfla::ws::is_command(first)) {
                    std::cerr << "unknown command '" << first << "'\n";
                    return 2;
                }
            }
            const qfla::RunReport report = qfla::run_document(doc, options);
            std::cout << qfla::render_human(report);
            if (!machine_path.empty()) {
                std::ofstream out(machine_path, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot write '" << machine_path << "'\n";
                    return 2;
                }
                out << qfla::render_machine(report);
            }
            return report.exit_code();
        }
        const auto text = read_file(check_file);
        if (!text) {
            std::cerr << "cannot read '" << check_file << "'\n";
            return 2;
        }
        const qfla::ws::Document doc = qfla::ws::parse_workspace(*text);
        std::cout << "OK: " << doc.order.size() << " section(s), " << doc.tasks.size()
                  << " task(s)\n";
        return 0;
    } catch (const qfla::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qfla::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
