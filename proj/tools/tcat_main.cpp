#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tcat/doc.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tcat::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite checker for generalized multicategories over a monad"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    int depth = 0;
    bool as_json = false;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check the category axioms, classify the ladder, run the nerve checks"},
        {"nerve", "build the nerve and check the simplicial identities"},
        {"segal", "check the nerve condition of a document"},
        {"counts", "print level cardinalities"},
        {"hom", "enumerate hom simplices between two documents"},
        {"two-cells", "enumerate 2-cells between the functors of two documents"},
        {"compose", "compose 1-simplices constructively and against the search oracle"},
        {"power-delta1", "build the interval power and check its properties"},
        {"copower", "build standard-simplex copowers"},
        {"comonad", "check the sequence comonad and the coalgebra round-trip"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("documents", paths, "input document paths")->required();
        sub->add_option("--depth", depth, "truncation depth override");
        sub->add_flag("--json", as_json, "emit the report as JSON");
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    try {
        std::vector<std::string> documents;
        for (const auto& p : paths) documents.push_back(slurp(p));
        auto start = std::chrono::steady_clock::now();
        tcat::Report report = tcat::run_command(
            command, documents, depth > 0 ? std::optional<int>(depth) : std::nullopt);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        std::cout << (as_json ? report.render_json() : report.render_text());
        std::cerr << "elapsed: " << elapsed << " ms\n";
        return tcat::exit_code_for(report);
    } catch (const tcat::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const tcat::CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 3;
    } catch (const tcat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
