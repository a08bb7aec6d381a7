#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "diskmcg/dsl.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact mapping-class computations on holed disks"};
    std::string source_path;
    diskmcg::RunFlags flags;
    app.add_option("source", source_path, "program file, or - for stdin")->required();
    app.add_option("--bound", flags.bound, "conjugator word length bound");
    app.add_option("--dedupe-bound", flags.dedupe_bound, "class-matching conjugator bound");
    app.add_option("--threads", flags.threads, "search worker count");
    app.add_option("--iters", flags.iters, "growth estimator iterations");
    app.add_option("--seed-set", flags.seed_set, "seed curve hole set, e.g. {1,2}");
    app.add_option("--format", flags.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (source_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        source = ss.str();
    } else {
        std::ifstream in(source_path);
        if (!in) {
            std::cerr << "error: cannot open " << source_path << "\n";
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        source = ss.str();
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        diskmcg::Program prog = diskmcg::parse(source);
        nlohmann::json doc = diskmcg::run(prog, flags);
        auto t1 = std::chrono::steady_clock::now();
        if (flags.format == "tsv")
            std::cout << diskmcg::to_tsv(doc);
        else
            std::cout << doc.dump(2) << "\n";
        std::cerr << "elapsed_ms "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << "\n";
        return 0;
    } catch (const diskmcg::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << " (planned "
                  << e.candidates_planned << ", ceiling " << e.ceiling << ")\n";
        return 2;
    } catch (const diskmcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
