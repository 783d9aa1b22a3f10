// Runs the acceptance criteria and prints one line per criterion; exit status 1 on any failure.
#include <iostream>

#include "CLI11.hpp"
#include "gl2dist/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gl2dist acceptance suite"};
    gl2dist::acceptance::Config config;
    int prime = 0;
    int only = 0;
    app.add_option("--p", prime, "run every criterion at this prime");
    app.add_option("--max-denominator", config.max_denominator)->check(CLI::Range(1, 64));
    app.add_option("--precision", config.precision)->check(CLI::Range(8, 200));
    app.add_option("--seed", config.seed);
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, gl2dist::acceptance::kCriteria));
    CLI11_PARSE(app, argc, argv);
    if (prime != 0) config.prime = prime;

    bool all = true;
    for (int id = 1; id <= gl2dist::acceptance::kCriteria; ++id) {
        if (only != 0 && id != only) continue;
        const auto r = gl2dist::acceptance::run_one(id, config);
        std::cout << gl2dist::acceptance::format(r) << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
    return all ? 0 : 1;
}
