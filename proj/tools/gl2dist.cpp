// Command-line front end. Exit codes: 0 ok, 1 verify-paper failure, 2 parse, 3 math precondition, 4 regime refusal.
#include <iostream>

#include "CLI11.hpp"
#include "gl2dist/acceptance.hpp"
#include "gl2dist/commands.hpp"
#include "gl2dist/errors.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kMath = 3, kRefusal = 4 };

void emit(const gl2dist::Json& j, bool table, std::string (*render)(const gl2dist::Json&)) {
    if (table) {
        std::cout << render(j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace gl2dist;

    CLI::App app{"Distinction of dihedral representations of GL2 over p-adic quadratic towers"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    int prime = 3;
    std::string format = "json";
    auto* p_opt = app.add_option("--p", prime, "residue characteristic")->check(CLI::IsMember({3, 5, 7, 11, 13}));
    app.add_option("--precision", config.precision, "p-adic digits")->check(CLI::Range(8, 400));
    app.add_option("--max-denominator", config.max_denominator, "bound on the t-denominator of enumerated characters")
        ->check(CLI::Range(1, 64));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", config.seed, "seed for sampled checks");

    std::string field_spec, char_spec, pair;
    bool regular_only = false;
    std::string oracle;

    auto* classify = app.add_subcommand("classify", "Galois type and subfield lattice of a tower");
    classify->add_option("spec", field_spec, "field spec, e.g. \"K=sqrt(p);L=sqrt(u)\"")->required();

    auto* decide = app.add_subcommand("decide", "distinction verdict for pi(omega)");
    decide->add_option("spec", field_spec)->required();
    decide->add_option("omega", char_spec, "character of L, e.g. \"t=1/2;m=3\"")->required();

    auto* enumerate = app.add_subcommand("enumerate", "verdicts for all tame omega up to ~sigma");
    enumerate->add_option("spec", field_spec)->required();
    enumerate->add_flag("--regular-only", regular_only, "skip non-regular omega");

    auto* epsilon = app.add_subcommand("epsilon", "epsilon factor of a character on a quadratic pair");
    epsilon->add_option("spec", field_spec)->required();
    epsilon->add_option("chi", char_spec, "character of the upper field")->required();
    epsilon->add_option("--pair", pair, "quadratic pair")->check(CLI::IsMember({"K/F", "L/K", "L/K'", "L/K''"}));
    epsilon->add_option("--oracle", oracle, "also evaluate the Gauss sum")->check(CLI::IsMember({"gauss"}));

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }
    if (*p_opt) config.prime = prime;
    const bool table = format == "table";

    try {
        if (*classify) {
            emit(cmd_classify(field_spec, config), table, classify_table);
        } else if (*decide) {
            emit(cmd_decide(field_spec, char_spec, config), table, verdict_table);
        } else if (*enumerate) {
            emit(cmd_enumerate(field_spec, regular_only, config), table, enumerate_table);
        } else if (*epsilon) {
            const std::optional<std::string> which = pair.empty() ? std::nullopt : std::optional<std::string>(pair);
            emit(cmd_epsilon(field_spec, char_spec, which, oracle == "gauss", config), table, epsilon_table);
        } else if (*verify) {
            validate(config);
            acceptance::Config ac;
            ac.prime = config.prime;
            ac.max_denominator = config.max_denominator;
            ac.precision = config.precision;
            ac.seed = config.seed;
            std::vector<acceptance::Result> results;
            bool all = true;
            for (int id = 1; id <= acceptance::kCriteria; ++id) {
                results.push_back(acceptance::run_one(id, ac));
                all = all && results.back().pass;
                if (table) std::cout << acceptance::format(results.back()) << std::endl;
            }
            if (!table) std::cout << acceptance::to_json(results).dump(2) << "\n";
            return all ? kOk : kVerifyFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const RegimeRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefusal;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMath;
    }
    return kOk;
}
