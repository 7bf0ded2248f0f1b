#include "pertcoul_cli/cli.hpp"

#include "CLI11.hpp"
#include "commands.hpp"
#include "pertcoul/error.hpp"

#include <algorithm>
#include <ostream>

namespace pertcoul::cli {

namespace {

void add_shared_options(CLI::App& app, Options& opt) {
    const auto list = [&](const char* flag, std::vector<std::string>& target, const char* what) {
        app.add_option(flag, target, what)->delimiter(',')->allow_extra_args(false);
    };
    list("--a", opt.a, "Coulomb strength a in -a/r (list or start:stop:count in sweep)");
    list("--b", opt.b, "linear coefficient b");
    list("--c", opt.c, "quadratic coefficient c");
    list("--N", opt.N, "spatial dimension N (default 3)");
    list("--l", opt.l, "angular momentum l (default 0)");
    list("--n", opt.n, "level index (oracle, sweep)");
    app.add_option("--hbar", opt.hbar, "reduced Planck constant (default 1)");
    app.add_option("--mass", opt.mass, "particle mass (default 1)");
    app.add_option("--derive", opt.derive, "fill one parameter from the closed-form constraint")
        ->check(CLI::IsMember({"a", "b", "c"}));
    app.add_option("--nmax", opt.nmax, "highest spectrum level reported (default 2)");
    app.add_option("--k", opt.k, "number of eigenvalues (eig, default 3)");
    app.add_option("--rmax", opt.rmax, "grid box radius override");
    app.add_option("--h", opt.h, "grid step override");
    app.add_flag("--richardson", opt.richardson, "Richardson-extrapolate eigenvalues (eig)");
    app.add_flag("--check", opt.check, "grid H-residual of each oracle state (oracle)");
    app.add_option("--out", opt.out, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact and numerical bound states of -a/r + b r + c r^2 in N dimensions",
                 "pertcoul"};
    app.set_help_flag("--help", "print help and exit");
    app.set_config("--config", "", "read key = value settings; flags override them");
    app.allow_config_extras(CLI::config_extras_mode::error);
    add_shared_options(app, opt);
    app.require_subcommand(1, 1);

    struct Entry {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&);
    };
    const Entry entries[] = {
        {"solve", "closed-form ground state, both views and the spectrum", cmd_solve},
        {"verify", "run every closed-form check against the oracles", cmd_verify},
        {"oracle", "polynomial-ansatz constraint roots and states at level --n", cmd_oracle},
        {"eig", "lowest --k finite-difference eigenvalues", cmd_eig},
        {"sweep", "closed form vs numerics over parameter ranges (CSV)", cmd_sweep},
    };
    for (const auto& e : entries) app.add_subcommand(e.name, e.help)->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto chosen = app.get_subcommands().front()->get_name();
    const auto* entry = std::find_if(std::begin(entries), std::end(entries),
                                     [&](const Entry& e) { return chosen == e.name; });
    try {
        return entry->fn(opt, out);
    } catch (const ConstraintViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_constraint;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace pertcoul::cli
