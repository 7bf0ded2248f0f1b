#include "commands.hpp"

#include "pertcoul/error.hpp"
#include "pertcoul/exact.hpp"
#include "pertcoul/numerics.hpp"
#include "pertcoul/qes_oracle.hpp"
#include "pertcoul/tolerances.hpp"
#include "pertcoul_cli/cli.hpp"
#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

namespace pertcoul::cli {

namespace {

const Tolerances tol;

// Hydrogen-like level n of -a/r alone.
double coulomb_level(double a, const DimensionSpec& dim, const PhysicalParams& phys, int n) {
    const double s = dim.Lambda() + n + 1.0;
    return -phys.mass * a * a / (2.0 * phys.hbar * phys.hbar * s * s);
}

GridOverrides overrides(const Options& opt) { return {opt.rmax, opt.h, std::nullopt}; }

Json params_json(const PotentialParams& p) {
    Json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["c"] = p.c;
    return j;
}

Json inputs_json(const Problem& pr, const Options& opt) {
    Json j;
    j["params"] = params_json(pr.params);
    j["phys"] = {{"hbar", pr.phys.hbar}, {"mass", pr.phys.mass}};
    j["derived"] = opt.derive.empty() ? Json(nullptr) : Json(opt.derive);
    return j;
}

Json dimension_json(const DimensionSpec& d) {
    Json j;
    j["N"] = d.N();
    j["l"] = d.l();
    j["M"] = d.M();
    j["Lambda"] = d.Lambda();
    return j;
}

Json grid_json(const RadialGrid& g) {
    Json j;
    j["h"] = g.h();
    j["count"] = g.count();
    j["r_max"] = g.r_max();
    return j;
}

Json energy_json(const EnergyBreakdown& e) {
    Json j;
    j["epsilon"] = e.epsilon;
    j["delta_epsilon"] = e.delta_epsilon;
    j["E"] = e.total;
    return j;
}

Json form_json(const LaurentForm& f) {
    Json j;
    for (int p = LaurentForm::min_power; p <= LaurentForm::max_power; ++p) j[std::to_string(p)] = f[p];
    return j;
}

bool has_coulomb_view(const PotentialParams& p) { return p.a > 0.0; }
bool has_oscillator_view(const PotentialParams& p) { return p.c > 0.0; }

struct Solved {
    GroundSolution ground;
    std::optional<GroundSolution> coulomb;
    std::optional<GroundSolution> oscillator;
    RadialGrid grid;
    double n0 = 1.0;
};

Solved solve_problem(const Problem& pr, const Options& opt) {
    const auto& p = pr.params;
    require_constraint(p, pr.dim, pr.phys, tol.constraint_rel);
    std::optional<GroundSolution> coul, osc;
    if (has_coulomb_view(p)) coul = ground_state(p, pr.dim, pr.phys);
    if (has_oscillator_view(p)) osc = oscillator_view_ground(p, pr.dim, pr.phys);
    if (!coul && !osc) throw DomainError("no bound closed-form ground state for these parameters");
    const GroundSolution ground = coul ? *coul : *osc;
    const RadialGrid grid = build_grid(p, pr.dim, pr.phys, overrides(opt));
    const double n0 = normalize(evaluate_state(ground.psi, grid)).scale;
    return {ground, coul, osc, grid, n0};
}

Json spectrum_json(const Problem& pr, int nmax) {
    Json arr = Json::array();
    if (nmax < 0) throw DomainError("--nmax must be >= 0");
    if (pr.params.c > 0.0) {
        for (const auto& lvl : spectrum(pr.params.b, pr.params.c, pr.dim, pr.phys, nmax)) {
            arr.push_back({{"n", lvl.n}, {"a_n", lvl.a_n}, {"E_n", lvl.energy}});
        }
    } else {
        for (int n = 0; n <= nmax; ++n) {
            arr.push_back({{"n", n},
                           {"a_n", pr.params.a},
                           {"E_n", coulomb_level(pr.params.a, pr.dim, pr.phys, n)}});
        }
    }
    return arr;
}

Json base_report(const char* command, const Problem& pr, const Options& opt, const Solved& s) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = inputs_json(pr, opt);
    doc["dimension"] = dimension_json(pr.dim);
    Json views;
    views["coulomb"] = s.coulomb ? energy_json(s.coulomb->energy) : Json(nullptr);
    views["oscillator"] = s.oscillator ? energy_json(s.oscillator->energy) : Json(nullptr);
    doc["views"] = views;
    doc["psi"] = {{"q", s.ground.psi.power},
                  {"lambda", s.ground.psi.lin},
                  {"kappa", s.ground.psi.quad},
                  {"N0", s.n0}};
    doc["spectrum"] = spectrum_json(pr, opt.nmax);
    return doc;
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += ",";
        line += c;
    }
    return line + "\n";
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
    if (format == "table") {
        out << render_table(doc);
    } else {
        out << dump(doc);
    }
}

std::string format_or(const Options& opt, const char* fallback) {
    return opt.out.empty() ? fallback : opt.out;
}

// Verification checks ------------------------------------------------------

double riccati_scale(double energy) { return tol.riccati_coeff * std::max(1.0, std::abs(energy)); }

void view_checks(const GroundSolution& g, const Problem& pr, Json& checks) {
    const char* view = to_string(g.view);
    const double e = g.energy.total;
    const double rr =
        riccati_residual(g.full_superpotential(), g.potential(), e, pr.phys).max_abs();
    checks.push_back(check(std::string("riccati_") + view, "assert", rr, riccati_scale(e),
                           rr <= riccati_scale(e)));
    const double pr_res =
        perturbation_residual(g.w, g.dw, g.dv, g.energy.delta_epsilon, pr.phys).max_abs();
    checks.push_back(check(std::string("perturbation_") + view, "assert", pr_res,
                           riccati_scale(e), pr_res <= riccati_scale(e)));
}

Json verification_checks(const Problem& pr, const Solved& s) {
    const auto& p = pr.params;
    Json checks = Json::array();
    if (s.coulomb) view_checks(*s.coulomb, pr, checks);
    if (s.oscillator) view_checks(*s.oscillator, pr, checks);

    const double e0 = s.ground.energy.total;
    if (s.coulomb && s.oscillator) {
        const auto dv = dual_view_check(p, pr.dim, pr.phys);
        const double etol = tol.dual_view * std::max(1.0, std::abs(e0));
        checks.push_back(check("dual_view_energy", "assert", dv.energy_diff, etol,
                               dv.energy_diff <= etol));
        checks.push_back(check("dual_view_psi", "assert", dv.param_rel_diff, tol.dual_view,
                               dv.param_rel_diff <= tol.dual_view));
    }

    const auto v = effective_potential(p, pr.dim, pr.phys);
    const auto eig = eigen_lowest(v, s.grid, pr.phys, {1, true, false});
    const double err = std::abs(eig.values[0] - e0);
    checks.push_back(check("numeric_ground_energy", "info", eig.values[0], std::nullopt, std::nullopt));
    checks.push_back(check("eigen_vs_closed", "assert", err, tol.eigen_vs_closed,
                           err <= tol.eigen_vs_closed));
    const double res = h_residual(s.ground.psi, s.grid, e0, v, pr.phys);
    const double res_half = h_residual(s.ground.psi, s.grid.refined(), e0, v, pr.phys);
    checks.push_back(check("ground_h_residual", "assert", res, tol.h_residual, res <= tol.h_residual));
    checks.push_back(check("ground_h_residual_half", "assert", res_half, tol.h_residual_half,
                           res_half <= tol.h_residual_half));
    const double ov = overlap(eig.vectors[0], evaluate_state(s.ground.psi, s.grid));
    checks.push_back(check("ground_overlap", "info", ov, std::nullopt, std::nullopt));

    if (p.c > 0.0) {
        const auto root0 = qes_solve(p.b, p.c, pr.dim, pr.phys, 0).front().a_root;
        const double diff = std::abs(root0 - p.a);
        const double rtol = tol.root_rel * std::max(std::abs(p.a), 1e-300);
        const bool ok = p.a == 0.0 ? diff <= tol.root_rel : diff <= rtol;
        checks.push_back(check("oracle_n0_vs_constraint", "assert", diff,
                               p.a == 0.0 ? tol.root_rel : rtol, ok));

        Json roots = Json::array();
        for (const auto& sol : qes_solve(p.b, p.c, pr.dim, pr.phys, 1)) roots.push_back(sol.a_root);
        checks.push_back(check("oracle_n1_roots", "info", roots, std::nullopt, std::nullopt));
        const auto member1 = hierarchy_params(p.b, p.c, pr.dim, pr.phys, 1);
        checks.push_back(check("ladder_a1", "info", member1.a, std::nullopt, std::nullopt));

        const auto cmp = shape_invariance_compare(hierarchy_superpotential(p.b, p.c, pr.dim, pr.phys, 0),
                                                  hierarchy_superpotential(p.b, p.c, pr.dim, pr.phys, 1),
                                                  pr.phys);
        checks.push_back(check("shape_invariance_remainder", "info", cmp.remainder, std::nullopt,
                               std::nullopt));
        checks.push_back(check("shape_invariance_mismatch", "info", form_json(cmp.mismatch),
                               std::nullopt, std::nullopt));

        // Ladder-built n = 1 state, tested against the potential whose level
        // it claims to be.
        const auto ladder = hierarchy_states(p.b, p.c, pr.dim, pr.phys, 1);
        const double e1 = spectrum(p.b, p.c, pr.dim, pr.phys, 1)[1].energy;
        const auto v1 = effective_potential(member1, pr.dim, pr.phys);
        const auto grid1 = build_grid(member1, pr.dim, pr.phys);
        checks.push_back(check("ladder_state_residual", "info",
                               h_residual(ladder, grid1, e1, v1, pr.phys), std::nullopt,
                               std::nullopt));
        const auto nodes = static_cast<std::size_t>(ladder.node_count());
        const auto eig1 = eigen_lowest(v1, grid1, pr.phys, {nodes + 1, true, false});
        checks.push_back(check("ladder_state_overlap", "info",
                               std::abs(overlap(eig1.vectors[nodes], evaluate_state(ladder, grid1))),
                               std::nullopt, std::nullopt));
        checks.push_back(check("ladder_state_numeric_level", "info", eig1.values[nodes],
                               std::nullopt, std::nullopt));
    }
    return checks;
}

bool all_asserts_pass(const Json& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Json& c) {
        return c["kind"] != "assert" || c["pass"].get<bool>();
    });
}

} // namespace

int cmd_solve(const Options& opt, std::ostream& out) {
    const Problem pr = single_problem(opt);
    const Solved s = solve_problem(pr, opt);
    Json doc = base_report("solve", pr, opt, s);
    Json checks = Json::array();
    checks.push_back(check("constraint_residual", "info",
                           constraint_violation(pr.params, pr.dim, pr.phys), std::nullopt,
                           std::nullopt));
    doc["checks"] = checks;
    doc["metadata"] = metadata();

    const auto format = format_or(opt, "json");
    if (format == "csv") {
        out << "n,a_n,E_n\n";
        for (const auto& lvl : doc["spectrum"]) {
            out << csv_line({std::to_string(lvl["n"].get<int>()), format_double(lvl["a_n"].get<double>()),
                             format_double(lvl["E_n"].get<double>())});
        }
    } else {
        emit(doc, format, out);
    }
    return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Problem pr = single_problem(opt);
    const Solved s = solve_problem(pr, opt);
    Json doc = base_report("verify", pr, opt, s);
    doc["inputs"]["grid"] = grid_json(s.grid);
    doc["checks"] = verification_checks(pr, s);
    doc["metadata"] = metadata();
    const bool ok = all_asserts_pass(doc["checks"]);

    const auto format = format_or(opt, "json");
    if (format == "csv") {
        out << "name,kind,value,tol,pass\n";
        for (const auto& c : doc["checks"]) {
            const auto cell = [](const Json& v) {
                if (v.is_number_float()) return format_double(v.get<double>());
                if (v.is_null()) return std::string();
                std::string s = v.dump();
                std::replace(s.begin(), s.end(), ',', ';');
                return s;
            };
            out << csv_line({c["name"].get<std::string>(), c["kind"].get<std::string>(),
                             cell(c["value"]), cell(c["tol"]), cell(c["pass"])});
        }
    } else {
        emit(doc, format, out);
    }
    return ok ? exit_ok : exit_assert;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
    if (parse_values(opt.n, "n").empty()) throw UsageError("oracle needs --n");
    const Problem pr = single_problem(opt);
    const auto ns = parse_ints(opt.n, "n");
    if (ns.size() != 1) throw UsageError("--n: lists are only accepted by sweep");
    const int n = ns.front();
    const auto& p = pr.params;
    const auto sys = oracle_reduce(p.b, p.c, pr.dim, pr.phys, n);
    const auto sols = qes_solve(p.b, p.c, pr.dim, pr.phys, n);

    Json doc;
    doc["command"] = "oracle";
    doc["inputs"] = inputs_json(pr, opt);
    doc["dimension"] = dimension_json(pr.dim);
    doc["level"] = {{"n", n},
                    {"energy", sys.energy},
                    {"q", sys.power},
                    {"lambda", sys.lin},
                    {"kappa", sys.quad},
                    {"a_linear", p.b > 0.0 ? constraint_a(p.b, p.c, pr.dim, pr.phys, n) : 0.0}};
    Json arr = Json::array();
    Json checks = Json::array();
    for (std::size_t i = 0; i < sols.size(); ++i) {
        const auto& s = sols[i];
        Json j;
        j["A"] = s.a_root;
        j["admissible"] = s.a_root > 0.0;
        j["node_count"] = s.node_count;
        j["energy"] = s.energy;
        j["poly"] = s.poly;
        if (opt.check) {
            const PotentialParams ps{s.a_root, p.b, p.c};
            const auto v = effective_potential(ps, pr.dim, pr.phys);
            const auto grid = build_grid(ps, pr.dim, pr.phys, overrides(opt));
            const double res = h_residual(s.state, grid, s.energy, v, pr.phys);
            j["h_residual"] = res;
            j["h_residual_half"] = h_residual(s.state, grid.refined(), s.energy, v, pr.phys);
            checks.push_back(check("state_residual_" + std::to_string(i), "assert", res,
                                   tol.h_residual, res <= tol.h_residual));
        }
        arr.push_back(std::move(j));
    }
    doc["solutions"] = arr;
    doc["checks"] = checks;
    doc["metadata"] = metadata();

    const auto format = format_or(opt, "json");
    if (format == "csv") {
        out << "index,A,admissible,node_count,energy\n";
        for (std::size_t i = 0; i < sols.size(); ++i) {
            out << csv_line({std::to_string(i), format_double(sols[i].a_root),
                             sols[i].a_root > 0.0 ? "true" : "false",
                             std::to_string(sols[i].node_count), format_double(sols[i].energy)});
        }
    } else {
        emit(doc, format, out);
    }
    return all_asserts_pass(checks) ? exit_ok : exit_assert;
}

int cmd_eig(const Options& opt, std::ostream& out) {
    const Problem pr = single_problem(opt);
    if (opt.k < 1) throw UsageError("--k must be >= 1");
    const auto grid = build_grid(pr.params, pr.dim, pr.phys, overrides(opt));
    const auto v = effective_potential(pr.params, pr.dim, pr.phys);
    const auto eig =
        eigen_lowest(v, grid, pr.phys, {static_cast<std::size_t>(opt.k), false, opt.richardson});

    Json doc;
    doc["command"] = "eig";
    doc["inputs"] = inputs_json(pr, opt);
    doc["inputs"]["grid"] = grid_json(grid);
    doc["inputs"]["richardson"] = opt.richardson;
    doc["dimension"] = dimension_json(pr.dim);
    doc["eigenvalues"] = eig.values;
    doc["metadata"] = metadata();

    const auto format = format_or(opt, "json");
    if (format == "csv") {
        out << "k,E\n";
        for (std::size_t i = 0; i < eig.values.size(); ++i) {
            out << csv_line({std::to_string(i), format_double(eig.values[i])});
        }
    } else {
        emit(doc, format, out);
    }
    return exit_ok;
}

namespace {

struct SweepPoint {
    double a, b, c;
    int N, l, n;
};

struct SweepRow {
    PotentialParams params;
    int N = 0, l = 0, n = 0;
    double e_closed = 0.0, e_numeric = 0.0, violation = 0.0;
};

SweepRow sweep_row(const SweepPoint& pt, const Options& opt, const PhysicalParams& phys) {
    if (pt.n < 0) throw DomainError("--n must be >= 0");
    const auto dim = dimension_reduce(pt.N, pt.l);
    auto params = derive_params(pt.a, pt.b, pt.c, opt.derive, dim, phys);
    params.validate();
    require_constraint(params, dim, phys, tol.constraint_rel);

    SweepRow row{params, pt.N, pt.l, pt.n};
    row.violation = constraint_violation(params, dim, phys);
    PotentialParams member = params;
    if (pt.n == 0) {
        row.e_closed = ground_state(params, dim, phys).energy.total;
    } else if (params.c > 0.0) {
        row.e_closed = spectrum(params.b, params.c, dim, phys, pt.n).back().energy;
        member = hierarchy_params(params.b, params.c, dim, phys, pt.n);
    } else {
        row.e_closed = coulomb_level(params.a, dim, phys, pt.n);
    }
    // Level n of the hierarchy is the ground state of member n (Lambda + n).
    const auto member_dim = dimension_reduce(pt.N, pt.l + pt.n);
    const auto grid = build_grid(member, member_dim, phys, overrides(opt));
    row.e_numeric =
        eigen_lowest(effective_potential(member, member_dim, phys), grid, phys).values.front();
    return row;
}

} // namespace

int cmd_sweep(const Options& opt, std::ostream& out) {
    const auto phys = physical(opt);
    if (!opt.derive.empty()) {
        const auto& given = opt.derive == "a" ? opt.a : opt.derive == "b" ? opt.b : opt.c;
        if (!parse_values(given, opt.derive.c_str()).empty()) {
            throw UsageError("--derive " + opt.derive + " conflicts with an explicit --" + opt.derive);
        }
    }
    const auto or_default = [](std::vector<double> v, bool absent, double d) {
        if (absent) v = {d};
        return v;
    };
    const auto as_ints = [](std::vector<int> v, bool absent, int d) {
        if (absent) v = {d};
        return v;
    };
    // An option that was given but expands to nothing (count 0) empties the sweep.
    const auto absent = [](const std::vector<std::string>& t) { return t.empty(); };
    const auto as = or_default(parse_values(opt.a, "a"), absent(opt.a), 0.0);
    const auto bs = or_default(parse_values(opt.b, "b"), absent(opt.b), 0.0);
    const auto cs = or_default(parse_values(opt.c, "c"), absent(opt.c), 0.0);
    const auto Ns = as_ints(parse_ints(opt.N, "N"), absent(opt.N), 3);
    const auto ls = as_ints(parse_ints(opt.l, "l"), absent(opt.l), 0);
    const auto ns = as_ints(parse_ints(opt.n, "n"), absent(opt.n), 0);

    std::vector<SweepPoint> points;
    for (double a : as)
        for (double b : bs)
            for (double c : cs)
                for (int N : Ns)
                    for (int l : ls)
                        for (int n : ns) points.push_back({a, b, c, N, l, n});

    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> failures(points.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                rows[i] = sweep_row(points[i], opt, phys);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(points.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }

    const auto format = format_or(opt, "csv");
    if (format == "json") {
        Json doc;
        doc["command"] = "sweep";
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back({{"a", r.params.a},          {"b", r.params.b},
                           {"c", r.params.c},          {"N", r.N},
                           {"l", r.l},                 {"n", r.n},
                           {"E_closed", r.e_closed},   {"E_numeric", r.e_numeric},
                           {"abs_err", std::abs(r.e_numeric - r.e_closed)},
                           {"constraint_residual", r.violation}});
        }
        doc["rows"] = arr;
        doc["metadata"] = metadata();
        out << dump(doc);
        return exit_ok;
    }
    out << "a,b,c,N,l,n,E_closed,E_numeric,abs_err,constraint_residual\n";
    for (const auto& r : rows) {
        out << csv_line({format_double(r.params.a), format_double(r.params.b),
                         format_double(r.params.c), std::to_string(r.N), std::to_string(r.l),
                         std::to_string(r.n), format_double(r.e_closed), format_double(r.e_numeric),
                         format_double(std::abs(r.e_numeric - r.e_closed)),
                         format_double(r.violation)});
    }
    return exit_ok;
}

} // namespace pertcoul::cli
