#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: soliton, shock, elast1, elast2, matrices, verify.
 *
 * Settings come from flags, then keys of a flat JSON file given by
 * --config, then built-in defaults, in that order of precedence. The fully
 * resolved settings are echoed in every JSON record.
 *
 * Exit codes: 0 success, 2 not converged or verify below p_min,
 * 3 invalid configuration or input file, 4 numerical failure.
 */

#include "error.hpp"
#include "hermite.hpp"
#include "io.hpp"
#include "models.hpp"
#include "moments.hpp"
#include "profile.hpp"
#include "residual.hpp"
#include "solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hermitewave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitNumerical = 4;

inline int exit_code(ErrorCode c) noexcept {
    switch (c) {
    case ErrorCode::NotConverged: return kExitNotConverged;
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateParameters: return kExitInvalid;
    default: return kExitNumerical;
    }
}

enum class KeyType { Int, Real, Text, SeedValue };

struct Key {
    std::string name; // config-file key; the flag is --name with '_' -> '-'
    KeyType type;
    json fallback;    // null means "no default" (derived or optional)
    std::string help;
};

namespace detail {

inline std::string flag_of(const std::string& key) {
    std::string f = "--" + key;
    std::replace(f.begin(), f.end(), '_', '-');
    return f;
}

inline double parse_real(const std::string& key, const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(used == s.size() && !s.empty() && std::isfinite(v), ErrorCode::InvalidArgument,
            key + ": '" + s + "' is not a finite number");
    return v;
}

inline json parse_flag(const Key& k, const std::string& s) {
    switch (k.type) {
    case KeyType::Int: {
        const double v = parse_real(k.name, s);
        require(v == std::floor(v) && std::abs(v) < 1e9, ErrorCode::InvalidArgument, k.name + ": expected an integer");
        return json(static_cast<int>(v));
    }
    case KeyType::Real: return json(parse_real(k.name, s));
    case KeyType::Text: return json(s);
    case KeyType::SeedValue: {
        // A preset name, or a comma-separated coefficient list by Hermite index.
        if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+' || s[0] == '.')) {
            json arr = json::array();
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) arr.push_back(parse_real(k.name, item));
            return arr;
        }
        return json(s);
    }
    }
    return json(s);
}

inline json check_file_value(const Key& k, const json& v) {
    const auto bad = [&] { return Error(ErrorCode::InvalidArgument, "config key '" + k.name + "' has the wrong type"); };
    switch (k.type) {
    case KeyType::Int:
        if (v.is_number_integer()) return v;
        if (v.is_number() && v.get<double>() == std::floor(v.get<double>())) return json(static_cast<int>(v.get<double>()));
        throw bad();
    case KeyType::Real:
        if (v.is_number()) return json(v.get<double>());
        throw bad();
    case KeyType::Text:
        if (v.is_string()) return v;
        throw bad();
    case KeyType::SeedValue:
        if (v.is_string()) return v;
        if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); })) return v;
        throw bad();
    }
    throw bad();
}

} // namespace detail

/// Options of one subcommand, resolved by precedence after parsing.
class Settings {
public:
    Settings(CLI::App* sub, std::vector<Key> keys) : keys_(std::move(keys)) {
        sub->add_option("--config", config_path_, "flat JSON file with default values for any option");
        for (const auto& k : keys_) sub->add_option(detail::flag_of(k.name), raw_[k.name], k.help);
        for (const auto& k : keys_) opts_[k.name] = sub->get_option(detail::flag_of(k.name));
    }

    void resolve() {
        resolved_ = json::object();
        for (const auto& k : keys_) resolved_[k.name] = k.fallback;
        if (!config_path_.empty()) {
            std::ifstream in(config_path_);
            require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot read config file " + config_path_);
            json file;
            try {
                file = json::parse(in);
            } catch (const json::exception& e) {
                throw Error(ErrorCode::InvalidArgument, "config file is not valid JSON: " + std::string(e.what()));
            }
            require(file.is_object(), ErrorCode::InvalidArgument, "config file must hold a flat JSON object");
            for (const auto& [name, value] : file.items()) {
                const Key* k = find(name);
                require(k != nullptr, ErrorCode::InvalidArgument, "unknown config key '" + name + "'");
                resolved_[name] = value.is_null() ? json(nullptr) : detail::check_file_value(*k, value);
            }
        }
        for (const auto& k : keys_)
            if (opts_[k.name]->count() > 0) resolved_[k.name] = detail::parse_flag(k, raw_[k.name]);
    }

    const json& resolved() const { return resolved_; }
    bool has(const std::string& name) const { return !resolved_.at(name).is_null(); }
    int integer(const std::string& name) const { return need(name).get<int>(); }
    double real(const std::string& name) const { return need(name).get<double>(); }
    std::string text(const std::string& name) const { return need(name).get<std::string>(); }
    const json& value(const std::string& name) const { return need(name); }

    /// Fill a key that defaults to a derived value.
    void derive(const std::string& name, json v) {
        if (!has(name)) resolved_[name] = std::move(v);
    }

private:
    const Key* find(const std::string& name) const {
        for (const auto& k : keys_)
            if (k.name == name) return &k;
        return nullptr;
    }
    const json& need(const std::string& name) const {
        const json& v = resolved_.at(name);
        require(!v.is_null(), ErrorCode::InvalidArgument, "missing required setting '" + name + "'");
        return v;
    }

    std::vector<Key> keys_;
    std::string config_path_;
    std::map<std::string, std::string> raw_;
    std::map<std::string, CLI::Option*> opts_;
    json resolved_;
};

namespace detail {

inline std::vector<Key> basis_keys(int n, const char* parity, const char* seed) {
    return {
        {"n", KeyType::Int, n, "highest Hermite index n_max"},
        {"parity", KeyType::Text, parity, "basis parity: all|even"},
        {"k_max", KeyType::Int, nullptr, "highest moment order in the deficit table (default n + 2)"},
        {"seed", KeyType::SeedValue, seed, "preset gaussian|K|K1, or comma-separated coefficients by Hermite index"},
        {"tol", KeyType::Real, 1e-12, "solver tolerance"},
        {"max_iter", KeyType::Int, nullptr, "solver iteration cap"},
        {"damping", KeyType::Real, 1.0, "Newton step scale in (0, 1]"},
        {"deficit_tol", KeyType::Real, kDeficitTolerance, "relative threshold below which a deficit counts as zero"},
        {"eps", KeyType::Real, 1.0, "profile width eps > 0"},
        {"t", KeyType::Real, 0.0, "evaluation time"},
        {"grid_min", KeyType::Real, -8.0, "profile grid start"},
        {"grid_max", KeyType::Real, 8.0, "profile grid end"},
        {"grid_count", KeyType::Int, 801, "profile grid points"},
        {"output", KeyType::Text, nullptr, "solution JSON path (default: standard output)"},
        {"csv", KeyType::Text, nullptr, "profile CSV path"},
        {"deficits_csv", KeyType::Text, nullptr, "deficit table CSV path"},
    };
}

inline std::vector<Key> with(std::vector<Key> base, std::vector<Key> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

inline BasisSpec basis_of(const Settings& s) {
    BasisSpec b{s.integer("n"), parse_parity(s.text("parity"))};
    b.validate();
    return b;
}

inline Seed seed_of(const Settings& s) {
    const json& v = s.value("seed");
    if (v.is_string()) return seed_preset(v.get<std::string>());
    const auto d = v.get<std::vector<double>>();
    require(!d.empty(), ErrorCode::InvalidArgument, "explicit seed is empty");
    return explicit_seed(Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size())));
}

inline SolverOptions options_of(const Settings& s, SolverOptions o) {
    o.tol = s.real("tol");
    o.damping = s.real("damping");
    if (s.has("max_iter")) o.max_iter = s.integer("max_iter");
    require(o.tol > 0.0, ErrorCode::InvalidArgument, "tol must be positive");
    require(o.max_iter > 0, ErrorCode::InvalidArgument, "max_iter must be positive");
    return o;
}

inline int k_max_of(Settings& s, const BasisSpec& b) {
    s.derive("k_max", b.n_max + 2);
    const int k = s.integer("k_max");
    require(k >= b.n_max, ErrorCode::InvalidArgument, "k_max must be at least n");
    return k;
}

inline std::vector<double> grid_of(const Settings& s) {
    require(s.real("eps") > 0.0, ErrorCode::InvalidArgument, "eps must be positive");
    return uniform_grid(s.real("grid_min"), s.real("grid_max"), s.integer("grid_count"));
}

inline void write_text(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), ErrorCode::InvalidArgument, "cannot write " + path);
    f << body;
}

inline void emit(const Settings& s, const json& record, std::ostream& out) {
    const std::string body = record.dump(2) + "\n";
    if (s.has("output")) write_text(s.text("output"), body);
    else out << body;
}

inline void emit_tables(const Settings& s, const ProfileTable& prof, const std::vector<DeficitSequence>& defs) {
    if (s.has("csv")) {
        std::ostringstream os;
        write_csv(os, prof);
        write_text(s.text("csv"), os.str());
    }
    if (s.has("deficits_csv")) {
        std::ostringstream os;
        write_deficit_csv(os, defs);
        write_text(s.text("deficits_csv"), os.str());
    }
}

inline int overall_order(const std::vector<DeficitSequence>& defs) {
    int p = LaurentSeries::kInfinite;
    for (const auto& d : defs)
        if (!d.diagnostic) p = std::min(p, d.achieved_order);
    return p;
}

inline json deficits_json(const std::vector<DeficitSequence>& defs) {
    json a = json::array();
    for (const auto& d : defs) a.push_back(to_json(d));
    return a;
}

inline json record(const std::string& kind, const Settings& s, const CoeffVec& prof, double velocity, json constants,
                   const std::vector<DeficitSequence>& defs, const SolveReport& rep,
                   const std::vector<std::string>& warnings, const std::string& seed_name) {
    json j;
    j["kind"] = kind;
    j["config"] = s.resolved();
    j["profile"] = to_json(prof);
    j["velocity"] = velocity;
    j["constants"] = std::move(constants);
    j["achieved_order"] = overall_order(defs);
    j["deficits"] = deficits_json(defs);
    j["solver"] = to_json(rep);
    j["solver"]["seed_name"] = seed_name;
    j["warnings"] = warnings;
    return j;
}

inline void warn(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << "\n";
}

inline json elasticity_constants(const ElasticityParams& p) {
    json c{{"system", std::string(to_string(p.system))},
           {"branch", std::string(to_string(p.branch))},
           {"u0", p.u0},
           {"du", p.du},
           {"sigma0", p.sigma0},
           {"dsigma", p.dsigma},
           {"k2", p.k2},
           {"v", p.v}};
    if (p.rho0) c["rho0"] = *p.rho0;
    if (p.drho) c["drho"] = *p.drho;
    if (p.system == ElasticSystem::Two) c["v_via_stress"] = elasticity2_velocity_via_stress(p);
    return c;
}

inline int cmd_soliton(Settings& s, std::ostream& out, std::ostream& err) {
    const BasisSpec b = basis_of(s);
    const int k_max = k_max_of(s, b);
    const auto tables = assemble_moment_tables(b, k_max);
    const auto res = solve_hopf_soliton(tables, s.real("l0"), s.real("dl"), seed_of(s),
                                        options_of(s, SolverOptions::fixed_point_defaults()));
    warn(err, res.warnings);
    const std::vector<DeficitSequence> defs{soliton_deficits(res.ansatz, tables, k_max, s.real("deficit_tol"))};
    emit(s, record("soliton", s, res.ansatz.phi, res.ansatz.c, json{{"l0", res.ansatz.l0}, {"dl", res.ansatz.dl}}, defs,
                   res.report, res.warnings, res.seed_name),
         out);
    emit_tables(s, profile_eval(res.ansatz, grid_of(s), s.real("t"), s.real("eps")), defs);
    return kExitOk;
}

inline int cmd_shock(Settings& s, std::ostream& out, std::ostream& err) {
    const BasisSpec b = basis_of(s);
    const int k_max = k_max_of(s, b);
    const auto tables = assemble_moment_tables(b, k_max);
    const auto res = solve_hopf_shock(tables, s.real("h0"), s.real("dh"), seed_of(s),
                                      options_of(s, SolverOptions::newton_defaults()));
    warn(err, res.warnings);
    const std::vector<DeficitSequence> defs{shock_deficits(res.ansatz, tables, k_max, s.real("deficit_tol"))};
    emit(s, record("shock", s, res.ansatz.theta, res.ansatz.a, json{{"h0", res.ansatz.h0}, {"dh", res.ansatz.dh}}, defs,
                   res.report, res.warnings, res.seed_name),
         out);
    emit_tables(s, profile_eval(res.ansatz, grid_of(s), s.real("t"), s.real("eps")), defs);
    return kExitOk;
}

inline int cmd_elasticity(Settings& s, ElasticSystem system, std::ostream& out, std::ostream& err) {
    const BasisSpec b = basis_of(s);
    const int k_max = k_max_of(s, b);
    const Branch br = parse_branch(s.text("branch"));
    // Validate the jump constants before the (slower) table assembly.
    if (system == ElasticSystem::One) elasticity1_params(s.real("u0"), s.real("du"), s.real("sigma0"), s.real("k2"), br);
    else elasticity2_params(s.real("u0"), s.real("du"), s.real("rho0"), s.real("sigma0"), s.real("k2"), br);
    const auto tables = assemble_moment_tables(b, k_max);
    const auto opts = options_of(s, SolverOptions::newton_defaults());
    const ElasticitySolution sol =
        system == ElasticSystem::One
            ? solve_elasticity1(tables, s.real("u0"), s.real("du"), s.real("sigma0"), s.real("k2"), br, seed_of(s), opts)
            : solve_elasticity2(tables, s.real("u0"), s.real("du"), s.real("rho0"), s.real("sigma0"), s.real("k2"), br,
                                seed_of(s), opts);
    warn(err, sol.warnings);
    const auto defs = elasticity_deficits(sol.params, sol.profile, tables, k_max, s.real("deficit_tol"));
    emit(s, record(system == ElasticSystem::One ? "elast1" : "elast2", s, sol.profile, sol.params.v,
                   elasticity_constants(sol.params), defs, sol.report, sol.warnings, sol.seed_name),
         out);
    emit_tables(s, profile_eval(sol, grid_of(s), s.real("t"), s.real("eps")), defs);
    return kExitOk;
}

inline json matrix_checks(const MomentTables& t) {
    const int d = t.dim();
    const auto idx = t.basis.indices();
    double n0 = 0.0, sym = 0.0, s0 = 0.0, parity = 0.0, closed = 0.0;
    const Eigen::VectorXd a = t.A.row(t.row_of(0)).transpose();
    n0 = (t.N[0] - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    for (const auto& N : t.N) sym = std::max(sym, (N - N.transpose()).cwiseAbs().maxCoeff());
    s0 = (t.S[0] + t.S[0].transpose() - a * a.transpose()).cwiseAbs().maxCoeff();
    for (int r = 0; r < t.rows(); ++r) {
        for (int c = 0; c < d; ++c) {
            const int k = t.orders[static_cast<std::size_t>(r)];
            const int j = idx[static_cast<std::size_t>(c)];
            if ((k + j) % 2 != 0) parity = std::max(parity, std::abs(t.A(r, c)));
            const double cf = moment_closed_form(k, j);
            closed = std::max(closed, std::abs(t.A(r, c) - cf) / std::max(1.0, std::abs(cf)));
        }
    }
    return json{{"N0_minus_identity", n0},
                {"N_asymmetry", sym},
                {"S0_plus_transpose_minus_aaT", s0},
                {"A_parity_zeros", parity},
                {"A_closed_form_rel", closed}};
}

inline int cmd_matrices(Settings& s, std::ostream& out) {
    const BasisSpec b = basis_of(s);
    const int k_max = k_max_of(s, b);
    const auto tables = assemble_moment_tables(b, k_max);
    json j;
    j["kind"] = "matrices";
    j["config"] = s.resolved();
    j["tables"] = to_json(tables);
    j["checks"] = matrix_checks(tables);
    emit(s, j, out);
    return kExitOk;
}

inline json load_solution(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::InvalidArgument, "cannot read solution file " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, "solution file is not valid JSON: " + std::string(e.what()));
    }
}

inline int cmd_verify(Settings& s, const std::string& path, std::ostream& out) {
    const json sol = load_solution(path);
    std::vector<DeficitSequence> defs;
    std::string kind;
    int stored = 0;
    try {
        kind = sol.at("kind").get<std::string>();
        stored = sol.at("achieved_order").get<int>();
        const CoeffVec prof = coeff_from_json(sol.at("profile"));
        require(std::abs(prof.mass() - 1.0) <= 1e-8, ErrorCode::InvalidArgument,
                "profile has total mass " + std::to_string(prof.mass()) + "; a unit-mass profile is required");
        const json& cfg = sol.at("config");
        if (!s.has("k_max")) s.derive("k_max", cfg.at("k_max").get<int>());
        if (!s.has("deficit_tol")) s.derive("deficit_tol", cfg.at("deficit_tol").get<double>());
        const int k_max = s.integer("k_max");
        const double tol = s.real("deficit_tol");
        require(k_max >= 0, ErrorCode::InvalidArgument, "k_max must be non-negative");
        const auto tables = assemble_moment_tables(prof.basis, k_max);
        const json& c = sol.at("constants");
        const double vel = sol.at("velocity").get<double>();
        if (kind == "soliton") {
            const SolitonAnsatz a{c.at("l0").get<double>(), c.at("dl").get<double>(), vel, prof};
            defs.push_back(soliton_deficits(a, tables, k_max, tol));
        } else if (kind == "shock") {
            const ShockAnsatz a{c.at("h0").get<double>(), c.at("dh").get<double>(), vel, prof};
            defs.push_back(shock_deficits(a, tables, k_max, tol));
        } else if (kind == "elast1" || kind == "elast2") {
            ElasticityParams p;
            p.system = kind == "elast1" ? ElasticSystem::One : ElasticSystem::Two;
            p.branch = parse_branch(c.at("branch").get<std::string>());
            p.u0 = c.at("u0").get<double>();
            p.du = c.at("du").get<double>();
            p.sigma0 = c.at("sigma0").get<double>();
            p.dsigma = c.at("dsigma").get<double>();
            p.k2 = c.at("k2").get<double>();
            p.v = vel;
            if (p.system == ElasticSystem::Two) {
                p.rho0 = c.at("rho0").get<double>();
                p.drho = c.at("drho").get<double>();
            }
            defs = elasticity_deficits(p, prof, tables, k_max, tol);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown solution kind '" + kind + "'");
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed solution file: ") + e.what());
    }

    const json& psi_v = s.value("psi");
    const auto psi_d = psi_v.is_string() ? std::vector<double>{} : psi_v.get<std::vector<double>>();
    require(!psi_d.empty(), ErrorCode::InvalidArgument, "psi must be a comma-separated coefficient list");
    const TestFunction psi{CoeffVec::from_dense(BasisSpec{static_cast<int>(psi_d.size()) - 1, Parity::All},
                                                Eigen::Map<const Eigen::VectorXd>(psi_d.data(), static_cast<Eigen::Index>(psi_d.size()))),
                           s.real("center")};
    json pairing = json::array();
    for (const auto& d : defs) {
        if (d.diagnostic) continue;
        pairing.push_back(json{{"equation", d.equation},
                               {"series", to_json(pair_with_test_function(d, psi, d.k_max() + d.offset + 1))}});
    }
    const int p = overall_order(defs);
    const int p_min = s.integer("p_min");
    json j;
    j["kind"] = "verify";
    j["config"] = s.resolved();
    j["solution_kind"] = kind;
    j["achieved_order"] = p;
    j["stored_achieved_order"] = stored;
    j["p_min"] = p_min;
    j["pass"] = p >= p_min;
    j["deficits"] = deficits_json(defs);
    j["pairing"] = pairing;
    emit(s, j, out);
    return p >= p_min ? kExitOk : kExitNotConverged;
}

} // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using detail::with;
    CLI::App app{"Hermite-function moment solver for narrow solitons and shock profiles"};
    app.require_subcommand(1);

    auto* sol = app.add_subcommand("soliton", "Hopf soliton profile by fixed-point iteration");
    Settings s_sol(sol, with(detail::basis_keys(4, "even", "gaussian"),
                             {{"l0", KeyType::Real, 0.0, "background level"},
                              {"dl", KeyType::Real, 1.0, "amplitude, nonzero"}}));
    auto* sh = app.add_subcommand("shock", "Hopf shock profile by Newton");
    Settings s_sh(sh, with(detail::basis_keys(4, "even", "K"),
                           {{"h0", KeyType::Real, 0.0, "left state"}, {"dh", KeyType::Real, 1.0, "jump, nonzero"}}));
    const std::vector<Key> elastic{{"u0", KeyType::Real, 1.0, "background velocity"},
                                   {"du", KeyType::Real, -1.0, "velocity jump, nonzero"},
                                   {"sigma0", KeyType::Real, 0.5, "background stress (plot offset)"},
                                   {"k2", KeyType::Real, 0.1, "Hooke modulus, positive"},
                                   {"branch", KeyType::Text, "plus", "root branch: plus|minus"}};
    auto* e1 = app.add_subcommand("elast1", "elasticity shock: momentum + Hooke law");
    Settings s_e1(e1, with(detail::basis_keys(4, "even", "K"), elastic));
    auto* e2 = app.add_subcommand("elast2", "elasticity shock: mass + momentum + Hooke law");
    Settings s_e2(e2, with(with(detail::basis_keys(4, "even", "K"), elastic),
                           {{"rho0", KeyType::Real, 1.1, "background density, positive"}}));
    auto* mat = app.add_subcommand("matrices", "dump the moment tables A, N(k), S(k)");
    Settings s_mat(mat, {{"n", KeyType::Int, 4, "highest Hermite index n_max"},
                         {"parity", KeyType::Text, "even", "basis parity: all|even|odd"},
                         {"k_max", KeyType::Int, nullptr, "highest moment order (default n + 2)"},
                         {"output", KeyType::Text, nullptr, "JSON path (default: standard output)"}});
    auto* ver = app.add_subcommand("verify", "recompute deficits and achieved order of a solution file");
    std::string solution_path;
    ver->add_option("solution", solution_path, "solution JSON written by this tool")->required();
    Settings s_ver(ver, {{"p_min", KeyType::Int, 1, "required achieved order"},
                         {"k_max", KeyType::Int, nullptr, "highest moment order (default: from the file)"},
                         {"deficit_tol", KeyType::Real, nullptr, "zero threshold (default: from the file)"},
                         {"psi", KeyType::SeedValue, json::array({1.0}), "test function coefficients by Hermite index"},
                         {"center", KeyType::Real, 0.0, "expansion point of the test function"},
                         {"output", KeyType::Text, nullptr, "JSON path (default: standard output)"}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (sol->parsed()) return s_sol.resolve(), detail::cmd_soliton(s_sol, out, err);
        if (sh->parsed()) return s_sh.resolve(), detail::cmd_shock(s_sh, out, err);
        if (e1->parsed()) return s_e1.resolve(), detail::cmd_elasticity(s_e1, ElasticSystem::One, out, err);
        if (e2->parsed()) return s_e2.resolve(), detail::cmd_elasticity(s_e2, ElasticSystem::Two, out, err);
        if (mat->parsed()) return s_mat.resolve(), detail::cmd_matrices(s_mat, out);
        if (ver->parsed()) return s_ver.resolve(), detail::cmd_verify(s_ver, solution_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hermitewave"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace hermitewave::cli
