#pragma once

// JSON and CSV serialization. Numbers in CSV use 17 significant digits.

#include "error.hpp"
#include "hermite.hpp"
#include "laurent.hpp"
#include "moments.hpp"
#include "profile.hpp"
#include "residual.hpp"
#include "solvers.hpp"

#include <json.hpp>

#include <Eigen/Dense>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace hermitewave {

using json = nlohmann::ordered_json;

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline json to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

inline json to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(to_json(Eigen::VectorXd(m.row(i).transpose())));
    return rows;
}

inline json to_json(const LaurentSeries& s) {
    json j;
    j["valuation"] = s.is_zero() ? json(nullptr) : json(s.valuation());
    j["trunc_order"] = s.trunc_order() == LaurentSeries::kInfinite ? json(nullptr) : json(s.trunc_order());
    j["coeffs"] = json(std::vector<double>(s.coeffs().begin(), s.coeffs().end()));
    j["norm"] = s.norm();
    return j;
}

inline json to_json(const BasisSpec& b) {
    return json{{"n_max", b.n_max}, {"parity", std::string(to_string(b.parity))}, {"indices", b.indices()}};
}

inline json to_json(const CoeffVec& c) {
    json j = to_json(c.basis);
    j["coefficients"] = to_json(c.c);
    return j;
}

inline CoeffVec coeff_from_json(const json& j) {
    try {
        const BasisSpec b{j.at("n_max").get<int>(), parse_parity(j.at("parity").get<std::string>())};
        const auto v = j.at("coefficients").get<std::vector<double>>();
        return CoeffVec(b, Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed coefficient block: ") + e.what());
    }
}

inline json to_json(const SolveReport& r) {
    return json{{"method", r.method},
                {"converged", r.converged},
                {"iterations", r.iterations},
                {"residual_inf", r.residual_inf},
                {"equation_residual", r.equation_residual},
                {"cond_A", r.cond},
                {"orders", r.orders},
                {"seed", to_json(r.seed)}};
}

inline json to_json(const DeficitSequence& d) {
    json zero = json::array();
    for (int k = 0; k <= d.k_max(); ++k) zero.push_back(d.is_zero(k));
    return json{{"equation", d.equation},
                {"offset", d.offset},
                {"tol", d.tol},
                {"D", d.D},
                {"scale", d.scale},
                {"zero", zero},
                {"constrained", d.constrained},
                {"constrained_ok", d.constrained_ok()},
                {"achieved_order", d.achieved_order},
                {"order_is_lower_bound", d.order_is_lower_bound},
                {"diagnostic", d.diagnostic}};
}

inline json to_json(const MomentTables& t) {
    json N = json::array(), S = json::array();
    for (int r = 0; r < t.rows(); ++r) {
        N.push_back(to_json(t.N[static_cast<std::size_t>(r)]));
        S.push_back(to_json(t.S[static_cast<std::size_t>(r)]));
    }
    return json{{"basis", to_json(t.basis)}, {"orders", t.orders}, {"cond_A", t.cond_A},
                {"A", to_json(t.A)},         {"N", N},              {"S", S}};
}

inline void write_csv(std::ostream& os, const ProfileTable& tab) {
    for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? "," : "") << tab.columns[c];
    os << "\n";
    for (std::size_t r = 0; r < tab.size(); ++r) {
        for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? "," : "") << format_number(tab.values[c][r]);
        os << "\n";
    }
}

inline void write_deficit_csv(std::ostream& os, const std::vector<DeficitSequence>& defs) {
    os << "equation,k,eps_power,D,scale,zero,constrained\n";
    for (const auto& d : defs) {
        for (int k = 0; k <= d.k_max(); ++k) {
            const bool cons = std::find(d.constrained.begin(), d.constrained.end(), k) != d.constrained.end();
            os << d.equation << "," << k << "," << k + d.offset << "," << format_number(d.D[static_cast<std::size_t>(k)])
               << "," << format_number(d.scale[static_cast<std::size_t>(k)]) << "," << (d.is_zero(k) ? 1 : 0) << ","
               << (cons ? 1 : 0) << "\n";
        }
    }
}

} // namespace hermitewave
