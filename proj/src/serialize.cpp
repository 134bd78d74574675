#include "umarg/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "umarg/errors.hpp"

namespace umarg {

std::string double_to_string(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

double string_to_double(const std::string& s) {
    double x = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("bad numeric string: \"" + s + "\"");
    return x;
}

Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array");
    std::vector<int> parts;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(parts);
}

Json spectrum_to_json(const RationalSpectrum& s) {
    Json arr = Json::array();
    for (const Rational& r : s.entries()) arr.push_back(to_string(r));
    return arr;
}

Json phi_to_json(const PhiSet& phi) {
    Json j;
    j["lambda"] = partition_to_json(phi.lam);
    j["mu"] = partition_to_json(phi.mu);
    Json members = Json::array();
    for (const PhiMember& m : phi.members) {
        Json e;
        e["nu"] = partition_to_json(m.nu);
        e["g"] = m.g;
        members.push_back(std::move(e));
    }
    j["members"] = std::move(members);
    return j;
}

Json strip_to_json(const StripDerivation& d) {
    Json j;
    Json lam = Json::array();
    for (const Partition& p : d.lam_chain) lam.push_back(partition_to_json(p));
    Json mu = Json::array();
    for (const Partition& p : d.mu_chain) mu.push_back(partition_to_json(p));
    j["lam_chain"] = std::move(lam);
    j["mu_chain"] = std::move(mu);
    j["nu"] = partition_to_json(d.nu);
    return j;
}

Json maxlex_to_json(const MaxLexResult& r) {
    Json j;
    j["spectrum"] = spectrum_to_json(r.spectrum);
    j["nu"] = partition_to_json(r.nu);
    j["k"] = r.k;
    j["rank"] = r.rank;
    return j;
}

Json counterexample_to_json(const CounterexampleReport& r) {
    Json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["m"] = r.m;
    j["maxlex_nu"] = partition_to_json(r.maxlex_nu);
    j["maxlex_rank"] = r.maxlex_rank;
    j["witness_gamma"] = partition_to_json(r.witness_gamma);
    if (r.witness_g)
        j["witness_g"] = *r.witness_g;
    else
        j["witness_g"] = nullptr;
    j["min_rank_bound"] = r.min_rank_bound;
    j["refutes_conjecture"] = r.refutes_conjecture;
    return j;
}

Json density_to_json(const DensityOperator& rho) {
    Json j;
    j["dim_a"] = rho.dim_a;
    j["dim_b"] = rho.dim_b;
    Json entries = Json::array();
    for (std::size_t r = 0; r < rho.matrix.rows(); ++r)
        for (std::size_t c = 0; c < rho.matrix.cols(); ++c) {
            const Complex z = rho.matrix(r, c);
            entries.push_back(Json::array({z.real(), z.imag()}));
        }
    j["entries"] = std::move(entries);
    return j;
}

DensityOperator density_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim_a") || !j.contains("dim_b") || !j.contains("entries"))
        throw ParseError("density operator needs dim_a, dim_b, entries");
    if (!j["dim_a"].is_number_integer() || !j["dim_b"].is_number_integer())
        throw ParseError("dim_a and dim_b must be integers");
    const int n = j["dim_a"].get<int>();
    const int m = j["dim_b"].get<int>();
    if (n < 1 || m < 1) throw ParseError("dimensions must be positive");
    const std::size_t d = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != d * d)
        throw ParseError("entries must hold " + std::to_string(d * d) + " [re, im] pairs");
    DensityOperator rho{n, m, ComplexMatrix(d, d)};
    std::size_t idx = 0;
    for (const Json& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("each entry must be a [re, im] pair");
        rho.matrix(idx / d, idx % d) = Complex{e[0].get<double>(), e[1].get<double>()};
        ++idx;
    }
    return rho;
}

Json weight_to_json(const WeightMatrix& w) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < w.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < w.cols; ++c) row.push_back(double_to_string(w.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

WeightMatrix weight_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("weight matrix must be a nonempty array of rows");
    WeightMatrix w;
    w.rows = j.size();
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("weight rows must be arrays");
        if (w.cols == 0) w.cols = row.size();
        if (row.size() != w.cols || w.cols == 0)
            throw ParseError("weight rows must share a positive length");
        for (const Json& cell : row) {
            if (cell.is_string())
                w.w.push_back(string_to_double(cell.get<std::string>()));
            else if (cell.is_number())
                w.w.push_back(cell.get<double>());
            else
                throw ParseError("weight entries must be decimal strings or numbers");
        }
    }
    return w;
}

} // namespace umarg
