#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scmap/spectra.hpp"

namespace scmap {

enum class OutputFormat { csv, json, pretty };

/// Outcome of a single space/system mapping request.
struct MapRecord {
    double delta = 0.0;
    int dimension = 3;
    int ell = 0;
    int lambda = 0;
    int n_prime = 0;
    int L = 0;
    int m_prime = 0;
    double E0 = 0.0;
    double alpha = 0.0;
    double c2 = 0.0, c4 = 0.0, c6 = 0.0, c8 = 0.0, c10 = 0.0;
    double ehat_exact = 0.0;
};

/// Constraint-point solve summary.
struct SusyPointRecord {
    double e2 = 1.0;
    double M = 0.0;
    double delta = 0.0;
    double res1 = 0.0;
    double res2 = 0.0;
    int iterations = 0;
};

/// One line of the self-diagnostic command.
struct CheckRecord {
    std::string check;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

namespace detail {

inline std::string fmt(const char* format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

inline double parse_double(const std::string& field, const char* context)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("csv parse: bad number in ") + context + ": '" + field + "'");
    }
    if (used != field.size())
        throw std::invalid_argument(std::string("csv parse: trailing junk in ") + context + ": '" + field + "'");
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

} // namespace detail

// ---------------------------------------------------------------- table 1

inline std::string to_csv(const std::vector<Table1Record>& records)
{
    std::string out = "delta,N,ell,n,energy,flag\n";
    for (const auto& r : records) {
        out += detail::fmt("%g", r.delta);
        out += ',' + std::to_string(r.dimension) + ',' + std::to_string(r.ell) + ',' + std::to_string(r.n);
        out += ',' + detail::fmt("%.6f", r.energy);
        out += ',';
        out += r.positive ? "positive" : "bound";
        out += '\n';
    }
    return out;
}

inline std::vector<Table1Record> parse_table1_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "delta,N,ell,n,energy,flag")
        throw std::invalid_argument("csv parse: bad table1 header");
    std::vector<Table1Record> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 6)
            throw std::invalid_argument("csv parse: table1 row needs 6 fields");
        Table1Record r;
        r.delta = detail::parse_double(f[0], "delta");
        r.dimension = static_cast<int>(detail::parse_double(f[1], "N"));
        r.ell = static_cast<int>(detail::parse_double(f[2], "ell"));
        r.n = static_cast<int>(detail::parse_double(f[3], "n"));
        r.energy = detail::parse_double(f[4], "energy");
        if (f[5] != "bound" && f[5] != "positive")
            throw std::invalid_argument("csv parse: bad flag '" + f[5] + "'");
        r.positive = f[5] == "positive";
        records.push_back(r);
    }
    return records;
}

inline std::string to_json(const std::vector<Table1Record>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"delta", r.delta},
                       {"N", r.dimension},
                       {"ell", r.ell},
                       {"n", r.n},
                       {"energy", r.energy},
                       {"flag", r.positive ? "positive" : "bound"}});
    }
    return arr.dump(2) + "\n";
}

inline std::string to_pretty(const std::vector<Table1Record>& records)
{
    std::string out = "delta     N  ell  n     energy  flag\n";
    for (const auto& r : records) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-8g %2d  %3d  %d  %9.6f  %s\n", r.delta, r.dimension, r.ell, r.n, r.energy,
                      r.positive ? "positive" : "bound");
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------- table 2

inline std::string to_csv(const std::vector<Table2Record>& records)
{
    std::string out = "delta,ell,L,E0_abs,Ehat_mesh,Ehat_exact,abs_diff\n";
    for (const auto& r : records) {
        out += detail::fmt("%g", r.delta);
        out += ',' + std::to_string(r.ell) + ',' + std::to_string(r.L);
        out += ',' + detail::fmt("%.6f", r.e0_abs);
        out += ',' + detail::fmt("%.6f", r.ehat_mesh);
        out += ',' + detail::fmt("%.6f", r.ehat_exact);
        out += ',' + detail::fmt("%.6f", r.abs_diff);
        out += '\n';
    }
    return out;
}

inline std::vector<Table2Record> parse_table2_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "delta,ell,L,E0_abs,Ehat_mesh,Ehat_exact,abs_diff")
        throw std::invalid_argument("csv parse: bad table2 header");
    std::vector<Table2Record> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 7)
            throw std::invalid_argument("csv parse: table2 row needs 7 fields");
        Table2Record r;
        r.delta = detail::parse_double(f[0], "delta");
        r.ell = static_cast<int>(detail::parse_double(f[1], "ell"));
        r.L = static_cast<int>(detail::parse_double(f[2], "L"));
        r.e0_abs = detail::parse_double(f[3], "E0_abs");
        r.ehat_mesh = detail::parse_double(f[4], "Ehat_mesh");
        r.ehat_exact = detail::parse_double(f[5], "Ehat_exact");
        r.abs_diff = detail::parse_double(f[6], "abs_diff");
        records.push_back(r);
    }
    return records;
}

inline std::string to_json(const std::vector<Table2Record>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"delta", r.delta},
                       {"ell", r.ell},
                       {"L", r.L},
                       {"E0_abs", r.e0_abs},
                       {"Ehat_mesh", r.ehat_mesh},
                       {"Ehat_exact", r.ehat_exact},
                       {"abs_diff", r.abs_diff}});
    }
    return arr.dump(2) + "\n";
}

inline std::string to_pretty(const std::vector<Table2Record>& records)
{
    std::string out = "delta     ell  L     E0_abs   Ehat_mesh  Ehat_exact  abs_diff\n";
    for (const auto& r : records) {
        char buf[120];
        std::snprintf(buf, sizeof(buf), "%-8g %3d  %d  %9.6f  %10.6f  %10.6f  %.6f\n", r.delta, r.ell, r.L, r.e0_abs,
                      r.ehat_mesh, r.ehat_exact, r.abs_diff);
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------- map

inline std::string to_csv(const std::vector<MapRecord>& records)
{
    std::string out = "delta,N,ell,lambda,N_prime,L,M_prime,E0,alpha,c2,c4,c6,c8,c10,Ehat_exact\n";
    for (const auto& r : records) {
        out += detail::fmt("%g", r.delta);
        out += ',' + std::to_string(r.dimension) + ',' + std::to_string(r.ell) + ',' + std::to_string(r.lambda);
        out += ',' + std::to_string(r.n_prime) + ',' + std::to_string(r.L) + ',' + std::to_string(r.m_prime);
        out += ',' + detail::fmt("%.9f", r.E0);
        out += ',' + detail::fmt("%.9f", r.alpha);
        for (double c : {r.c2, r.c4, r.c6, r.c8, r.c10})
            out += ',' + detail::fmt("%.12e", c);
        out += ',' + detail::fmt("%.6f", r.ehat_exact);
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<MapRecord>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"delta", r.delta},
                       {"N", r.dimension},
                       {"ell", r.ell},
                       {"lambda", r.lambda},
                       {"N_prime", r.n_prime},
                       {"L", r.L},
                       {"M_prime", r.m_prime},
                       {"E0", r.E0},
                       {"alpha", r.alpha},
                       {"c2", r.c2},
                       {"c4", r.c4},
                       {"c6", r.c6},
                       {"c8", r.c8},
                       {"c10", r.c10},
                       {"Ehat_exact", r.ehat_exact}});
    }
    return arr.dump(2) + "\n";
}

inline std::string to_pretty(const std::vector<MapRecord>& records)
{
    std::string out;
    for (const auto& r : records) {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "delta=%g N=%d ell=%d lambda=%d -> N'=%d L=%d M'=%d\n"
                      "  E0=%.9f alpha=%.9f Ehat_exact=%.6f\n"
                      "  oscillator: c2=%.9e c4=%.9e c6=%.9e c8=%.9e c10=%.9e\n",
                      r.delta, r.dimension, r.ell, r.lambda, r.n_prime, r.L, r.m_prime, r.E0, r.alpha, r.ehat_exact,
                      r.c2, r.c4, r.c6, r.c8, r.c10);
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------- susy

inline std::string to_csv(const std::vector<SusyPointRecord>& records)
{
    std::string out = "e2,M,delta,res1,res2,iterations\n";
    for (const auto& r : records) {
        out += detail::fmt("%g", r.e2);
        out += ',' + detail::fmt("%.10f", r.M);
        out += ',' + detail::fmt("%.10f", r.delta);
        out += ',' + detail::fmt("%.3e", r.res1);
        out += ',' + detail::fmt("%.3e", r.res2);
        out += ',' + std::to_string(r.iterations);
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<SusyPointRecord>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"e2", r.e2},
                       {"M", r.M},
                       {"delta", r.delta},
                       {"res1", r.res1},
                       {"res2", r.res2},
                       {"iterations", r.iterations}});
    }
    return arr.dump(2) + "\n";
}

inline std::string to_pretty(const std::vector<SusyPointRecord>& records)
{
    std::string out;
    for (const auto& r : records) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "constraint point (e2=%g): M = %.10f, delta = %.10f\n"
                      "  residuals: %.3e, %.3e (%d iterations)\n",
                      r.e2, r.M, r.delta, r.res1, r.res2, r.iterations);
        out += buf;
    }
    return out;
}

inline std::string to_csv(const std::vector<CheckRecord>& records)
{
    std::string out = "check,value,threshold,status\n";
    for (const auto& r : records) {
        out += r.check;
        out += ',' + detail::fmt("%.6e", r.value);
        out += ',' + detail::fmt("%.6e", r.threshold);
        out += ',';
        out += r.pass ? "pass" : "fail";
        out += '\n';
    }
    return out;
}

inline std::string to_json(const std::vector<CheckRecord>& records)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back(
            {{"check", r.check}, {"value", r.value}, {"threshold", r.threshold}, {"status", r.pass ? "pass" : "fail"}});
    }
    return arr.dump(2) + "\n";
}

inline std::string to_pretty(const std::vector<CheckRecord>& records)
{
    std::string out;
    for (const auto& r : records) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-34s %11.4e  (threshold %8.1e)  %s\n", r.check.c_str(), r.value, r.threshold,
                      r.pass ? "pass" : "FAIL");
        out += buf;
    }
    return out;
}

template <class Record>
std::string emit(const std::vector<Record>& records, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return to_csv(records);
    case OutputFormat::json:
        return to_json(records);
    case OutputFormat::pretty:
        return to_pretty(records);
    }
    throw std::logic_error("emit: unknown format");
}

} // namespace scmap
