#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "rumor/types.hpp"

namespace testutil {

// Seeded generators; every test run sees the same points.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

/// Uniform point of the open simplex {i,s,r > 0, i+s+r = 1}.
inline rumor::State3 random_simplex(std::mt19937_64& g) {
    std::exponential_distribution<double> exp1(1.0);
    double a = exp1(g), b = exp1(g), c = exp1(g);
    const double sum = a + b + c;
    return rumor::State3{a / sum, b / sum, c / sum};
}

/// Interior point of Omega = {r,i >= margin, r+i <= 1-margin}.
inline rumor::State2 random_omega(std::mt19937_64& g, double margin = 1e-3) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double u = uni(g), v = uni(g);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return rumor::State2{margin + u * (1.0 - 3.0 * margin), margin + v * (1.0 - 3.0 * margin)};
}

inline double max_simplex_violation(const std::vector<rumor::State3>& states) {
    double worst = 0.0;
    for (const auto& st : states)
        worst = std::max(worst, std::abs(st.i + st.s + st.r - 1.0));
    return worst;
}

inline std::filesystem::path fresh_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("rumor_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

} // namespace testutil
