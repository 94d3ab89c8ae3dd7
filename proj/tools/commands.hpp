#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace disklab::cli {

struct GenerateArgs {
    std::string family = "geometric";  // geometric | two-ray | pair | perturbed
    int n_max = 15;
    std::uint64_t seed = 1;
    double factor = 0.25;  // perturbed family
    std::string out;
};

struct CheckArgs {
    std::string in;
    int n_max = 0;  // 0: use the file as-is
    int node_count = 512;
    double mass_cap = 1e6;
    long walks = 20000;
    std::uint64_t seed = 1;
    double epsilon_shell = 1e-4;
    double cutoff = 0.5;
    int grid_j = 8;
    int grid_q = 4;
    double h_scale = 4.0;
    std::string out;
};

struct HarmonicMeasureArgs {
    std::string z;                   // "re,im"
    std::vector<std::string> holes;  // "re,im,rho" pseudo radius
    long walks = 100000;
    std::uint64_t seed = 1;
    double epsilon_shell = 1e-4;
    std::string out;
};

struct IdealCostsArgs {
    std::string mode = "corona";  // corona | condition-c | j-membership
    std::string example = "none"; // none | f2 | tres
    std::string seq1;
    std::string seq2;
    int n = 2;        // f2 exponent
    double p = 1.0;   // membership exponent
    int grid_j = 10;
    int grid_q = 8;
    bool augment = true;  // add the generator zeros to the grid
    int node_count = 512;
    double mass_cap = 1e6;
    std::string out;
};

struct CounterexampleArgs {
    int n_max = 20;
    int node_count = 512;
    double mass_cap = 1e6;
    std::string out;
    std::string csv;
};

struct SplitProductArgs {
    std::string m;  // comma separated factors
    double eta = 0.5;
    std::string out;
};

int cmd_generate(const GenerateArgs& args);
int cmd_check_interpolating(const CheckArgs& args);
int cmd_harmonic_measure(const HarmonicMeasureArgs& args);
int cmd_ideal_costs(const IdealCostsArgs& args);
int cmd_counterexample(const CounterexampleArgs& args);
int cmd_split_product(const SplitProductArgs& args);

}  // namespace disklab::cli
