#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// Flat key=value config file; command-line flags win; unknown keys rejected.
class ConfigBinder {
public:
    explicit ConfigBinder(CLI::App* sub) : sub_(sub) {
        sub_->add_option("--config", path_, "flat key=value config file");
    }

    template <typename T>
    void bind(CLI::Option* opt, T* target) {
        std::string key = opt->get_name(false, true);
        if (key.rfind("--", 0) == 0) key = key.substr(2);
        setters_[key] = [opt, target](const std::string& text) {
            if (opt->count() > 0) return;  // flags win
            std::istringstream in(text);
            in >> *target;
            if (in.fail()) throw std::invalid_argument("config: bad value for " + opt->get_name());
        };
    }

    void bind_string(CLI::Option* opt, std::string* target) {
        std::string key = opt->get_name(false, true);
        if (key.rfind("--", 0) == 0) key = key.substr(2);
        setters_[key] = [opt, target](const std::string& text) {
            if (opt->count() > 0) return;
            *target = text;
        };
    }

    void apply() {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (!in) throw std::invalid_argument("cannot open config file: " + path_);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                if (line.find_first_not_of(" \t\r") != std::string::npos) {
                    throw std::invalid_argument("config: expected key=value, got: " + line);
                }
                continue;
            }
            auto trim = [](std::string s) {
                std::size_t a = s.find_first_not_of(" \t\r");
                std::size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            auto it = setters_.find(key);
            if (it == setters_.end()) {
                throw std::invalid_argument("config: unknown key: " + key);
            }
            it->second(value);
        }
    }

private:
    CLI::App* sub_;
    std::string path_;
    std::map<std::string, std::function<void(const std::string&)>> setters_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantitative disk-geometry experiments: interpolating sequences, "
                 "harmonic majorants, harmonic measure, ideal costs"};
    app.require_subcommand(1);

    using namespace disklab::cli;

    GenerateArgs gen;
    CLI::App* sub_gen = app.add_subcommand("generate", "emit a sequence file");
    ConfigBinder cfg_gen(sub_gen);
    cfg_gen.bind_string(sub_gen->add_option("--family", gen.family,
                                            "geometric | two-ray | pair | perturbed"),
                        &gen.family);
    cfg_gen.bind(sub_gen->add_option("--n-max", gen.n_max, "family size"), &gen.n_max);
    cfg_gen.bind(sub_gen->add_option("--seed", gen.seed, "perturbation seed"), &gen.seed);
    cfg_gen.bind(sub_gen->add_option("--factor", gen.factor, "perturbation factor <= 1/4"),
                 &gen.factor);
    cfg_gen.bind_string(sub_gen->add_option("--out", gen.out, "output path"), &gen.out);

    CheckArgs chk;
    CLI::App* sub_chk = app.add_subcommand(
        "check-interpolating", "run the four interpolation checkers on a sequence file");
    ConfigBinder cfg_chk(sub_chk);
    cfg_chk.bind_string(sub_chk->add_option("--in", chk.in, "sequence file"),
                        &chk.in);
    cfg_chk.bind(sub_chk->add_option("--n-max", chk.n_max, "truncate to first n points"),
                 &chk.n_max);
    cfg_chk.bind(sub_chk->add_option("--node-count", chk.node_count, "LP nodes"),
                 &chk.node_count);
    cfg_chk.bind(sub_chk->add_option("--mass-cap", chk.mass_cap, "mass cap"), &chk.mass_cap);
    cfg_chk.bind(sub_chk->add_option("--walks", chk.walks, "Monte Carlo walks per point"),
                 &chk.walks);
    cfg_chk.bind(sub_chk->add_option("--seed", chk.seed, "Monte Carlo seed"), &chk.seed);
    cfg_chk.bind(sub_chk->add_option("--epsilon-shell", chk.epsilon_shell, "absorption shell"),
                 &chk.epsilon_shell);
    cfg_chk.bind(sub_chk->add_option("--cutoff", chk.cutoff, "neighbor cutoff"), &chk.cutoff);
    cfg_chk.bind(sub_chk->add_option("--grid-j", chk.grid_j, "grid rings"), &chk.grid_j);
    cfg_chk.bind(sub_chk->add_option("--grid-q", chk.grid_q, "grid angles per ring"),
                 &chk.grid_q);
    cfg_chk.bind(sub_chk->add_option("--h-scale", chk.h_scale, "H multiplier for condition d"),
                 &chk.h_scale);
    cfg_chk.bind_string(sub_chk->add_option("--out", chk.out, "output path"), &chk.out);

    HarmonicMeasureArgs hm;
    CLI::App* sub_hm =
        app.add_subcommand("harmonic-measure", "walk-on-spheres harmonic measure estimate");
    ConfigBinder cfg_hm(sub_hm);
    cfg_hm.bind_string(sub_hm->add_option("--z", hm.z, "evaluation point re,im"),
                       &hm.z);
    sub_hm->add_option("--hole", hm.holes, "pseudohyperbolic hole re,im,rho (repeatable)");
    cfg_hm.bind(sub_hm->add_option("--walks", hm.walks, "trajectories"), &hm.walks);
    cfg_hm.bind(sub_hm->add_option("--seed", hm.seed, "seed"), &hm.seed);
    cfg_hm.bind(sub_hm->add_option("--epsilon-shell", hm.epsilon_shell, "absorption shell"),
                &hm.epsilon_shell);
    cfg_hm.bind_string(sub_hm->add_option("--out", hm.out, "output path"), &hm.out);

    IdealCostsArgs ide;
    CLI::App* sub_ide = app.add_subcommand("ideal-costs", "corona / ideal condition fits");
    ConfigBinder cfg_ide(sub_ide);
    cfg_ide.bind_string(sub_ide->add_option("--mode", ide.mode,
                                            "corona | condition-c | j-membership"),
                        &ide.mode);
    cfg_ide.bind_string(sub_ide->add_option("--example", ide.example, "none | f2 | tres"),
                        &ide.example);
    cfg_ide.bind_string(sub_ide->add_option("--seq1", ide.seq1, "zeros of B1"),
                        &ide.seq1);
    cfg_ide.bind_string(sub_ide->add_option("--seq2", ide.seq2, "zeros of B2"), &ide.seq2);
    cfg_ide.bind(sub_ide->add_option("--N", ide.n, "f2 exponent"), &ide.n);
    cfg_ide.bind(sub_ide->add_option("--p", ide.p, "membership exponent"), &ide.p);
    cfg_ide.bind(sub_ide->add_option("--grid-j", ide.grid_j, "grid rings"), &ide.grid_j);
    cfg_ide.bind(sub_ide->add_option("--grid-q", ide.grid_q, "grid angles per ring"),
                 &ide.grid_q);
    cfg_ide.bind(sub_ide->add_option("--node-count", ide.node_count, "LP nodes"),
                 &ide.node_count);
    cfg_ide.bind(sub_ide->add_option("--mass-cap", ide.mass_cap, "mass cap"), &ide.mass_cap);
    sub_ide->add_flag("--augment,!--no-augment", ide.augment,
                      "add generator zeros to the grid");
    cfg_ide.bind_string(sub_ide->add_option("--out", ide.out, "output path"), &ide.out);

    CounterexampleArgs ce;
    CLI::App* sub_ce =
        app.add_subcommand("counterexample", "radial oscillation construction");
    ConfigBinder cfg_ce(sub_ce);
    cfg_ce.bind(sub_ce->add_option("--n-max", ce.n_max, "truncation (4..40)"), &ce.n_max);
    cfg_ce.bind(sub_ce->add_option("--node-count", ce.node_count, "LP nodes"), &ce.node_count);
    cfg_ce.bind(sub_ce->add_option("--mass-cap", ce.mass_cap, "mass cap"), &ce.mass_cap);
    cfg_ce.bind_string(sub_ce->add_option("--out", ce.out, "output path"), &ce.out);
    cfg_ce.bind_string(sub_ce->add_option("--csv", ce.csv, "plot-ready CSV: n,lambda,log_one_minus_mu,q,parity"), &ce.csv);

    SplitProductArgs sp;
    CLI::App* sub_sp = app.add_subcommand("split-product", "product splitter");
    ConfigBinder cfg_sp(sub_sp);
    cfg_sp.bind_string(
        sub_sp->add_option("--m", sp.m, "comma-separated nondecreasing factors"),
        &sp.m);
    cfg_sp.bind(sub_sp->add_option("--eta", sp.eta, "eta in (0,1)"), &sp.eta);
    cfg_sp.bind_string(sub_sp->add_option("--out", sp.out, "output path"), &sp.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*sub_gen) {
            cfg_gen.apply();
            return cmd_generate(gen);
        }
        if (*sub_chk) {
            cfg_chk.apply();
            return cmd_check_interpolating(chk);
        }
        if (*sub_hm) {
            cfg_hm.apply();
            return cmd_harmonic_measure(hm);
        }
        if (*sub_ide) {
            cfg_ide.apply();
            return cmd_ideal_costs(ide);
        }
        if (*sub_ce) {
            cfg_ce.apply();
            return cmd_counterexample(ce);
        }
        if (*sub_sp) {
            cfg_sp.apply();
            return cmd_split_product(sp);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
