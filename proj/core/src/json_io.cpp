#include "disklab/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace disklab {

namespace {

using nlohmann::json;

json point_json(const DiskPoint& p) { return json::array({p.re(), p.im()}); }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
    if (j.contains("schema") && j["schema"] != 1) {
        throw std::invalid_argument("unsupported schema version");
    }
    return j;
}

}  // namespace

std::string sequence_to_json(const ZeroSequence& seq) {
    json j;
    j["schema"] = 1;
    json pts = json::array();
    json anchored = json::array();
    json mults = json::array();
    bool any_mult = false;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const Zero& z = seq.zeros()[n];
        pts.push_back(point_json(z.point));
        mults.push_back(z.multiplicity);
        if (z.multiplicity != 1) any_mult = true;
        if (z.point.anchored()) {
            const NearAnchor& a = z.point.anchor_form();
            anchored.push_back(json{{"index", n},
                                    {"anchor", json::array({a.anchor.real(), a.anchor.imag()})},
                                    {"log_rho", a.log_rho},
                                    {"direction",
                                     json::array({a.direction.real(), a.direction.imag()})}});
        }
    }
    j["points"] = std::move(pts);
    if (!anchored.empty()) j["anchored"] = std::move(anchored);
    if (any_mult) j["multiplicities"] = std::move(mults);
    j["blaschke_sum"] = seq.blaschke_sum();
    return j.dump(2) + "\n";
}

ZeroSequence sequence_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("points") || !j["points"].is_array()) {
        throw std::invalid_argument("sequence file: missing points array");
    }
    std::vector<DiskPoint> pts;
    for (const json& p : j["points"]) {
        if (!p.is_array() || p.size() != 2) {
            throw std::invalid_argument("sequence file: point must be [re, im]");
        }
        pts.push_back(DiskPoint::xy(p[0].get<double>(), p[1].get<double>()));
    }
    if (j.contains("anchored")) {
        for (const json& a : j["anchored"]) {
            std::size_t idx = a.at("index").get<std::size_t>();
            if (idx >= pts.size()) throw std::invalid_argument("sequence file: anchored index");
            const json& anc = a.at("anchor");
            const json& dir = a.at("direction");
            pts[idx] = DiskPoint::near(
                DiskPoint::xy(anc[0].get<double>(), anc[1].get<double>()),
                a.at("log_rho").get<double>(),
                Complex{dir[0].get<double>(), dir[1].get<double>()});
        }
    }
    if (j.contains("multiplicities")) {
        const json& mults = j["multiplicities"];
        if (mults.size() != pts.size()) {
            throw std::invalid_argument("sequence file: multiplicities size mismatch");
        }
        std::vector<Zero> zs;
        for (std::size_t n = 0; n < pts.size(); ++n) {
            zs.push_back(Zero{pts[n], mults[n].get<int>()});
        }
        return ZeroSequence::from_zeros(std::move(zs));
    }
    return ZeroSequence::from_points(std::move(pts));
}

std::string measure_to_json(const BoundaryMeasure& mu) {
    json j;
    j["schema"] = 1;
    j["nodes"] = mu.nodes;
    j["weights"] = mu.weights;
    j["total_mass"] = mu.total_mass;
    return j.dump(2) + "\n";
}

BoundaryMeasure measure_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("nodes") || !j.contains("weights")) {
        throw std::invalid_argument("measure file: missing nodes/weights");
    }
    return BoundaryMeasure::atoms(j["nodes"].get<std::vector<double>>(),
                                  j["weights"].get<std::vector<double>>());
}

namespace {

json fit_json(const MajorantFit& fit) {
    json j;
    j["schema"] = 1;
    j["status"] = fit.status == FitStatus::optimal ? "optimal" : "infeasible_at_mass_cap";
    j["objective"] = fit.objective;
    j["nodes"] = fit.measure.nodes;
    j["weights"] = fit.measure.weights;
    j["slack"] = fit.slack;
    json cons = json::array();
    for (const FitConstraint& c : fit.constraints) {
        json pts = json::array();
        for (const DiskPoint& p : c.points) pts.push_back(point_json(p));
        cons.push_back(json{{"points", std::move(pts)}, {"lower_bound", c.lower_bound}});
    }
    j["constraints"] = std::move(cons);
    j["lp_iterations"] = fit.lp_iterations;
    return j;
}

json estimate_json(const Estimate& est) {
    json j;
    j["mean"] = est.mean;
    j["std_error"] = est.std_error;
    j["walks"] = est.walks;
    j["seed"] = est.seed;
    j["epsilon_shell"] = est.epsilon_shell;
    j["outer_hits"] = est.outer_hits;
    j["hole_hits"] = est.hole_hits;
    j["censored"] = est.censored;
    return j;
}

}  // namespace

std::string fit_to_json(const MajorantFit& fit) { return fit_json(fit).dump(2) + "\n"; }

std::string estimate_to_json(const Estimate& est) {
    json j = estimate_json(est);
    j["schema"] = 1;
    return j.dump(2) + "\n";
}

std::string condition_d_to_json(const ConditionDReport& report) {
    json j;
    j["schema"] = 1;
    j["ran"] = report.ran;
    j["disks_disjoint"] = report.disks_disjoint;
    j["clamped"] = report.clamped;
    j["neighbor_cutoff"] = report.neighbor_cutoff;
    j["min_outer"] = report.min_outer;
    j["max_std_error"] = report.max_std_error;
    json entries = json::array();
    for (const ConditionDEntry& e : report.entries) {
        entries.push_back(json{{"n", e.n},
                               {"estimate", estimate_json(e.estimate)},
                               {"h_value", e.h_value},
                               {"epsilon_used", e.epsilon_used},
                               {"hole_count", e.hole_count}});
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string counterexample_to_json(const CounterexampleRun& run) {
    json j;
    j["schema"] = 1;
    j["n_max"] = run.n_max;
    j["n_start"] = run.n_start;
    j["lambda"] = run.lambda;
    j["log_one_minus_mu"] = run.log_one_minus_mu;
    j["log_rho"] = run.log_rho;
    j["q"] = run.q;
    j["residuals"] = run.residuals;
    j["even_mean"] = run.even_mean;
    j["odd_mean"] = run.odd_mean;
    j["gap"] = run.gap;
    j["corona_mass"] = run.corona_mass;
    j["h0_feasible_mass"] = run.h0_feasible_mass;
    return j.dump(2) + "\n";
}

std::string counterexample_to_csv(const CounterexampleRun& run) {
    std::ostringstream out;
    out << "n,lambda,log_one_minus_mu,q,parity\n";
    out.precision(17);
    for (std::size_t i = 0; i < run.lambda.size(); ++i) {
        int n = static_cast<int>(i) + run.n_start;
        out << n << ',' << run.lambda[i] << ',' << run.log_one_minus_mu[i] << ',' << run.q[i]
            << ',' << (n % 2 == 0 ? "even" : "odd") << '\n';
    }
    return out.str();
}

}  // namespace disklab
