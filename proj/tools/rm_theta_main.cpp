#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rmtheta/json_io.hpp"
#include "rmtheta/local_zeta.hpp"
#include "rmtheta/version.hpp"

namespace fs = std::filesystem;
using namespace rmtheta;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw SchemaError("malformed JSON in " + path);
    return j;
}

void atomic_write(const std::string& path, const json& payload) {
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw SchemaError("cannot write " + tmp.string());
        out << payload.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

std::pair<i64, i64> parse_prime_range(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto dots = s.find("..");
        if (dots == std::string::npos) throw SchemaError("prime range must look like \"3..50\"");
        try {
            return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
        } catch (const std::exception&) {
            throw SchemaError("bad prime range: " + s);
        }
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return {j[0].get<i64>(), j[1].get<i64>()};
    throw SchemaError("prime range must be \"lo..hi\" or [lo, hi]");
}

cdouble complex_from_json(const json& j) {
    require_keys(j, {"re", "im"}, {});
    if (!j["re"].is_number() || !j["im"].is_number())
        throw SchemaError("complex value needs numeric re/im");
    return {j["re"].get<double>(), j["im"].get<double>()};
}

LocalFieldElement element_from_json(const LocalFieldDesc& F, const json& j) {
    if (j.is_object() && j.contains("zero")) return LocalFieldElement::zero(F);
    require_keys(j, {"v", "a"}, {"b"});
    return LocalFieldElement::make(F, j["v"].get<i64>(), j["a"].get<i64>(),
                                   j.value("b", i64{0}));
}

json run_local_field(const json& job) {
    require_keys(job, {"field"}, {});
    LocalFieldDesc F = field_from_json(job["field"]);
    json out;
    out["ramification_index"] = F.ramification_index();
    out["residue_degree"] = F.residue_degree();
    out["residue_cardinality"] = F.residue_cardinality();
    out["uniformizer_valuation"] = LocalFieldElement::uniformizer(F).valuation();
    return out;
}

json run_character(const json& job) {
    require_keys(job, {"char"}, {"eval"});
    MultiplicativeCharacter chi = character_from_json(job["char"]);
    json out;
    out["conductor"] = chi.conductor();
    out["value_at_minus_one"] = unit_complex_to_json(chi.value_at_minus_one());
    if (chi.conductor() >= 1 && chi.field().kind == ExtensionKind::base) {
        AdditiveCharacter psi = AdditiveCharacter::standard(chi.field());
        out["gauss_sum"] = complex_to_json(gauss_sum(chi, psi));
    }
    if (job.contains("eval")) {
        json vals = json::array();
        for (const json& n : job["eval"]) {
            if (!n.is_number_integer()) throw SchemaError("eval entries must be integers");
            vals.push_back(unit_complex_to_json(chi.eval_integer(n.get<i64>())));
        }
        out["values"] = vals;
    }
    return out;
}

json run_zeta(const json& job) {
    require_keys(job, {"char", "s", "terms"}, {"normalization"});
    MultiplicativeCharacter chi = character_from_json(job["char"]);
    const cdouble s = complex_from_json(job["s"]);
    if (!job["terms"].is_number_integer() || job["terms"].get<i64>() < 1)
        throw SchemaError("terms must be a positive integer");
    const std::string norm_name = job.value("normalization", std::string("paper"));
    ZetaNormalization norm;
    if (norm_name == "paper") norm = ZetaNormalization::shifted;
    else if (norm_name == "unshifted") norm = ZetaNormalization::unshifted;
    else throw SchemaError("normalization must be \"paper\" or \"unshifted\"");

    ZetaSeriesResult r = ramified_zeta_series(chi, s, job["terms"].get<int>(), norm);
    json out;
    out["partial_sum"] = complex_to_json(r.partial_sum);
    out["tail_bound"] = r.tail_bound;
    out["closed_form"] = complex_to_json(r.closed_form);
    out["l_factor_at_s"] = complex_to_json(ramified_lfactor(chi).eval(s));
    if (chi.conductor() >= 1 && chi.field().kind == ExtensionKind::base) {
        AdditiveCharacter psi = AdditiveCharacter::standard(chi.field());
        out["epsilon"] = complex_to_json(ramified_epsilon(chi, psi, s, true));
    } else {
        out["epsilon"] = complex_to_json(ramified_epsilon(
            chi, AdditiveCharacter::standard(make_field(chi.field().p, ExtensionKind::base,
                                                        chi.field().precision)),
            s, false));
    }
    return out;
}

json run_test_vector(const json& job) {
    require_keys(job, {"lattice"}, {"points", "matrices"});
    AdaptedLattice L = adapted_lattice_from_json(job["lattice"]);
    json out;
    out["shape"] = L.shape();
    if (job.contains("points")) {
        json verdicts = json::array();
        for (const json& pt : job["points"]) {
            if (!pt.is_array()) throw SchemaError("each point must be an array of elements");
            std::vector<LocalFieldElement> x;
            for (const json& e : pt) x.push_back(element_from_json(L.field(), e));
            verdicts.push_back(L.char_fn(x));
        }
        out["membership"] = verdicts;
    }
    if (job.contains("matrices")) {
        json verdicts = json::array();
        for (const json& mj : job["matrices"]) {
            if (!mj.is_array() || mj.size() != 2 || mj[0].size() != 2 || mj[1].size() != 2)
                throw SchemaError("each matrix must be 2x2");
            Mat2 g = make_mat2(element_from_json(L.field(), mj[0][0]),
                               element_from_json(L.field(), mj[0][1]),
                               element_from_json(L.field(), mj[1][0]),
                               element_from_json(L.field(), mj[1][1]));
            verdicts.push_back(invariance_subgroup_check(L, g));
        }
        out["invariance"] = verdicts;
    }
    return out;
}

HarmonicWeight weight_from_name(const std::string& name) {
    if (name == "one") return HarmonicWeight::constant_one;
    if (name == "det") return HarmonicWeight::det_symmetric_square;
    throw SchemaError("weight must be \"one\" or \"det\"");
}

json run_theta_coeffs(const json& job) {
    require_keys(job, {"lattice", "weight", "trace_bound"}, {"report"});
    GlobalLattice L = global_lattice_from_json(job["lattice"]);
    if (!job["trace_bound"].is_number_integer() || job["trace_bound"].get<i64>() < 0)
        throw SchemaError("trace_bound must be a nonnegative integer");
    ThetaCoefficientTable tab = theta_coefficients(
        L, weight_from_name(job["weight"].get<std::string>()), job["trace_bound"].get<i64>());
    json out = theta_table_to_json(tab);
    if (job.value("report", false)) {
        ThetaClassReport rep = coefficient_report(tab);
        json growth = json::array();
        for (const auto& row : rep.growth)
            growth.push_back({{"trace", row.trace},
                              {"num_entries", row.num_entries},
                              {"num_nonzero", row.num_nonzero},
                              {"max_abs_value", row.max_abs_value}});
        out["growth"] = growth;
        out["num_classes"] = rep.classes.size();
    }
    return out;
}

json run_euler_factors(const json& job) {
    require_keys(job, {"curve", "primes"}, {"disc"});
    HyperellipticCurve C = curve_from_json(job["curve"]);
    auto [lo, hi] = parse_prime_range(job["primes"]);
    std::optional<i64> disc;
    if (job.contains("disc")) disc = job["disc"].get<i64>();
    else if (C.rm_disc) disc = *C.rm_disc;

    json rows = json::array();
    for (i64 p = lo; p <= hi; ++p) {
        if (!is_prime(p)) continue;
        json row;
        row["p"] = p;
        if (p == 2 || !C.good_reduction(p)) {
            row["skipped"] = "BadReduction";
            rows.push_back(row);
            continue;
        }
        EulerFactor E = euler_factor(C, p);
        row["factor"] = euler_factor_to_json(E);
        if (disc) row["witness"] = rm_witness_to_json(rm_split_check(E, *disc));
        rows.push_back(row);
    }
    json out;
    out["rows"] = rows;
    return out;
}

json run_match(const json& job) {
    require_keys(job, {"curve", "hecke", "primes"}, {});
    HyperellipticCurve C = curve_from_json(job["curve"]);
    HeckeDataset data = hecke_from_json(job["hecke"]);
    auto [lo, hi] = parse_prime_range(job["primes"]);
    return match_report_to_json(match(C, data, lo, hi));
}

json run_probe(const json& job, json& timing) {
    require_keys(job, {"command", "sizes"}, {});
    const std::string cmd = job["command"].get<std::string>();
    std::vector<i64> sizes;
    for (const json& s : job["sizes"]) sizes.push_back(s.get<i64>());
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw SchemaError("sizes must be ascending");

    std::vector<double> secs;
    for (i64 n : sizes) {
        auto t0 = std::chrono::steady_clock::now();
        if (cmd == "zeta") {
            LocalFieldDesc Q3 = make_field(3, ExtensionKind::base, 16);
            MultiplicativeCharacter chi = MultiplicativeCharacter::quadratic_residue(
                Q3, UnitComplex::root_of_unity(2, 1));
            (void)ramified_zeta_series(chi, {2.0, 0.0}, static_cast<int>(n));
        } else if (cmd == "theta-coeffs") {
            (void)theta_coefficients(GlobalLattice::standard(4),
                                     HarmonicWeight::constant_one, n);
        } else if (cmd == "euler-factors") {
            HyperellipticCurve C = HyperellipticCurve::make({1, 0, 0, 0, 0, 1});
            i64 p = n;
            while (!is_prime(p) || !C.good_reduction(p)) ++p;
            (void)euler_factor(C, p);
        } else {
            throw SchemaError("probe command must be zeta, theta-coeffs or euler-factors");
        }
        secs.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    // log-log least-squares slope
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double x = std::log(static_cast<double>(sizes[i]));
        double y = std::log(std::max(secs[i], 1e-9));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double den = sizes.size() * sxx - sx * sx;
    timing["seconds"] = secs;
    timing["loglog_slope"] = den == 0 ? 0.0 : (sizes.size() * sxy - sx * sy) / den;

    json out;
    out["sizes"] = sizes;
    out["timing_sidecar"] = true;
    return out;
}

struct Options {
    std::string job_path;
    std::string out_path;
    i64 seed = 0;
    // sugar
    std::string curve_path, hecke_path, lattice_path, weight, primes;
    i64 trace_bound = -1;
};

json assemble_job(const std::string& command, const Options& opt) {
    json job;
    if (!opt.job_path.empty()) job = load_json(opt.job_path);
    if (!job.is_object()) {
        if (!job.is_null()) throw SchemaError("job file must hold a JSON object");
        job = json::object();
    }
    if (!opt.curve_path.empty()) job["curve"] = load_json(opt.curve_path);
    if (!opt.hecke_path.empty()) job["hecke"] = load_json(opt.hecke_path);
    if (!opt.lattice_path.empty()) job["lattice"] = load_json(opt.lattice_path);
    if (!opt.weight.empty()) job["weight"] = opt.weight;
    if (!opt.primes.empty()) job["primes"] = opt.primes;
    if (opt.trace_bound >= 0) job["trace_bound"] = opt.trace_bound;
    if (job.empty()) throw SchemaError("no job given: pass --job or the command's flags");
    (void)command;
    return job;
}

int dispatch(const std::string& command, const Options& opt) {
    const json job = assemble_job(command, opt);
    json timing;
    auto t0 = std::chrono::steady_clock::now();

    json result;
    if (command == "local-field") result = run_local_field(job);
    else if (command == "character") result = run_character(job);
    else if (command == "zeta") result = run_zeta(job);
    else if (command == "test-vector") result = run_test_vector(job);
    else if (command == "theta-coeffs") result = run_theta_coeffs(job);
    else if (command == "euler-factors") result = run_euler_factors(job);
    else if (command == "match") result = run_match(job);
    else if (command == "complexity-probe") result = run_probe(job, timing);

    timing["total_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json out;
    out["version"] = kVersion;
    out["command"] = command;
    out["seed"] = opt.seed;
    out["config"] = job;
    out["result"] = result;

    if (!opt.out_path.empty()) {
        atomic_write(opt.out_path, out);
        atomic_write(opt.out_path + ".timing.json", timing);
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rm-theta: local factors, test vectors and theta coefficients"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> commands = {"local-field", "character",     "zeta",
                                         "test-vector", "theta-coeffs",  "euler-factors",
                                         "match",       "complexity-probe"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--job", opt.job_path, "JSON job file");
        sub->add_option("--out", opt.out_path, "output JSON path (stdout if omitted)");
        sub->add_option("--seed", opt.seed, "seed echoed into the output");
        if (name == "euler-factors" || name == "match")
            sub->add_option("--curve", opt.curve_path, "curve JSON file");
        if (name == "match") sub->add_option("--hecke", opt.hecke_path, "Hecke JSON file");
        if (name == "euler-factors" || name == "match")
            sub->add_option("--primes", opt.primes, "prime range lo..hi");
        if (name == "theta-coeffs") {
            sub->add_option("--lattice", opt.lattice_path, "lattice JSON file");
            sub->add_option("--weight", opt.weight, "one|det");
            sub->add_option("--trace-bound", opt.trace_bound, "max trace");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
