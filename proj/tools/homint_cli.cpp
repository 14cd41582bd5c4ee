#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homint/json_io.hpp"

namespace {

using namespace homint;

// Exit-code contract: 0 success/feasible, 1 usage, 2 invalid input,
// 3 infeasible (certificate emitted), 4 unknown / budget exhausted.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kInfeasible = 3;
constexpr int kUnknown = 4;

class Timer {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void emit(Json j, const Timer& t) {
    j["elapsed_ms"] = t.elapsed_ms();
    std::cout << j.dump(2) << "\n";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::feasible: return "feasible";
        case Verdict::infeasible_at_degree: return "infeasible_at_degree";
        case Verdict::infeasible_all_degrees: return "infeasible_all_degrees";
        default: return "unknown";
    }
}

int cmd_witness(const std::string& instance_path, std::uint64_t budget) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    for (const Int& a : inst.targets)
        if (a != 1) {
            std::cerr << "witness requires all-ones targets\n";
            return kInvalid;
        }
    WitnessOptions opts;
    opts.degree_budget = budget;
    try {
        HomogeneousPoly f = construct_witness(inst.points, opts);
        Json j;
        j["verdict"] = "feasible";
        j["witness"] = poly_to_json(f);
        emit(std::move(j), t);
        return kOk;
    } catch (const WitnessBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        Json j;
        j["verdict"] = "unknown";
        j["reason"] = "degree_budget_exceeded";
        j["required_degree_at_least"] = e.required_degree().get_str();
        j["degree_budget"] = e.budget();
        emit(std::move(j), t);
        return kUnknown;
    }
}

int cmd_feasible(const std::string& instance_path, std::uint64_t degree) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    FeasibilityResult r = feasible_degree(inst, degree);
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["degree"] = degree;
    if (r.witness) j["witness"] = poly_to_json(*r.witness);
    if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
    emit(std::move(j), t);
    return r.verdict == Verdict::feasible ? kOk : kInfeasible;
}

int cmd_min_degree(const std::string& instance_path, std::uint64_t max_degree) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    FeasibilityResult r = min_degree(inst, max_degree);
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["max_degree"] = max_degree;
    if (r.verdict == Verdict::feasible) {
        j["degree"] = *r.degree;
        j["witness"] = poly_to_json(*r.witness);
        emit(std::move(j), t);
        return kOk;
    }
    emit(std::move(j), t);
    return kUnknown;
}

int cmd_obstruct(const std::string& instance_path,
                 const std::vector<std::string>& prime_args,
                 std::uint64_t budget) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    std::vector<Int> primes;
    for (const auto& s : prime_args) primes.push_back(int_from_string(s));
    auto cert = periodic_obstruction(inst, primes, budget);
    Json j;
    if (cert) {
        j["verdict"] = "infeasible_all_degrees";
        j["certificate"] = certificate_to_json(*cert);
        emit(std::move(j), t);
        return kInfeasible;
    }
    j["verdict"] = "unknown";
    j["reason"] = "no tested prime obstructs";
    emit(std::move(j), t);
    return kUnknown;
}

int cmd_verify(const std::string& instance_path, const std::string& poly_path) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    HomogeneousPoly f = read_poly_file(poly_path);
    if (f.var_count() != inst.points.dim()) {
        std::cerr << "polynomial arity does not match instance dimension\n";
        return kInvalid;
    }
    Json values = Json::array();
    bool all_match = true;
    const auto& pts = inst.points.originals();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Int val = f.evaluate(pts[i].coords);
        bool ok = val == inst.targets[i];
        all_match = all_match && ok;
        values.push_back(Json{{"value", val.get_str()},
                              {"target", inst.targets[i].get_str()},
                              {"match", ok}});
    }
    Json j;
    j["verdict"] = all_match ? "verified" : "mismatch";
    j["values"] = std::move(values);
    emit(std::move(j), t);
    return all_match ? kOk : kInfeasible;
}

int cmd_mod_witness(const std::string& instance_path,
                    const std::string& modulus_str) {
    Timer t;
    InterpolationInstance inst = read_instance_file(instance_path);
    Int m = int_from_string(modulus_str);
    if (m < 2) {
        std::cerr << "modulus must be >= 2\n";
        return kInvalid;
    }
    FactoredInteger mf = factor(m);
    std::vector<std::vector<Int>> pts;
    for (const auto& p : inst.points.originals()) pts.push_back(p.coords);
    ResiduePointSet S = ResiduePointSet::make(m, pts);
    HomogeneousPoly g = mod_witness(mf, S);
    Json j;
    j["verdict"] = "feasible";
    j["witness"] = poly_to_json(g);
    emit(std::move(j), t);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homogeneous interpolation over the integers"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;  // reserved: all internal sampling is seeded
    app.add_option("--seed", seed, "Seed for any internal sampling")
        ->default_val(0);

    std::string instance_path, poly_path, modulus_str;
    std::uint64_t degree = 1, max_degree = 120, witness_budget = 50000,
                  obstruct_budget = 64;
    std::vector<std::string> prime_args;

    auto* witness = app.add_subcommand(
        "witness", "Construct an all-ones witness for the instance");
    witness->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    witness->add_option("--degree-budget", witness_budget,
                        "Abort if the witness degree must exceed this");

    auto* feasible =
        app.add_subcommand("feasible", "Decide feasibility at one degree");
    feasible->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    feasible->add_option("--degree", degree, "Degree to test")->required();

    auto* mindeg =
        app.add_subcommand("min-degree", "Least feasible degree within budget");
    mindeg->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    mindeg->add_option("--max-degree", max_degree, "Search budget")->required();

    auto* obstruct = app.add_subcommand(
        "obstruct", "Search for an all-degree modular obstruction");
    obstruct->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    obstruct->add_option("--primes", prime_args, "Primes to test")->required();
    obstruct->add_option("--max-degree", obstruct_budget,
                         "Stabilization budget per prime");

    auto* verify =
        app.add_subcommand("verify", "Evaluate a polynomial against an instance");
    verify->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    verify->add_option("--poly", poly_path, "Polynomial JSON path")->required();

    auto* modw = app.add_subcommand(
        "mod-witness", "Unit-valued homogeneous polynomial mod m");
    modw->add_option("instance", instance_path, "Instance JSON path")
        ->required();
    modw->add_option("--modulus", modulus_str, "Modulus m >= 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (witness->parsed()) return cmd_witness(instance_path, witness_budget);
        if (feasible->parsed()) return cmd_feasible(instance_path, degree);
        if (mindeg->parsed()) return cmd_min_degree(instance_path, max_degree);
        if (obstruct->parsed())
            return cmd_obstruct(instance_path, prime_args, obstruct_budget);
        if (verify->parsed()) return cmd_verify(instance_path, poly_path);
        if (modw->parsed()) return cmd_mod_witness(instance_path, modulus_str);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const homint::FactorBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUnknown;
    }
    return kUsage;
}
