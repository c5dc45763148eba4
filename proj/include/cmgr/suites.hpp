#pragma once

#include "cmgr/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cmgr {

// One verification case: a canonical key plus a check that either passes or
// fails; failures serialize enough input to replay the case standalone.
struct Case {
    std::string key;
    std::function<bool(Json& witness)> check;
};

struct SuiteReport {
    std::string suite;
    int n_max = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    long run = 0, passed = 0, failed = 0;
    Json witnesses = Json::array();

    Json to_json() const;
    std::string table() const;
};

// Known suite names, "all" excluded.
const std::vector<std::string>& suite_names();

// Deterministic given (name, n_max, seed, samples); cases run in parallel and
// are aggregated by sorted case key. Throws on unknown names.
SuiteReport run_suite(const std::string& name, int n_max, std::uint64_t seed, int samples);

struct IntersectDims {
    long character_dim = 0;
    long lr_dim = 0;
    long schubert_dim = 0;
    bool agree = false;
    Json to_json() const;
};
// Three independent computations of the same intersection number:
// symmetric-group characters, Littlewood-Richardson multiplicity of the
// transpose, and the Schubert pairing through box-complement duality.
IntersectDims intersect_dims(const Partition& lambda, const std::vector<int>& q_blocks,
                             const std::vector<Partition>& mu);

namespace suites {

std::vector<Case> fixed_point_cases(int n_max);
std::vector<Case> residue_cases(int n_max);
std::vector<Case> tau_schur_cases(int n_max);
std::vector<Case> eta_cell_cases(int n_max, std::uint64_t seed, int samples);
std::vector<Case> wronskian_fixed_cases(int n_max);
std::vector<Case> wronskian_sample_cases(int n_max, std::uint64_t seed, int samples);
std::vector<Case> factorization_cases(int n_max, std::uint64_t seed, int samples);
std::vector<Case> involution_cases(int n_max, std::uint64_t seed);
std::vector<Case> dimension_identity_cases(int n_max);
std::vector<Case> baker_operator_cases(int n_max);
std::vector<Case> tau_bridge_cases(int n_max, std::uint64_t seed, int samples);
std::vector<Case> cperp_cases(int n_max);

// Runs cases in parallel; results are deterministic (indexed slots, then
// sorted by key during aggregation).
SuiteReport execute(std::string suite, int n_max, std::uint64_t seed, int samples,
                    std::vector<Case> cases);

}  // namespace suites

}  // namespace cmgr
