#pragma once

#include "covex/triples.hpp"
#include "covex/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace covex::cli {

enum Exit : int { kOk = 0, kValidation = 2, kMismatch = 3, kBudget = 4 };

struct Output {
    int code = kOk;
    std::string out;
    std::string err;
};

struct ComputeRequest {
    Triple triple;
    std::optional<std::vector<int>> v;
    std::string method = "trees";  // trees | inductive | oracle | all
    std::string emit = "text";     // text | json | dot
    std::uint64_t budget = 50000;
};

struct OracleRequest {
    LieType type = LieType::A;
    int n = 0;
    std::vector<int> v, w;
    std::string emit = "text";
    std::uint64_t budget = 50000;
};

struct CrosscheckRequest {
    std::vector<LieType> types;  // empty means all four
    int n_max = 3;
    std::uint64_t budget = 50000;
    std::size_t samples = 0;  // 0 runs every case
    std::uint64_t seed = 0;
    std::string emit = "text";
};

// Window for type D with an odd number of negative entries: flip the sign of
// the entry of absolute value 1 and report it through warning.
WeylElement window_element(LieType t, int n, const std::vector<int>& window, std::string* warning);

// {"type":"A","n":8,"k":[1,3],"p":[3,4],"q":[2,5]} with optional "v" and "method".
ComputeRequest parse_request_json(const std::string& text);

Output cmd_compute(const ComputeRequest& req);
Output cmd_tree(const ComputeRequest& req);
Output cmd_oracle(const OracleRequest& req);
Output cmd_crosscheck(const CrosscheckRequest& req);

int run(int argc, char** argv);

}  // namespace covex::cli
