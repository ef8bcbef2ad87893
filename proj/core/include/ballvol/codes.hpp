#pragma once

#include "ballvol/graph.hpp"
#include "ballvol/stats.hpp"

namespace ballvol {

enum class CodeMethod { greedy_maximal, degeneracy_order, exact_branch_bound };

const char* to_string(CodeMethod m);

struct CodeResult {
    std::vector<std::uint32_t> codewords;  // vertex ranks
    std::uint64_t size = 0;
    CodeMethod method = CodeMethod::greedy_maximal;
    double sphere_covering_bound = 0.0;  // N / vol(r)
    double improvement_factor = 0.0;     // size / sphere_covering_bound
    bool verified_independent = false;
};

// Independent set in the ball graph = code with pairwise distance > r.
//   greedy_maximal     minimum remaining degree, rank as tie-break (or a
//                      random min-degree pick when seed != 0); maximal, so
//                      the sphere-covering bound always holds
//   degeneracy_order   greedy over the reverse degeneracy order
//   exact_branch_bound true independence number, refused above 60 vertices
// Every result is re-verified pairwise before being returned.
CodeResult construct_code(const BallGraph& g, CodeMethod method, std::uint64_t seed = 0);

}  // namespace ballvol
