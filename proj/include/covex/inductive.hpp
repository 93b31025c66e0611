#pragma once

#include "covex/polyq.hpp"
#include "covex/triples.hpp"
#include "covex/weyl.hpp"

#include <vector>

namespace covex {

enum class SitePolicy { Smallest, Largest };

// Sites i in 0..d-1 with b_i <= a_i and a_{i+1} <= b_{i+1}, where a_0 = b_d = infinity.
std::vector<int> valid_merge_sites(const ABMatrix& h);
int find_merge_site(const ABMatrix& h);  // smallest valid site
ABMatrix merge(const ABMatrix& h, int i);

// c holds c_1..c_d. first_site >= 0 forces the first merge; later merges follow the policy.
QPoly kl_via_inductive(const ABMatrix& h, const std::vector<int>& c, SitePolicy policy = SitePolicy::Smallest,
                       int first_site = -1);

struct InductiveComputation {
    WeakTriple weak;
    MatrixResult h, k;
    std::vector<int> c;
    std::vector<int> sites;  // merge sites visited along the first branch
    QPoly poly;
};

// Throws ValidationError when the triple is invalid or, outside type A, when the
// hypotheses of the formula fail.
InductiveComputation inductive_pipeline(const Triple& t, const WeylElement& v);
QPoly kl_via_inductive(const Triple& t, const WeylElement& v);

}  // namespace covex
