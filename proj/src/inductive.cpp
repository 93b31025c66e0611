#include "covex/inductive.hpp"

#include "covex/capacity_tree.hpp"
#include "covex/errors.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <tuple>

namespace covex {

namespace {

int A(const ABMatrix& h, int j) { return j == 0 ? INT_MAX : h.a[j - 1]; }
int B(const ABMatrix& h, int j) { return j == h.d() ? INT_MAX : h.b[j]; }

using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

struct Solver {
    SitePolicy policy;
    std::map<Key, QPoly> memo;

    // c carries c_0 = 0 in front.
    QPoly run(const ABMatrix& h, const std::vector<int>& c, int forced, std::vector<int>* trace) {
        if (h.d() == 0) return QPoly::constant(1);
        Key key{h.a, h.b, c};
        if (forced < 0 && !trace) {
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        auto sites = valid_merge_sites(h);
        if (sites.empty()) throw ValidationError("no merge site in " + h.str());
        int i = forced >= 0 ? forced : (policy == SitePolicy::Smallest ? sites.front() : sites.back());
        if (std::find(sites.begin(), sites.end(), i) == sites.end())
            throw ValidationError(std::to_string(i) + " is not a merge site of " + h.str());
        if (trace) trace->push_back(i);
        const ABMatrix g = merge(h, i);
        const int ci = c[i], cj = c[i + 1];
        QPoly total;
        for (int t = 0; t <= std::min(ci, cj); ++t) {
            QPoly term = (q_binomial(A(h, i + 1) - ci + cj, cj - t) * q_binomial(B(h, i) + ci - cj, ci - t))
                             .shifted((ci - t) * (cj - t));
            std::vector<int> nc(c.begin(), c.begin() + i);
            nc.push_back(t);
            nc.insert(nc.end(), c.begin() + i + 2, c.end());
            total = total + term * run(g, nc, -1, t == 0 ? trace : nullptr);
        }
        if (forced < 0 && !trace) memo.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

std::vector<int> valid_merge_sites(const ABMatrix& h) {
    std::vector<int> out;
    for (int i = 0; i < h.d(); ++i)
        if (B(h, i) <= A(h, i) && A(h, i + 1) <= B(h, i + 1)) out.push_back(i);
    return out;
}

int find_merge_site(const ABMatrix& h) {
    auto s = valid_merge_sites(h);
    if (s.empty()) throw ValidationError("no merge site in " + h.str());
    return s.front();
}

ABMatrix merge(const ABMatrix& h, int i) {
    const int d = h.d();
    if (i < 0 || i >= d) throw ValidationError("merge site out of range");
    ABMatrix g;
    if (i == 0) {
        g.a.assign(h.a.begin() + 1, h.a.end());
        if (d > 1) {
            g.b.push_back(h.b[0] + h.b[1]);
            g.b.insert(g.b.end(), h.b.begin() + 2, h.b.end());
        }
        return g;
    }
    g.a.assign(h.a.begin(), h.a.begin() + i - 1);
    g.a.push_back(h.a[i - 1] + h.a[i]);
    g.a.insert(g.a.end(), h.a.begin() + i + 1, h.a.end());
    g.b.assign(h.b.begin(), h.b.begin() + i);
    if (i < d - 1) {
        g.b.push_back(h.b[i] + h.b[i + 1]);
        g.b.insert(g.b.end(), h.b.begin() + i + 2, h.b.end());
    }
    return g;
}

QPoly kl_via_inductive(const ABMatrix& h, const std::vector<int>& c, SitePolicy policy, int first_site) {
    if (static_cast<int>(c.size()) != h.d()) throw ValidationError("capacity length does not match " + h.str());
    std::vector<int> cc{0};
    cc.insert(cc.end(), c.begin(), c.end());
    Solver s{policy, {}};
    return s.run(h, cc, first_site, nullptr);
}

InductiveComputation inductive_pipeline(const Triple& t, const WeylElement& v) {
    auto report = validate_triple(t);
    if (!report.ok()) throw ValidationError(report.describe());
    if (!report.side_conditions_ok())
        throw ValidationError("inductive formula does not apply: " + report.describe());
    InductiveComputation r;
    r.weak = weak_triple_from_pair(t, v);
    r.h = h_matrix(t);
    r.k = k_matrix(t, r.weak);
    r.c = capacity(r.h.m, r.k.m);
    std::vector<int> cc{0};
    cc.insert(cc.end(), r.c.begin(), r.c.end());
    Solver s{SitePolicy::Smallest, {}};
    r.poly = s.run(r.h.m, cc, -1, nullptr);
    s.run(r.h.m, cc, -1, &r.sites);
    return r;
}

QPoly kl_via_inductive(const Triple& t, const WeylElement& v) { return inductive_pipeline(t, v).poly; }

}  // namespace covex
