// One PASS/FAIL line per acceptance criterion; details are indented below each line.
#include "covex/capacity_tree.hpp"
#include "covex/cli.hpp"
#include "covex/inductive.hpp"
#include "covex/oracle.hpp"
#include "covex/polyq.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace covex;

namespace {

struct Report {
    std::vector<std::string> details;
    bool ok = true;
    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back("FAIL " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string window_str(const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

struct Golden {
    const char* name;
    Triple t;
    std::vector<int> v;
    const char* poly;
    const char* w;
    const char* h;
    const char* k;
    std::vector<int> c;
    bool oracle;
};

void golden(Report& r) {
    const std::vector<Golden> cases{
        {"A8", {LieType::A, 8, {1, 3}, {3, 4}, {2, 5}}, {8, 7, 6, 5, 4, 3, 2, 1}, "q^3 + 2*q^2 + 2*q + 1",
         "1 4 7 5 2 3 6 8", "(2,2,4;5,2,1)", "(3,2,3;4,2,2)", {1, 1, 0}, true},
        {"C7", {LieType::C, 7, {1, 2, 4}, {2, 3, 6}, {6, 7, 7}}, {7, -6, -5, -4, -3, -2, -1},
         "q^4 + q^3 + 2*q^2 + 2*q + 1", "5 -4 -3 6 -1 -2 7", "(1,1,2;7,1,1)", "(1,2,3;7,0,0)", {0, 1, 2}, true},
        {"D6", {LieType::D, 6, {1, 2, 4}, {0, 2, 5}, {0, 2, 5}}, {-3, -2, -1, -5, -4, -6}, "q^3 + q^2 + q + 1",
         "-2 -1 3 -4 5 -6", "(1,1,2;1,3,4)", "(1,2,3;1,2,3)", {0, 1, 2}, true},
        {"C8", {LieType::C, 8, {1, 2, 3}, {3, 5, 6}, {3, 4, 5}}, {1, 2, -4, -5, 3, -7, -6, 8},
         "q^3 + 3*q^2 + 3*q + 1", "1 2 -4 -5 3 -6 7 8", "(1,1,1;5,2,1)", "(2,1,1;4,2,1)", {1, 1, 1}, false},
        {"D7", {LieType::D, 7, {2, 3}, {3, 6}, {3, 4}}, {-3, 1, 2, -7, -6, -5, -4},
         "q^6 + 2*q^5 + 4*q^4 + 4*q^3 + 4*q^2 + 2*q + 1", "-3 -1 2 -5 -4 6 7", "(2,1;6,3)", "(4,1;4,3)", {2, 2},
         false},
    };
    const QPoly d7 = QPoly::parse("q^2 + 1") * QPoly::parse("q^2 + q + 1") * QPoly::parse("q^2 + q + 1");
    r.check(d7.str() == cases[4].poly, "D7 target is the expansion of (q^2+1)(q^2+q+1)^2");

    for (const auto& g : cases) {
        const auto start = std::chrono::steady_clock::now();
        std::string warn;
        const WeylElement v = cli::window_element(g.t.type, g.t.n, g.v, &warn);
        const auto m = trees_pipeline(g.t, v);
        const std::string id = std::string(g.name) + " ";
        r.check(m.w.str() == g.w, id + "w(tau) = " + m.w.str());
        r.check(m.h.m.str() == g.h, id + "H = " + m.h.m.str());
        r.check(m.k.m.str() == g.k, id + "K = " + m.k.m.str());
        r.check(m.c == g.c, id + "capacity");
        r.check(m.poly.str() == g.poly, id + "trees gave " + m.poly.str());

        const auto rep = validate_triple(g.t);
        const QPoly raw = kl_via_inductive(m.h.m, m.c);
        if (g.t.type == LieType::A || rep.side_conditions_ok()) {
            r.check(raw.str() == g.poly, id + "induction gave " + raw.str());
        } else {
            std::string why = rep.side_violations.front().rule + " at i=" +
                              std::to_string(rep.side_violations.front().index);
            r.check(raw.str() == g.poly, id + "induction: hypotheses fail (" + why + "); formula gives " + raw.str());
        }
        if (g.oracle) {
            const WeylElement w0 = longest_element(g.t.type, g.t.n);
            const QPoly p = kl_oracle(g.t.type, g.t.n, compose(w0, v), compose(w0, m.w), 1u << 22);
            r.check(p.str() == g.poly, id + "oracle gave " + p.str());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.check(secs < (g.oracle && g.t.n > 6 ? 60.0 : 1.0), id + "took too long");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %s%s (%.3f s)", g.name, m.poly.str().c_str(),
                      warn.empty() ? "" : ", v normalised", secs);
        r.note(buf);
    }
}

void three_way(Report& r) {
    std::size_t pairs = 0, full = 0, partial = 0, bad = 0;
    for (LieType ty : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        const int top = ty == LieType::A ? 5 : 3;
        for (int n = 1; n <= top; ++n) {
            KLOracle o(ty, n);
            const auto els = all_elements(ty, n);
            const auto w0 = longest_element(ty, n);
            for (const auto& t : all_valid_triples(ty, n)) {
                const auto w = vexillary_from_triple(t);
                const bool side = ty == LieType::A || validate_triple(t).side_conditions_ok();
                for (const auto& v : els) {
                    if (!o.leq(w, v)) continue;
                    ++pairs;
                    const QPoly pt = kl_via_trees(t, v);
                    const QPoly po = o.P(compose(w0, v), compose(w0, w));
                    bool ok = pt == po;
                    if (side) {
                        ok = ok && kl_via_inductive(t, v) == po;
                        ++full;
                    } else {
                        ++partial;
                    }
                    if (!ok) {
                        ++bad;
                        if (bad <= 5) r.check(false, t.str() + " v=" + v.str());
                    }
                }
            }
        }
    }
    r.check(bad == 0, std::to_string(bad) + " mismatches");
    r.note(std::to_string(pairs) + " pairs: " + std::to_string(full) + " three-way, " + std::to_string(partial) +
           " trees vs oracle where the inductive hypotheses fail, " + std::to_string(bad) + " mismatches");
}

WeylElement random_above(const WeylElement& w, std::mt19937_64& rng) {
    const auto s = simple_indices(w.type(), w.n());
    const int steps = static_cast<int>(rng() % (root_count(w.type(), w.n()) + 1));
    WeylElement v = w;
    for (int i = 0; i < steps; ++i) {
        auto u = apply_simple(v, s[rng() % s.size()], rng() % 2 ? Side::Left : Side::Right);
        if (length(u) > length(v)) v = u;
    }
    return v;
}

void invariants(Report& r) {
    std::mt19937_64 rng(8);
    for (LieType ty : {LieType::A, LieType::B, LieType::C, LieType::D}) {
        std::vector<std::vector<Triple>> pool(9);
        for (int n = 2; n <= 8; ++n) pool[n] = all_valid_triples(ty, n);
        int compared = 0, bad = 0;
        for (int it = 0; it < 1000; ++it) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const Triple& t = pool[n][rng() % pool[n].size()];
            const auto w = vexillary_from_triple(t);
            const auto v = random_above(w, rng);
            const QPoly p = kl_via_trees(t, v);
            // P_{w0 v, w0 w}: the length gap is l(v) - l(w).
            const int gap = length(v) - length(w);
            bool ok = p.coeff(0) == 1;
            for (int k = 0; k <= p.degree(); ++k) ok = ok && p.coeff(k) >= 0;
            ok = ok && (gap == 0 ? p == QPoly{1} : 2 * p.degree() < gap);
            if (ty == LieType::A || validate_triple(t).side_conditions_ok()) {
                ok = ok && kl_via_inductive(t, v) == p;
                ++compared;
            }
            if (!ok) {
                ++bad;
                r.check(false, t.str() + " v=" + v.str() + " P=" + p.str());
            }
        }
        r.note(std::string(1, to_char(ty)) + ": 1000 inputs, " + std::to_string(compared) +
               " compared with induction, " + std::to_string(bad) + " failures");
    }
}

void qbinomial(Report& r) {
    int checked = 0;
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b) {
            const QPoly x = q_binomial(a, b);
            r.check(x == q_binomial(a, a - b), "symmetry " + std::to_string(a) + "," + std::to_string(b));
            Int binom = 1;
            for (int i = 0; i < b; ++i) binom = binom * (a - i) / (i + 1);
            r.check(x.eval(1) == binom, "q=1 at " + std::to_string(a) + "," + std::to_string(b));
            if (a > 0 && b > 0 && b < a) {
                const QPoly left = q_binomial(a - 1, b - 1) + QPoly::monomial(1, b) * q_binomial(a - 1, b);
                const QPoly right = q_binomial(a - 1, b) + QPoly::monomial(1, a - b) * q_binomial(a - 1, b - 1);
                r.check(x == left && x == right, "Pascal at " + std::to_string(a) + "," + std::to_string(b));
            }
            ++checked;
        }
    r.note(std::to_string(checked) + " pairs with alpha <= 12");
}

void weyl(Report& r) {
    long pairs = 0;
    for (LieType ty : {LieType::A, LieType::B, LieType::C, LieType::D})
        for (int n = 1; n <= 4; ++n) {
            const int expect = ty == LieType::A ? n * (n - 1) / 2 : ty == LieType::D ? n * n - n : n * n;
            r.check(length(longest_element(ty, n)) == expect && root_count(ty, n) == expect,
                    std::string(1, to_char(ty)) + std::to_string(n) + " longest element length");
            if (n > 3) continue;
            const auto els = all_elements(ty, n);
            const std::size_t m = els.size();
            std::vector<std::vector<char>> le(m, std::vector<char>(m));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    le[i][j] = bruhat_leq(els[i], els[j]);
                    r.check(le[i][j] == bruhat_leq_subword(els[i], els[j]), "subword criterion " + els[i].str() +
                                                                                " <= " + els[j].str());
                    if (le[i][j] && i != j) r.check(length(els[i]) < length(els[j]), "grading");
                    ++pairs;
                }
            for (std::size_t i = 0; i < m; ++i) {
                r.check(le[i][i], "reflexive");
                for (std::size_t j = 0; j < m; ++j) {
                    if (i != j && le[i][j]) r.check(!le[j][i], "antisymmetric");
                    if (!le[i][j]) continue;
                    for (std::size_t k = 0; k < m; ++k)
                        if (le[j][k] && !le[i][k]) r.check(false, "transitive");
                }
            }
        }
    r.note(std::to_string(pairs) + " comparisons at rank <= 3");
}

void oracle(Report& r) {
    KLOracle o(LieType::A, 4);
    const WeylElement e = identity(LieType::A, 4);
    const WeylElement x(LieType::A, {3, 4, 1, 2});
    const QPoly p = o.P(e, x), pr = o.P_via_R(e, x);
    r.check(p.str() == "q + 1", "recursion gave " + p.str());
    r.check(pr.str() == "q + 1", "R-polynomials gave " + pr.str());
    r.note("P_{1234,3412} = " + p.str() + " by both routes");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit;
        std::function<void(Report&)> run;
    };
    const std::vector<Criterion> all{
        {"golden examples", 60.0 * 2, golden},
        {"three-way agreement, A n<=5 and B/C/D n<=3", 300.0, three_way},
        {"invariants on 1000 random inputs per type, n<=8", 120.0, invariants},
        {"q-binomial identities, alpha<=12", 1.0, qbinomial},
        {"Weyl group foundations, rank<=3", 30.0, weyl},
        {"oracle sanity in S4", 1.0, oracle},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Report r;
        const auto start = std::chrono::steady_clock::now();
        try {
            all[i].run(r);
        } catch (const std::exception& e) {
            r.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > all[i].limit) r.check(false, "time limit exceeded");
        std::printf("%s %zu %s (%.2f s)\n", r.ok ? "PASS" : "FAIL", i + 1, all[i].name, secs);
        for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
        failed += !r.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
