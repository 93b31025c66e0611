#pragma once

#include "covex/weyl.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace covex {

// Rank conditions dim(E_{p_i} ∩ F_{q_i}) >= k_i of length s.
struct Triple {
    LieType type = LieType::A;
    int n = 0;
    std::vector<int> k, p, q;
    int s() const { return static_cast<int>(k.size()); }
    std::string str() const;  // "k=1,3 p=3,4 q=2,5"
};

// Same layout as Triple; k holds the counts k' read off a fixed point.
struct WeakTriple {
    LieType type = LieType::A;
    int n = 0;
    std::vector<int> k, p, q;
    std::string str() const;
};

struct Violation {
    std::string rule;
    int index = 0;  // 1-based row, 0 when not row specific
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;       // structural rules
    std::vector<Violation> side_violations;  // hypotheses of the inductive formula (B/C/D)
    bool ok() const { return violations.empty(); }
    bool side_conditions_ok() const { return side_violations.empty(); }
    std::string describe() const;
};

// 2 x d matrix (a_1..a_d ; b_0..b_{d-1}).
struct ABMatrix {
    std::vector<int> a, b;
    int d() const { return static_cast<int>(a.size()); }
    int width() const;
    friend bool operator==(const ABMatrix& x, const ABMatrix& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const ABMatrix& x, const ABMatrix& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    std::string str() const;  // "(2,2,4;5,2,1)"
};

struct MatrixResult {
    ABMatrix m;
    // Type A: nu, its conjugate nu_t and the partition (lambda for 𝔥, mu for 𝔎).
    // Types B/C/D: partition holds the sums p_i + q_i (shifted for D); nu stays empty.
    std::vector<int> nu, nu_t, partition;
    std::vector<int> eliminated;  // 1-based rows of the weak triple dropped by k_matrix
};

Triple parse_triple(LieType t, int n, std::string_view text);

ValidationReport validate_triple(const Triple& t);
void require_valid(const Triple& t);  // throws ValidationError with the report

int count_statistic(LieType t, int n, const WeylElement& w, int p, int q);

WeylElement vexillary_from_triple(const Triple& t);
WeakTriple weak_triple_from_pair(const Triple& t, const WeylElement& v);
bool weak_inequalities_hold(const WeakTriple& wt);

MatrixResult h_matrix(const Triple& t);
MatrixResult k_matrix(const Triple& t, const WeakTriple& wt);

// All structurally valid triples of the given type and rank.
std::vector<Triple> all_valid_triples(LieType t, int n);

}  // namespace covex
