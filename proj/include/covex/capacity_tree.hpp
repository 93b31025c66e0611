#pragma once

#include "covex/polyq.hpp"
#include "covex/triples.hpp"
#include "covex/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace covex {

struct ProfilePoint {
    int x, y;
};

// Lattice path starting at (0,0): b_0 up-steps, a_1 down-steps, b_1 up-steps, ...
std::vector<ProfilePoint> profile(const ABMatrix& m);

// c_i = half the drop from the i-th valley of h (the end of its i-th
// α-run) down to the profile of k at the same x. A narrower k is extended
// by up-steps on the right.
std::vector<int> capacity(const ABMatrix& h, const ABMatrix& k);

enum class Letter : char { Alpha = 'a', Beta = 'b' };
enum class PairKind { AlphaBeta, AlphaAlpha, Terminal };

std::string to_string(PairKind k);

struct LinkedPair {
    PairKind kind;
    int first;   // opening α
    int second;  // closing β or α; -1 for a terminal α
};

struct ABWord {
    std::vector<Letter> letters;
    std::vector<int> run;  // index of the α-run holding each α, -1 on β
    std::vector<LinkedPair> pairs;
    std::vector<int> unmatched_beta;
    std::vector<int> leftover_alpha;  // α's outside every αβ pair, left to right
    std::string str() const;          // β^7(αβ)(αβ)(α)(αβ)
    std::string letters_str() const;  // bbbbbbbababaab
};

// β^{b_0} α^{a_1} ... β^{b_{d-1}} α^{a_d}, padded with β up to total.
// Without link_leftover the α's outside αβ pairs stay unpaired.
ABWord ab_word(const ABMatrix& h, int total, bool link_leftover = true);
ABWord pair_letters(std::vector<Letter> letters, std::vector<int> run, bool link_leftover = true);
// The word the trees are grown from: the bare matrix word for A, 2n letters
// for B and C, 2n-1 for D.
ABWord tree_word(LieType t, int n, const ABMatrix& h);

struct TreeEdge {
    PairKind kind = PairKind::AlphaBeta;
    bool plus = false;
    int pos = 0;      // α carrying the edge
    int partner = -1;  // matching β or α
    int run = 0;
    int cap = 0;    // capacity of the valley of this α-run
    int bound = 0;  // cap on leaves, min of the children's bounds otherwise
    int parent = -1;
    std::vector<int> children;
    std::vector<int> preceding;  // edges the parity rule compares against
};

// Edges are stored in pre-order; parent == -1 marks a child of the root.
struct LabelTree {
    LieType type = LieType::A;
    std::vector<TreeEdge> edges;
    std::vector<int> top;  // children of the root, left to right
};

LabelTree build_tree(const ABWord& w, const std::vector<int>& c, LieType t);

bool labelling_ok(const LabelTree& t, const std::vector<int>& labels);
void enumerate_labellings(const LabelTree& t, const std::function<void(const std::vector<int>&)>& visit);
QPoly tree_polynomial(const LabelTree& t);

struct TreeComputation {
    WeylElement w;
    WeakTriple weak;
    MatrixResult h, k;
    std::vector<int> c;
    ABWord word;
    LabelTree tree;
    QPoly poly;
};

TreeComputation trees_pipeline(const Triple& t, const WeylElement& v);
QPoly kl_via_trees(const Triple& t, const WeylElement& v);

std::string to_dot(const LabelTree& t, const std::vector<int>* labels = nullptr);

}  // namespace covex
