#include "covex/capacity_tree.hpp"

#include "covex/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace covex {

std::vector<ProfilePoint> profile(const ABMatrix& m) {
    std::vector<ProfilePoint> pts{{0, 0}};
    auto step = [&pts](int dy) { pts.push_back({pts.back().x + 1, pts.back().y + dy}); };
    for (int i = 0; i < m.d(); ++i) {
        for (int j = 0; j < m.b[i]; ++j) step(1);
        for (int j = 0; j < m.a[i]; ++j) step(-1);
    }
    return pts;
}

std::vector<int> capacity(const ABMatrix& h, const ABMatrix& k) {
    if (h.width() < k.width())
        throw ValidationError("profile of " + k.str() + " is wider than " + h.str());
    auto H = profile(h), K = profile(k);
    // A dropped trailing row of k leaves an up-run missing at the end.
    while (K.size() < H.size()) K.push_back({K.back().x + 1, K.back().y + 1});
    std::vector<int> c;
    int x = 0;
    for (int i = 0; i < h.d(); ++i) {
        x += h.b[i] + h.a[i];
        int gap = H[x].y - K[x].y;
        if (gap < 0 || gap % 2 != 0)
            throw ValidationError("valley " + std::to_string(i + 1) + " of " + h.str() + " sits " + std::to_string(gap) + " above " + k.str());
        c.push_back(gap / 2);
    }
    return c;
}

std::string to_string(PairKind k) {
    switch (k) {
        case PairKind::AlphaBeta: return "ab";
        case PairKind::AlphaAlpha: return "aa";
        case PairKind::Terminal: return "terminal";
    }
    return "?";
}

ABWord pair_letters(std::vector<Letter> letters, std::vector<int> run, bool link_leftover) {
    ABWord w;
    w.letters = std::move(letters);
    w.run = std::move(run);
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(w.letters.size()); ++i) {
        if (w.letters[i] == Letter::Alpha) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            w.pairs.push_back({PairKind::AlphaBeta, stack.back(), i});
            stack.pop_back();
        } else {
            w.unmatched_beta.push_back(i);
        }
    }
    w.leftover_alpha = stack;
    // Unmatched α's pair up from the right; an odd one out at the left is terminal.
    const int m = link_leftover ? static_cast<int>(stack.size()) : 0;
    for (int j = m - 1; j >= 1; j -= 2) w.pairs.push_back({PairKind::AlphaAlpha, stack[j - 1], stack[j]});
    if (m % 2 == 1) w.pairs.push_back({PairKind::Terminal, stack[0], -1});
    std::sort(w.pairs.begin(), w.pairs.end(), [](const LinkedPair& x, const LinkedPair& y) { return x.first < y.first; });
    return w;
}

ABWord ab_word(const ABMatrix& h, int total, bool link_leftover) {
    if (h.width() > total) throw ValidationError("word of " + h.str() + " is longer than " + std::to_string(total));
    std::vector<Letter> letters;
    std::vector<int> run;
    for (int i = 0; i < h.d(); ++i) {
        letters.insert(letters.end(), h.b[i], Letter::Beta);
        run.insert(run.end(), h.b[i], -1);
        letters.insert(letters.end(), h.a[i], Letter::Alpha);
        run.insert(run.end(), h.a[i], i);
    }
    letters.resize(total, Letter::Beta);
    run.resize(total, -1);
    return pair_letters(std::move(letters), std::move(run), link_leftover);
}

ABWord tree_word(LieType t, int n, const ABMatrix& h) {
    if (t == LieType::A) return ab_word(h, h.width(), false);
    ABWord w = ab_word(h, 2 * n);
    if (t != LieType::D) return w;
    w.letters.pop_back();
    w.run.pop_back();
    return pair_letters(std::move(w.letters), std::move(w.run), true);
}

std::string ABWord::letters_str() const {
    std::string s;
    for (Letter l : letters) s.push_back(static_cast<char>(l));
    return s;
}

std::string ABWord::str() const {
    const int L = static_cast<int>(letters.size());
    std::vector<std::string> open(L), close(L);
    for (const auto& p : pairs) {
        if (p.kind == PairKind::Terminal) {
            open[p.first] += "(";
            close[p.first] += ")";
        } else {
            open[p.first] += "(";
            close[p.second] += ")";
        }
    }
    std::ostringstream os;
    int i = 0;
    while (i < L) {
        const char* sym = letters[i] == Letter::Alpha ? "α" : "β";
        if (open[i].empty() && close[i].empty()) {
            int j = i;
            while (j < L && letters[j] == letters[i] && open[j].empty() && close[j].empty()) ++j;
            os << sym;
            if (j - i > 1) os << "^" << (j - i);
            i = j;
            continue;
        }
        os << open[i] << sym << close[i];
        ++i;
    }
    return os.str();
}

LabelTree build_tree(const ABWord& w, const std::vector<int>& c, LieType t) {
    struct Raw {
        TreeEdge e;
        int jidx;  // position among leftover α's for aa/terminal edges, -1 otherwise
    };
    std::vector<Raw> raw;
    const auto& left = w.leftover_alpha;
    auto left_index = [&left](int pos) {
        return static_cast<int>(std::find(left.begin(), left.end(), pos) - left.begin());
    };
    for (const auto& p : w.pairs) {
        if (t == LieType::A && p.kind != PairKind::AlphaBeta)
            throw ValidationError("type A word links α's among themselves");
        TreeEdge e;
        e.kind = p.kind;
        e.plus = p.kind != PairKind::AlphaBeta;
        if (p.kind == PairKind::AlphaAlpha) {
            e.pos = p.second;
            e.partner = p.first;
        } else {
            e.pos = p.first;
            e.partner = p.second;
        }
        e.run = w.run[e.pos];
        if (e.run < 0 || e.run >= static_cast<int>(c.size()))
            throw ValidationError("capacity vector is too short for the word");
        e.cap = c[e.run];
        raw.push_back({e, e.plus ? left_index(e.pos) : -1});
    }
    const int m = static_cast<int>(raw.size());
    // Parents: innermost enclosing αβ pair; otherwise the nearest plus edge to the left.
    for (int i = 0; i < m; ++i) {
        TreeEdge& e = raw[i].e;
        int par = -1;
        if (e.kind == PairKind::AlphaBeta) {
            for (int j = 0; j < m; ++j) {
                const TreeEdge& f = raw[j].e;
                if (f.kind == PairKind::AlphaBeta && f.pos < e.pos && e.partner < f.partner &&
                    (par < 0 || raw[par].e.pos < f.pos))
                    par = j;
            }
            if (par < 0)
                for (int j = 0; j < m; ++j)
                    if (raw[j].e.plus && raw[j].e.pos < e.pos && (par < 0 || raw[par].e.pos < raw[j].e.pos)) par = j;
        } else {
            for (int j = 0; j < m; ++j)
                if (raw[j].e.plus && raw[j].jidx == raw[i].jidx - 2) par = j;
        }
        e.parent = par;
    }
    // Pre-order numbering.
    std::vector<std::vector<int>> kids(m + 1);
    for (int i = 0; i < m; ++i) kids[raw[i].e.parent < 0 ? m : raw[i].e.parent].push_back(i);
    for (auto& v : kids)
        std::sort(v.begin(), v.end(), [&raw](int x, int y) { return raw[x].e.pos < raw[y].e.pos; });
    std::vector<int> order, index(m, -1);
    std::function<void(int)> visit = [&](int i) {
        index[i] = static_cast<int>(order.size());
        order.push_back(i);
        for (int ch : kids[i]) visit(ch);
    };
    for (int ch : kids[m]) visit(ch);

    LabelTree tree;
    tree.type = t;
    for (int i : order) {
        TreeEdge e = raw[i].e;
        e.parent = e.parent < 0 ? -1 : index[e.parent];
        e.children.clear();
        for (int ch : kids[i]) e.children.push_back(index[ch]);
        tree.edges.push_back(e);
    }
    for (int ch : kids[m]) tree.top.push_back(index[ch]);

    std::function<int(int)> bound = [&](int i) {
        TreeEdge& e = tree.edges[i];
        if (e.children.empty()) return e.bound = e.cap;
        int b = INT_MAX;
        for (int ch : e.children) b = std::min(b, bound(ch));
        return e.bound = b;
    };
    for (int i : tree.top) bound(i);

    if (t != LieType::A) {
        // Right-hand siblings up to the first plus sibling, within one block.
        std::vector<int> barrier = w.unmatched_beta;
        barrier.insert(barrier.end(), w.leftover_alpha.begin(), w.leftover_alpha.end());
        for (auto& e : tree.edges) {
            const std::vector<int>& sibs = e.parent < 0 ? tree.top : tree.edges[e.parent].children;
            std::vector<int> right;
            for (int j : sibs) {
                const TreeEdge& f = tree.edges[j];
                if (f.pos <= e.pos) continue;
                bool blocked = std::any_of(barrier.begin(), barrier.end(), [&](int u) { return e.pos < u && u < f.pos; });
                if (!blocked) right.push_back(j);
            }
            auto first_plus = std::find_if(right.begin(), right.end(), [&](int j) { return tree.edges[j].plus; });
            if (first_plus != right.end()) e.preceding.assign(right.begin(), first_plus + 1);
        }
    }
    return tree;
}

bool labelling_ok(const LabelTree& t, const std::vector<int>& labels) {
    if (labels.size() != t.edges.size()) return false;
    for (size_t i = 0; i < t.edges.size(); ++i) {
        const TreeEdge& e = t.edges[i];
        int x = labels[i];
        if (x < 0 || x > e.bound) return false;
        for (int ch : e.children)
            if (x > labels[ch]) return false;
        if (t.type == LieType::A) continue;
        if (e.plus && x % 2) return false;
        if (x % 2 && !e.preceding.empty() &&
            std::all_of(e.preceding.begin(), e.preceding.end(), [&](int j) { return x <= labels[j]; }))
            return false;
    }
    return true;
}

void enumerate_labellings(const LabelTree& t, const std::function<void(const std::vector<int>&)>& visit) {
    const int m = static_cast<int>(t.edges.size());
    // Children before parents, right siblings before left ones.
    std::vector<int> order;
    std::function<void(int)> post = [&](int i) {
        const auto& ch = t.edges[i].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) post(*it);
        order.push_back(i);
    };
    for (auto it = t.top.rbegin(); it != t.top.rend(); ++it) post(*it);

    std::vector<int> labels(m, 0);
    const bool parity = t.type != LieType::A;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == m) {
            visit(labels);
            return;
        }
        const int i = order[idx];
        const TreeEdge& e = t.edges[i];
        int hi = e.children.empty() ? e.cap : INT_MAX;
        for (int ch : e.children) hi = std::min(hi, labels[ch]);
        for (int x = 0; x <= hi; ++x) {
            if (parity) {
                if (e.plus && x % 2) continue;
                if (x % 2 && !e.preceding.empty() &&
                    std::all_of(e.preceding.begin(), e.preceding.end(), [&](int j) { return x <= labels[j]; }))
                    continue;
            }
            labels[i] = x;
            rec(idx + 1);
        }
        labels[i] = 0;
    };
    rec(0);
}

QPoly tree_polynomial(const LabelTree& t) {
    std::vector<Int> coeffs;
    enumerate_labellings(t, [&coeffs](const std::vector<int>& labels) {
        int s = 0;
        for (int x : labels) s += x;
        if (static_cast<int>(coeffs.size()) <= s) coeffs.resize(s + 1);
        coeffs[s] += 1;
    });
    return QPoly(std::move(coeffs));
}

TreeComputation trees_pipeline(const Triple& t, const WeylElement& v) {
    TreeComputation r;
    r.w = vexillary_from_triple(t);
    r.weak = weak_triple_from_pair(t, v);
    r.h = h_matrix(t);
    r.k = k_matrix(t, r.weak);
    r.c = capacity(r.h.m, r.k.m);
    r.word = tree_word(t.type, t.n, r.h.m);
    r.tree = build_tree(r.word, r.c, t.type);
    r.poly = tree_polynomial(r.tree);
    return r;
}

QPoly kl_via_trees(const Triple& t, const WeylElement& v) { return trees_pipeline(t, v).poly; }

std::string to_dot(const LabelTree& t, const std::vector<int>* labels) {
    std::ostringstream os;
    os << "digraph tree {\n  node [shape=point];\n  root;\n";
    for (size_t i = 0; i < t.edges.size(); ++i) os << "  e" << i << ";\n";
    for (size_t i = 0; i < t.edges.size(); ++i) {
        const TreeEdge& e = t.edges[i];
        os << "  " << (e.parent < 0 ? std::string("root") : "e" + std::to_string(e.parent)) << " -> e" << i << " [";
        os << "label=" << (labels ? (*labels)[i] : e.bound);
        if (e.plus) os << ", style=bold";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace covex
