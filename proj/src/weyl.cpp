#include "covex/weyl.hpp"

#include "covex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace covex {

char to_char(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    return '?';
}

LieType parse_lie_type(std::string_view s) {
    if (s.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A': return LieType::A;
            case 'B': return LieType::B;
            case 'C': return LieType::C;
            case 'D': return LieType::D;
        }
    }
    throw ValidationError("unknown type '" + std::string(s) + "' (expected A, B, C or D)");
}

WeylElement make_unchecked(LieType t, std::vector<int> window) {
    WeylElement w;
    w.type_ = t;
    w.w_ = std::move(window);
    return w;
}

WeylElement::WeylElement(LieType t, std::vector<int> window) : type_(t), w_(std::move(window)) {
    const int n = static_cast<int>(w_.size());
    if (n < 1) throw ValidationError("empty window");
    std::vector<char> seen(n + 1, 0);
    int neg = 0;
    for (int x : w_) {
        int a = std::abs(x);
        if (x == 0 || a > n || seen[a])
            throw ValidationError("window " + str() + " is not a signed permutation of 1.." + std::to_string(n));
        seen[a] = 1;
        if (x < 0) ++neg;
    }
    if (t == LieType::A && neg > 0) throw ValidationError("type A window " + str() + " has negative entries");
    if (t == LieType::D && neg % 2 != 0)
        throw ValidationError("type D window " + str() + " has an odd number of negative entries");
}

std::string WeylElement::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) os << (i ? " " : "") << w_[i];
    return os.str();
}

size_t WeylElementHash::operator()(const WeylElement& w) const {
    size_t h = static_cast<size_t>(w.type()) * 1315423911u;
    for (int x : w.window()) h = h * 131 + static_cast<size_t>(x + 64);
    return h;
}

WeylElement identity(LieType t, int n) {
    if (n < 1) throw ValidationError("rank must be at least 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return make_unchecked(t, std::move(v));
}

WeylElement longest_element(LieType t, int n) {
    if (n < 1) throw ValidationError("rank must be at least 1");
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) {
        if (t == LieType::A)
            v[i - 1] = n + 1 - i;
        else
            v[i - 1] = -i;
    }
    if (t == LieType::D && n % 2 == 1) v[0] = 1;
    return make_unchecked(t, std::move(v));
}

WeylElement compose(const WeylElement& x, const WeylElement& y) {
    if (x.type() != y.type() || x.n() != y.n()) throw ValidationError("compose: type or rank mismatch");
    std::vector<int> r(y.n());
    for (int i = 0; i < y.n(); ++i) {
        int v = y.window()[i];
        int xv = x.window()[std::abs(v) - 1];
        r[i] = v > 0 ? xv : -xv;
    }
    return make_unchecked(x.type(), std::move(r));
}

WeylElement inverse(const WeylElement& w) {
    std::vector<int> r(w.n());
    for (int i = 0; i < w.n(); ++i) {
        int v = w.window()[i];
        r[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
    }
    return make_unchecked(w.type(), std::move(r));
}

int length(const WeylElement& w) {
    const auto& v = w.window();
    const int n = w.n();
    int inv = 0, nsp = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0) ++neg;
        for (int j = i + 1; j < n; ++j) {
            if (v[i] > v[j]) ++inv;
            if (v[i] + v[j] < 0) ++nsp;
        }
    }
    switch (w.type()) {
        case LieType::A: return inv;
        case LieType::D: return inv + nsp;
        default: return inv + nsp + neg;
    }
}

int root_count(LieType t, int n) {
    switch (t) {
        case LieType::A: return n * (n - 1) / 2;
        case LieType::D: return n * n - n;
        default: return n * n;
    }
}

std::uint64_t group_order(LieType t, int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    switch (t) {
        case LieType::A: return f;
        case LieType::D: return n == 0 ? 1 : (f << n) / 2;
        default: return f << n;
    }
}

std::vector<int> simple_indices(LieType t, int n) {
    std::vector<int> r;
    if (t != LieType::A && !(t == LieType::D && n < 2)) r.push_back(0);
    for (int i = 1; i < n; ++i) r.push_back(i);
    return r;
}

namespace {

void check_index(const WeylElement& w, int i) {
    int lo = w.type() == LieType::A ? 1 : 0;
    if (i < lo || i >= w.n() || (w.type() == LieType::D && i == 0 && w.n() < 2))
        throw ValidationError("invalid simple reflection index " + std::to_string(i));
}

void right_simple(std::vector<int>& v, LieType t, int i) {
    if (i == 0) {
        if (t == LieType::D) {
            int a = v[0], b = v[1];
            v[0] = -b;
            v[1] = -a;
        } else {
            v[0] = -v[0];
        }
    } else {
        std::swap(v[i - 1], v[i]);
    }
}

}  // namespace

WeylElement apply_simple(const WeylElement& w, int i, Side side) {
    check_index(w, i);
    if (side == Side::Right) {
        auto v = w.window();
        right_simple(v, w.type(), i);
        return make_unchecked(w.type(), std::move(v));
    }
    // s_i w acts on values: s_i w = (w^{-1} s_i)^{-1}
    auto v = inverse(w).window();
    right_simple(v, w.type(), i);
    return inverse(make_unchecked(w.type(), std::move(v)));
}

bool is_descent(const WeylElement& w, int i, Side side) {
    check_index(w, i);
    const WeylElement& x = side == Side::Right ? w : inverse(w);
    const auto& v = x.window();
    if (i == 0) {
        if (w.type() == LieType::D) return v[0] + v[1] < 0;
        return v[0] < 0;
    }
    return v[i - 1] > v[i];
}

std::vector<int> reduced_word(const WeylElement& w) {
    std::vector<int> word;
    WeylElement x = w;
    auto gens = simple_indices(w.type(), w.n());
    while (true) {
        bool found = false;
        for (int i : gens) {
            if (is_descent(x, i, Side::Right)) {
                word.push_back(i);
                x = apply_simple(x, i, Side::Right);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

// Embedding of a signed permutation into the symmetric group on 2n letters.
// Position/value a in {-n..-1,1..n} maps to index a+n (a<0) or a+n-1 (a>0).
std::vector<int> unfold(const WeylElement& w) {
    const int n = w.n();
    auto idx = [n](int a) { return a < 0 ? a + n : a + n - 1; };
    std::vector<int> W(2 * n);
    for (int a = 1; a <= n; ++a) {
        int v = w.window()[a - 1];
        W[idx(a)] = idx(v);
        W[idx(-a)] = idx(-v);
    }
    return W;
}

bool rank_dominated(const std::vector<int>& u, const std::vector<int>& w) {
    const int N = static_cast<int>(u.size());
    // r[i][j] = #{a < i : x(a) >= j}
    std::vector<int> ru(N + 1, 0), rw(N + 1, 0);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j <= u[i]; ++j) ++ru[j];
        for (int j = 0; j <= w[i]; ++j) ++rw[j];
        for (int j = 0; j <= N; ++j)
            if (ru[j] > rw[j]) return false;
    }
    return true;
}

bool leq_descent(const WeylElement& u, const WeylElement& w, int lu, int lw) {
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    if (lu == 0) return true;
    for (int i : simple_indices(w.type(), w.n())) {
        if (is_descent(w, i, Side::Right)) {
            WeylElement ws = apply_simple(w, i, Side::Right);
            if (is_descent(u, i, Side::Right)) return leq_descent(apply_simple(u, i, Side::Right), ws, lu - 1, lw - 1);
            return leq_descent(u, ws, lu, lw - 1);
        }
    }
    return false;
}

}  // namespace

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.type() != w.type() || u.n() != w.n()) throw ValidationError("bruhat_leq: type or rank mismatch");
    switch (u.type()) {
        case LieType::A: {
            std::vector<int> a(u.window()), b(w.window());
            for (auto& x : a) --x;
            for (auto& x : b) --x;
            return rank_dominated(a, b);
        }
        case LieType::B:
        case LieType::C: return rank_dominated(unfold(u), unfold(w));
        case LieType::D: return leq_descent(u, w, length(u), length(w));
    }
    return false;
}

bool bruhat_leq_subword(const WeylElement& u, const WeylElement& w) {
    if (u.type() != w.type() || u.n() != w.n()) throw ValidationError("bruhat_leq_subword: type or rank mismatch");
    std::set<std::vector<int>> reach{identity(u.type(), u.n()).window()};
    for (int i : reduced_word(w)) {
        std::set<std::vector<int>> next = reach;
        for (const auto& x : reach) next.insert(apply_simple(make_unchecked(u.type(), x), i, Side::Right).window());
        reach = std::move(next);
    }
    return reach.count(u.window()) > 0;
}

std::vector<WeylElement> all_elements(LieType t, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WeylElement> out;
    do {
        if (t == LieType::A) {
            out.push_back(make_unchecked(t, perm));
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (t == LieType::D && __builtin_popcount(mask) % 2) continue;
            std::vector<int> v(perm);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) v[i] = -v[i];
            out.push_back(make_unchecked(t, std::move(v)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) throw ValidationError("not an integer: '" + tok + "'");
        out.push_back(v);
        tok.clear();
    };
    for (char ch : s) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            tok.push_back(ch);
    }
    flush();
    return out;
}

WeylElement parse_window(LieType t, std::string_view s) { return WeylElement(t, parse_int_list(s)); }

}  // namespace covex
