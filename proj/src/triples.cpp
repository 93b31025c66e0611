#include "covex/triples.hpp"

#include "covex/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace covex {

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

}  // namespace

std::string Triple::str() const { return "k=" + join(k) + " p=" + join(p) + " q=" + join(q); }
std::string WeakTriple::str() const { return "k=" + join(k) + " p=" + join(p) + " q=" + join(q); }

int ABMatrix::width() const {
    int s = 0;
    for (int x : a) s += x;
    for (int x : b) s += x;
    return s;
}

std::string ABMatrix::str() const { return "(" + join(a) + ";" + join(b) + ")"; }

std::string ValidationReport::describe() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.rule << (v.index ? " at i=" + std::to_string(v.index) : "") << ": " << v.message << "\n";
    for (const auto& v : side_violations)
        os << v.rule << (v.index ? " at i=" + std::to_string(v.index) : "") << ": " << v.message << "\n";
    return os.str();
}

Triple parse_triple(LieType t, int n, std::string_view text) {
    Triple tr;
    tr.type = t;
    tr.n = n;
    std::string s(text);
    for (char& ch : s)
        if (ch == '(' || ch == ')') ch = ' ';
    if (s.find('=') != std::string::npos) {
        bool seen[3] = {false, false, false};
        size_t i = 0;
        while (i < s.size()) {
            size_t eq = s.find('=', i);
            if (eq == std::string::npos) break;
            size_t key = eq;
            while (key > i && std::isspace(static_cast<unsigned char>(s[key - 1]))) --key;
            if (key == i) throw ValidationError("malformed triple: " + s);
            char name = s[key - 1];
            size_t next = s.find('=', eq + 1);
            size_t end = s.size();
            if (next != std::string::npos) {
                end = next;
                while (end > eq && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
                --end;  // drop the next key letter
            }
            std::string body = s.substr(eq + 1, end - eq - 1);
            for (char& ch : body)
                if (ch == ';') ch = ' ';
            std::vector<int> vals = parse_int_list(body);
            int slot = name == 'k' ? 0 : name == 'p' ? 1 : name == 'q' ? 2 : -1;
            if (slot < 0 || seen[slot]) throw ValidationError("malformed triple: " + s);
            seen[slot] = true;
            (slot == 0 ? tr.k : slot == 1 ? tr.p : tr.q) = vals;
            i = end;
        }
        if (!(seen[0] && seen[1] && seen[2])) throw ValidationError("triple needs k=, p= and q=: " + s);
    } else {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == ';') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() != 3) throw ValidationError("triple needs three groups k;p;q: " + s);
        tr.k = parse_int_list(parts[0]);
        tr.p = parse_int_list(parts[1]);
        tr.q = parse_int_list(parts[2]);
    }
    return tr;
}

namespace {

MatrixResult matrix_a(int n, const std::vector<int>& k, const std::vector<int>& p, const std::vector<int>& q) {
    MatrixResult r;
    int prev = 0;
    for (size_t i = 0; i < k.size(); ++i) {
        int val = n - q[i] - p[i] + k[i];
        for (int j = prev; j < k[i]; ++j) r.nu.push_back(val);
        prev = std::max(prev, k[i]);
    }
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int x : r.nu) c += x >= i;
        r.nu_t.push_back(c);
    }
    for (int x : r.nu_t) r.partition.push_back(n - x);
    int last = 0;
    for (size_t i = 0; i < r.partition.size(); ++i) {
        int x = r.partition[i];
        if (i > 0 && x == r.partition[i - 1]) {
            ++r.m.a.back();
            continue;
        }
        r.m.a.push_back(1);
        r.m.b.push_back(x - last);
        last = x;
    }
    return r;
}

MatrixResult matrix_c(const std::vector<int>& k, const std::vector<int>& p, const std::vector<int>& q, int shift) {
    MatrixResult r;
    const size_t s = k.size();
    int sa = 0, sb = 0;
    for (size_t i = 0; i < s; ++i) {
        r.partition.push_back(p[i] + q[i] + 2 * shift);
        r.m.a.push_back(k[i] - (i ? k[i - 1] : 0));
    }
    for (size_t i = 0; i < s; ++i) {
        sa += r.m.a[i];
        int bi = r.partition[i] - sa - sb;
        r.m.b.push_back(bi);
        sb += bi;
    }
    return r;
}

}  // namespace

ValidationReport validate_triple(const Triple& t) {
    ValidationReport rep;
    auto add = [&rep](std::string rule, int idx, std::string msg) {
        rep.violations.push_back({std::move(rule), idx, std::move(msg)});
    };
    if (t.n < 1) {
        add("rank", 0, "n must be at least 1");
        return rep;
    }
    const int s = t.s();
    if (s == 0) add("length", 0, "k is empty");
    if (static_cast<int>(t.p.size()) != s || static_cast<int>(t.q.size()) != s) {
        add("length", 0, "k, p and q must have the same length");
        return rep;
    }
    const bool d = t.type == LieType::D;
    const int plo = d ? 0 : 1, phi = d ? t.n - 1 : t.n;
    const int qlo = t.type == LieType::A || d ? 0 : 1, qhi = phi;
    for (int i = 0; i < s; ++i) {
        const int r = i + 1;
        if (t.k[i] < 1) add("k positive", r, "k_" + std::to_string(r) + " = " + std::to_string(t.k[i]) + " < 1");
        if (t.p[i] < plo || t.p[i] > phi)
            add("p range", r, "p_" + std::to_string(r) + " = " + std::to_string(t.p[i]) + " outside [" + std::to_string(plo) + "," + std::to_string(phi) + "]");
        if (t.q[i] < qlo || t.q[i] > qhi)
            add("q range", r, "q_" + std::to_string(r) + " = " + std::to_string(t.q[i]) + " outside [" + std::to_string(qlo) + "," + std::to_string(qhi) + "]");
        const int cap = std::min(t.p[i], t.q[i]) + (d ? 1 : 0);
        if (t.k[i] > cap)
            add("k bound", r, "k_" + std::to_string(r) + " = " + std::to_string(t.k[i]) + " exceeds " + std::to_string(cap));
        if (t.type == LieType::A && t.k[i] <= t.p[i] + t.q[i] - t.n)
            add("nonvacuous", r, "k_" + std::to_string(r) + " <= p_" + std::to_string(r) + " + q_" + std::to_string(r) + " - n");
        if (d && t.p[i] == t.n - 1 && t.q[i] == t.n - 1 && t.k[i] % 2 != 0)
            add("parity", r, "k_" + std::to_string(r) + " must be even when p_" + std::to_string(r) + " = q_" + std::to_string(r) + " = n-1");
        if (i + 1 < s) {
            if (t.k[i + 1] <= t.k[i]) add("k increasing", r, "k must be strictly increasing");
            if (t.p[i + 1] < t.p[i]) add("p increasing", r, "p must be weakly increasing");
            if (t.q[i + 1] < t.q[i]) add("q increasing", r, "q must be weakly increasing");
            const int gap = t.k[i + 1] - t.k[i];
            const int room = (t.p[i + 1] - t.p[i]) + (t.q[i + 1] - t.q[i]);
            if (!(gap < room))
                add("gap", r, "k_" + std::to_string(r + 1) + " - k_" + std::to_string(r) + " = " + std::to_string(gap) + " is not < (p_" + std::to_string(r + 1) + " - p_" + std::to_string(r) + ") + (q_" + std::to_string(r + 1) + " - q_" + std::to_string(r) + ") = " + std::to_string(room));
        }
    }
    if (!rep.ok() || t.type == LieType::A) return rep;

    const ABMatrix h = matrix_c(t.k, t.p, t.q, d ? 1 : 0).m;
    const int dd = h.d();
    const int lam = t.p[s - 1] + t.q[s - 1] + (d ? 2 : 0);
    const int N = d ? 2 * t.n : 2 * t.n + 1;
    if (!(lam < N - h.a[dd - 1]))
        rep.side_violations.push_back({"side condition (1)", dd, "lambda_d = " + std::to_string(lam) + " is not < N - a_d = " + std::to_string(N - h.a[dd - 1])});
    for (int i = 1; i <= dd; ++i) {
        int lhs = 0;
        for (int j = i; j <= dd; ++j) lhs += h.a[j - 1];
        for (int j = i; j <= dd - 1; ++j) lhs -= h.b[j];
        if (!(lhs < N - lam))
            rep.side_violations.push_back({"side condition (2)", i, std::to_string(lhs) + " is not < N - lambda_d = " + std::to_string(N - lam)});
    }
    return rep;
}

void require_valid(const Triple& t) {
    auto rep = validate_triple(t);
    if (!rep.ok()) throw ValidationError("invalid triple " + t.str() + "\n" + rep.describe());
}

int count_statistic(LieType t, int n, const WeylElement& w, int p, int q) {
    int c = 0;
    switch (t) {
        case LieType::A:
            for (int a = 1; a <= p && a <= n; ++a)
                if (w(a) > n - q) ++c;
            break;
        case LieType::B:
        case LieType::C:
            for (int a = std::max(1, n + 1 - p); a <= n; ++a)
                if (w(a) <= -(n + 1 - q)) ++c;
            break;
        case LieType::D:
            for (int a = std::max(1, n - p); a <= n; ++a)
                if (w(a) <= -(n - q)) ++c;
            break;
    }
    return c;
}

namespace {

struct Rank {
    int p, m, k;
};

// Bruhat-minimal permutation of 1..N with #{a <= p : w(a) > N - m} >= k for
// every constraint, read off the pointwise smallest admissible rank function.
// Returns an empty vector when that function is not a permutation's.
std::vector<int> min_perm(int N, const std::vector<Rank>& cons) {
    std::vector<std::vector<int>> r(N + 1, std::vector<int>(N + 1, 0));
    for (int p = 0; p <= N; ++p)
        for (int m = 0; m <= N; ++m) {
            int v = std::max(0, p + m - N);
            for (const auto& c : cons) v = std::max(v, c.k - std::max(0, c.p - p) - std::max(0, c.m - m));
            r[p][m] = v;
        }
    std::vector<int> w(N);
    for (int p = 1; p <= N; ++p) {
        int hit = -1;
        for (int m = 1; m <= N; ++m) {
            int e = r[p][m] - r[p - 1][m] - r[p][m - 1] + r[p - 1][m - 1];
            if (e != 0 && e != 1) return {};
            if (e == 1) {
                if (hit >= 0) return {};
                hit = m;
            }
        }
        if (hit < 0) return {};
        w[p - 1] = N - hit + 1;
    }
    return w;
}

std::vector<int> signed_min(int n, const std::vector<int>& k, const std::vector<int>& p, const std::vector<int>& q) {
    const int N = 2 * n;
    std::vector<Rank> cons;
    for (size_t i = 0; i < k.size(); ++i) {
        cons.push_back({p[i], q[i], k[i]});
        cons.push_back({N - p[i], N - q[i], k[i] - p[i] - q[i] + N});
    }
    auto W = min_perm(N, cons);
    if (W.empty()) return {};
    for (int j = 1; j <= N; ++j)
        if (W[N - j] != N + 1 - W[j - 1]) return {};
    std::vector<int> out(n);
    for (int a = 1; a <= n; ++a) {
        int j = W[n + a - 1];
        out[a - 1] = j > n ? j - n : j - n - 1;
    }
    return out;
}

bool exact(const Triple& t, const WeylElement& w) {
    for (int i = 0; i < t.s(); ++i)
        if (count_statistic(t.type, t.n, w, t.p[i], t.q[i]) != t.k[i]) return false;
    return true;
}

}  // namespace

WeylElement vexillary_from_triple(const Triple& t) {
    require_valid(t);
    const int n = t.n;
    if (t.type == LieType::A) {
        std::vector<Rank> cons;
        for (int i = 0; i < t.s(); ++i) cons.push_back({t.p[i], t.q[i], t.k[i]});
        auto w = min_perm(n, cons);
        if (!w.empty()) {
            WeylElement e = make_unchecked(LieType::A, w);
            if (exact(t, e)) return e;
        }
        throw ValidationError("no vexillary element realizes " + t.str());
    }
    std::vector<int> p = t.p, q = t.q;
    if (t.type == LieType::D)
        for (int i = 0; i < t.s(); ++i) ++p[i], ++q[i];
    auto v = signed_min(n, t.k, p, q);
    if (v.empty()) throw ValidationError("no vexillary element realizes " + t.str());
    if (t.type != LieType::D) {
        WeylElement e = make_unchecked(t.type, v);
        if (!exact(t, e)) throw ValidationError("no vexillary element realizes " + t.str());
        return e;
    }
    int neg = 0;
    for (int x : v) neg += x < 0;
    if (neg % 2 == 0) {
        WeylElement e = make_unchecked(LieType::D, v);
        if (exact(t, e)) return e;
        throw ValidationError("no vexillary element realizes " + t.str());
    }
    // Odd sign count: repair by toggling one sign and keep the shortest exact candidate.
    std::vector<WeylElement> cands;
    {
        auto c = v;
        c[0] = -c[0];
        cands.push_back(make_unchecked(LieType::D, c));
    }
    {
        auto c = v;
        for (int& x : c)
            if (x == 1 || x == -1) x = -x;
        cands.push_back(make_unchecked(LieType::D, c));
    }
    const WeylElement* best = nullptr;
    for (const auto& c : cands)
        if (exact(t, c) && (!best || length(c) < length(*best))) best = &c;
    if (!best) throw ValidationError("no vexillary element realizes " + t.str());
    return *best;
}

bool weak_inequalities_hold(const WeakTriple& wt) {
    for (size_t i = 0; i + 1 < wt.k.size(); ++i) {
        if (wt.k[i + 1] < wt.k[i]) return false;
        if (wt.k[i + 1] - wt.k[i] > (wt.p[i + 1] - wt.p[i]) + (wt.q[i + 1] - wt.q[i])) return false;
    }
    return wt.k.empty() || wt.k[0] > 0;
}

WeakTriple weak_triple_from_pair(const Triple& t, const WeylElement& v) {
    if (v.type() != t.type || v.n() != t.n) throw ValidationError("v has the wrong type or rank");
    WeylElement w = vexillary_from_triple(t);
    if (!bruhat_leq(w, v)) throw ValidationError("v = " + v.str() + " is not above w = " + w.str() + " in Bruhat order");
    WeakTriple wt{t.type, t.n, {}, t.p, t.q};
    for (int i = 0; i < t.s(); ++i) wt.k.push_back(count_statistic(t.type, t.n, v, t.p[i], t.q[i]));
    if (!weak_inequalities_hold(wt)) throw ValidationError("weak triple " + wt.str() + " violates its inequalities");
    return wt;
}

MatrixResult h_matrix(const Triple& t) {
    require_valid(t);
    if (t.type == LieType::A) return matrix_a(t.n, t.k, t.p, t.q);
    return matrix_c(t.k, t.p, t.q, t.type == LieType::D ? 1 : 0);
}

MatrixResult k_matrix(const Triple& t, const WeakTriple& wt) {
    if (wt.type != t.type || wt.n != t.n || wt.p != t.p || wt.q != t.q)
        throw ValidationError("weak triple does not belong to " + t.str());
    if (!weak_inequalities_hold(wt)) throw ValidationError("weak triple " + wt.str() + " violates its inequalities");
    // Rows repeating the previous k' carry no rank condition and are dropped.
    std::vector<int> k, p, q, dropped;
    for (size_t i = 0; i < wt.k.size(); ++i) {
        if (!k.empty() && wt.k[i] == k.back()) {
            dropped.push_back(static_cast<int>(i) + 1);
            continue;
        }
        k.push_back(wt.k[i]);
        p.push_back(wt.p[i]);
        q.push_back(wt.q[i]);
    }
    MatrixResult r = t.type == LieType::A ? matrix_a(t.n, k, p, q) : matrix_c(k, p, q, t.type == LieType::D ? 1 : 0);
    r.eliminated = dropped;
    return r;
}

std::vector<Triple> all_valid_triples(LieType t, int n) {
    // Every rule is local to a row or to a pair of consecutive rows, so valid prefixes suffice.
    std::vector<Triple> out;
    const bool d = t == LieType::D;
    const int lo = t == LieType::A || d ? 0 : 1;
    const int hi = d ? n - 1 : n;
    Triple cur{t, n, {}, {}, {}};
    std::function<void()> grow = [&]() {
        const int s = cur.s();
        const int k0 = s ? cur.k.back() + 1 : 1;
        const int p0 = s ? cur.p.back() : lo;
        const int q0 = s ? cur.q.back() : lo;
        for (int k = k0; k <= n; ++k)
            for (int p = p0; p <= hi; ++p)
                for (int q = q0; q <= hi; ++q) {
                    cur.k.push_back(k);
                    cur.p.push_back(p);
                    cur.q.push_back(q);
                    if (validate_triple(cur).ok()) {
                        out.push_back(cur);
                        grow();
                    }
                    cur.k.pop_back();
                    cur.p.pop_back();
                    cur.q.pop_back();
                }
    };
    grow();
    return out;
}

}  // namespace covex
