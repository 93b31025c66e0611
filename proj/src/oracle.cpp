#include "covex/oracle.hpp"

#include "covex/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace covex {

std::uint64_t oracle_budget() {
    const char* env = std::getenv("COVEX_KL_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') throw ValidationError(std::string("COVEX_KL_BUDGET is not a count: ") + env);
    return v;
}

void check_budget(LieType t, int n, std::uint64_t budget) {
    const std::uint64_t order = group_order(t, n);
    if (order > budget)
        throw BudgetError("group " + std::string(1, to_char(t)) + std::to_string(n) + " has " + std::to_string(order) +
                              " elements, budget is " + std::to_string(budget),
                          order, budget);
}

namespace {

constexpr int kMaxRank = 10;
using Code = std::uint64_t;
using Win = std::array<int, kMaxRank>;

struct PairHash {
    size_t operator()(const std::pair<Code, Code>& p) const {
        return std::hash<Code>()(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
};

struct Refl {
    enum Kind { Swap, NegSwap, Neg } kind;
    int i, j;
};

}  // namespace

struct KLOracle::Impl {
    LieType t;
    int n;
    std::vector<int> gens;
    std::vector<Refl> refl;
    std::unordered_map<std::pair<Code, Code>, bool, PairHash> leq_memo;
    std::unordered_map<std::pair<Code, Code>, QPoly, PairHash> p_memo, r_memo;
    std::unordered_map<std::pair<Code, Code>, std::vector<Code>, PairHash> ivl_memo;

    Impl(LieType t_, int n_) : t(t_), n(n_), gens(simple_indices(t_, n_)) {
        if (n < 1 || n > kMaxRank) throw ValidationError("oracle supports ranks 1.." + std::to_string(kMaxRank));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                refl.push_back({Refl::Swap, i, j});
                if (t != LieType::A) refl.push_back({Refl::NegSwap, i, j});
            }
            if (t == LieType::B || t == LieType::C) refl.push_back({Refl::Neg, i, i});
        }
    }

    Code encode(const Win& w) const {
        Code c = 0;
        for (int i = 0; i < n; ++i) c |= static_cast<Code>(w[i] + 16) << (5 * i);
        return c;
    }
    Win decode(Code c) const {
        Win w{};
        for (int i = 0; i < n; ++i) w[i] = static_cast<int>((c >> (5 * i)) & 31) - 16;
        return w;
    }
    Code encode(const WeylElement& e) const {
        if (e.n() != n || (e.type() != t && !(is_bc(e.type()) && is_bc(t))))
            throw ValidationError("element " + e.str() + " is not in group " + std::string(1, to_char(t)) + std::to_string(n));
        Win w{};
        for (int i = 0; i < n; ++i) w[i] = e.window()[i];
        return encode(w);
    }
    static bool is_bc(LieType x) { return x == LieType::B || x == LieType::C; }
    WeylElement element(Code c) const {
        Win w = decode(c);
        return make_unchecked(t, std::vector<int>(w.begin(), w.begin() + n));
    }

    int len(Code c) const {
        Win w = decode(c);
        int l = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (w[i] > w[j]) ++l;
                if (t != LieType::A && w[i] + w[j] < 0) ++l;
            }
        if (is_bc(t))
            for (int i = 0; i < n; ++i)
                if (w[i] < 0) ++l;
        return l;
    }

    Code rmul(Code c, int i) const {
        Win w = decode(c);
        if (i == 0) {
            if (t == LieType::D) {
                int x = w[0];
                w[0] = -w[1];
                w[1] = -x;
            } else {
                w[0] = -w[0];
            }
        } else {
            std::swap(w[i - 1], w[i]);
        }
        return encode(w);
    }
    // Left multiplication acts on values: s_i swaps the values i and i+1.
    Code lmul(Code c, int i) const {
        Win w = decode(c);
        for (int k = 0; k < n; ++k) {
            int x = w[k], a = std::abs(x), sg = x < 0 ? -1 : 1;
            if (i == 0) {
                if (t == LieType::D) {
                    if (a == 1) w[k] = -sg * 2;
                    else if (a == 2) w[k] = -sg * 1;
                } else if (a == 1) {
                    w[k] = -x;
                }
            } else if (a == i) {
                w[k] = sg * (i + 1);
            } else if (a == i + 1) {
                w[k] = sg * i;
            }
        }
        return encode(w);
    }
    Code reflect(Code c, const Refl& r) const {
        Win w = decode(c);
        switch (r.kind) {
            case Refl::Swap: std::swap(w[r.i], w[r.j]); break;
            case Refl::NegSwap: {
                int x = w[r.i];
                w[r.i] = -w[r.j];
                w[r.j] = -x;
                break;
            }
            case Refl::Neg: w[r.i] = -w[r.i]; break;
        }
        return encode(w);
    }

    bool leq(Code x, Code w) {
        if (x == w) return true;
        int lx = len(x), lw = len(w);
        if (lx >= lw) return false;
        if (t != LieType::D) return bruhat_leq(element(x), element(w));
        auto key = std::make_pair(x, w);
        auto it = leq_memo.find(key);
        if (it != leq_memo.end()) return it->second;
        bool r = false;
        for (int i : gens) {
            Code ws = rmul(w, i);
            if (len(ws) < lw) {
                Code xs = rmul(x, i);
                r = leq(len(xs) < lx ? xs : x, ws);
                break;
            }
        }
        leq_memo.emplace(key, r);
        return r;
    }

    const std::vector<Code>& interval(Code x, Code w) {
        auto key = std::make_pair(x, w);
        auto it = ivl_memo.find(key);
        if (it != ivl_memo.end()) return it->second;
        std::vector<Code> out;
        if (leq(x, w)) {
            std::unordered_set<Code> seen{x};
            std::vector<Code> front{x};
            out.push_back(x);
            while (!front.empty()) {
                std::vector<Code> next;
                for (Code y : front) {
                    const int ly = len(y);
                    for (const auto& r : refl) {
                        Code z = reflect(y, r);
                        if (seen.count(z) || len(z) != ly + 1) continue;
                        seen.insert(z);
                        if (leq(z, w)) {
                            out.push_back(z);
                            next.push_back(z);
                        }
                    }
                }
                front.swap(next);
            }
        }
        return ivl_memo.emplace(key, std::move(out)).first->second;
    }

    // Push x up along simple reflections that are descents of w; P is unchanged.
    Code lift(Code x, Code w) {
        const int lw = len(w);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i : gens) {
                for (int side = 0; side < 2; ++side) {
                    Code ws = side == 0 ? lmul(w, i) : rmul(w, i);
                    if (len(ws) >= lw) continue;
                    Code y = side == 0 ? lmul(x, i) : rmul(x, i);
                    if (len(y) > len(x)) {
                        x = y;
                        changed = true;
                    }
                }
            }
        }
        return x;
    }

    static Int mu_of(const QPoly& p, int gap) {
        if (gap % 2 == 0) return 0;
        return p.coeff((gap - 1) / 2);
    }

    QPoly P(Code x, Code w) {
        if (!leq(x, w)) return QPoly();
        x = lift(x, w);
        if (x == w) return QPoly::constant(1);
        auto key = std::make_pair(x, w);
        auto it = p_memo.find(key);
        if (it != p_memo.end()) return it->second;
        const int lw = len(w);
        int s = -1;
        Code v = 0;
        for (int i : gens) {
            v = lmul(w, i);
            if (len(v) < lw) {
                s = i;
                break;
            }
        }
        const Code sx = lmul(x, s);
        const int lv = lw - 1;
        QPoly r = P(sx, v) + P(x, v).shifted(1);
        const std::vector<Code> zs = interval(x, v);
        for (Code z : zs) {
            if (z == v) continue;
            const int lz = len(z);
            if (len(lmul(z, s)) > lz) continue;
            if ((lv - lz) % 2 == 0) continue;
            Int m = mu_of(P(z, v), lv - lz);
            if (m == 0) continue;
            r -= QPoly::monomial(m, (lw - lz) / 2) * P(x, z);
        }
        p_memo.emplace(key, r);
        return r;
    }

    QPoly R(Code y, Code z) {
        if (!leq(y, z)) return QPoly();
        if (y == z) return QPoly::constant(1);
        auto key = std::make_pair(y, z);
        auto it = r_memo.find(key);
        if (it != r_memo.end()) return it->second;
        const int lz = len(z), ly = len(y);
        QPoly r;
        bool done = false;
        for (int side = 0; side < 2 && !done; ++side) {
            for (int i : gens) {
                Code zs = side == 0 ? lmul(z, i) : rmul(z, i);
                if (len(zs) >= lz) continue;
                Code ys = side == 0 ? lmul(y, i) : rmul(y, i);
                if (len(ys) > ly) {
                    r = QPoly{-1, 1} * R(y, zs) + R(ys, zs).shifted(1);
                    done = true;
                    break;
                }
            }
        }
        if (!done) {
            for (int i : gens) {
                Code zs = lmul(z, i);
                if (len(zs) < lz) {
                    r = R(lmul(y, i), zs);
                    break;
                }
            }
        }
        r_memo.emplace(key, r);
        return r;
    }

    QPoly P_via_R(Code x, Code w) {
        std::vector<Code> ivl = interval(x, w);
        if (ivl.empty()) return QPoly();
        std::sort(ivl.begin(), ivl.end(), [this](Code a, Code b) { return len(a) > len(b); });
        const int lw = len(w);
        std::unordered_map<Code, QPoly> pw;
        for (Code y : ivl) {
            if (y == w) {
                pw[y] = QPoly::constant(1);
                continue;
            }
            const int ly = len(y);
            QPoly rhs;
            for (Code z : ivl) {
                if (len(z) <= ly) continue;
                rhs += R(y, z) * pw.at(z);
            }
            const int D = lw - ly;
            std::vector<Int> low;
            for (int i = 0; 2 * i < D; ++i) low.push_back(-rhs.coeff(i));
            pw[y] = QPoly(std::move(low));
        }
        return pw.at(x);
    }
};

KLOracle::KLOracle(LieType t, int n) : impl_(std::make_unique<Impl>(t, n)) {}
KLOracle::~KLOracle() = default;
LieType KLOracle::type() const { return impl_->t; }
int KLOracle::n() const { return impl_->n; }

bool KLOracle::leq(const WeylElement& x, const WeylElement& w) { return impl_->leq(impl_->encode(x), impl_->encode(w)); }

QPoly KLOracle::P(const WeylElement& x, const WeylElement& w) { return impl_->P(impl_->encode(x), impl_->encode(w)); }

Int KLOracle::mu(const WeylElement& x, const WeylElement& w) {
    return Impl::mu_of(P(x, w), length(w) - length(x));
}

std::vector<WeylElement> KLOracle::interval(const WeylElement& x, const WeylElement& w) {
    std::vector<WeylElement> out;
    for (Code c : impl_->interval(impl_->encode(x), impl_->encode(w))) out.push_back(impl_->element(c));
    std::sort(out.begin(), out.end());
    return out;
}

QPoly KLOracle::R(const WeylElement& x, const WeylElement& w) { return impl_->R(impl_->encode(x), impl_->encode(w)); }

QPoly KLOracle::P_via_R(const WeylElement& x, const WeylElement& w) {
    return impl_->P_via_R(impl_->encode(x), impl_->encode(w));
}

std::size_t KLOracle::table_size() const { return impl_->p_memo.size(); }

QPoly kl_oracle(LieType t, int n, const WeylElement& v, const WeylElement& w, std::uint64_t budget) {
    check_budget(t, n, budget);
    KLOracle o(t, n);
    if (!o.leq(v, w)) throw ValidationError(v.str() + " is not below " + w.str() + " in the Bruhat order");
    return o.P(v, w);
}

std::vector<WeylElement> bruhat_interval(const WeylElement& v, const WeylElement& w, std::uint64_t budget) {
    check_budget(v.type(), v.n(), budget);
    KLOracle o(v.type(), v.n());
    if (!o.leq(v, w)) throw ValidationError(v.str() + " is not below " + w.str() + " in the Bruhat order");
    return o.interval(v, w);
}

QPoly covexillary_oracle(const Triple& t, const WeylElement& v, std::uint64_t budget) {
    require_valid(t);
    check_budget(t.type, t.n, budget);
    const WeylElement w = vexillary_from_triple(t);
    const WeylElement w0 = longest_element(t.type, t.n);
    KLOracle o(t.type, t.n);
    if (!o.leq(w, v)) throw ValidationError(v.str() + " is not above " + w.str() + " in the Bruhat order");
    return o.P(compose(w0, v), compose(w0, w));
}

}  // namespace covex
