#include "covex/polyq.hpp"

#include "covex/errors.hpp"

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace covex {

QPoly::QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
}

QPoly QPoly::constant(long c) { return QPoly({c}); }

QPoly QPoly::monomial(const Int& c, int k) {
    std::vector<Int> v(static_cast<size_t>(k) + 1);
    v[k] = c;
    return QPoly(std::move(v));
}

Int QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    r.c_.assign(static_cast<size_t>(k), Int(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Int QPoly::eval(long x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool QPoly::nonnegative() const {
    for (const auto& x : c_)
        if (x < 0) return false;
    return true;
}

QPoly& QPoly::operator+=(const QPoly& r) {
    if (r.c_.size() > c_.size()) c_.resize(r.c_.size());
    for (size_t i = 0; i < r.c_.size(); ++i) c_[i] += r.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
    if (r.c_.size() > c_.size()) c_.resize(r.c_.size());
    for (size_t i = 0; i < r.c_.size(); ++i) c_[i] -= r.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& r) { return *this = *this * r; }

QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "q";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

QPoly QPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ValidationError("empty polynomial");
    std::map<int, Int> terms;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ValidationError("malformed polynomial: " + std::string(text));
        }
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Int c = 1;
        bool has_digits = j > i;
        if (has_digits) c = Int(s.substr(i, j - i));
        i = j;
        int k = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
            if (s[i] == '*') {
                if (!has_digits) throw ValidationError("malformed polynomial: " + std::string(text));
                ++i;
            }
            if (i >= s.size() || s[i] != 'q') throw ValidationError("malformed polynomial: " + std::string(text));
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t e = i;
                while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
                if (e == i) throw ValidationError("malformed polynomial: " + std::string(text));
                k = std::stoi(s.substr(i, e - i));
                i = e;
            }
        } else if (!has_digits) {
            throw ValidationError("malformed polynomial: " + std::string(text));
        }
        terms[k] += sign * c;
    }
    std::vector<Int> v;
    for (auto& [k, c] : terms) {
        if (static_cast<int>(v.size()) <= k) v.resize(k + 1);
        v[k] += c;
    }
    return QPoly(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }

QPoly q_binomial(int alpha, int beta) {
    if (beta < 0 || alpha < beta) return {};
    if (beta == 0 || beta == alpha) return QPoly::constant(1);
    if (beta > alpha - beta) beta = alpha - beta;
    // Pascal rows: row[b] = [a b]; [a b] = [a-1 b-1] + q^b [a-1 b]
    std::vector<QPoly> row(beta + 1);
    row[0] = QPoly::constant(1);
    for (int a = 1; a <= alpha; ++a) {
        int top = std::min(a, beta);
        for (int b = top; b >= 1; --b) row[b] = row[b - 1] + row[b].shifted(b);
    }
    return row[beta];
}

}  // namespace covex
