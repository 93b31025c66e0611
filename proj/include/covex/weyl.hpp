#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace covex {

enum class LieType { A, B, C, D };

char to_char(LieType t);
LieType parse_lie_type(std::string_view s);

enum class Side { Left, Right };

// Element of the Weyl group of type A_{n-1} (permutations of 1..n) or
// B_n/C_n/D_n (signed permutations). Stored as the window w(1..n).
//
// Simple reflections: s_i (1 <= i < n) swaps positions i and i+1.
// Types B/C add s_0, negating position 1. Type D adds s_0 mapping the first
// two entries (x, y) to (-y, -x).
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(LieType t, std::vector<int> window);  // validates

    LieType type() const { return type_; }
    int n() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& window() const { return w_; }
    int operator()(int i) const { return w_[i - 1]; }  // 1-based

    std::string str() const;  // space separated, "-3" for a barred 3

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.type_ == b.type_ && a.w_ == b.w_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.w_ < b.w_; }

private:
    friend WeylElement make_unchecked(LieType, std::vector<int>);
    LieType type_ = LieType::A;
    std::vector<int> w_;
};

WeylElement make_unchecked(LieType t, std::vector<int> window);

struct WeylElementHash {
    size_t operator()(const WeylElement& w) const;
};

WeylElement identity(LieType t, int n);
WeylElement longest_element(LieType t, int n);
WeylElement compose(const WeylElement& x, const WeylElement& y);  // (x∘y)(i) = x(y(i))
WeylElement inverse(const WeylElement& w);

int length(const WeylElement& w);
int root_count(LieType t, int n);  // number of positive roots
std::uint64_t group_order(LieType t, int n);

std::vector<int> simple_indices(LieType t, int n);
WeylElement apply_simple(const WeylElement& w, int i, Side side);
bool is_descent(const WeylElement& w, int i, Side side);

// Greedy: repeatedly strip the smallest right descent. Multiplying the
// identity on the right by the letters in order rebuilds w.
std::vector<int> reduced_word(const WeylElement& w);

bool bruhat_leq(const WeylElement& u, const WeylElement& w);
bool bruhat_leq_subword(const WeylElement& u, const WeylElement& w);

std::vector<WeylElement> all_elements(LieType t, int n);

// Comma or space separated integers, "-3" for a barred 3.
std::vector<int> parse_int_list(std::string_view s);
WeylElement parse_window(LieType t, std::string_view s);

}  // namespace covex
