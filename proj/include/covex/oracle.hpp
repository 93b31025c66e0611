#pragma once

#include "covex/polyq.hpp"
#include "covex/triples.hpp"
#include "covex/weyl.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace covex {

constexpr std::uint64_t kDefaultBudget = 50000;

// COVEX_KL_BUDGET if set, otherwise kDefaultBudget.
std::uint64_t oracle_budget();
// Throws BudgetError when |W| exceeds the budget.
void check_budget(LieType t, int n, std::uint64_t budget);

// Kazhdan-Lusztig table for one group, filled lazily by the descent recursion.
class KLOracle {
public:
    KLOracle(LieType t, int n);
    ~KLOracle();
    KLOracle(const KLOracle&) = delete;
    KLOracle& operator=(const KLOracle&) = delete;

    LieType type() const;
    int n() const;

    bool leq(const WeylElement& x, const WeylElement& w);
    // P_{x,w}; zero when x is not below w.
    QPoly P(const WeylElement& x, const WeylElement& w);
    // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero when the length gap is even.
    Int mu(const WeylElement& x, const WeylElement& w);
    std::vector<WeylElement> interval(const WeylElement& x, const WeylElement& w);

    // Second route through R-polynomials and the inversion of the bar involution.
    QPoly R(const WeylElement& x, const WeylElement& w);
    QPoly P_via_R(const WeylElement& x, const WeylElement& w);

    std::size_t table_size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

QPoly kl_oracle(LieType t, int n, const WeylElement& v, const WeylElement& w,
                std::uint64_t budget = oracle_budget());
std::vector<WeylElement> bruhat_interval(const WeylElement& v, const WeylElement& w,
                                         std::uint64_t budget = oracle_budget());

// P_{w0 v, w0 w(τ)} computed by the oracle.
QPoly covexillary_oracle(const Triple& t, const WeylElement& v, std::uint64_t budget = oracle_budget());

}  // namespace covex
