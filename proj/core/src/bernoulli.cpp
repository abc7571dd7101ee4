#include "zetaverify/bernoulli.hpp"

#include <string>

namespace zv {

BernoulliTable::BernoulliTable(std::size_t max_index) : max_index_(max_index) {
    memo_.reserve(64);
    memo_.emplace_back(1);        // B_0
    memo_.emplace_back(-1, 2);    // B_1, sign convention -1/2
}

BigRational BernoulliTable::at(std::size_t m) const {
    if (m > max_index_)
        throw IndexTooLarge("bernoulli: index " + std::to_string(m) +
                            " exceeds table maximum " + std::to_string(max_index_));
    std::lock_guard<std::mutex> lock(mutex_);
    extend_to(m);
    return memo_[m];
}

void BernoulliTable::extend_to(std::size_t m) const {
    // B_i = -(1/(i+1)) * sum_{j=0}^{i-1} C(i+1, j) B_j, exact throughout.
    while (memo_.size() <= m) {
        const std::size_t i = memo_.size();
        if (i % 2 == 1) {           // B_{2k+1} = 0 for k >= 1
            memo_.emplace_back(0);
            continue;
        }
        BigRational sum(0);
        mpz_class binom;
        for (std::size_t j = 0; j < i; ++j) {
            if (j > 1 && j % 2 == 1)
                continue;           // odd-index terms vanish
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i + 1),
                         static_cast<unsigned long>(j));
            sum += BigRational(binom) * memo_[j];
        }
        memo_.push_back(-(sum / BigRational(static_cast<long>(i + 1))));
    }
}

namespace {

const BernoulliTable& shared_table() {
    static BernoulliTable table;
    return table;
}

} // namespace

BigRational bernoulli(std::size_t m) {
    return shared_table().at(m);
}

BigRational a_constant(std::size_t p) {
    if (p < 1)
        throw InvalidN("a_constant: p must be >= 1");
    // A_{2p} = (-1)^{p+1} * 2^{2p-1} * B_{2p} / (2p)!
    mpz_class pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), 2 * p - 1);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * p));
    BigRational value = BigRational(pow2, fact) * bernoulli(2 * p);
    return (p % 2 == 1) ? value : -value;
}

BigRational zeta_neg_odd(std::size_t p) {
    if (p < 1)
        throw InvalidN("zeta_neg_odd: p must be >= 1");
    return -(bernoulli(2 * p) / BigRational(static_cast<long>(2 * p)));
}

long truncation_bound(long n) {
    if (n < 2)
        throw InvalidN("truncation_bound: n must be >= 2 (the sum is empty below)");
    return 2 * n - 2;
}

} // namespace zv
