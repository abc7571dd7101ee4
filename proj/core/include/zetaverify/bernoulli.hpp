#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zv {

/// Memoized Bernoulli numbers under the B_1 = -1/2 convention.
///
/// Values are produced by the defining recurrence
///   B_m = -(1/(m+1)) * sum_{j=0}^{m-1} C(m+1, j) B_j
/// with exact rationals. The table grows lazily up to a configured maximum
/// index; reads of already-computed entries are lock-protected alongside
/// writes, so a table may be shared across threads.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t max_index = kDefaultMaxIndex);

    /// B_m. Throws IndexTooLarge beyond the configured maximum.
    BigRational at(std::size_t m) const;

    std::size_t max_index() const { return max_index_; }

    static constexpr std::size_t kDefaultMaxIndex = 512;

private:
    void extend_to(std::size_t m) const;

    std::size_t max_index_;
    mutable std::mutex mutex_;
    mutable std::vector<BigRational> memo_;
};

/// B_m from a process-wide shared table (max index 512).
BigRational bernoulli(std::size_t m);

/// A_{2p} = zeta(2p)/pi^{2p} = (-1)^{p+1} 2^{2p-1} B_{2p} / (2p)!, exact.
BigRational a_constant(std::size_t p);

/// zeta(1-2p) = -B_{2p}/(2p), exact.
BigRational zeta_neg_odd(std::size_t p);

/// Upper summation index 2n-2 of the convolution sum; n >= 2 required.
long truncation_bound(long n);

} // namespace zv
