#pragma once

#include <map>

#include "telsigma/semigroup.hpp"
#include "telsigma/useries.hpp"

namespace telsigma {

// All partitions with |mu| <= bound, the empty partition included.
std::vector<Partition> partitions_up_to(long bound);

// p_n restricted to the gap variables: sum of u^n / prod n_i! over exponents
// with sum w_i n_i = n. Concentrated in weighted degree exactly n.
USeries p_restricted(const std::vector<long>& gaps, long n, long bound, long cap);

// Schur function via the Jacobi-Trudi determinant of restricted p's,
// truncated at weighted degree <= bound. Every Hurwitz coefficient is an
// integer; asserted when check_integral is set.
class SchurContext {
public:
    SchurContext(std::vector<long> gaps, long bound, long cap);
    const USeries& schur(const Partition& mu);
    const USeries& p(long n);

private:
    std::vector<long> gaps_;
    long bound_;
    long cap_;
    std::map<long, USeries> p_memo_;
    std::map<Partition, USeries> s_memo_;
};

USeries schur_function(const std::vector<long>& gaps, const Partition& mu, long bound, long cap);

}  // namespace telsigma
