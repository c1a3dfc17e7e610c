#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "telsigma/rational.hpp"

namespace telsigma {

using ExponentVector = std::vector<long>;  // m non-negative entries
using Partition = std::vector<long>;       // weakly decreasing positive parts

// One admissible coefficient symbol of the defining equations: the symbol
// attached to equation eq_index (2..m) and monomial x^exponents, graded by
// weight = a_i d_{i-1}/d_i - sum a_k j_k > 0.
struct LambdaSymbol {
    int eq_index = 0;
    ExponentVector exponents;
    long weight = 0;
    std::string name() const;  // "i:j1,...,jm", used as the JSON key
};

// Validated telescopic sequence with all derived combinatorial data.
// Immutable after construction; every accessor is pure.
class TelescopicData {
public:
    // Throws validation_error (NotCoprime / EntryTooSmall / NotTelescopic).
    static TelescopicData validate(const std::vector<long>& a);

    int m() const { return static_cast<int>(a_.size()); }
    const std::vector<long>& a() const { return a_; }
    const std::vector<long>& d() const { return d_; }
    // d_{i-1}/d_i for 0-based variable index i >= 1 (the exponent bound in B(A_m)).
    long bound(int i) const { return bound_[i]; }

    // Row i (0-based, i >= 1) of the unique ell-matrix: sum_j a_j ell_{i,j} = a_i d_{i-1}/d_i.
    const ExponentVector& ell_row(int i) const { return ell_[i]; }

    long genus() const { return genus_; }
    const std::vector<long>& gaps() const { return gaps_; }
    const Partition& mu() const { return mu_; }

    bool in_b_set(const ExponentVector& e) const;
    long order_of(const ExponentVector& e) const;  // sum a_j e_j

    bool in_semigroup(long v) const;
    // Unique B(A_m) representative of v, or nullopt when v is a gap / negative.
    std::optional<ExponentVector> canonical_rep(long v) const;

    // First n monomial exponent vectors ordered by strictly increasing pole order.
    std::vector<ExponentVector> phi_basis(long n) const;
    long phi_order(long index) const;                   // 1-based index, phi_1 = 1
    std::optional<long> phi_index_of_order(long o) const;

    const std::vector<LambdaSymbol>& catalog() const { return catalog_; }
    // Catalog position of the symbol (eq_index, exponents); throws if absent.
    std::uint32_t symbol_id(int eq_index, const ExponentVector& exponents) const;
    std::optional<std::uint32_t> find_symbol(int eq_index, const ExponentVector& exponents) const;

private:
    std::vector<long> a_, d_, bound_;
    std::vector<ExponentVector> ell_;  // index 1..m-1 used
    long genus_ = 0;
    std::vector<long> gaps_;
    Partition mu_;
    std::vector<char> sieve_;  // membership table for 0..sieve_bound
    std::vector<LambdaSymbol> catalog_;
};

}  // namespace telsigma
