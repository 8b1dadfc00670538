#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvc/bitset.hpp"

namespace pvc {

// An (n,l)-universal family covers, for every l-subset A of [n], all 2^l
// intersections U cap A. Universe element i (1-based) is bit/vertex i-1.

enum class UsetStrategy { exhaustive, greedy, randomized, manual };

std::string_view to_string(UsetStrategy s);

struct UsetWitness {
    std::vector<int> a;  // the l-set, 1-based, ascending
    std::vector<int> b;  // the subset of a never realized, 1-based, ascending
};

enum class VerifyStatus { unverified, verified_true, verified_false };

struct UsetLimits {
    static constexpr int exhaustive_max_n = 24;
    static constexpr std::uint64_t greedy_max_constraints = 10'000'000;      // C(n,l) * 2^l
    static constexpr std::uint64_t verify_max_constraints = 100'000'000;     // C(n,l) * 2^l
    static constexpr std::uint64_t randomized_max_members = 10'000'000;
};

class SubsetFamily {
public:
    int n() const { return n_; }
    int l() const { return l_; }
    UsetStrategy strategy() const { return strategy_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    std::optional<double> delta() const { return delta_; }

    std::size_t size() const { return count_; }
    // Randomized strategy: number of subsets drawn before duplicates were
    // dropped. Equals size() whenever no collision occurred.
    std::size_t draw_count() const { return draws_; }

    int words_per_member() const { return stride_; }
    void member(std::size_t i, std::span<std::uint64_t> out) const;
    Bitset member_bits(std::size_t i) const;
    bool member_contains(std::size_t i, int element_1based) const;
    std::string member_string(std::size_t i) const;  // '0'/'1', element 1 first

    VerifyStatus verified() const { return verified_; }
    const std::optional<UsetWitness>& witness() const { return witness_; }

private:
    friend struct UsetInit;

    int n_ = 0;
    int l_ = 0;
    UsetStrategy strategy_ = UsetStrategy::manual;
    std::optional<std::uint64_t> seed_;
    std::optional<double> delta_;
    int stride_ = 1;
    bool materialized_ = true;           // false: exhaustive, member i == mask i
    std::vector<std::uint64_t> words_;   // flat, stride_ words per member
    std::size_t count_ = 0;
    std::size_t draws_ = 0;
    VerifyStatus verified_ = VerifyStatus::unverified;
    std::optional<UsetWitness> witness_;
};

// Exact C(n,k), saturating at cap.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

// ceil(2^l * ln(C(n,l) * 2^l / delta)) evaluated in double precision with
// ln C(n,l) = lgamma(n+1) - lgamma(l+1) - lgamma(n-l+1).
std::uint64_t randomized_family_size(int n, int l, double delta);

// Seed of the deterministic candidate stream used by the greedy strategy.
std::uint64_t greedy_stream_seed(int n, int l);

// Resolution order for "auto": exhaustive if n <= 24, else greedy if
// C(n,l)*2^l <= 10^7, else randomized with delta = 1e-3.
UsetStrategy resolve_auto_strategy(int n, int l);

SubsetFamily build_universal_set(int n, int l, UsetStrategy strategy,
                                 std::optional<std::uint64_t> seed = std::nullopt,
                                 std::optional<double> delta = std::nullopt);

SubsetFamily family_from_members(int n, int l, const std::vector<std::vector<int>>& members_1based);

// nullopt means universal. Otherwise the lexicographically first failing
// pair (A, B): A in ascending combination order, B by characteristic mask.
// Updates the family's verified status and witness.
std::optional<UsetWitness> verify_universal(SubsetFamily& f);

// Same check against a different l without touching the family's status.
std::optional<UsetWitness> verify_universal_at(const SubsetFamily& f, int l);

}  // namespace pvc
