#include "pvc/universal.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "pvc/errors.hpp"
#include "pvc/rng.hpp"

namespace pvc {

namespace {

constexpr std::uint64_t kSat = ~0ULL;

std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return std::min(a * b, cap);
}

int stride_for(int n) { return (n + 63) / 64; }

void mask_top(std::span<std::uint64_t> words, int n) {
    const int rem = n % 64;
    if (rem != 0) words[words.size() - 1] &= (1ULL << rem) - 1;
}

// Ascending enumeration of l-combinations of {0..n-1}.
bool next_combination(std::vector<int>& c, int n) {
    const int l = static_cast<int>(c.size());
    int i = l - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - l + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

struct MemberView {
    std::span<const std::uint64_t> words;
    bool test(int bit) const { return (words[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1ULL; }
};

void check_nl(int n, int l) {
    if (n < 1) throw input_error("universe size n must be positive");
    if (l < 1) throw input_error("subset size l must be positive");
    if (l > n) throw input_error("l = " + std::to_string(l) + " exceeds n = " + std::to_string(n));
}

}  // namespace

std::string_view to_string(UsetStrategy s) {
    switch (s) {
        case UsetStrategy::exhaustive: return "exhaustive";
        case UsetStrategy::greedy: return "greedy";
        case UsetStrategy::randomized: return "randomized";
        case UsetStrategy::manual: return "manual";
    }
    return "?";
}

void SubsetFamily::member(std::size_t i, std::span<std::uint64_t> out) const {
    if (!materialized_) {
        out[0] = i;  // exhaustive: member i is the subset with mask i
        for (std::size_t w = 1; w < out.size(); ++w) out[w] = 0;
        return;
    }
    const std::size_t base = i * static_cast<std::size_t>(stride_);
    for (int w = 0; w < stride_; ++w) out[static_cast<std::size_t>(w)] = words_[base + static_cast<std::size_t>(w)];
}

Bitset SubsetFamily::member_bits(std::size_t i) const {
    Bitset b(n_);
    member(i, b.words());
    return b;
}

bool SubsetFamily::member_contains(std::size_t i, int element_1based) const {
    const int bit = element_1based - 1;
    if (!materialized_) return ((i >> bit) & 1U) != 0;
    const std::size_t base = i * static_cast<std::size_t>(stride_);
    return (words_[base + (static_cast<std::size_t>(bit) >> 6)] >> (bit & 63)) & 1ULL;
}

std::string SubsetFamily::member_string(std::size_t i) const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int e = 1; e <= n_; ++e) {
        if (member_contains(i, e)) s[static_cast<std::size_t>(e - 1)] = '1';
    }
    return s;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is integral at every step
        if (r > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r >= cap) return cap;
    }
    return r;
}

std::uint64_t randomized_family_size(int n, int l, double delta) {
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(l + 1.0) - std::lgamma(n - l + 1.0);
    const double ln_total = log_c + l * std::log(2.0) - std::log(delta);
    const double raw = std::ceil(std::ldexp(1.0, l) * ln_total);
    if (!(raw > 0) || raw > static_cast<double>(UsetLimits::randomized_max_members)) {
        throw capability_error("randomized family needs " + std::to_string(raw) +
                               " members, exceeding the limit of " +
                               std::to_string(UsetLimits::randomized_max_members));
    }
    return static_cast<std::uint64_t>(raw);
}

std::uint64_t greedy_stream_seed(int n, int l) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(l));
}

UsetStrategy resolve_auto_strategy(int n, int l) {
    check_nl(n, l);
    if (n <= UsetLimits::exhaustive_max_n) return UsetStrategy::exhaustive;
    const std::uint64_t constraints =
        mul_capped(binomial_capped(n, l, kSat), 1ULL << std::min(l, 62), kSat);
    if (constraints <= UsetLimits::greedy_max_constraints) return UsetStrategy::greedy;
    return UsetStrategy::randomized;
}

namespace {

SubsetFamily make_exhaustive(int n, int l) {
    if (n > UsetLimits::exhaustive_max_n) {
        throw capability_error("exhaustive strategy is limited to n <= " +
                               std::to_string(UsetLimits::exhaustive_max_n) + ", got n = " +
                               std::to_string(n));
    }
    SubsetFamily f;
    f.n_ = n;
    f.l_ = l;
    f.strategy_ = UsetStrategy::exhaustive;
    f.stride_ = stride_for(n);
    f.materialized_ = false;
    f.count_ = 1ULL << n;
    f.draws_ = f.count_;
    f.verified_ = VerifyStatus::verified_true;  // the power set realizes every subset
    return f;
}

SubsetFamily make_greedy(int n, int l) {
    const std::uint64_t combos = binomial_capped(n, l, kSat);
    const std::uint64_t constraints = mul_capped(combos, 1ULL << std::min(l, 62), kSat);
    if (constraints > UsetLimits::greedy_max_constraints) {
        throw capability_error("greedy strategy is limited to C(n,l)*2^l <= " +
                               std::to_string(UsetLimits::greedy_max_constraints) +
                               ", got " + std::to_string(constraints));
    }

    const int stride = stride_for(n);
    // Flat list of all A's for fast repeated scans.
    std::vector<int> combo_elems;
    combo_elems.reserve(static_cast<std::size_t>(combos) * static_cast<std::size_t>(l));
    {
        std::vector<int> c(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) c[static_cast<std::size_t>(i)] = i;
        do {
            combo_elems.insert(combo_elems.end(), c.begin(), c.end());
        } while (next_combination(c, n));
    }
    const std::size_t n_combos = combo_elems.size() / static_cast<std::size_t>(l);

    std::vector<char> covered(static_cast<std::size_t>(constraints), 0);
    std::size_t covered_count = 0;
    const std::size_t total = static_cast<std::size_t>(constraints);

    SplitMix64 stream(greedy_stream_seed(n, l));
    std::vector<std::uint64_t> words;

    auto extract = [&](std::span<const std::uint64_t> member, std::size_t combo) -> std::uint64_t {
        std::uint64_t mask = 0;
        const int* a = combo_elems.data() + combo * static_cast<std::size_t>(l);
        for (int j = 0; j < l; ++j) {
            const int bit = a[j];
            mask |= ((member[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1ULL)
                    << static_cast<unsigned>(j);
        }
        return mask;
    };

    auto count_new = [&](std::span<const std::uint64_t> member) {
        std::size_t fresh = 0;
        for (std::size_t a = 0; a < n_combos; ++a) {
            const std::uint64_t mask = extract(member, a);
            if (!covered[(a << l) | mask]) ++fresh;
        }
        return fresh;
    };

    auto commit = [&](std::span<const std::uint64_t> member) {
        for (std::size_t a = 0; a < n_combos; ++a) {
            const std::uint64_t mask = extract(member, a);
            auto& c = covered[(a << l) | mask];
            if (!c) {
                c = 1;
                ++covered_count;
            }
        }
        words.insert(words.end(), member.begin(), member.end());
    };

    constexpr int kBatch = 32;
    std::vector<std::uint64_t> batch(static_cast<std::size_t>(kBatch) * static_cast<std::size_t>(stride));
    std::vector<std::uint64_t> fix(static_cast<std::size_t>(stride));
    while (covered_count < total) {
        std::size_t best_new = 0;
        int best = -1;
        for (int c = 0; c < kBatch; ++c) {
            auto cand = std::span<std::uint64_t>(batch).subspan(
                static_cast<std::size_t>(c) * static_cast<std::size_t>(stride),
                static_cast<std::size_t>(stride));
            for (auto& w : cand) w = stream.next();
            mask_top(cand, n);
            const std::size_t fresh = count_new(cand);
            if (fresh > best_new) {
                best_new = fresh;
                best = c;
            }
        }
        if (best >= 0) {
            commit(std::span<const std::uint64_t>(batch).subspan(
                static_cast<std::size_t>(best) * static_cast<std::size_t>(stride),
                static_cast<std::size_t>(stride)));
            continue;
        }
        // Whole batch useless; satisfy the first open constraint directly
        // with U = B (then U cap A = B). Guarantees termination.
        std::fill(fix.begin(), fix.end(), 0);
        bool found = false;
        for (std::size_t a = 0; a < n_combos && !found; ++a) {
            for (std::uint64_t mask = 0; mask < (1ULL << l); ++mask) {
                if (covered[(a << l) | mask]) continue;
                const int* elems = combo_elems.data() + a * static_cast<std::size_t>(l);
                for (int j = 0; j < l; ++j) {
                    if ((mask >> j) & 1ULL) {
                        const int bit = elems[j];
                        fix[static_cast<std::size_t>(bit) >> 6] |= 1ULL << (bit & 63);
                    }
                }
                found = true;
                break;
            }
        }
        if (!found) throw internal_error("greedy cover: no open constraint despite incomplete count");
        commit(fix);
    }

    SubsetFamily f;
    f.n_ = n;
    f.l_ = l;
    f.strategy_ = UsetStrategy::greedy;
    f.stride_ = stride;
    f.materialized_ = true;
    f.words_ = std::move(words);
    f.count_ = f.words_.size() / static_cast<std::size_t>(stride);
    f.draws_ = f.count_;
    f.verified_ = VerifyStatus::verified_true;  // every constraint was covered explicitly
    return f;
}

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t x : w) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

SubsetFamily make_randomized(int n, int l, std::uint64_t seed, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw input_error("randomized strategy needs delta in (0,1)");
    }
    const std::uint64_t draws = randomized_family_size(n, l, delta);
    const int stride = stride_for(n);
    SplitMix64 stream(seed);

    SubsetFamily f;
    f.n_ = n;
    f.l_ = l;
    f.strategy_ = UsetStrategy::randomized;
    f.seed_ = seed;
    f.delta_ = delta;
    f.stride_ = stride;
    f.materialized_ = true;
    f.draws_ = draws;
    f.words_.reserve(static_cast<std::size_t>(draws) * static_cast<std::size_t>(stride));

    std::unordered_set<std::vector<std::uint64_t>, WordsHash> seen;
    std::vector<std::uint64_t> m(static_cast<std::size_t>(stride));
    for (std::uint64_t i = 0; i < draws; ++i) {
        for (auto& w : m) w = stream.next();
        mask_top(m, n);
        if (seen.insert(m).second) {
            f.words_.insert(f.words_.end(), m.begin(), m.end());
        }
    }
    f.count_ = f.words_.size() / static_cast<std::size_t>(stride);
    f.verified_ = VerifyStatus::unverified;
    return f;
}

}  // namespace

SubsetFamily build_universal_set(int n, int l, UsetStrategy strategy,
                                 std::optional<std::uint64_t> seed, std::optional<double> delta) {
    check_nl(n, l);
    switch (strategy) {
        case UsetStrategy::exhaustive:
            return make_exhaustive(n, l);
        case UsetStrategy::greedy:
            return make_greedy(n, l);
        case UsetStrategy::randomized:
            if (!seed.has_value()) throw input_error("randomized strategy needs a seed");
            if (!delta.has_value()) throw input_error("randomized strategy needs delta");
            return make_randomized(n, l, *seed, *delta);
        case UsetStrategy::manual:
            throw input_error("manual families are built from explicit member lists");
    }
    throw input_error("unknown strategy");
}

SubsetFamily family_from_members(int n, int l, const std::vector<std::vector<int>>& members_1based) {
    check_nl(n, l);
    const int stride = stride_for(n);
    SubsetFamily f;
    f.n_ = n;
    f.l_ = l;
    f.strategy_ = UsetStrategy::manual;
    f.stride_ = stride;
    f.materialized_ = true;
    std::unordered_set<std::vector<std::uint64_t>, WordsHash> seen;
    std::vector<std::uint64_t> m(static_cast<std::size_t>(stride));
    for (const auto& elems : members_1based) {
        std::fill(m.begin(), m.end(), 0);
        for (int e : elems) {
            if (e < 1 || e > n) {
                throw input_error("member element " + std::to_string(e) + " outside [1, " +
                                  std::to_string(n) + "]");
            }
            m[static_cast<std::size_t>(e - 1) >> 6] |= 1ULL << ((e - 1) & 63);
        }
        if (!seen.insert(m).second) throw input_error("duplicate member in family");
        f.words_.insert(f.words_.end(), m.begin(), m.end());
    }
    f.count_ = members_1based.size();
    f.draws_ = f.count_;
    return f;
}

namespace {

std::optional<UsetWitness> verify_at(const SubsetFamily& f, int l) {
    check_nl(f.n(), l);
    const std::uint64_t constraints =
        mul_capped(binomial_capped(f.n(), l, kSat), 1ULL << std::min(l, 62), kSat);
    if (constraints > UsetLimits::verify_max_constraints) {
        throw capability_error("verification is limited to C(n,l)*2^l <= " +
                               std::to_string(UsetLimits::verify_max_constraints) + ", got " +
                               std::to_string(constraints));
    }

    const int n = f.n();
    std::vector<int> a(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) a[static_cast<std::size_t>(i)] = i;
    std::vector<char> realized(1ULL << l);
    std::vector<std::uint64_t> m(static_cast<std::size_t>(f.words_per_member()));

    do {
        std::fill(realized.begin(), realized.end(), 0);
        std::size_t distinct = 0;
        const std::size_t want = realized.size();
        for (std::size_t i = 0; i < f.size() && distinct < want; ++i) {
            f.member(i, m);
            std::uint64_t mask = 0;
            for (int j = 0; j < l; ++j) {
                const int bit = a[static_cast<std::size_t>(j)];
                mask |= ((m[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1ULL)
                        << static_cast<unsigned>(j);
            }
            auto& r = realized[mask];
            if (!r) {
                r = 1;
                ++distinct;
            }
        }
        if (distinct < want) {
            for (std::uint64_t mask = 0; mask < want; ++mask) {
                if (realized[mask]) continue;
                UsetWitness w;
                for (int j = 0; j < l; ++j) w.a.push_back(a[static_cast<std::size_t>(j)] + 1);
                for (int j = 0; j < l; ++j) {
                    if ((mask >> j) & 1ULL) w.b.push_back(a[static_cast<std::size_t>(j)] + 1);
                }
                return w;
            }
        }
    } while (next_combination(a, n));
    return std::nullopt;
}

}  // namespace

std::optional<UsetWitness> verify_universal(SubsetFamily& f) {
    auto w = verify_at(f, f.l());
    if (w.has_value()) {
        f.verified_ = VerifyStatus::verified_false;
        f.witness_ = w;
    } else {
        f.verified_ = VerifyStatus::verified_true;
        f.witness_.reset();
    }
    return w;
}

std::optional<UsetWitness> verify_universal_at(const SubsetFamily& f, int l) {
    return verify_at(f, l);
}

}  // namespace pvc
