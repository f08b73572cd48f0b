/*
   Copyright 2026 The superharrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERHARRISON_COMBINATORICS_HPP
#define SUPERHARRISON_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rational.hpp"

namespace superharrison {

/// Z/2 degree of a homogeneous element: 0 even, 1 odd.
using Parity = std::uint8_t;

/// One parity per tensor slot (or per basis element).
using ParityVector = std::vector<Parity>;

inline void check_parities(const ParityVector& v) {
    for (auto p : v)
        if (p > 1) throw ArgumentError("parity entries must be 0 or 1");
}

inline Parity total_parity(const ParityVector& v) {
    unsigned s = 0;
    for (auto p : v) s += p;
    return static_cast<Parity>(s & 1U);
}

/// A bijection of {0, ..., n-1}. Externally permutations are written
/// one-based as their image sequence (sigma(1), ..., sigma(n)).
class Permutation {
   public:
    Permutation() = default;

    /// Identity on n letters.
    static Permutation identity(std::size_t n) {
        Permutation p;
        p.images_.resize(n);
        std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
        return p;
    }

    static Permutation from_zero_based(std::vector<std::size_t> images) {
        Permutation p;
        p.images_ = std::move(images);
        p.check();
        return p;
    }

    static Permutation from_one_based(const std::vector<long long>& images) {
        std::vector<std::size_t> zero;
        zero.reserve(images.size());
        for (auto v : images) {
            if (v < 1 || static_cast<std::size_t>(v) > images.size())
                throw ArgumentError("permutation image " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(images.size()));
            zero.push_back(static_cast<std::size_t>(v - 1));
        }
        return from_zero_based(std::move(zero));
    }

    std::size_t size() const noexcept { return images_.size(); }

    /// Zero-based image of a zero-based letter.
    std::size_t operator()(std::size_t i) const { return images_.at(i); }

    const std::vector<std::size_t>& images() const noexcept { return images_; }

    std::vector<long long> one_based() const {
        std::vector<long long> out;
        out.reserve(images_.size());
        for (auto v : images_) out.push_back(static_cast<long long>(v) + 1);
        return out;
    }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

   private:
    void check() const {
        std::vector<bool> seen(images_.size(), false);
        for (auto v : images_) {
            if (v >= images_.size() || seen[v]) throw ArgumentError("image sequence is not a bijection");
            seen[v] = true;
        }
    }

    std::vector<std::size_t> images_;
};

inline Permutation invert(const Permutation& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm(i)] = i;
    return Permutation::from_zero_based(std::move(inv));
}

/// compose(a, b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw ArgumentError("cannot compose permutations of arity " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a(b(i));
    return Permutation::from_zero_based(std::move(out));
}

/// Number of pairs i < j with perm(i) > perm(j).
inline std::size_t inversion_count(const std::vector<std::size_t>& seq) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++count;
    return count;
}

/// Signature (+1 or -1).
inline int permutation_sign(const Permutation& perm) {
    return inversion_count(perm.images()) % 2 == 0 ? 1 : -1;
}

/// A permutation of {1..n} whose first `split` images and last n - split
/// images are both increasing.
struct Shuffle {
    Permutation perm;
    std::size_t split = 0;
};

inline void check_split(std::size_t n, std::size_t p) {
    if (n < 2 || p < 1 || p > n - 1)
        throw ArgumentError("split " + std::to_string(p) + " out of range for arity " + std::to_string(n) +
                            " (need 1 <= p <= n-1)");
}

inline bool is_shuffle(const Permutation& perm, std::size_t p) {
    const std::size_t n = perm.size();
    check_split(n, p);
    for (std::size_t i = 1; i < p; ++i)
        if (perm(i - 1) > perm(i)) return false;
    for (std::size_t i = p + 1; i < n; ++i)
        if (perm(i - 1) > perm(i)) return false;
    return true;
}

/// All shuffles in J_p(1..n), ordered lexicographically by the image set
/// {sigma(1), ..., sigma(p)} of the first run.
inline std::vector<Shuffle> enumerate_shuffles(std::size_t n, std::size_t p) {
    check_split(n, p);
    std::vector<Shuffle> out;
    // std::prev_permutation over a 1..10..0 mask walks p-subsets in lexicographic order.
    std::vector<bool> chosen(n, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(p), true);
    do {
        std::vector<std::size_t> images;
        images.reserve(n);
        for (std::size_t v = 0; v < n; ++v)
            if (chosen[v]) images.push_back(v);
        for (std::size_t v = 0; v < n; ++v)
            if (!chosen[v]) images.push_back(v);
        out.push_back(Shuffle{Permutation::from_zero_based(std::move(images)), p});
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

/// The odd subpermutation sigma° of a permutation with respect to the
/// parities of the letters it moves. `domain` holds the odd letters
/// alpha_1 < ... < alpha_k (zero-based); sigma°(alpha_m) = alpha_{relative(m)}.
struct OddSubpermutation {
    std::vector<std::size_t> domain;
    Permutation relative;

    std::size_t operator()(std::size_t alpha_index) const { return domain.at(relative(alpha_index)); }
};

/// sigma°(alpha_m) = sigma(beta_m), where alpha_1 < ... < alpha_k are the odd
/// letters and beta_1 < ... < beta_k the positions m with sigma(m) odd.
inline OddSubpermutation odd_subpermutation(const Permutation& perm, const ParityVector& parities) {
    if (parities.size() != perm.size())
        throw ArgumentError("parity vector length " + std::to_string(parities.size()) + " does not match arity " +
                            std::to_string(perm.size()));
    check_parities(parities);
    OddSubpermutation out;
    std::vector<std::size_t> rank_of(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (parities[i]) {
            rank_of[i] = out.domain.size();
            out.domain.push_back(i);
        }
    }
    std::vector<std::size_t> relative;
    relative.reserve(out.domain.size());
    for (std::size_t m = 0; m < perm.size(); ++m)
        if (parities[perm(m)]) relative.push_back(rank_of[perm(m)]);
    out.relative = Permutation::from_zero_based(std::move(relative));
    return out;
}

/// (-1)^{sigma°}: the Koszul sign picked up by the odd letters.
inline int sigma_o_sign(const Permutation& perm, const ParityVector& parities) {
    return permutation_sign(odd_subpermutation(perm, parities).relative);
}

inline unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace superharrison

#endif  // SUPERHARRISON_COMBINATORICS_HPP
