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

#ifndef SUPERHARRISON_COCHAIN_HPP
#define SUPERHARRISON_COCHAIN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "combinatorics.hpp"
#include "exactla.hpp"
#include "rational.hpp"

namespace superharrison {

/// A multilinear map A^{(x)n} -> M stored densely over basis tuples.
///
/// The entry for arguments (e_{i_1}, ..., e_{i_n}) and output component m_l
/// lives at flat position ((i_1 * dimA + i_2) * dimA + ... + i_n) * dimM + l,
/// so flat order is lexicographic in (i_1, ..., i_n, l). A degree-0 cochain
/// is a module vector.
class Cochain {
   public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
        : degree_(degree), source_dim_(source_dim), target_dim_(target_dim) {
        std::size_t tuples = 1;
        for (std::size_t k = 0; k < degree; ++k) tuples *= source_dim;
        tuple_count_ = tuples;
        values_.assign(tuples * target_dim, Rational(0));
    }

    static Cochain zero(const SuperAlgebra& alg, const SuperModule& mod, std::size_t degree) {
        return Cochain(degree, alg.dim(), mod.dim());
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t source_dim() const noexcept { return source_dim_; }
    std::size_t target_dim() const noexcept { return target_dim_; }
    std::size_t tuple_count() const noexcept { return tuple_count_; }
    std::size_t size() const noexcept { return values_.size(); }

    const Vector& values() const noexcept { return values_; }
    Vector& values() noexcept { return values_; }

    Rational& operator[](std::size_t flat) { return values_[flat]; }
    const Rational& operator[](std::size_t flat) const { return values_[flat]; }

    std::size_t tuple_index(const std::vector<std::size_t>& args) const {
        if (args.size() != degree_) throw ArgumentError("argument count does not match cochain degree");
        std::size_t t = 0;
        for (auto i : args) {
            if (i >= source_dim_) throw ArgumentError("argument index out of range");
            t = t * source_dim_ + i;
        }
        return t;
    }

    std::size_t flat_index(const std::vector<std::size_t>& args, std::size_t l) const {
        if (l >= target_dim_) throw ArgumentError("output index out of range");
        return tuple_index(args) * target_dim_ + l;
    }

    std::vector<std::size_t> decode_tuple(std::size_t tuple) const {
        std::vector<std::size_t> args(degree_);
        for (std::size_t k = degree_; k-- > 0;) {
            args[k] = tuple % source_dim_;
            tuple /= source_dim_;
        }
        return args;
    }

    Rational& at(const std::vector<std::size_t>& args, std::size_t l) { return values_[flat_index(args, l)]; }
    const Rational& at(const std::vector<std::size_t>& args, std::size_t l) const {
        return values_[flat_index(args, l)];
    }

    bool is_zero() const { return superharrison::is_zero(values_); }

    Cochain& operator+=(const Cochain& other) {
        check_same_shape(other);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
        return *this;
    }
    Cochain& operator-=(const Cochain& other) {
        check_same_shape(other);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
        return *this;
    }
    Cochain& operator*=(const Rational& s) {
        for (auto& v : values_) v *= s;
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

    friend bool operator==(const Cochain&, const Cochain&) = default;

   private:
    void check_same_shape(const Cochain& other) const {
        if (other.degree_ != degree_ || other.source_dim_ != source_dim_ || other.target_dim_ != target_dim_)
            throw ArgumentError("cochain shapes differ");
    }

    std::size_t degree_ = 0;
    std::size_t source_dim_ = 0;
    std::size_t target_dim_ = 0;
    std::size_t tuple_count_ = 1;
    Vector values_;
};

namespace detail {

inline void check_shape(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f) {
    if (f.source_dim() != alg.dim() || f.target_dim() != mod.dim())
        throw ArgumentError("cochain is not defined on this algebra/module pair");
    if (mod.algebra_dim() != alg.dim()) throw ArgumentError("module is defined over a different algebra");
}

inline Parity tuple_parity(const SuperAlgebra& alg, const std::vector<std::size_t>& args) {
    unsigned s = 0;
    for (auto i : args) s += alg.parity(i);
    return static_cast<Parity>(s & 1U);
}

inline ParityVector tuple_parities(const SuperAlgebra& alg, const std::vector<std::size_t>& args) {
    ParityVector out;
    out.reserve(args.size());
    for (auto i : args) out.push_back(alg.parity(i));
    return out;
}

}  // namespace detail

/// Multilinear evaluation f(x_1, ..., x_n).
inline Vector cochain_apply(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f,
                            const std::vector<Vector>& args) {
    detail::check_shape(alg, mod, f);
    if (args.size() != f.degree())
        throw ArgumentError("cochain of degree " + std::to_string(f.degree()) + " applied to " +
                            std::to_string(args.size()) + " arguments");
    for (const auto& a : args)
        if (a.size() != alg.dim()) throw ArgumentError("argument length does not match algebra dimension");
    Vector out(mod.dim(), Rational(0));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        const auto idx = f.decode_tuple(t);
        Rational weight = 1;
        for (std::size_t k = 0; k < idx.size() && sgn(weight) != 0; ++k) weight *= args[k][idx[k]];
        if (sgn(weight) == 0) continue;
        for (std::size_t l = 0; l < mod.dim(); ++l) out[l] += weight * f[t * mod.dim() + l];
    }
    return out;
}

/// True when every nonzero entry sends a tuple of total parity p to an
/// output component of parity p.
inline bool is_parity_preserving(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f) {
    detail::check_shape(alg, mod, f);
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        const Parity p = detail::tuple_parity(alg, f.decode_tuple(t));
        for (std::size_t l = 0; l < mod.dim(); ++l)
            if (sgn(f[t * mod.dim() + l]) != 0 && mod.parity(l) != p) return false;
    }
    return true;
}

/// Flat positions (i_1, ..., i_n, l) with |m_l| = |e_{i_1}| + ... + |e_{i_n}|,
/// in lexicographic order.
inline std::vector<std::size_t> parity_support(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    const Cochain shape = Cochain::zero(alg, mod, n);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < shape.tuple_count(); ++t) {
        const Parity p = detail::tuple_parity(alg, shape.decode_tuple(t));
        for (std::size_t l = 0; l < mod.dim(); ++l)
            if (mod.parity(l) == p) out.push_back(t * mod.dim() + l);
    }
    return out;
}

/// Elementary cochains spanning the parity-preserving maps A^{(x)n} -> M.
inline std::vector<Cochain> parity_basis(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    std::vector<Cochain> out;
    for (auto pos : parity_support(alg, mod, n)) {
        Cochain f = Cochain::zero(alg, mod, n);
        f[pos] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

namespace detail {

struct SignedShuffle {
    Permutation inverse;
    int sign = 1;
};

inline std::vector<SignedShuffle> signed_shuffles(std::size_t n, std::size_t p) {
    std::vector<SignedShuffle> out;
    for (const auto& s : enumerate_shuffles(n, p)) out.push_back({invert(s.perm), permutation_sign(s.perm)});
    return out;
}

}  // namespace detail

/// su_{n,p} f: at each basis tuple (a_1, ..., a_n),
///   sum over sigma in J_p of (-1)^sigma (-1)^{(sigma^{-1})°} f(a_{sigma^{-1}(1)}, ..., a_{sigma^{-1}(n)}),
/// where (sigma^{-1})° is taken against the parities of that tuple.
inline Cochain super_shuffle_sum(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f, std::size_t p) {
    detail::check_shape(alg, mod, f);
    const std::size_t n = f.degree();
    check_split(n, p);
    const auto shuffles = detail::signed_shuffles(n, p);
    Cochain out = Cochain::zero(alg, mod, n);
    std::vector<std::size_t> permuted(n);
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        const auto args = f.decode_tuple(t);
        const auto parities = detail::tuple_parities(alg, args);
        for (const auto& s : shuffles) {
            const int sign = s.sign * sigma_o_sign(s.inverse, parities);
            for (std::size_t k = 0; k < n; ++k) permuted[k] = args[s.inverse(k)];
            const std::size_t src = f.tuple_index(permuted);
            for (std::size_t l = 0; l < mod.dim(); ++l) {
                const Rational& v = f[src * mod.dim() + l];
                if (sgn(v) == 0) continue;
                if (sign > 0)
                    out[t * mod.dim() + l] += v;
                else
                    out[t * mod.dim() + l] -= v;
            }
        }
    }
    return out;
}

/// Matrix of su_{n,p} on the parity-preserving cochains, in the coordinates
/// given by parity_support (rows and columns alike; su keeps the total parity
/// of a tuple, so it maps that subspace to itself).
inline RationalMatrix super_shuffle_matrix(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n,
                                           std::size_t p) {
    check_split(n, p);
    const auto support = parity_support(alg, mod, n);
    const Cochain shape = Cochain::zero(alg, mod, n);
    std::vector<std::size_t> coordinate_of(shape.size(), support.size());
    for (std::size_t k = 0; k < support.size(); ++k) coordinate_of[support[k]] = k;
    const auto shuffles = detail::signed_shuffles(n, p);
    RationalMatrix m(support.size(), support.size());
    std::vector<std::size_t> permuted(n);
    for (std::size_t row = 0; row < support.size(); ++row) {
        const std::size_t t = support[row] / mod.dim();
        const std::size_t l = support[row] % mod.dim();
        const auto args = shape.decode_tuple(t);
        const auto parities = detail::tuple_parities(alg, args);
        for (const auto& s : shuffles) {
            for (std::size_t k = 0; k < n; ++k) permuted[k] = args[s.inverse(k)];
            const std::size_t col = coordinate_of[shape.tuple_index(permuted) * mod.dim() + l];
            if (col == support.size()) throw InternalError("shuffle left the parity-preserving subspace");
            m(row, col) += s.sign * sigma_o_sign(s.inverse, parities);
        }
    }
    return m;
}

/// A space of degree-n cochains expressed in coordinates.
///
/// `support` lists the flat positions used as ambient coordinates. When
/// `subspace` is empty every support position is a free coordinate;
/// otherwise the space is the given echelon subspace of that ambient.
struct CochainSpace {
    std::size_t degree = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t flat_size = 0;
    std::vector<std::size_t> support;
    std::optional<SubspaceBasis> subspace;

    std::size_t dim() const { return subspace ? subspace->dim() : support.size(); }

    /// Embeds ambient support coordinates into a cochain.
    Cochain from_ambient(const Vector& ambient) const {
        if (ambient.size() != support.size()) throw ArgumentError("ambient coordinate count mismatch");
        Cochain f(degree, source_dim, target_dim);
        for (std::size_t k = 0; k < support.size(); ++k) f[support[k]] = ambient[k];
        return f;
    }

    /// Basis element number k.
    Cochain element(std::size_t k) const {
        if (k >= dim()) throw ArgumentError("basis index out of range");
        if (subspace) return from_ambient(subspace->vectors()[k]);
        Cochain f(degree, source_dim, target_dim);
        f[support[k]] = 1;
        return f;
    }

    std::vector<Cochain> basis() const {
        std::vector<Cochain> out;
        out.reserve(dim());
        for (std::size_t k = 0; k < dim(); ++k) out.push_back(element(k));
        return out;
    }

    Cochain from_coordinates(const Vector& coords) const {
        if (!subspace) return from_ambient(coords);
        return from_ambient(subspace->combine(coords));
    }

    /// Restriction of f to the support, or nullopt when f has entries off it.
    std::optional<Vector> ambient_coordinates(const Cochain& f) const {
        if (f.degree() != degree || f.source_dim() != source_dim || f.target_dim() != target_dim)
            throw ArgumentError("cochain shape does not match the space");
        std::vector<bool> on(flat_size, false);
        for (auto s : support) on[s] = true;
        for (std::size_t k = 0; k < flat_size; ++k)
            if (!on[k] && sgn(f[k]) != 0) return std::nullopt;
        Vector out;
        out.reserve(support.size());
        for (auto s : support) out.push_back(f[s]);
        return out;
    }

    /// Coordinates of f in this space, or nullopt when f is not a member.
    std::optional<Vector> coordinates(const Cochain& f) const {
        auto amb = ambient_coordinates(f);
        if (!amb || !subspace) return amb;
        return subspace->coordinates(*amb);
    }

    bool contains(const Cochain& f) const { return coordinates(f).has_value(); }
};

/// All of Hom(A^{(x)n}, M).
inline CochainSpace hochschild_space(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    const Cochain shape = Cochain::zero(alg, mod, n);
    CochainSpace s{n, alg.dim(), mod.dim(), shape.size(), {}, std::nullopt};
    s.support.resize(shape.size());
    for (std::size_t k = 0; k < shape.size(); ++k) s.support[k] = k;
    return s;
}

/// Parity-preserving maps A^{(x)n} -> M.
inline CochainSpace parity_space(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    const Cochain shape = Cochain::zero(alg, mod, n);
    return CochainSpace{n, alg.dim(), mod.dim(), shape.size(), parity_support(alg, mod, n), std::nullopt};
}

/// Super Harrison cochains: parity-preserving f with su_{n,p} f = 0 for
/// p = 1, ..., n-1. For n <= 1 the shuffle conditions are vacuous; in degree
/// 0 parity preservation leaves the even part of M.
inline CochainSpace harrison_space(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    CochainSpace s = parity_space(alg, mod, n);
    if (n < 2) return s;
    RationalMatrix stacked;
    for (std::size_t p = 1; p < n; ++p) stacked.append_rows(super_shuffle_matrix(alg, mod, n, p));
    s.subspace = kernel_basis(stacked);
    return s;
}

inline std::vector<Cochain> harrison_basis(const SuperAlgebra& alg, const SuperModule& mod, std::size_t n) {
    return harrison_space(alg, mod, n).basis();
}

namespace detail {

/// Precomputed preimages of the multiplication: every (x, y, c) with c the
/// coefficient of e_k in e_x e_y.
inline std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> product_preimages(
    const SuperAlgebra& alg) {
    std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> pre(alg.dim());
    for (std::size_t x = 0; x < alg.dim(); ++x)
        for (std::size_t y = 0; y < alg.dim(); ++y)
            for (const auto& t : alg.product(x, y)) pre[t.index].push_back({{x, y}, t.coeff});
    return pre;
}

}  // namespace detail

/// Hochschild coboundary
///   (df)(a_1, ..., a_{n+1}) = a_1 f(a_2, ..., a_{n+1})
///                            + sum_{i=1}^{n} (-1)^i f(..., a_i a_{i+1}, ...)
///                            + (-1)^{n+1} f(a_1, ..., a_n) a_{n+1},
/// with the trailing product taken in the induced right action. Computed by
/// scattering each nonzero entry of f into the entries of df it feeds.
inline Cochain hochschild_coboundary(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f) {
    detail::check_shape(alg, mod, f);
    const std::size_t n = f.degree();
    const std::size_t da = alg.dim();
    const std::size_t dm = mod.dim();
    Cochain out = Cochain::zero(alg, mod, n + 1);
    const auto pre = detail::product_preimages(alg);
    const int last_sign = (n + 1) % 2 == 0 ? 1 : -1;
    std::vector<std::size_t> powers(n + 1, 1);  // powers[k] = da^k
    for (std::size_t k = 1; k <= n; ++k) powers[k] = powers[k - 1] * da;
    Rational contribution;
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
        const Rational& v = f[pos];
        if (sgn(v) == 0) continue;
        const std::size_t tuple = pos / dm;
        const std::size_t l = pos % dm;
        // a_1 f(a_2, ..., a_{n+1})
        for (std::size_t i = 0; i < da; ++i)
            for (const auto& t : mod.act(i, l)) out[(i * powers[n] + tuple) * dm + t.index] += v * t.coeff;
        // (-1)^q f(..., a_q a_{q+1}, ...), splitting slot q of f
        for (std::size_t q = 1; q <= n; ++q) {
            const std::size_t high = tuple / powers[n - q + 1];  // slots 1..q-1
            const std::size_t slot = (tuple / powers[n - q]) % da;
            const std::size_t low = tuple % powers[n - q];  // slots q+1..n
            for (const auto& [xy, c] : pre[slot]) {
                const std::size_t t2 = ((high * da + xy.first) * da + xy.second) * powers[n - q] + low;
                contribution = c * v;
                if (q % 2 == 1)
                    out[t2 * dm + l] -= contribution;
                else
                    out[t2 * dm + l] += contribution;
            }
        }
        // (-1)^{n+1} f(a_1, ..., a_n) . a_{n+1}
        for (std::size_t i = 0; i < da; ++i) {
            const int s = last_sign * koszul_sign(alg.parity(i), mod.parity(l));
            for (const auto& t : mod.act(i, l)) out[(tuple * da + i) * dm + t.index] += s * v * t.coeff;
        }
    }
    return out;
}

/// n = 2 graded symmetry test: f(a, b) = (-1)^{|a||b|} f(b, a) on basis pairs.
inline bool is_graded_symmetric(const SuperAlgebra& alg, const SuperModule& mod, const Cochain& f) {
    detail::check_shape(alg, mod, f);
    if (f.degree() != 2) throw ArgumentError("graded symmetry is defined for 2-cochains");
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            const int s = koszul_sign(alg.parity(a), alg.parity(b));
            for (std::size_t l = 0; l < mod.dim(); ++l)
                if (f.at({a, b}, l) != s * f.at({b, a}, l)) return false;
        }
    return true;
}

}  // namespace superharrison

#endif  // SUPERHARRISON_COCHAIN_HPP
