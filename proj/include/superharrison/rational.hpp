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

#ifndef SUPERHARRISON_RATIONAL_HPP
#define SUPERHARRISON_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace superharrison {

/// Exact rational scalar. Everything in the engine is computed over Q.
using Rational = mpq_class;

/// Dense coefficient vector over a fixed basis.
using Vector = std::vector<Rational>;

/// Thrown when an input violates a documented precondition.
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an invariant that the mathematics guarantees does not hold.
/// Reaching this means a sign or indexing bug in the engine.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Thrown when a computation would exceed a configured size ceiling.
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Decimal points and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ArgumentError("empty rational literal");
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '/') {
            if (slash != std::string_view::npos) throw ArgumentError("malformed rational: " + std::string(text));
            slash = i;
        } else if (c == '-' || c == '+') {
            if (i != 0) throw ArgumentError("malformed rational: " + std::string(text));
        } else if (c < '0' || c > '9') {
            throw ArgumentError("malformed rational: " + std::string(text));
        }
    }
    auto digits_ok = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty();
    };
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!digits_ok(num) || (slash != std::string_view::npos && den.empty()))
        throw ArgumentError("malformed rational: " + std::string(text));
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Rational r;
    r.get_num() = mpz_class(n, 10);
    r.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (r.get_den() == 0) throw ArgumentError("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

/// Canonical "p/q" or "p" string.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n, Rational(0));
    v.at(k) = 1;
    return v;
}

}  // namespace superharrison

#endif  // SUPERHARRISON_RATIONAL_HPP
