#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bgc/errors.hpp"

namespace bgc {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(|num|, den) = 1 and den > 0, so equality is structural.
using Rational = mpq_class;

using QVector = std::vector<Rational>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Accepts "a" or "a/b" with optional sign; b must be nonzero.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char ch : text) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw ParseError("bad character in rational literal '" + text + "'");
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ParseError("unparsable rational literal '" + text + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    v.canonicalize();
    return v;
}

// Always emits the explicit "a/b" form, e.g. "1/1", "-3/2".
inline std::string rational_to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

inline bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

inline QVector add(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVector sub(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVector scale(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

}  // namespace bgc
