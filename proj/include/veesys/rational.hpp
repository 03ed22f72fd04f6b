#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "veesys/errors.hpp"

namespace veesys {

// Exact arbitrary-precision fraction, the sole scalar type of the library.
// mpq_class keeps values in lowest terms with a positive denominator; all
// construction below goes through canonicalizing paths.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
	if (den == 0)
		throw ParseError("zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

/// Parses "p" or "p/q" with optional leading '-' and positive q. Rejects
/// anything else (whitespace, '+', hex, zero denominators, "1/-2", ...).
inline Rational parse_rational(std::string_view text)
{
	const auto bad = [&] { return ParseError("malformed rational: '" + std::string(text) + "'"); };
	std::size_t pos = 0;
	const auto digits = [&](std::size_t &p) {
		std::size_t start = p;
		while (p < text.size() && text[p] >= '0' && text[p] <= '9')
			++p;
		return p > start;
	};
	if (pos < text.size() && text[pos] == '-')
		++pos;
	if (!digits(pos))
		throw bad();
	if (pos < text.size()) {
		if (text[pos] != '/')
			throw bad();
		++pos;
		std::size_t den_start = pos;
		if (!digits(pos) || pos != text.size())
			throw bad();
		if (text.substr(den_start).find_first_not_of('0') == std::string_view::npos)
			throw ParseError("zero denominator in '" + std::string(text) + "'");
	}
	Rational q(std::string(text), 10);
	q.canonicalize();
	return q;
}

/// Canonical "p" / "p/q" rendering (lowest terms, positive denominator).
inline std::string to_string(const Rational &q)
{
	return q.get_str();
}

/// Copy brought to lowest terms. mpq values built from raw integer pairs
/// are not canonical until this runs, and GMP arithmetic assumes canonical
/// operands; call this on any rational that enters through a public API.
inline Rational canonical(const Rational &q)
{
	Rational out = q;
	out.canonicalize();
	return out;
}

inline bool is_zero(const Rational &q)
{
	return sgn(q) == 0;
}

} // namespace veesys
