#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lila {

// Exact rational scalar. mpq_class keeps values reduced with a positive
// denominator, which is the invariant every module here relies on.
using Rat = mpq_class;

inline Rat ratio(long num, long den = 1) {
	if (den == 0)
		throw std::invalid_argument("rational with zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

// Parses "p/q" or "p". Throws on malformed input and on q == 0.
inline Rat rat_parse(const std::string& s) {
	auto bad = [&]() { return std::invalid_argument("malformed rational: '" + s + "'"); };
	if (s.empty())
		throw bad();
	std::string num = s, den = "1";
	if (auto slash = s.find('/'); slash != std::string::npos) {
		num = s.substr(0, slash);
		den = s.substr(slash + 1);
	}
	mpz_class n, d;
	if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
		throw bad();
	if (d == 0)
		throw std::invalid_argument("rational with zero denominator: '" + s + "'");
	Rat r(n, d);
	r.canonicalize();
	return r;
}

inline std::string rat_str(const Rat& r) {
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace lila
