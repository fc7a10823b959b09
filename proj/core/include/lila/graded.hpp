#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lila/rational.hpp"

namespace lila {

// Basis label of a graded vector space: (degree, index inside that degree).
// The order (degree ascending, then index) is the canonical order used by
// every tuple-canonicalization routine in the library.
struct Label {
	int degree = 0;
	int index = 0;
	auto operator<=>(const Label&) const = default;
};

std::string label_str(const Label& l);

// Finite-dimensional Z-graded vector space over Q. Immutable; cheap to copy.
class GradedSpace {
public:
	GradedSpace() : comps_(std::make_shared<std::map<int, int>>()) {}
	explicit GradedSpace(std::map<int, int> components);

	const std::map<int, int>& components() const { return *comps_; }
	int dim(int degree) const;
	int total_dim() const;
	bool has_label(const Label& l) const { return l.index >= 0 && l.index < dim(l.degree); }

	// Labels in canonical order.
	std::vector<Label> basis() const;
	std::vector<Label> basis(int degree) const;

	bool operator==(const GradedSpace& o) const { return *comps_ == *o.comps_; }
	bool operator!=(const GradedSpace& o) const { return !(*this == o); }

private:
	std::shared_ptr<const std::map<int, int>> comps_;
};

// E[p]: component of degree i of the result is the degree i+p component of
// the input; the label (d, i) of the input becomes (d-p, i).
GradedSpace shift(const GradedSpace& space, int p);
inline Label shift(const Label& l, int p) { return Label{l.degree - p, l.index}; }

// Sparse vector: zero is the empty map, nonzero coefficients only.
class Vec {
public:
	Vec() = default;
	explicit Vec(std::map<Label, Rat> coeffs);

	static Vec unit(const Label& l) { return Vec({{l, Rat(1)}}); }

	const std::map<Label, Rat>& coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	Rat coeff(const Label& l) const;

	// Degree when homogeneous (all labels share one degree); nullopt for the
	// zero vector or a mixed-degree vector.
	std::optional<int> homogeneous_degree() const;
	bool is_homogeneous(int degree) const;

	Vec& add(const Rat& coeff, const Label& l);
	Vec& operator+=(const Vec& o);
	Vec& operator-=(const Vec& o);
	Vec& operator*=(const Rat& s);
	friend Vec operator+(Vec a, const Vec& b) { return a += b; }
	friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
	friend Vec operator*(const Rat& s, Vec v) { return v *= s; }
	bool operator==(const Vec& o) const { return c_ == o.c_; }

private:
	std::map<Label, Rat> c_;
};

std::string vec_str(const Vec& v);

}  // namespace lila
