#include "lila/graded.hpp"

#include <stdexcept>

namespace lila {

std::string label_str(const Label& l) {
	return "(" + std::to_string(l.degree) + "," + std::to_string(l.index) + ")";
}

GradedSpace::GradedSpace(std::map<int, int> components) {
	for (auto it = components.begin(); it != components.end();) {
		if (it->second < 0)
			throw std::invalid_argument("negative dimension in graded space");
		it = it->second == 0 ? components.erase(it) : std::next(it);
	}
	comps_ = std::make_shared<std::map<int, int>>(std::move(components));
}

int GradedSpace::dim(int degree) const {
	auto it = comps_->find(degree);
	return it == comps_->end() ? 0 : it->second;
}

int GradedSpace::total_dim() const {
	int n = 0;
	for (auto& [d, k] : *comps_)
		n += k;
	return n;
}

std::vector<Label> GradedSpace::basis() const {
	std::vector<Label> out;
	out.reserve(total_dim());
	for (auto& [d, k] : *comps_)
		for (int i = 0; i < k; ++i)
			out.push_back({d, i});
	return out;
}

std::vector<Label> GradedSpace::basis(int degree) const {
	std::vector<Label> out;
	for (int i = 0, k = dim(degree); i < k; ++i)
		out.push_back({degree, i});
	return out;
}

GradedSpace shift(const GradedSpace& space, int p) {
	std::map<int, int> comps;
	for (auto& [d, k] : space.components())
		comps[d - p] = k;
	return GradedSpace(std::move(comps));
}

Vec::Vec(std::map<Label, Rat> coeffs) {
	for (auto& [l, c] : coeffs)
		if (c != 0)
			c_.emplace(l, c);
}

Rat Vec::coeff(const Label& l) const {
	auto it = c_.find(l);
	return it == c_.end() ? Rat(0) : it->second;
}

std::optional<int> Vec::homogeneous_degree() const {
	if (c_.empty())
		return std::nullopt;
	int d = c_.begin()->first.degree;
	if (c_.rbegin()->first.degree != d)
		return std::nullopt;
	return d;
}

bool Vec::is_homogeneous(int degree) const {
	auto d = homogeneous_degree();
	return !d || *d == degree;  // zero is homogeneous of every degree
}

Vec& Vec::add(const Rat& coeff, const Label& l) {
	if (coeff == 0)
		return *this;
	auto [it, fresh] = c_.emplace(l, coeff);
	if (!fresh) {
		it->second += coeff;
		if (it->second == 0)
			c_.erase(it);
	}
	return *this;
}

Vec& Vec::operator+=(const Vec& o) {
	for (auto& [l, c] : o.c_)
		add(c, l);
	return *this;
}

Vec& Vec::operator-=(const Vec& o) {
	for (auto& [l, c] : o.c_)
		add(-c, l);
	return *this;
}

Vec& Vec::operator*=(const Rat& s) {
	if (s == 0) {
		c_.clear();
		return *this;
	}
	for (auto& [l, c] : c_)
		c *= s;
	return *this;
}

std::string vec_str(const Vec& v) {
	if (v.is_zero())
		return "0";
	std::string out;
	for (auto& [l, c] : v.coeffs()) {
		if (!out.empty())
			out += " + ";
		out += rat_str(c) + "*" + label_str(l);
	}
	return out;
}

}  // namespace lila
