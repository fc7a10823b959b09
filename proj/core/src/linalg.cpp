#include "lila/linalg.hpp"

#include <set>
#include <stdexcept>

namespace lila {

std::vector<int> QMat::rref() {
	std::vector<int> pivots;
	int r = 0;
	for (int c = 0; c < cols_ && r < rows_; ++c) {
		int p = -1;
		for (int i = r; i < rows_; ++i)
			if (at(i, c) != 0) {
				p = i;
				break;
			}
		if (p < 0)
			continue;
		if (p != r)
			for (int j = 0; j < cols_; ++j)
				std::swap(at(p, j), at(r, j));
		Rat inv = at(r, c);
		for (int j = 0; j < cols_; ++j)
			at(r, j) /= inv;
		for (int i = 0; i < rows_; ++i) {
			if (i == r || at(i, c) == 0)
				continue;
			Rat f = at(i, c);
			for (int j = 0; j < cols_; ++j)
				at(i, j) -= f * at(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::optional<std::vector<Rat>> solve(const QMat& a, const std::vector<Rat>& b) {
	if (int(b.size()) != a.rows())
		throw std::invalid_argument("solve: dimension mismatch");
	QMat aug(a.rows(), a.cols() + 1);
	for (int i = 0; i < a.rows(); ++i) {
		for (int j = 0; j < a.cols(); ++j)
			aug.at(i, j) = a.at(i, j);
		aug.at(i, a.cols()) = b[i];
	}
	auto pivots = aug.rref();
	if (!pivots.empty() && pivots.back() == a.cols())
		return std::nullopt;  // row (0 ... 0 | 1): infeasible
	std::vector<Rat> x(a.cols(), Rat(0));
	for (size_t r = 0; r < pivots.size(); ++r)
		x[pivots[r]] = aug.at(int(r), a.cols());
	return x;
}

std::vector<std::vector<Rat>> kernel_basis(const QMat& a) {
	QMat m = a;
	auto pivots = m.rref();
	std::vector<bool> is_pivot(a.cols(), false);
	for (int c : pivots)
		is_pivot[c] = true;
	std::vector<std::vector<Rat>> out;
	for (int c = 0; c < a.cols(); ++c) {
		if (is_pivot[c])
			continue;
		std::vector<Rat> v(a.cols(), Rat(0));
		v[c] = Rat(1);
		for (size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -m.at(int(r), c);
		out.push_back(std::move(v));
	}
	return out;
}

int rank(const QMat& a) {
	QMat m = a;
	return int(m.rref().size());
}

namespace {

std::vector<Label> label_union(const std::vector<Vec>& vs, const Vec* extra) {
	std::set<Label> labels;
	for (const auto& v : vs)
		for (auto& [l, c] : v.coeffs())
			labels.insert(l);
	if (extra)
		for (auto& [l, c] : extra->coeffs())
			labels.insert(l);
	return {labels.begin(), labels.end()};
}

QMat columns_matrix(const std::vector<Vec>& vs, const std::vector<Label>& rows) {
	QMat a(int(rows.size()), int(vs.size()));
	for (int j = 0; j < int(vs.size()); ++j)
		for (int i = 0; i < int(rows.size()); ++i)
			a.at(i, j) = vs[j].coeff(rows[i]);
	return a;
}

}  // namespace

std::optional<std::vector<Rat>> solve_linear(const std::vector<Vec>& vectors, const Vec& target) {
	auto rows = label_union(vectors, &target);
	QMat a = columns_matrix(vectors, rows);
	std::vector<Rat> b(rows.size());
	for (size_t i = 0; i < rows.size(); ++i)
		b[i] = target.coeff(rows[i]);
	return solve(a, b);
}

bool in_span(const std::vector<Vec>& vectors, const Vec& target) {
	return solve_linear(vectors, target).has_value();
}

std::vector<Vec> complement(const std::vector<Vec>& ambient, const std::vector<Vec>& u) {
	for (const auto& v : u)
		if (!in_span(ambient, v))
			throw std::invalid_argument("complement: subspace not contained in ambient span");
	std::vector<Vec> picked = u;
	std::vector<Vec> out;
	auto rows = label_union(ambient, nullptr);
	auto rk = [&](const std::vector<Vec>& vs) { return rank(columns_matrix(vs, rows)); };
	int current = rk(picked);
	for (const auto& v : ambient) {
		picked.push_back(v);
		int r = rk(picked);
		if (r > current) {
			current = r;
			out.push_back(v);
		} else {
			picked.pop_back();
		}
	}
	return out;
}

std::vector<Vec> map_image(const GradedSpace& space, const LinearMap& f) {
	std::vector<Vec> images;
	for (const auto& l : space.basis()) {
		Vec v = f(l);
		if (!v.is_zero())
			images.push_back(std::move(v));
	}
	// prune to an independent subset
	std::vector<Vec> out;
	for (const auto& v : images)
		if (!in_span(out, v))
			out.push_back(v);
	return out;
}

std::vector<Vec> map_kernel(const GradedSpace& space, const LinearMap& f) {
	auto domain = space.basis();
	std::vector<Vec> images;
	images.reserve(domain.size());
	for (const auto& l : domain)
		images.push_back(f(l));
	auto rows = label_union(images, nullptr);
	QMat a = columns_matrix(images, rows);
	std::vector<Vec> out;
	for (const auto& k : kernel_basis(a)) {
		Vec v;
		for (size_t j = 0; j < domain.size(); ++j)
			v.add(k[j], domain[j]);
		out.push_back(std::move(v));
	}
	return out;
}

}  // namespace lila
