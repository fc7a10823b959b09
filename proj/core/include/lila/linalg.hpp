#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lila/graded.hpp"

namespace lila {

// Dense exact matrix over Q, row major. Small sizes only; used for the
// solve/kernel/image/complement plumbing behind the algebraic modules.
class QMat {
public:
	QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
	const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

	// In-place reduced row echelon form; returns the pivot column of each
	// pivot row, in order.
	std::vector<int> rref();

private:
	int rows_, cols_;
	std::vector<Rat> a_;
};

// Exact solution x of A x = b, or nullopt when infeasible.
std::optional<std::vector<Rat>> solve(const QMat& a, const std::vector<Rat>& b);

std::vector<std::vector<Rat>> kernel_basis(const QMat& a);
int rank(const QMat& a);

// Coefficients expressing `target` in terms of `vectors`, or nullopt.
std::optional<std::vector<Rat>> solve_linear(const std::vector<Vec>& vectors, const Vec& target);

bool in_span(const std::vector<Vec>& vectors, const Vec& target);

// Basis W with span(u) (+) span(W) = span(ambient), chosen greedily from
// `ambient`. Throws if u is not contained in span(ambient).
std::vector<Vec> complement(const std::vector<Vec>& ambient, const std::vector<Vec>& u);

// Linear map given by images of the basis labels of `space`.
using LinearMap = std::function<Vec(const Label&)>;

std::vector<Vec> map_image(const GradedSpace& space, const LinearMap& f);
std::vector<Vec> map_kernel(const GradedSpace& space, const LinearMap& f);

}  // namespace lila
