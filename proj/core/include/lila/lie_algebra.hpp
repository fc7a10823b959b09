#pragma once

#include <optional>
#include <vector>

#include "lila/linalg.hpp"
#include "lila/rational.hpp"

namespace lila {

// Finite-dimensional algebra given by structure constants: [e_i, e_j] =
// sum_k c[i][j][k] e_k, antisymmetry maintained by the setter. The anchor of
// the algebroid picture is identically zero here (base = point).
struct LieAlgebraData {
	int dim = 0;
	std::vector<std::vector<std::vector<Rat>>> c;

	explicit LieAlgebraData(int dimension = 0);

	void set_bracket(int i, int j, const std::vector<Rat>& v);
	const std::vector<Rat>& bracket(int i, int j) const { return c[i][j]; }
	std::vector<Rat> bracket_vec(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

	// Jacobi on all basis triples; witness (i,j,k) on failure.
	std::optional<std::array<int, 3>> jacobi_witness() const;
	bool is_lie() const { return !jacobi_witness().has_value(); }

	// Structure transported along the invertible basis change g (new basis
	// vectors are the columns of g).
	LieAlgebraData conjugate(const QMat& g) const;
};

// Symmetric bilinear pairing on top of a Lie algebra; nondegeneracy and the
// invariance <[x,y],z> = -<y,[x,z]> are checked on demand.
struct QuadraticLieAlgebra {
	LieAlgebraData algebra;
	QMat gram;

	QuadraticLieAlgebra(LieAlgebraData a, QMat g) : algebra(std::move(a)), gram(std::move(g)) {}

	bool nondegenerate() const;
	// first violating triple of invariance, if any
	std::optional<std::array<int, 3>> invariance_witness() const;

	// transpose w.r.t. the pairing: N* = G^{-1} N^T G
	QMat adjoint(const QMat& n) const;
};

QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_identity(int n);
QMat mat_scale(const Rat& s, QMat m);
QMat mat_add(const QMat& a, const QMat& b);
std::optional<QMat> mat_inverse(const QMat& a);
std::vector<Rat> mat_apply(const QMat& a, const std::vector<Rat>& x);

}  // namespace lila
