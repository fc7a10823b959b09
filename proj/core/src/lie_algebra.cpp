#include "lila/lie_algebra.hpp"

#include <array>
#include <stdexcept>

namespace lila {

LieAlgebraData::LieAlgebraData(int dimension)
    : dim(dimension),
      c(dimension, std::vector<std::vector<Rat>>(dimension, std::vector<Rat>(dimension, Rat(0)))) {}

void LieAlgebraData::set_bracket(int i, int j, const std::vector<Rat>& v) {
	if (int(v.size()) != dim)
		throw std::invalid_argument("structure constant vector has wrong length");
	c[i][j] = v;
	for (int k = 0; k < dim; ++k)
		c[j][i][k] = -v[k];
}

std::vector<Rat> LieAlgebraData::bracket_vec(const std::vector<Rat>& x,
                                             const std::vector<Rat>& y) const {
	std::vector<Rat> out(dim, Rat(0));
	for (int i = 0; i < dim; ++i) {
		if (x[i] == 0)
			continue;
		for (int j = 0; j < dim; ++j) {
			if (y[j] == 0)
				continue;
			Rat f = x[i] * y[j];
			for (int k = 0; k < dim; ++k)
				out[k] += f * c[i][j][k];
		}
	}
	return out;
}

std::optional<std::array<int, 3>> LieAlgebraData::jacobi_witness() const {
	auto unit = [&](int i) {
		std::vector<Rat> v(dim, Rat(0));
		v[i] = 1;
		return v;
	};
	for (int i = 0; i < dim; ++i)
		for (int j = i + 1; j < dim; ++j)
			for (int k = j + 1; k < dim; ++k) {
				std::vector<Rat> s = bracket_vec(bracket_vec(unit(i), unit(j)), unit(k));
				auto t = bracket_vec(bracket_vec(unit(j), unit(k)), unit(i));
				auto u = bracket_vec(bracket_vec(unit(k), unit(i)), unit(j));
				bool zero = true;
				for (int m = 0; m < dim; ++m)
					if (s[m] + t[m] + u[m] != 0)
						zero = false;
				if (!zero)
					return std::array<int, 3>{i, j, k};
			}
	return std::nullopt;
}

LieAlgebraData LieAlgebraData::conjugate(const QMat& g) const {
	auto inv = mat_inverse(g);
	if (!inv)
		throw std::invalid_argument("conjugate: singular basis change");
	LieAlgebraData out(dim);
	// new basis f_i = sum_r g[r][i] e_r; [f_i, f_j] expressed in the f basis
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j) {
			std::vector<Rat> fi(dim), fj(dim);
			for (int r = 0; r < dim; ++r) {
				fi[r] = g.at(r, i);
				fj[r] = g.at(r, j);
			}
			out.c[i][j] = mat_apply(*inv, bracket_vec(fi, fj));
		}
	return out;
}

bool QuadraticLieAlgebra::nondegenerate() const {
	return rank(gram) == algebra.dim;
}

std::optional<std::array<int, 3>> QuadraticLieAlgebra::invariance_witness() const {
	const int n = algebra.dim;
	auto pair = [&](const std::vector<Rat>& x, int j) {
		Rat s(0);
		for (int i = 0; i < n; ++i)
			s += x[i] * gram.at(i, j);
		return s;
	};
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < n; ++y)
			for (int z = 0; z < n; ++z) {
				// <[x,y],z> + <y,[x,z]> = 0
				Rat lhs = pair(algebra.bracket(x, y), z);
				Rat rhs(0);
				for (int k = 0; k < n; ++k)
					rhs += gram.at(y, k) * algebra.c[x][z][k];
				if (lhs + rhs != 0)
					return std::array<int, 3>{x, y, z};
			}
	return std::nullopt;
}

QMat QuadraticLieAlgebra::adjoint(const QMat& nmat) const {
	auto ginv = mat_inverse(gram);
	if (!ginv)
		throw std::invalid_argument("adjoint: degenerate pairing");
	QMat nt(nmat.cols(), nmat.rows());
	for (int i = 0; i < nmat.rows(); ++i)
		for (int j = 0; j < nmat.cols(); ++j)
			nt.at(j, i) = nmat.at(i, j);
	return mat_mul(mat_mul(*ginv, nt), gram);
}

QMat mat_mul(const QMat& a, const QMat& b) {
	if (a.cols() != b.rows())
		throw std::invalid_argument("mat_mul: shape mismatch");
	QMat out(a.rows(), b.cols());
	for (int i = 0; i < a.rows(); ++i)
		for (int k = 0; k < a.cols(); ++k) {
			if (a.at(i, k) == 0)
				continue;
			for (int j = 0; j < b.cols(); ++j)
				out.at(i, j) += a.at(i, k) * b.at(k, j);
		}
	return out;
}

QMat mat_identity(int n) {
	QMat m(n, n);
	for (int i = 0; i < n; ++i)
		m.at(i, i) = 1;
	return m;
}

QMat mat_scale(const Rat& s, QMat m) {
	for (int i = 0; i < m.rows(); ++i)
		for (int j = 0; j < m.cols(); ++j)
			m.at(i, j) *= s;
	return m;
}

QMat mat_add(const QMat& a, const QMat& b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("mat_add: shape mismatch");
	QMat out = a;
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < a.cols(); ++j)
			out.at(i, j) += b.at(i, j);
	return out;
}

std::optional<QMat> mat_inverse(const QMat& a) {
	if (a.rows() != a.cols())
		return std::nullopt;
	const int n = a.rows();
	QMat aug(n, 2 * n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j)
			aug.at(i, j) = a.at(i, j);
		aug.at(i, n + i) = 1;
	}
	auto pivots = aug.rref();
	if (int(pivots.size()) < n || pivots[n - 1] != n - 1)
		return std::nullopt;
	QMat inv(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			inv.at(i, j) = aug.at(i, n + j);
	return inv;
}

std::vector<Rat> mat_apply(const QMat& a, const std::vector<Rat>& x) {
	if (int(x.size()) != a.cols())
		throw std::invalid_argument("mat_apply: shape mismatch");
	std::vector<Rat> out(a.rows(), Rat(0));
	for (int i = 0; i < a.rows(); ++i)
		for (int j = 0; j < a.cols(); ++j)
			out[i] += a.at(i, j) * x[j];
	return out;
}

}  // namespace lila
