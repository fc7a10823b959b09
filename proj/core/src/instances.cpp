#include "lila/instances.hpp"

#include <stdexcept>

namespace lila {

GradedSpace random_space(Rng& rng, int max_total_dim, int min_degree, int max_degree) {
	std::map<int, int> comps;
	int total = 0;
	int attempts = 0;
	while (total == 0 || (rng.coin(0.5) && total < max_total_dim && attempts < 8)) {
		++attempts;
		int d = rng.uniform(min_degree, max_degree);
		int k = rng.uniform(1, std::max(1, max_total_dim - total));
		comps[d] += k;
		total += k;
	}
	return GradedSpace(comps);
}

Vec random_vec(Rng& rng, const GradedSpace& space, int degree) {
	Vec v;
	for (const auto& l : space.basis(degree))
		if (rng.coin(0.7))
			v.add(rng.small_rat(), l);
	return v;
}

SymForm random_form(Rng& rng, const GradedSpace& space, int arity, int degree, double density) {
	if (arity == 0) {
		// homogeneous element of the given degree (possibly zero)
		return SymForm::constant(space, random_vec(rng, space, degree));
	}
	SymForm f(space, arity, degree);
	for (const auto& t : canonical_tuples(space, arity)) {
		int target = tuple_degree(t) + degree;
		if (space.dim(target) == 0 || !rng.coin(density))
			continue;
		f.set_entry(t, random_vec(rng, space, target));
	}
	return f;
}

ScalarForm random_scalar_form(Rng& rng, const GradedSpace& space, int arity, double density) {
	ScalarForm f(space, arity);
	for (const auto& t : canonical_tuples(space, arity))
		if (rng.coin(density))
			f.set_entry(t, rng.small_rat());
	return f;
}

LieAlgebraData abelian_algebra(int dim) {
	return LieAlgebraData(dim);
}

namespace {

std::vector<Rat> unitv(int n, int i, const Rat& c = Rat(1)) {
	std::vector<Rat> v(n, Rat(0));
	v[i] = c;
	return v;
}

}  // namespace

LieAlgebraData so3() {
	LieAlgebraData a(3);
	a.set_bracket(0, 1, unitv(3, 2));
	a.set_bracket(1, 2, unitv(3, 0));
	a.set_bracket(2, 0, unitv(3, 1));
	return a;
}

LieAlgebraData sl2() {
	LieAlgebraData a(3);  // basis h, e, f
	a.set_bracket(0, 1, unitv(3, 1, Rat(2)));
	a.set_bracket(0, 2, unitv(3, 2, Rat(-2)));
	a.set_bracket(1, 2, unitv(3, 0));
	return a;
}

LieAlgebraData heisenberg3() {
	LieAlgebraData a(3);
	a.set_bracket(0, 1, unitv(3, 2));
	return a;
}

LieAlgebraData affine2() {
	LieAlgebraData a(2);
	a.set_bracket(0, 1, unitv(2, 1));
	return a;
}

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b) {
	LieAlgebraData out(a.dim + b.dim);
	for (int i = 0; i < a.dim; ++i)
		for (int j = 0; j < a.dim; ++j)
			for (int k = 0; k < a.dim; ++k)
				out.c[i][j][k] = a.c[i][j][k];
	for (int i = 0; i < b.dim; ++i)
		for (int j = 0; j < b.dim; ++j)
			for (int k = 0; k < b.dim; ++k)
				out.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
	return out;
}

QMat random_invertible(Rng& rng, int dim) {
	for (;;) {
		QMat g(dim, dim);
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j)
				g.at(i, j) = rng.small_rat(-2, 2);
		if (mat_inverse(g))
			return g;
	}
}

LieAlgebraData random_lie_algebra(Rng& rng, int dim) {
	std::vector<LieAlgebraData> catalog;
	catalog.push_back(abelian_algebra(dim));
	if (dim == 2) {
		catalog.push_back(affine2());
	} else if (dim == 3) {
		catalog.push_back(so3());
		catalog.push_back(sl2());
		catalog.push_back(heisenberg3());
		catalog.push_back(direct_sum(affine2(), abelian_algebra(1)));
	} else if (dim == 4) {
		catalog.push_back(direct_sum(so3(), abelian_algebra(1)));
		catalog.push_back(direct_sum(sl2(), abelian_algebra(1)));
		catalog.push_back(direct_sum(heisenberg3(), abelian_algebra(1)));
		catalog.push_back(direct_sum(affine2(), affine2()));
		catalog.push_back(direct_sum(affine2(), abelian_algebra(2)));
	}
	const auto& base = catalog[size_t(rng.uniform(0, int(catalog.size()) - 1))];
	return base.conjugate(random_invertible(rng, dim));
}

QuadraticLieAlgebra so3_quadratic() {
	return QuadraticLieAlgebra(so3(), mat_identity(3));
}

QuadraticLieAlgebra sl2_quadratic() {
	// Killing form in the (h, e, f) basis: B(h,h)=8, B(e,f)=4
	QMat g(3, 3);
	g.at(0, 0) = 8;
	g.at(1, 2) = 4;
	g.at(2, 1) = 4;
	return QuadraticLieAlgebra(sl2(), g);
}

LInftyCandidate gla_of_lie_algebra(const LieAlgebraData& a) {
	GradedSpace space(std::map<int, int>{{-1, a.dim}});
	SymForm l2(space, 2, 1);
	for (int i = 0; i < a.dim; ++i)
		for (int j = i + 1; j < a.dim; ++j) {
			Vec v;
			for (int k = 0; k < a.dim; ++k)
				v.add(a.c[i][j][k], Label{-1, k});
			l2.set_entry({Label{-1, i}, Label{-1, j}}, v);
		}
	return make_candidate(FormalSum::from(l2));
}

Lie2Quadruple string_quadruple(const LieAlgebraData& g, int dimv,
                               const std::vector<QMat>& chi,
                               const std::map<std::array<int, 3>, std::vector<Rat>>& omega) {
	Lie2Quadruple q(dimv, g.dim);
	if (int(chi.size()) != g.dim)
		throw std::invalid_argument("string_quadruple: one action matrix per basis vector");
	q.chi = chi;
	for (int i = 0; i < g.dim; ++i)
		for (int j = i + 1; j < g.dim; ++j)
			q.set_bracket(i, j, g.bracket(i, j));
	for (auto& [t, v] : omega)
		q.set_omega(t[0], t[1], t[2], v);
	return q;
}

Lie2Quadruple string_so3() {
	std::vector<QMat> chi(3, QMat(1, 1));
	std::map<std::array<int, 3>, std::vector<Rat>> omega;
	omega[{0, 1, 2}] = {Rat(1)};
	return string_quadruple(so3(), 1, chi, omega);
}

Lie2Quadruple trivial_quadruple(int dim) {
	Lie2Quadruple q(dim, dim);
	q.partial = mat_identity(dim);
	return q;
}

}  // namespace lila
