#pragma once

#include <cstdint>
#include <random>

#include "lila/lie_algebra.hpp"
#include "lila/linfty.hpp"

namespace lila {

// Deterministic source for every randomized suite; seed-split, never global.
class Rng {
public:
	explicit Rng(uint64_t seed) : eng_(seed) {}

	int uniform(int lo, int hi) {  // inclusive
		return std::uniform_int_distribution<int>(lo, hi)(eng_);
	}
	Rat small_rat(int lo = -3, int hi = 3) { return Rat(uniform(lo, hi)); }
	Rat nonzero_rat(int bound = 3) {
		int v = 0;
		while (v == 0)
			v = uniform(-bound, bound);
		return Rat(v);
	}
	bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
	Rng split() { return Rng(eng_()); }

private:
	std::mt19937_64 eng_;
};

GradedSpace random_space(Rng& rng, int max_total_dim, int min_degree, int max_degree);
Vec random_vec(Rng& rng, const GradedSpace& space, int degree);
// Sparse random form with homogeneous entries; density in (0,1].
SymForm random_form(Rng& rng, const GradedSpace& space, int arity, int degree,
                    double density = 0.6);
ScalarForm random_scalar_form(Rng& rng, const GradedSpace& space, int arity,
                              double density = 0.6);

// --- small Lie algebra catalog -------------------------------------------

LieAlgebraData abelian_algebra(int dim);
LieAlgebraData so3();         // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
LieAlgebraData sl2();         // [h,e]=2e, [h,f]=-2f, [e,f]=h
LieAlgebraData heisenberg3(); // [e1,e2]=e3 central
LieAlgebraData affine2();     // [e1,e2]=e2
LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b);

// A Lie algebra of the given dimension (<= 4 supported beyond abelian),
// drawn from the catalog and conjugated by a random invertible matrix.
LieAlgebraData random_lie_algebra(Rng& rng, int dim);
QMat random_invertible(Rng& rng, int dim);

// so3 with the dot product; sl2 with the trace form.
QuadraticLieAlgebra so3_quadratic();
QuadraticLieAlgebra sl2_quadratic();

// --- structure presentations ----------------------------------------------

// Lie algebra as a binary structure concentrated in degree -1.
LInftyCandidate gla_of_lie_algebra(const LieAlgebraData& a);

// String Lie algebra: g in degree -1, a trivial g-module Q^dimv in degree
// -2, chi the given action matrices (one per g basis vector), omega an
// alternating 3-cocycle given on increasing triples.
Lie2Quadruple string_quadruple(const LieAlgebraData& g, int dimv,
                               const std::vector<QMat>& chi,
                               const std::map<std::array<int, 3>, std::vector<Rat>>& omega);

// so(3) with V = Q trivial and omega = the volume cocycle.
Lie2Quadruple string_so3();

// Trivial structure: partial invertible, everything else zero.
Lie2Quadruple trivial_quadruple(int dim);

}  // namespace lila
