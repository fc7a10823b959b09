#include "doctest.h"

#include "lila/graded.hpp"
#include "lila/instances.hpp"
#include "lila/linalg.hpp"
#include "lila/rational.hpp"

using namespace lila;

TEST_CASE("rational arithmetic is exact and canonical") {
	Rat a = ratio(2, 4);
	CHECK(a == ratio(1, 2));
	CHECK(rat_str(a) == "1/2");
	CHECK(rat_parse("-6/4") == ratio(-3, 2));
	CHECK(rat_parse("7") == Rat(7));
	CHECK_THROWS(rat_parse("1/0"));
	CHECK_THROWS(rat_parse("a/b"));
	Rng rng(11);
	for (int i = 0; i < 50; ++i) {
		Rat x = rng.nonzero_rat(40) / rng.nonzero_rat(40);
		CHECK(x * (Rat(1) / x) == 1);
	}
}

TEST_CASE("shift moves components and is a bijection") {
	GradedSpace e(std::map<int, int>{{-2, 1}, {-1, 2}});
	CHECK(shift(e, 0) == e);
	GradedSpace e1 = shift(e, 1);
	CHECK(e1.dim(-3) == 1);
	CHECK(e1.dim(-2) == 2);
	CHECK(shift(shift(e, 5), -5) == e);
	for (int p = -3; p <= 3; ++p)
		for (int d = -6; d <= 6; ++d)
			CHECK(shift(e, p).dim(d) == e.dim(d + p));
}

TEST_CASE("solve, kernel and complement on the spec cases") {
	// single generator
	Vec e1 = Vec::unit(Label{0, 0});
	auto sol = solve_linear({e1}, e1);
	REQUIRE(sol);
	CHECK((*sol)[0] == 1);

	// complement of {0} in Q^2 is the full basis
	GradedSpace r2(std::map<int, int>{{0, 2}});
	std::vector<Vec> ambient;
	for (auto& l : r2.basis())
		ambient.push_back(Vec::unit(l));
	auto w = complement(ambient, {});
	CHECK(w.size() == 2);

	// kernel of e1 -> e2, e2 -> 0
	LinearMap f = [](const Label& l) {
		if (l.index == 0)
			return Vec::unit(Label{0, 1});
		return Vec();
	};
	auto ker = map_kernel(r2, f);
	REQUIRE(ker.size() == 1);
	CHECK(ker[0] == Vec::unit(Label{0, 1}));
	auto img = map_image(r2, f);
	CHECK(img.size() == 1);
}

TEST_CASE("rank-nullity holds exactly for random degree-preserving maps") {
	Rng rng(23);
	for (int trial = 0; trial < 30; ++trial) {
		int dim = rng.uniform(1, 5);
		GradedSpace v(std::map<int, int>{{0, dim}});
		QMat m(dim, dim);
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j)
				m.at(i, j) = rng.small_rat();
		LinearMap f = [&](const Label& l) {
			Vec out;
			for (int i = 0; i < dim; ++i)
				out.add(m.at(i, l.index), Label{0, i});
			return out;
		};
		auto ker = map_kernel(v, f);
		auto img = map_image(v, f);
		CHECK(int(ker.size() + img.size()) == dim);
	}
}

TEST_CASE("complement produces a direct sum decomposition") {
	Rng rng(5);
	GradedSpace v(std::map<int, int>{{0, 4}});
	std::vector<Vec> ambient;
	for (auto& l : v.basis())
		ambient.push_back(Vec::unit(l));
	std::vector<Vec> u = {random_vec(rng, v, 0), random_vec(rng, v, 0)};
	u.erase(std::remove_if(u.begin(), u.end(), [](const Vec& x) { return x.is_zero(); }), u.end());
	auto w = complement(ambient, u);
	// u + w spans, and the spans intersect trivially (dimension count)
	std::vector<Vec> all = u;
	all.insert(all.end(), w.begin(), w.end());
	for (auto& a : ambient)
		CHECK(in_span(all, a));
	QMat m(4, int(u.size()));
	for (int j = 0; j < int(u.size()); ++j)
		for (int i = 0; i < 4; ++i)
			m.at(i, j) = u[j].coeff(Label{0, i});
	CHECK(int(w.size()) == 4 - rank(m));
}

TEST_CASE("matrix inverse and adjoint with respect to a pairing") {
	auto q = sl2_quadratic();
	CHECK(q.nondegenerate());
	CHECK(!q.invariance_witness());
	QMat n(3, 3);
	n.at(0, 0) = 2;
	n.at(1, 1) = 5;
	n.at(2, 2) = 7;
	QMat nstar = q.adjoint(n);
	// <N x, y> = <x, N* y> on all basis pairs
	for (int x = 0; x < 3; ++x)
		for (int y = 0; y < 3; ++y) {
			Rat lhs(0), rhs(0);
			for (int k = 0; k < 3; ++k) {
				lhs += n.at(k, x) * q.gram.at(k, y);
				rhs += q.gram.at(x, k) * nstar.at(k, y);
			}
			CHECK(lhs == rhs);
		}
}
