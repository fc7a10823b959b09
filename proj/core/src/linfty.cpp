#include "lila/linfty.hpp"

#include <algorithm>
#include <functional>

namespace lila {

namespace {

Vec to_vec(const std::vector<Rat>& coords, int degree) {
	Vec v;
	for (int i = 0; i < int(coords.size()); ++i)
		v.add(coords[i], Label{degree, i});
	return v;
}

std::vector<Rat> to_coords(const Vec& v, int degree, int dim) {
	std::vector<Rat> out(dim, Rat(0));
	for (auto& [l, c] : v.coeffs()) {
		if (l.degree != degree)
			throw std::invalid_argument("coordinate extraction: degree mismatch");
		out[l.index] = c;
	}
	return out;
}

}  // namespace

LInftyCandidate make_candidate(FormalSum mu, bool curved) {
	if (mu.degree() != 1)
		throw std::invalid_argument("structure components must have map degree +1");
	if (const SymForm* l0 = mu.component(0)) {
		if (!l0->entry({}).is_homogeneous(1))
			throw std::invalid_argument("curvature must be homogeneous of degree 1");
		curved = true;
	}
	return LInftyCandidate{std::move(mu), curved};
}

namespace {

CheckReport report_from_square(const FormalSum& sq) {
	CheckReport r;
	if (sq.is_zero())
		return r;
	const auto& comp = sq.components().begin()->second;
	const auto& [tuple, value] = *comp.entries().begin();
	r.pass = false;
	r.witness = tuple;
	r.value = value;
	r.detail = "[mu,mu] nonzero at " + tuple_str(tuple);
	return r;
}

// sum over i+j = n+1 of the unshuffled compositions l_j(l_i(...), ...),
// including the curvature slot when l_0 is present.
CheckReport direct_jacobi(const LInftyCandidate& c, bool with_curvature) {
	CheckReport r;
	const FormalSum& mu = c.mu;
	const SymForm* l0 = mu.component(0);
	if (with_curvature && l0) {
		const SymForm* l1 = mu.component(1);
		Vec v = l1 ? l1->eval({l0->entry({})}) : Vec();
		if (!v.is_zero()) {
			r.pass = false;
			r.witness = {};
			r.value = v;
			r.detail = "l_1(l_0) != 0";
			return r;
		}
	}
	int max_n = std::max(2 * mu.max_arity() - 1, 1);
	for (int n = 1; n <= max_n; ++n) {
		auto tuples = canonical_tuples(mu.space(), n);
		for (const auto& t : tuples) {
			std::vector<int> degs(t.size());
			for (size_t i = 0; i < t.size(); ++i)
				degs[i] = t[i].degree;
			Vec total;
			if (with_curvature && l0) {
				if (const SymForm* ln1 = mu.component(n + 1))
					total += ln1->eval_prefix(l0->entry({}), t);
			}
			for (int i = 1; i <= n; ++i) {
				const SymForm* li = mu.component(i);
				const SymForm* lj = mu.component(n + 1 - i);
				if (!li || !lj)
					continue;
				std::vector<Label> head(i), tail(n - i);
				for (const auto& perm : unshuffles(i, n - i)) {
					for (int p = 0; p < i; ++p)
						head[p] = t[perm[p]];
					Vec inner = li->eval_labels(head);
					if (inner.is_zero())
						continue;
					for (int p = 0; p < n - i; ++p)
						tail[p] = t[perm[i + p]];
					Vec term = lj->eval_prefix(inner, tail);
					term *= Rat(koszul_sign(perm, degs));
					total += term;
				}
			}
			if (!total.is_zero()) {
				r.pass = false;
				r.witness = t;
				r.value = total;
				r.detail = "Jacobi identity fails at " + tuple_str(t);
				return r;
			}
		}
	}
	return r;
}

}  // namespace

CheckReport check_linfty(const LInftyCandidate& c) {
	if (c.mu.component(0))
		throw std::invalid_argument("flat check on a candidate with curvature; use check_curved");
	return report_from_square(rn_bracket(c.mu, c.mu));
}

CheckReport check_linfty_direct(const LInftyCandidate& c) {
	if (c.mu.component(0))
		throw std::invalid_argument("flat check on a candidate with curvature; use check_curved");
	return direct_jacobi(c, false);
}

CheckReport check_curved(const LInftyCandidate& c) {
	return report_from_square(rn_bracket(c.mu, c.mu));
}

CheckReport check_curved_direct(const LInftyCandidate& c) {
	return direct_jacobi(c, true);
}

CheckReport check_structure(const LInftyCandidate& c) {
	return (c.curved || c.mu.component(0)) ? check_curved(c) : check_linfty(c);
}

bool is_poisson_element(const Vec& pi, const LInftyCandidate& c) {
	if (!pi.is_homogeneous(0))
		throw std::invalid_argument("Poisson element must have degree 0");
	const SymForm* l2 = c.mu.component(2);
	if (!l2)
		return true;
	return l2->eval({pi, pi}).is_zero();
}

bool is_maurer_cartan(const Vec& e, const LInftyCandidate& c) {
	if (!e.is_homogeneous(0))
		throw std::invalid_argument("Maurer-Cartan element must have degree 0");
	Vec val;
	if (const SymForm* l1 = c.mu.component(1))
		val += l1->eval({e});
	if (const SymForm* l0 = c.mu.component(0))
		val -= l0->entry({});
	if (const SymForm* l2 = c.mu.component(2)) {
		Vec half = l2->eval({e, e});
		half *= ratio(-1, 2);
		val += half;
	}
	return val.is_zero();
}

SymForm ce_differential(const SymForm& eta, const SymForm& l2) {
	const GradedSpace& space = eta.space();
	for (auto& [d, k] : space.components())
		if (d != -1 && d != -2)
			throw std::invalid_argument("ce_differential: space not concentrated in {-2,-1}");
	const int k = eta.arity();
	if (k < 1 || eta.degree() != k - 2)
		throw std::invalid_argument(
		    "ce_differential: degree pattern violated (need arity k, map degree k-2)");
	SymForm out(space, k + 1, k - 1);
	auto xs = space.basis(-1);
	auto chi = [&](const Label& x, const Vec& f) { return l2.eval({Vec::unit(x), f}); };
	auto br = [&](const Label& x, const Label& y) { return l2.eval_labels({x, y}); };
	// tuples X_0 < ... < X_k in E_-1; every other degree pattern lands
	// outside the space and vanishes
	std::vector<int> idx(k + 1);
	std::function<void(int, int)> rec = [&](int pos, int from) {
		if (pos == k + 1) {
			Vec total;
			std::vector<Label> rest;
			for (int i = 0; i <= k; ++i) {
				rest.clear();
				for (int p = 0; p <= k; ++p)
					if (p != i)
						rest.push_back(xs[idx[p]]);
				Vec term = chi(xs[idx[i]], eta.eval_labels(rest));
				if (i & 1)
					term *= Rat(-1);
				total += term;
			}
			for (int i = 0; i <= k; ++i)
				for (int j = i + 1; j <= k; ++j) {
					rest.clear();
					for (int p = 0; p <= k; ++p)
						if (p != i && p != j)
							rest.push_back(xs[idx[p]]);
					Vec term = eta.eval_prefix(br(xs[idx[i]], xs[idx[j]]), rest);
					if ((i + j) & 1)
						term *= Rat(-1);
					total += term;
				}
			std::vector<Label> tuple(k + 1);
			for (int p = 0; p <= k; ++p)
				tuple[p] = xs[idx[p]];
			out.set_entry(tuple, std::move(total));
			return;
		}
		for (int i = from; i < int(xs.size()); ++i) {
			idx[pos] = i;
			rec(pos + 1, i + 1);
		}
	};
	if (int(xs.size()) >= k + 1)
		rec(0, 0);
	return out;
}

bool compatible(const LInftyCandidate& a, const LInftyCandidate& b) {
	return rn_bracket(a.mu, b.mu).is_zero();
}

Lie2Quadruple::Lie2Quadruple(int d2, int d1)
    : dim2(d2), dim1(d1), partial(d1, d2), chi(d1, QMat(d2, d2)),
      bracket(d1, std::vector<std::vector<Rat>>(d1, std::vector<Rat>(d1, Rat(0)))) {}

GradedSpace Lie2Quadruple::space() const {
	return GradedSpace({{-2, dim2}, {-1, dim1}});
}

void Lie2Quadruple::set_bracket(int x, int y, const std::vector<Rat>& v) {
	bracket[x][y] = v;
	bracket[y][x].resize(dim1);
	for (int m = 0; m < dim1; ++m)
		bracket[y][x][m] = -v[m];
}

void Lie2Quadruple::set_omega(int x, int y, int z, const std::vector<Rat>& v) {
	if (!(x < y && y < z))
		throw std::invalid_argument("set_omega expects strictly increasing indices");
	omega[{x, y, z}] = v;
}

std::vector<Rat> Lie2Quadruple::omega_eval(int x, int y, int z) const {
	std::array<int, 3> s{x, y, z};
	int sign = 1;
	for (int i = 1; i < 3; ++i)
		for (int j = i; j > 0 && s[j] < s[j - 1]; --j) {
			std::swap(s[j - 1], s[j]);
			sign = -sign;
		}
	if (s[0] == s[1] || s[1] == s[2])
		return std::vector<Rat>(dim2, Rat(0));
	auto it = omega.find(s);
	if (it == omega.end())
		return std::vector<Rat>(dim2, Rat(0));
	std::vector<Rat> v = it->second;
	if (sign < 0)
		for (auto& r : v)
			r = -r;
	return v;
}

LInftyCandidate from_lie2_quadruple(const Lie2Quadruple& q) {
	GradedSpace space = q.space();
	SymForm l1(space, 1, 1), l2(space, 2, 1), l3(space, 3, 1);
	for (int j = 0; j < q.dim2; ++j) {
		std::vector<Rat> col(q.dim1);
		for (int i = 0; i < q.dim1; ++i)
			col[i] = q.partial.at(i, j);
		l1.set_entry({Label{-2, j}}, to_vec(col, -1));
	}
	for (int j = 0; j < q.dim2; ++j)
		for (int x = 0; x < q.dim1; ++x) {
			std::vector<Rat> col(q.dim2);
			for (int i = 0; i < q.dim2; ++i)
				col[i] = q.chi[x].at(i, j);
			l2.set_entry({Label{-2, j}, Label{-1, x}}, to_vec(col, -2));
		}
	for (int x = 0; x < q.dim1; ++x)
		for (int y = x + 1; y < q.dim1; ++y)
			l2.set_entry({Label{-1, x}, Label{-1, y}}, to_vec(q.bracket[x][y], -1));
	for (auto& [t, v] : q.omega)
		l3.set_entry({Label{-1, t[0]}, Label{-1, t[1]}, Label{-1, t[2]}}, to_vec(v, -2));
	FormalSum mu(space, 1);
	mu.add_component(l1);
	mu.add_component(l2);
	mu.add_component(l3);
	return make_candidate(std::move(mu));
}

QuadrupleReport quadruple_axioms(const Lie2Quadruple& q) {
	QuadrupleReport r;
	const int d1 = q.dim1, d2 = q.dim2;
	auto fail = [&](int axiom, const std::string& w) {
		if (r.axiom[axiom]) {
			r.axiom[axiom] = false;
			r.witness[axiom] = w;
		}
	};
	auto unit2 = [&](int j) {
		std::vector<Rat> v(d2, Rat(0));
		v[j] = 1;
		return v;
	};
	auto unit1 = [&](int x) {
		std::vector<Rat> v(d1, Rat(0));
		v[x] = 1;
		return v;
	};
	auto pd = [&](const std::vector<Rat>& f) { return mat_apply(q.partial, f); };
	auto chi_vec = [&](const std::vector<Rat>& x, const std::vector<Rat>& f) {
		std::vector<Rat> out(d2, Rat(0));
		for (int a = 0; a < d1; ++a) {
			if (x[a] == 0)
				continue;
			auto part = mat_apply(q.chi[a], f);
			for (int i = 0; i < d2; ++i)
				out[i] += x[a] * part[i];
		}
		return out;
	};
	auto br_vec = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
		std::vector<Rat> out(d1, Rat(0));
		for (int a = 0; a < d1; ++a)
			for (int b = 0; b < d1; ++b) {
				if (x[a] == 0 || y[b] == 0)
					continue;
				for (int m = 0; m < d1; ++m)
					out[m] += x[a] * y[b] * q.bracket[a][b][m];
			}
		return out;
	};
	auto om_vec = [&](const std::vector<Rat>& x, const std::vector<Rat>& y,
	                  const std::vector<Rat>& z) {
		std::vector<Rat> out(d2, Rat(0));
		for (int a = 0; a < d1; ++a)
			for (int b = 0; b < d1; ++b)
				for (int cc = 0; cc < d1; ++cc) {
					if (x[a] == 0 || y[b] == 0 || z[cc] == 0)
						continue;
					auto v = q.omega_eval(a, b, cc);
					for (int i = 0; i < d2; ++i)
						out[i] += x[a] * y[b] * z[cc] * v[i];
				}
		return out;
	};
	auto is_zero = [](const std::vector<Rat>& v) {
		return std::all_of(v.begin(), v.end(), [](const Rat& s) { return s == 0; });
	};
	auto add = [](std::vector<Rat> a, const std::vector<Rat>& b, int sgn = 1) {
		for (size_t i = 0; i < a.size(); ++i)
			a[i] += sgn * b[i];
		return a;
	};

	// (i) chi(partial f) g + chi(partial g) f = 0
	for (int f = 0; f < d2; ++f)
		for (int g = 0; g < d2; ++g) {
			auto v = add(chi_vec(pd(unit2(f)), unit2(g)), chi_vec(pd(unit2(g)), unit2(f)));
			if (!is_zero(v))
				fail(0, "(f,g)=(" + std::to_string(f) + "," + std::to_string(g) + ")");
		}
	// (ii) partial(chi(X) f) = [X, partial f]_2
	for (int x = 0; x < d1; ++x)
		for (int f = 0; f < d2; ++f) {
			auto lhs = pd(chi_vec(unit1(x), unit2(f)));
			auto rhs = br_vec(unit1(x), pd(unit2(f)));
			if (!is_zero(add(lhs, rhs, -1)))
				fail(1, "(X,f)=(" + std::to_string(x) + "," + std::to_string(f) + ")");
		}
	// (iii) chi([X,Y]_2) f + chi(Y)chi(X) f - chi(X)chi(Y) f + omega(X,Y,partial f) = 0
	for (int x = 0; x < d1; ++x)
		for (int y = 0; y < d1; ++y)
			for (int f = 0; f < d2; ++f) {
				auto v = chi_vec(br_vec(unit1(x), unit1(y)), unit2(f));
				v = add(v, chi_vec(unit1(y), chi_vec(unit1(x), unit2(f))));
				v = add(v, chi_vec(unit1(x), chi_vec(unit1(y), unit2(f))), -1);
				v = add(v, om_vec(unit1(x), unit1(y), pd(unit2(f))));
				if (!is_zero(v))
					fail(2, "(X,Y,f)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
					            std::to_string(f) + ")");
			}
	// (iv) [[X,Y],Z] + c.p. + partial(omega(X,Y,Z)) = 0
	for (int x = 0; x < d1; ++x)
		for (int y = x + 1; y < d1; ++y)
			for (int z = y + 1; z < d1; ++z) {
				auto v = br_vec(br_vec(unit1(x), unit1(y)), unit1(z));
				v = add(v, br_vec(br_vec(unit1(y), unit1(z)), unit1(x)));
				v = add(v, br_vec(br_vec(unit1(z), unit1(x)), unit1(y)));
				v = add(v, pd(q.omega_eval(x, y, z)));
				if (!is_zero(v))
					fail(3, "(X,Y,Z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
					            std::to_string(z) + ")");
			}
	// (v) alternating chi-action on omega plus bracket contractions
	for (int x = 0; x < d1; ++x)
		for (int y = x + 1; y < d1; ++y)
			for (int z = y + 1; z < d1; ++z)
				for (int w = z + 1; w < d1; ++w) {
					auto X = unit1(x), Y = unit1(y), Z = unit1(z), W = unit1(w);
					auto v = chi_vec(W, q.omega_eval(x, y, z));
					v = add(v, chi_vec(Z, q.omega_eval(x, y, w)), -1);
					v = add(v, chi_vec(Y, q.omega_eval(x, z, w)));
					v = add(v, chi_vec(X, q.omega_eval(y, z, w)), -1);
					v = add(v, om_vec(br_vec(X, Y), Z, W));
					v = add(v, om_vec(br_vec(X, Z), Y, W), -1);
					v = add(v, om_vec(br_vec(X, W), Y, Z));
					v = add(v, om_vec(br_vec(Y, Z), X, W));
					v = add(v, om_vec(br_vec(Y, W), X, Z), -1);
					v = add(v, om_vec(br_vec(Z, W), X, Y));
					if (!is_zero(v))
						fail(4, "(X,Y,Z,W)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
						            std::to_string(z) + "," + std::to_string(w) + ")");
				}
	return r;
}

Lie2Quadruple quadruple_of(const FormalSum& mu) {
	const GradedSpace& space = mu.space();
	for (auto& [d, k] : space.components())
		if (d != -1 && d != -2)
			throw std::invalid_argument("quadruple_of: space not concentrated in {-2,-1}");
	Lie2Quadruple q(space.dim(-2), space.dim(-1));
	if (const SymForm* l1 = mu.component(1))
		for (int j = 0; j < q.dim2; ++j) {
			auto col = to_coords(l1->eval_labels({Label{-2, j}}), -1, q.dim1);
			for (int i = 0; i < q.dim1; ++i)
				q.partial.at(i, j) = col[i];
		}
	if (const SymForm* l2 = mu.component(2)) {
		for (int x = 0; x < q.dim1; ++x)
			for (int j = 0; j < q.dim2; ++j) {
				auto col = to_coords(l2->eval_labels({Label{-2, j}, Label{-1, x}}), -2, q.dim2);
				for (int i = 0; i < q.dim2; ++i)
					q.chi[x].at(i, j) = col[i];
			}
		for (int x = 0; x < q.dim1; ++x)
			for (int y = x + 1; y < q.dim1; ++y)
				q.set_bracket(x, y,
				              to_coords(l2->eval_labels({Label{-1, x}, Label{-1, y}}), -1, q.dim1));
	}
	if (const SymForm* l3 = mu.component(3))
		for (int x = 0; x < q.dim1; ++x)
			for (int y = x + 1; y < q.dim1; ++y)
				for (int z = y + 1; z < q.dim1; ++z) {
					auto v = to_coords(l3->eval_labels({Label{-1, x}, Label{-1, y}, Label{-1, z}}),
					                   -2, q.dim2);
					if (std::any_of(v.begin(), v.end(), [](const Rat& s) { return s != 0; }))
						q.set_omega(x, y, z, v);
				}
	return q;
}

CrossedModuleReport check_crossed_module(const CrossedModuleLieAlg& cm) {
	CrossedModuleReport r;
	auto fail = [&](const std::string& ax, const std::string& w) {
		if (r.ok) {
			r.ok = false;
			r.failed_axiom = ax;
			r.witness = w;
		}
	};
	auto witness2 = [](int a, int b) {
		return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
	};
	if (auto w = cm.g.jacobi_witness())
		fail("g-jacobi", witness2((*w)[0], (*w)[1]) + "," + std::to_string((*w)[2]));
	if (auto w = cm.h.jacobi_witness())
		fail("h-jacobi", witness2((*w)[0], (*w)[1]) + "," + std::to_string((*w)[2]));
	const int dg = cm.g.dim, dh = cm.h.dim;
	auto unit = [](int n, int i) {
		std::vector<Rat> v(n, Rat(0));
		v[i] = 1;
		return v;
	};
	auto is_zero = [](const std::vector<Rat>& v) {
		return std::all_of(v.begin(), v.end(), [](const Rat& s) { return s == 0; });
	};
	auto sub = [](std::vector<Rat> a, const std::vector<Rat>& b) {
		for (size_t i = 0; i < a.size(); ++i)
			a[i] -= b[i];
		return a;
	};
	for (int i = 0; i < dg; ++i)
		for (int j = i + 1; j < dg; ++j) {
			auto lhs = mat_apply(cm.partial, cm.g.bracket(i, j));
			auto rhs = cm.h.bracket_vec(mat_apply(cm.partial, unit(dg, i)),
			                            mat_apply(cm.partial, unit(dg, j)));
			if (!is_zero(sub(lhs, rhs)))
				fail("partial-morphism", witness2(i, j));
		}
	for (int x = 0; x < dh; ++x)
		for (int i = 0; i < dg; ++i)
			for (int j = i + 1; j < dg; ++j) {
				auto lhs = mat_apply(cm.chi[x], cm.g.bracket(i, j));
				auto rhs = cm.g.bracket_vec(mat_apply(cm.chi[x], unit(dg, i)), unit(dg, j));
				auto rhs2 = cm.g.bracket_vec(unit(dg, i), mat_apply(cm.chi[x], unit(dg, j)));
				for (int m = 0; m < dg; ++m)
					rhs[m] += rhs2[m];
				if (!is_zero(sub(lhs, rhs)))
					fail("chi-derivation", "h" + std::to_string(x) + ",g" + witness2(i, j));
			}
	for (int x = 0; x < dh; ++x)
		for (int y = x + 1; y < dh; ++y) {
			QMat lhs(dg, dg);
			auto hb = cm.h.bracket(x, y);
			for (int a = 0; a < dh; ++a)
				if (hb[a] != 0)
					lhs = mat_add(lhs, mat_scale(hb[a], cm.chi[a]));
			QMat rhs = mat_add(mat_mul(cm.chi[x], cm.chi[y]),
			                   mat_scale(Rat(-1), mat_mul(cm.chi[y], cm.chi[x])));
			bool eq = true;
			for (int i = 0; i < dg; ++i)
				for (int j = 0; j < dg; ++j)
					if (lhs.at(i, j) != rhs.at(i, j))
						eq = false;
			if (!eq)
				fail("chi-action", witness2(x, y));
		}
	for (int x = 0; x < dh; ++x)
		for (int i = 0; i < dg; ++i) {
			auto lhs = mat_apply(cm.partial, mat_apply(cm.chi[x], unit(dg, i)));
			auto rhs = cm.h.bracket_vec(unit(dh, x), mat_apply(cm.partial, unit(dg, i)));
			if (!is_zero(sub(lhs, rhs)))
				fail("equivariance", "h" + std::to_string(x) + ",g" + std::to_string(i));
		}
	for (int i = 0; i < dg; ++i)
		for (int j = 0; j < dg; ++j) {
			auto pg = mat_apply(cm.partial, unit(dg, i));
			std::vector<Rat> lhs(dg, Rat(0));
			for (int a = 0; a < dh; ++a)
				if (pg[a] != 0) {
					auto part = mat_apply(cm.chi[a], unit(dg, j));
					for (int m = 0; m < dg; ++m)
						lhs[m] += pg[a] * part[m];
				}
			if (!is_zero(sub(lhs, cm.g.bracket(i, j))))
				fail("peiffer", witness2(i, j));
		}
	return r;
}

LInftyCandidate from_crossed_module(const CrossedModuleLieAlg& cm) {
	auto report = check_crossed_module(cm);
	if (!report.ok)
		throw std::invalid_argument("crossed module axiom '" + report.failed_axiom + "' fails at " +
		                            report.witness);
	Lie2Quadruple q(cm.g.dim, cm.h.dim);
	q.partial = cm.partial;
	q.chi = cm.chi;
	for (int x = 0; x < cm.h.dim; ++x)
		for (int y = x + 1; y < cm.h.dim; ++y)
			q.set_bracket(x, y, cm.h.bracket(x, y));
	return from_lie2_quadruple(q);
}

Vec Cohomology::project(const Vec& v) const {
	std::vector<Vec> system = boundaries;
	system.insert(system.end(), reps.begin(), reps.end());
	auto sol = solve_linear(system, v);
	if (!sol)
		throw std::invalid_argument("project: vector not in Im(l_1) + span(representatives)");
	Vec out;
	auto labels = h_space.basis();
	for (size_t i = 0; i < reps.size(); ++i)
		out.add((*sol)[boundaries.size() + i], labels[i]);
	return out;
}

Cohomology cohomology(const FormalSum& mu) {
	const SymForm* l1p = mu.component(1);
	SymForm l1 = l1p ? *l1p : SymForm(mu.space(), 1, 1);
	if (!rn_bracket(l1, l1).is_zero())
		throw std::invalid_argument("cohomology: l_1 does not square to zero");
	const GradedSpace& space = mu.space();
	LinearMap f = [&](const Label& l) { return l1.eval_labels({l}); };
	Cohomology h;
	std::map<int, int> hdims;
	std::map<int, std::vector<Vec>> reps_by_degree;
	for (auto& [d, dimd] : space.components()) {
		GradedSpace slice(std::map<int, int>{{d, dimd}});
		auto ker = map_kernel(slice, f);
		std::vector<Vec> bnd;
		if (space.dim(d - 1) > 0) {
			GradedSpace below(std::map<int, int>{{d - 1, space.dim(d - 1)}});
			bnd = map_image(below, f);
		}
		auto rep = complement(ker, bnd);
		h.boundaries.insert(h.boundaries.end(), bnd.begin(), bnd.end());
		if (!rep.empty()) {
			hdims[d] = int(rep.size());
			reps_by_degree[d] = std::move(rep);
		}
	}
	h.h_space = GradedSpace(hdims);
	for (auto& [d, reps] : reps_by_degree)
		for (auto& rep : reps)
			h.reps.push_back(rep);
	return h;
}

std::optional<Rat> quasi_chain_factor(const SymForm& l1, const SymForm& n) {
	auto compose_eval = [&](const SymForm& f, const SymForm& g, const Label& l) {
		Vec inner = g.eval_labels({l});
		Vec out;
		for (auto& [il, ic] : inner.coeffs()) {
			Vec v = f.eval_labels({il});
			v *= ic;
			out += v;
		}
		return out;
	};
	std::optional<Rat> lambda;
	for (const auto& l : l1.space().basis()) {
		Vec q = compose_eval(l1, n, l) + compose_eval(n, l1, l);
		Vec d = l1.eval_labels({l});
		if (d.is_zero()) {
			if (!q.is_zero())
				return std::nullopt;
			continue;
		}
		const auto& [dl, dc] = *d.coeffs().begin();
		Rat cand = q.coeff(dl) / dc;
		Vec scaled = d;
		scaled *= cand;
		if (!(scaled == q))
			return std::nullopt;
		if (lambda && *lambda != cand)
			return std::nullopt;
		lambda = cand;
	}
	if (!lambda)
		lambda = Rat(0);  // l_1 = 0: every factor works
	return lambda;
}

CheckReport cohomology_nijenhuis_check(const LInftyCandidate& c, const FormalSum& n,
                                       const FormalSum& k) {
	CheckReport r;
	const SymForm* l1p = c.mu.component(1);
	SymForm l1 = l1p ? *l1p : SymForm(c.mu.space(), 1, 1);
	const SymForm* n1 = n.component(1);
	const SymForm* k1 = k.component(1);
	SymForm n1f = n1 ? *n1 : SymForm(c.mu.space(), 1, 0);
	SymForm k1f = k1 ? *k1 : SymForm(c.mu.space(), 1, 0);
	if (!quasi_chain_factor(l1, n1f) || !quasi_chain_factor(l1, k1f)) {
		r.pass = false;
		r.detail = "unary parts are not quasi chain maps";
		return r;
	}
	Cohomology h = cohomology(c.mu);
	auto labels = h.h_space.basis();
	SymForm hn(h.h_space, 1, 0), hk(h.h_space, 1, 0), hl2(h.h_space, 2, 1);
	for (size_t i = 0; i < labels.size(); ++i) {
		hn.set_entry({labels[i]}, h.project(n1f.eval({h.reps[i]})));
		hk.set_entry({labels[i]}, h.project(k1f.eval({h.reps[i]})));
	}
	if (const SymForm* l2 = c.mu.component(2)) {
		auto tuples = canonical_tuples(h.h_space, 2);
		for (const auto& t : tuples) {
			size_t a = 0, b = 0;
			for (size_t i = 0; i < labels.size(); ++i) {
				if (labels[i] == t[0])
					a = i;
				if (labels[i] == t[1])
					b = i;
			}
			Vec v = l2->eval({h.reps[a], h.reps[b]});
			if (v.is_zero())
				continue;
			hl2.set_entry(t, h.project(v));
		}
	}
	FormalSum fn = FormalSum::from(hn), fk = FormalSum::from(hk), fl2 = FormalSum::from(hl2);
	FormalSum lhs = rn_bracket(fn, rn_bracket(fn, fl2));
	lhs -= rn_bracket(fk, fl2);
	if (!lhs.is_zero()) {
		r.pass = false;
		const auto& comp = lhs.components().begin()->second;
		r.witness = comp.entries().begin()->first;
		r.value = comp.entries().begin()->second;
		r.detail = "cohomology-level deformation identity fails";
	}
	return r;
}

}  // namespace lila
