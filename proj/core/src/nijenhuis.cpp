#include "lila/nijenhuis.hpp"

#include <algorithm>
#include <set>

namespace lila {

SymForm euler_map(const GradedSpace& space) {
	SymForm s(space, 1, 0);
	for (const auto& l : space.basis()) {
		Vec v;
		v.add(Rat(-l.degree), l);
		s.set_entry({l}, v);
	}
	return s;
}

FormalSum deform(const FormalSum& mu, const FormalSum& n, int times) {
	if (times < 0)
		throw std::invalid_argument("deform: negative iteration count");
	FormalSum cur = mu;
	for (int i = 0; i < times; ++i)
		cur = rn_bracket(n, cur);
	return cur;
}

WeakNijenhuisReport is_weak_nijenhuis(const FormalSum& n, const LInftyCandidate& mu) {
	if (n.degree() != 0)
		throw std::invalid_argument("Nijenhuis candidate must have map degree 0");
	WeakNijenhuisReport r;
	FormalSum twice = rn_bracket(n, rn_bracket(n, mu.mu));
	r.weak = rn_bracket(mu.mu, twice).is_zero();
	LInftyCandidate deformed = make_candidate(rn_bracket(n, mu.mu), mu.curved);
	r.deformed_report = check_structure(deformed);
	r.deformed_passes = r.deformed_report.pass;
	return r;
}

NijenhuisReport is_nijenhuis(const FormalSum& n, const LInftyCandidate& mu, const FormalSum& k) {
	if (n.degree() != 0 || k.degree() != 0)
		throw std::invalid_argument("Nijenhuis candidate and square must have map degree 0");
	NijenhuisReport r;
	FormalSum lhs = rn_bracket(n, rn_bracket(n, mu.mu));
	lhs -= rn_bracket(k, mu.mu);
	r.square_identity = lhs.is_zero();
	r.commutes = rn_bracket(n, k).is_zero();
	if (!r.square_identity)
		r.detail = "[N,[N,mu]] != [K,mu]";
	else if (!r.commutes)
		r.detail = "[N,K] != 0 (co-boundary only)";
	return r;
}

namespace {

// flatten a formal sum to (arity, tuple, target label) -> coefficient
std::map<std::tuple<int, std::vector<Label>, Label>, Rat> flatten(const FormalSum& f) {
	std::map<std::tuple<int, std::vector<Label>, Label>, Rat> out;
	for (auto& [a, comp] : f.components())
		for (auto& [t, v] : comp.entries())
			for (auto& [l, c] : v.coeffs())
				out[{a, t, l}] = c;
	return out;
}

}  // namespace

std::optional<FormalSum> find_affine_square(const FormalSum& n, const LInftyCandidate& mu) {
	const GradedSpace& space = n.space();
	FormalSum s = FormalSum::from(euler_map(space));
	FormalSum id = FormalSum::from(SymForm::identity_map(space));
	// [N,[N,mu]] = a [N,mu] + b [S,mu] + c [Id,mu] is linear in (a,b,c)
	FormalSum target = rn_bracket(n, rn_bracket(n, mu.mu));
	FormalSum cn = rn_bracket(n, mu.mu);
	FormalSum cs = rn_bracket(s, mu.mu);
	FormalSum ci = rn_bracket(id, mu.mu);
	auto ft = flatten(target), fn = flatten(cn), fs = flatten(cs), fi = flatten(ci);
	std::set<std::tuple<int, std::vector<Label>, Label>> keys;
	for (auto* m : {&ft, &fn, &fs, &fi})
		for (auto& [k, v] : *m)
			keys.insert(k);
	QMat a(int(keys.size()), 3);
	std::vector<Rat> b;
	int row = 0;
	for (auto& key : keys) {
		auto get = [&](auto& m) {
			auto it = m.find(key);
			return it == m.end() ? Rat(0) : it->second;
		};
		a.at(row, 0) = get(fn);
		a.at(row, 1) = get(fs);
		a.at(row, 2) = get(fi);
		b.push_back(get(ft));
		++row;
	}
	auto sol = solve(a, b);
	if (!sol)
		return std::nullopt;
	FormalSum k(space, 0);
	FormalSum nn = n;
	nn *= (*sol)[0];
	k += nn;
	s *= (*sol)[1];
	k += s;
	id *= (*sol)[2];
	k += id;
	auto rep = is_nijenhuis(n, mu, k);
	if (!rep.is_nijenhuis())
		return std::nullopt;
	return k;
}

Hierarchy hierarchy(const LInftyCandidate& mu, const FormalSum& n, const FormalSum& k, int depth) {
	if (depth < 1)
		throw std::invalid_argument("hierarchy: depth must be positive");
	Hierarchy h;
	h.levels.push_back(mu.mu);
	for (int i = 0; i < depth; ++i)
		h.levels.push_back(rn_bracket(n, h.levels.back()));
	for (int i = 0; i <= depth; ++i) {
		LInftyCandidate level = make_candidate(h.levels[i], mu.curved);
		if (!check_structure(level).pass) {
			h.all_structures = false;
			h.detail += "level " + std::to_string(i) + " is not a structure; ";
		}
		if (!is_nijenhuis(n, level, k).is_nijenhuis()) {
			h.all_nijenhuis = false;
			h.detail += "N not Nijenhuis at level " + std::to_string(i) + "; ";
		}
	}
	for (int i = 0; i <= depth; ++i)
		for (int j = i + 1; j <= depth; ++j)
			if (!rn_bracket(h.levels[i], h.levels[j]).is_zero()) {
				h.all_compatible = false;
				h.detail += "levels " + std::to_string(i) + "," + std::to_string(j) +
				            " incompatible; ";
			}
	for (int i = 0; i + 2 <= depth; ++i) {
		FormalSum adv = rn_bracket(k, h.levels[i]);
		adv -= h.levels[i + 2];
		if (!adv.is_zero()) {
			h.square_advances_two = false;
			h.detail += "[K,mu_" + std::to_string(i) + "] != mu_" + std::to_string(i + 2) + "; ";
		}
	}
	for (int i = 0; i <= depth; ++i) {
		FormalSum w = rn_bracket(h.levels[i], rn_bracket(k, rn_bracket(k, h.levels[i])));
		if (!w.is_zero()) {
			h.square_weak = false;
			h.detail += "K not weak at level " + std::to_string(i) + "; ";
		}
	}
	return h;
}

CompatibleNijenhuisReport compatible_nijenhuis(const FormalSum& n1, const FormalSum& k1,
                                               const FormalSum& n2, const FormalSum& k2,
                                               const LInftyCandidate& mu,
                                               const std::vector<std::pair<Rat, Rat>>& samples) {
	CompatibleNijenhuisReport r;
	FormalSum mixed = rn_bracket(n1, rn_bracket(n2, mu.mu));
	mixed += rn_bracket(n2, rn_bracket(n1, mu.mu));
	r.deform_anticommutes = mixed.is_zero();
	FormalSum cross = rn_bracket(n1, k2);
	cross += rn_bracket(n2, k1);
	r.square_anticommutes = cross.is_zero();
	r.rn_commute = rn_bracket(n1, n2).is_zero();
	if (r.compatible()) {
		for (auto& [a1, a2] : samples) {
			FormalSum nc = n1, nc2 = n2;
			nc *= a1;
			nc2 *= a2;
			nc += nc2;
			FormalSum kc = k1, kc2 = k2;
			kc *= a1 * a1;
			kc2 *= a2 * a2;
			kc += kc2;
			if (!is_nijenhuis(nc, mu, kc).is_nijenhuis())
				r.combination_ok = false;
		}
	}
	return r;
}

LieNTailReport lie_n_tail(const LInftyCandidate& mu, const std::vector<SymForm>& forms) {
	const GradedSpace& space = mu.mu.space();
	const auto& comps = space.components();
	if (comps.empty() || comps.rbegin()->first > -1)
		throw std::invalid_argument("lie_n_tail: space not concentrated in negative degrees");
	const int n = -comps.begin()->first;
	const int lo = (n + 3 + 1) / 2;  // ceil((n+3)/2)
	int prev = 0;
	for (const auto& f : forms) {
		if (f.degree() != 0)
			throw std::invalid_argument("lie_n_tail: forms must have map degree 0");
		if (f.arity() < lo || f.arity() > n + 1)
			throw std::invalid_argument("lie_n_tail: arity " + std::to_string(f.arity()) +
			                            " outside band [" + std::to_string(lo) + "," +
			                            std::to_string(n + 1) + "]");
		if (f.arity() < prev)
			throw std::invalid_argument("lie_n_tail: arities must be nondecreasing");
		prev = f.arity();
	}
	LieNTailReport r;
	FormalSum sum(space, 0);
	for (const auto& f : forms)
		sum.add_component(f);
	FormalSum nf = FormalSum::from(euler_map(space));
	nf += sum;
	FormalSum kf = FormalSum::from(euler_map(space));
	FormalSum twice = sum;
	twice *= Rat(2);
	kf += twice;
	r.nijenhuis = is_nijenhuis(nf, mu, kf);
	// the vanishing statements the construction rests on
	for (const auto& f : forms) {
		int ki = f.arity();
		for (auto& [m, lm] : mu.mu.components())
			if (m >= n - ki + 3 && !rn_bracket(f, lm).is_zero()) {
				r.proof_identities = false;
				r.detail += "[N_" + std::to_string(ki) + ", l_" + std::to_string(m) + "] != 0; ";
			}
	}
	for (const auto& f : forms)
		for (const auto& g : forms) {
			if (!rn_bracket(FormalSum::from(f), rn_bracket(FormalSum::from(g), mu.mu)).is_zero()) {
				r.proof_identities = false;
				r.detail += "[N,[N,mu]] tail contribution nonzero; ";
			}
			if (!rn_bracket(f, g).is_zero()) {
				r.proof_identities = false;
				r.detail += "[N_i,N_j] != 0; ";
			}
		}
	return r;
}

bool alpha_condition(const LInftyCandidate& mu, const SymForm& alpha) {
	const GradedSpace& space = mu.mu.space();
	for (auto& [d, k] : space.components())
		if (d != -1 && d != -2)
			throw std::invalid_argument("alpha_condition: space not concentrated in {-2,-1}");
	if (alpha.arity() != 2 || alpha.degree() != 0)
		throw std::invalid_argument("alpha_condition: need a 2-form of degree 0");
	const SymForm* l1 = mu.mu.component(1);
	if (!l1)
		return true;
	auto xs = space.basis(-1);
	for (size_t a = 0; a < xs.size(); ++a)
		for (size_t b = a + 1; b < xs.size(); ++b)
			for (size_t c = b + 1; c < xs.size(); ++c) {
				auto term = [&](const Label& x, const Label& y, const Label& z) {
					Vec inner = alpha.eval_labels({x, y});
					Vec img;
					for (auto& [l, co] : inner.coeffs()) {
						Vec v = l1->eval_labels({l});
						v *= co;
						img += v;
					}
					return alpha.eval_prefix(img, std::span<const Label>(&z, 1));
				};
				Vec total = term(xs[a], xs[b], xs[c]);
				total += term(xs[b], xs[c], xs[a]);
				total += term(xs[c], xs[a], xs[b]);
				if (!total.is_zero())
					return false;
			}
	return true;
}

Lie2Quadruple deformed_quadruple(const Lie2Quadruple& q, const SymForm& alpha) {
	LInftyCandidate mu = from_lie2_quadruple(q);
	const SymForm* l2 = mu.mu.component(2);
	SymForm l2f = l2 ? *l2 : SymForm(q.space(), 2, 1);
	Lie2Quadruple out(q.dim2, q.dim1);
	out.partial = q.partial;
	// bracket' = bracket + partial(alpha)
	for (int x = 0; x < q.dim1; ++x)
		for (int y = x + 1; y < q.dim1; ++y) {
			Vec a = alpha.eval_labels({Label{-1, x}, Label{-1, y}});
			std::vector<Rat> acoords(q.dim2, Rat(0));
			for (auto& [l, c] : a.coeffs())
				acoords[l.index] = c;
			auto pd = mat_apply(q.partial, acoords);
			std::vector<Rat> v = q.bracket[x][y];
			for (int m = 0; m < q.dim1; ++m)
				v[m] += pd[m];
			out.set_bracket(x, y, v);
		}
	// chi'(X) f = chi(X) f - alpha(partial f, X)
	for (int x = 0; x < q.dim1; ++x) {
		out.chi[x] = q.chi[x];
		for (int j = 0; j < q.dim2; ++j) {
			std::vector<Rat> f(q.dim2, Rat(0));
			f[j] = 1;
			auto pf = mat_apply(q.partial, f);
			Vec pfv;
			for (int i = 0; i < q.dim1; ++i)
				pfv.add(pf[i], Label{-1, i});
			Label xl{-1, x};
			Vec corr = alpha.eval_prefix(pfv, std::span<const Label>(&xl, 1));
			for (auto& [l, c] : corr.coeffs())
				out.chi[x].at(l.index, j) -= c;
		}
	}
	// omega' = omega + d(alpha)
	SymForm dalpha = ce_differential(alpha, l2f);
	for (int x = 0; x < q.dim1; ++x)
		for (int y = x + 1; y < q.dim1; ++y)
			for (int z = y + 1; z < q.dim1; ++z) {
				std::vector<Rat> v = q.omega_eval(x, y, z);
				Vec d = dalpha.eval_labels({Label{-1, x}, Label{-1, y}, Label{-1, z}});
				for (auto& [l, c] : d.coeffs())
					v[l.index] += c;
				if (std::any_of(v.begin(), v.end(), [](const Rat& s) { return s != 0; }))
					out.set_omega(x, y, z, v);
			}
	return out;
}

namespace {

bool in_subspace(const Vec& v, const std::vector<Vec>& basis) {
	return v.is_zero() || in_span(basis, v);
}

}  // namespace

ChiZeroSplit split_chi_zero(const LInftyCandidate& mu) {
	const GradedSpace& space = mu.mu.space();
	Lie2Quadruple q = quadruple_of(mu.mu);
	for (int x = 0; x < q.dim1; ++x)
		for (int i = 0; i < q.dim2; ++i)
			for (int j = 0; j < q.dim2; ++j)
				if (q.chi[x].at(i, j) != 0)
					throw std::invalid_argument("split_chi_zero: chi is not zero");

	ChiZeroSplit out;
	const SymForm* l1p = mu.mu.component(1);
	SymForm l1 = l1p ? *l1p : SymForm(space, 1, 1);
	GradedSpace slice2(std::map<int, int>{{-2, space.dim(-2)}});
	LinearMap pd = [&](const Label& l) { return l1.eval_labels({l}); };
	auto ker = map_kernel(slice2, pd);     // E_-2^s
	auto image = map_image(slice2, pd);    // E_-1^t
	std::vector<Vec> units2, units1;
	for (const auto& l : space.basis(-2))
		units2.push_back(Vec::unit(l));
	for (const auto& l : space.basis(-1))
		units1.push_back(Vec::unit(l));
	auto trivial2 = complement(units2, ker);    // E_-2^t
	auto string1 = complement(units1, image);   // E_-1^s
	out.string_m2 = ker;
	out.string_m1 = string1;
	out.trivial_m2 = trivial2;
	out.trivial_m1 = image;

	// alpha with partial(alpha(X,Y)) = -pr_{Im partial}([X,Y]_2), valued in
	// the chosen complement of Ker(partial)
	std::vector<Vec> pd_trivial2;
	for (const auto& t : trivial2) {
		Vec v;
		for (auto& [l, c] : t.coeffs()) {
			Vec im = l1.eval_labels({l});
			im *= c;
			v += im;
		}
		pd_trivial2.push_back(v);
	}
	SymForm alpha(space, 2, 0);
	const SymForm* l2 = mu.mu.component(2);
	auto xs = space.basis(-1);
	for (size_t a = 0; a < xs.size(); ++a)
		for (size_t b = a + 1; b < xs.size(); ++b) {
			Vec br = l2 ? l2->eval_labels({xs[a], xs[b]}) : Vec();
			if (br.is_zero())
				continue;
			// decompose br over (partial of trivial2 basis) + string1 basis
			std::vector<Vec> system = pd_trivial2;
			system.insert(system.end(), string1.begin(), string1.end());
			auto sol = solve_linear(system, br);
			if (!sol)
				throw std::invalid_argument("split_chi_zero: bracket not decomposable");
			Vec av;
			for (size_t i = 0; i < pd_trivial2.size(); ++i) {
				Vec part = trivial2[i];
				part *= -(*sol)[i];
				av += part;
			}
			alpha.set_entry({xs[a], xs[b]}, av);
		}
	out.alpha = alpha;

	FormalSum nf = FormalSum::from(euler_map(space));
	nf += FormalSum::from(alpha);
	out.deformed = rn_bracket(nf, mu.mu);

	// verify: both summands closed under the deformed components, cross
	// terms vanish, and the two parts are honest string / trivial pieces
	out.verified = true;
	auto check = [&](bool ok, const std::string& what) {
		if (!ok) {
			out.verified = false;
			out.detail += what + "; ";
		}
	};
	LInftyCandidate defc = make_candidate(out.deformed);
	check(check_structure(defc).pass, "deformed sum is not a structure");
	const SymForm* d1 = out.deformed.component(1);
	const SymForm* d2 = out.deformed.component(2);
	const SymForm* d3 = out.deformed.component(3);
	auto eval1 = [&](const Vec& v) { return d1 ? d1->eval({v}) : Vec(); };
	auto eval2 = [&](const Vec& a, const Vec& b) { return d2 ? d2->eval({a, b}) : Vec(); };
	auto eval3 = [&](const Vec& a, const Vec& b, const Vec& c) {
		return d3 ? d3->eval({a, b, c}) : Vec();
	};
	for (const auto& f : out.string_m2)
		check(eval1(f).is_zero(), "l_1' nonzero on the string part");
	for (const auto& f : out.trivial_m2)
		check(in_subspace(eval1(f), out.trivial_m1), "l_1' leaves the trivial part");
	for (const auto& x : out.string_m1)
		for (const auto& y : out.string_m1)
			check(in_subspace(eval2(x, y), out.string_m1), "l_2' leaves the string part");
	for (const auto& x : out.string_m1)
		for (const auto& y : out.trivial_m1)
			check(eval2(x, y).is_zero(), "l_2' cross term nonzero");
	for (const auto& x : out.trivial_m1)
		for (const auto& y : out.trivial_m1)
			check(eval2(x, y).is_zero(), "l_2' nonzero on the trivial part");
	for (const auto& f : out.string_m2)
		for (const auto& x : out.string_m1)
			check(in_subspace(eval2(Vec(f), x), out.string_m2), "chi' nonzero on string part");
	for (const auto& x : out.string_m1)
		for (const auto& y : out.string_m1)
			for (const auto& z : out.string_m1)
				check(in_subspace(eval3(x, y, z), out.string_m2), "l_3' leaves the string part");
	for (const auto& x : out.trivial_m1)
		for (const auto& y : units1)
			for (const auto& z : units1)
				check(eval3(x, y, z).is_zero(), "l_3' sees the trivial part");
	// direct sum: the parts together span everything
	std::vector<Vec> all2 = out.string_m2;
	all2.insert(all2.end(), out.trivial_m2.begin(), out.trivial_m2.end());
	std::vector<Vec> all1 = out.string_m1;
	all1.insert(all1.end(), out.trivial_m1.begin(), out.trivial_m1.end());
	check(int(all2.size()) == space.dim(-2), "degree -2 parts do not sum up");
	check(int(all1.size()) == space.dim(-1), "degree -1 parts do not sum up");
	for (const auto& u : units2)
		check(in_subspace(u, all2), "degree -2 direct sum incomplete");
	for (const auto& u : units1)
		check(in_subspace(u, all1), "degree -1 direct sum incomplete");
	// trivial part: l_1' restricted is a bijection onto its complement part
	{
		std::vector<Vec> images;
		for (const auto& f : out.trivial_m2)
			images.push_back(eval1(f));
		check(images.size() == out.trivial_m1.size(), "trivial rank mismatch");
		for (const auto& im : out.trivial_m1)
			check(in_subspace(im, images), "l_1' not onto the trivial degree -1 part");
	}
	return out;
}

}  // namespace lila
