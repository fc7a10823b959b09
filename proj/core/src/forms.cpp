#include "lila/forms.hpp"

#include <algorithm>
#include <set>

namespace lila {

int koszul_sign(std::vector<int> perm, const std::vector<int>& degrees) {
	if (perm.size() != degrees.size())
		throw std::invalid_argument("koszul_sign: permutation/degree length mismatch");
	int sign = 1;
	// bubble perm back to the identity; each adjacent swap exchanges the two
	// carried factors
	for (size_t i = 1; i < perm.size(); ++i)
		for (size_t j = i; j > 0 && perm[j - 1] > perm[j]; --j) {
			if ((degrees[perm[j - 1]] & 1) && (degrees[perm[j]] & 1))
				sign = -sign;
			std::swap(perm[j - 1], perm[j]);
		}
	return sign;
}

std::vector<std::vector<int>> unshuffles(int i, int j) {
	if (i < 0 || j < 0)
		throw std::invalid_argument("unshuffles: negative block size");
	int n = i + j;
	std::vector<std::vector<int>> out;
	std::vector<int> pick(i);
	// choose the i positions routed to the first block, in increasing order
	std::function<void(int, int)> rec = [&](int from, int chosen) {
		if (chosen == i) {
			std::vector<int> perm(pick.begin(), pick.end());
			for (int p = 0; p < n; ++p)
				if (!std::binary_search(pick.begin(), pick.end(), p))
					perm.push_back(p);
			out.push_back(std::move(perm));
			return;
		}
		for (int p = from; p <= n - (i - chosen); ++p) {
			pick[chosen] = p;
			rec(p + 1, chosen + 1);
		}
	};
	rec(0, 0);
	return out;
}

Canonicalized canonicalize(std::vector<Label> t) {
	Canonicalized r;
	for (size_t i = 1; i < t.size(); ++i)
		for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
			if ((t[j].degree & 1) && (t[j - 1].degree & 1))
				r.sign = -r.sign;
			std::swap(t[j - 1], t[j]);
		}
	for (size_t i = 1; i < t.size(); ++i)
		if (t[i] == t[i - 1] && (t[i].degree & 1)) {
			r.zero = true;
			return r;
		}
	r.tuple = std::move(t);
	return r;
}

bool is_canonical(const std::vector<Label>& t) {
	for (size_t i = 1; i < t.size(); ++i) {
		if (t[i] < t[i - 1])
			return false;
		if (t[i] == t[i - 1] && (t[i].degree & 1))
			return false;
	}
	return true;
}

int tuple_degree(const std::vector<Label>& t) {
	int d = 0;
	for (auto& l : t)
		d += l.degree;
	return d;
}

std::string tuple_str(const std::vector<Label>& t) {
	std::string s = "[";
	for (size_t i = 0; i < t.size(); ++i)
		s += (i ? "," : "") + label_str(t[i]);
	return s + "]";
}

namespace {

// strict_parity: labels whose degree has this parity may not repeat
// (1 = symmetric convention, 0 = skew convention).
void enumerate_tuples(const GradedSpace& space, int arity, int strict_parity,
                      const std::function<bool(const std::vector<Label>&)>& keep,
                      std::vector<std::vector<Label>>& out) {
	auto labels = space.basis();
	std::vector<Label> cur(arity);
	std::function<void(int, size_t)> rec = [&](int pos, size_t from) {
		if (pos == arity) {
			if (!keep || keep(cur))
				out.push_back(cur);
			return;
		}
		for (size_t i = from; i < labels.size(); ++i) {
			cur[pos] = labels[i];
			bool strict = (labels[i].degree & 1) == strict_parity;
			rec(pos + 1, strict ? i + 1 : i);
		}
	};
	rec(0, 0);
}

}  // namespace

std::vector<std::vector<Label>> canonical_tuples(
    const GradedSpace& space, int arity,
    const std::function<bool(const std::vector<Label>&)>& keep) {
	std::vector<std::vector<Label>> out;
	enumerate_tuples(space, arity, 1, keep, out);
	return out;
}

SymForm::SymForm(GradedSpace space, int arity, int degree)
    : space_(std::move(space)), arity_(arity), degree_(degree) {
	if (arity < 0)
		throw std::invalid_argument("negative arity");
}

SymForm SymForm::constant(const GradedSpace& space, const Vec& value) {
	auto d = value.homogeneous_degree();
	SymForm f(space, 0, d.value_or(0));
	if (!d && !value.is_zero())
		throw std::invalid_argument("arity-0 form must be homogeneous");
	if (d)
		f.set_entry({}, value);
	return f;
}

SymForm SymForm::identity_map(const GradedSpace& space) {
	SymForm f(space, 1, 0);
	for (const auto& l : space.basis())
		f.set_entry({l}, Vec::unit(l));
	return f;
}

void SymForm::set_entry(const std::vector<Label>& tuple, Vec value) {
	if (int(tuple.size()) != arity_)
		throw std::invalid_argument("entry arity mismatch");
	if (!is_canonical(tuple))
		throw std::invalid_argument("entry tuple not canonical: " + tuple_str(tuple));
	for (auto& l : tuple)
		if (!space_.has_label(l))
			throw std::invalid_argument("label outside space: " + label_str(l));
	if (value.is_zero()) {
		entries_.erase(tuple);
		return;
	}
	if (!value.is_homogeneous(tuple_degree(tuple) + degree_))
		throw std::invalid_argument("entry value not homogeneous of tuple degree + map degree at " +
		                            tuple_str(tuple));
	for (auto& [l, c] : value.coeffs())
		if (!space_.has_label(l))
			throw std::invalid_argument("value label outside space: " + label_str(l));
	entries_[tuple] = std::move(value);
}

void SymForm::add_entry(const std::vector<Label>& tuple, const Vec& value) {
	Vec v = entry(tuple);
	v += value;
	set_entry(tuple, std::move(v));
}

Vec SymForm::entry(const std::vector<Label>& canonical_tuple) const {
	auto it = entries_.find(canonical_tuple);
	return it == entries_.end() ? Vec() : it->second;
}

Vec SymForm::eval_labels(const std::vector<Label>& tuple) const {
	if (int(tuple.size()) != arity_)
		throw std::invalid_argument("eval arity mismatch");
	auto c = canonicalize(tuple);
	if (c.zero)
		return Vec();
	Vec v = entry(c.tuple);
	if (c.sign < 0)
		v *= Rat(-1);
	return v;
}

Vec SymForm::eval(const std::vector<Vec>& args) const {
	if (int(args.size()) != arity_)
		throw std::invalid_argument("eval arity mismatch");
	Vec out;
	std::vector<Label> chosen(arity_);
	std::function<void(int, Rat)> rec = [&](int pos, Rat coeff) {
		if (pos == arity_) {
			Vec v = eval_labels(chosen);
			v *= coeff;
			out += v;
			return;
		}
		for (auto& [l, c] : args[pos].coeffs()) {
			chosen[pos] = l;
			rec(pos + 1, coeff * c);
		}
	};
	rec(0, Rat(1));
	return out;
}

Vec SymForm::eval_prefix(const Vec& first, std::span<const Label> rest) const {
	Vec out;
	std::vector<Label> t(arity_);
	std::copy(rest.begin(), rest.end(), t.begin() + 1);
	for (auto& [l, c] : first.coeffs()) {
		t[0] = l;
		Vec v = eval_labels(t);
		v *= c;
		out += v;
	}
	return out;
}

SymForm& SymForm::operator+=(const SymForm& o) {
	if (o.is_zero())
		return *this;
	if (space_ != o.space_ || arity_ != o.arity_ || degree_ != o.degree_)
		throw std::invalid_argument("form shape mismatch in +=");
	for (auto& [t, v] : o.entries_)
		add_entry(t, v);
	return *this;
}

SymForm& SymForm::operator-=(const SymForm& o) {
	SymForm neg = o;
	neg *= Rat(-1);
	return *this += neg;
}

SymForm& SymForm::operator*=(const Rat& s) {
	if (s == 0) {
		entries_.clear();
		return *this;
	}
	for (auto& [t, v] : entries_)
		v *= s;
	return *this;
}

bool SymForm::operator==(const SymForm& o) const {
	return space_ == o.space_ && arity_ == o.arity_ && degree_ == o.degree_ &&
	       entries_ == o.entries_;
}

void ScalarForm::set_entry(const std::vector<Label>& tuple, const Rat& value) {
	if (int(tuple.size()) != arity_ || !is_canonical(tuple))
		throw std::invalid_argument("scalar form entry tuple invalid");
	if (value == 0)
		entries_.erase(tuple);
	else
		entries_[tuple] = value;
}

void ScalarForm::add_entry(const std::vector<Label>& tuple, const Rat& value) {
	set_entry(tuple, eval_labels(tuple) + value);
}

Rat ScalarForm::eval_labels(const std::vector<Label>& tuple) const {
	auto c = canonicalize(tuple);
	if (c.zero)
		return Rat(0);
	auto it = entries_.find(c.tuple);
	if (it == entries_.end())
		return Rat(0);
	return c.sign < 0 ? Rat(-it->second) : it->second;
}

Rat ScalarForm::eval_prefix(const Vec& first, std::span<const Label> rest) const {
	Rat out(0);
	std::vector<Label> t(arity_);
	std::copy(rest.begin(), rest.end(), t.begin() + 1);
	for (auto& [l, c] : first.coeffs()) {
		t[0] = l;
		out += c * eval_labels(t);
	}
	return out;
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& o) {
	for (auto& [t, v] : o.entries_)
		add_entry(t, v);
	return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& o) {
	for (auto& [t, v] : o.entries_)
		add_entry(t, -v);
	return *this;
}

ScalarForm& ScalarForm::operator*=(const Rat& s) {
	if (s == 0) {
		entries_.clear();
		return *this;
	}
	for (auto& [t, v] : entries_)
		v *= s;
	return *this;
}

bool ScalarForm::operator==(const ScalarForm& o) const {
	return arity_ == o.arity_ && entries_ == o.entries_;
}

std::optional<int> arity_window(const GradedSpace& space, int map_degree) {
	const auto& comps = space.components();
	if (comps.empty())
		return 0;
	int lo = comps.begin()->first, hi = comps.rbegin()->first;
	if (hi <= -1)
		return std::max(0, -lo + map_degree);
	if (lo >= 1)
		return std::max(0, hi - map_degree);
	return std::nullopt;
}

FormalSum::FormalSum(GradedSpace space, int degree, std::optional<int> cap)
    : space_(std::move(space)), degree_(degree), cap_(cap) {}

FormalSum FormalSum::from(const SymForm& f, std::optional<int> cap) {
	FormalSum s(f.space(), f.degree(), cap);
	s.add_component(f);
	return s;
}

const SymForm* FormalSum::component(int arity) const {
	auto it = comps_.find(arity);
	return it == comps_.end() ? nullptr : &it->second;
}

void FormalSum::add_component(const SymForm& f) {
	if (f.is_zero())
		return;
	if (f.space() != space_)
		throw std::invalid_argument("component space mismatch");
	if (f.degree() != degree_)
		throw std::invalid_argument("component map-degree mismatch");
	if (cap_ && f.arity() > *cap_)
		throw window_error(f.arity(), "nonzero component of arity " + std::to_string(f.arity()) +
		                                  " exceeds cap " + std::to_string(*cap_));
	auto it = comps_.find(f.arity());
	if (it == comps_.end()) {
		comps_.emplace(f.arity(), f);
	} else {
		it->second += f;
		if (it->second.is_zero())
			comps_.erase(it);
	}
}

FormalSum FormalSum::with_cap(std::optional<int> cap) const {
	FormalSum out(space_, degree_, cap);
	for (auto& [a, f] : comps_)
		out.add_component(f);
	return out;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
	if (o.is_zero())
		return *this;
	if (is_zero() && comps_.empty()) {
		space_ = o.space_;
		degree_ = o.degree_;
	}
	for (auto& [a, f] : o.comps_)
		add_component(f);
	return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
	FormalSum neg = o;
	neg *= Rat(-1);
	return *this += neg;
}

FormalSum& FormalSum::operator*=(const Rat& s) {
	if (s == 0) {
		comps_.clear();
		return *this;
	}
	for (auto& [a, f] : comps_)
		f *= s;
	return *this;
}

bool FormalSum::operator==(const FormalSum& o) const {
	return space_ == o.space_ && degree_ == o.degree_ && comps_ == o.comps_;
}

namespace {

// Candidate result tuples of i_K L, from the supports of K and L: the merge
// of a K-entry tuple with an L-entry tuple minus one slot hit by the K value.
std::set<std::vector<Label>> insertion_candidates(const SymForm& k, const SymForm& l) {
	std::set<std::vector<Label>> out;
	for (auto& [u, v] : k.entries()) {
		for (auto& [w, lv] : l.entries()) {
			for (size_t q = 0; q < w.size(); ++q) {
				if (q > 0 && w[q] == w[q - 1])
					continue;
				if (v.coeff(w[q]) == 0)
					continue;
				std::vector<Label> t = u;
				for (size_t p = 0; p < w.size(); ++p)
					if (p != q)
						t.push_back(w[p]);
				auto c = canonicalize(std::move(t));
				if (!c.zero)
					out.insert(std::move(c.tuple));
			}
		}
	}
	return out;
}

}  // namespace

SymForm insert(const SymForm& k, const SymForm& l) {
	if (k.space() != l.space())
		throw std::invalid_argument("insert: space mismatch");
	const int rdeg = k.degree() + l.degree();
	if (l.arity() == 0)
		return SymForm(k.space(), std::max(k.arity() - 1, 0), rdeg);
	if (k.arity() == 0) {
		SymForm out(k.space(), l.arity() - 1, rdeg);
		Vec x = k.entry({});
		if (x.is_zero())
			return out;
		std::set<std::vector<Label>> cands;
		for (auto& [w, lv] : l.entries())
			for (size_t q = 0; q < w.size(); ++q) {
				if (q > 0 && w[q] == w[q - 1])
					continue;
				if (x.coeff(w[q]) == 0)
					continue;
				std::vector<Label> t;
				for (size_t p = 0; p < w.size(); ++p)
					if (p != q)
						t.push_back(w[p]);
				cands.insert(std::move(t));
			}
		for (const auto& t : cands)
			out.set_entry(t, l.eval_prefix(x, t));
		return out;
	}

	const int ka = k.arity(), la = l.arity();
	SymForm out(k.space(), ka + la - 1, rdeg);
	auto shuffles = unshuffles(ka, la - 1);
	for (const auto& t : insertion_candidates(k, l)) {
		std::vector<int> degs(t.size());
		for (size_t i = 0; i < t.size(); ++i)
			degs[i] = t[i].degree;
		Vec acc;
		std::vector<Label> head(ka), tail(la - 1);
		for (const auto& perm : shuffles) {
			for (int i = 0; i < ka; ++i)
				head[i] = t[perm[i]];
			Vec inner = k.eval_labels(head);
			if (inner.is_zero())
				continue;
			for (int i = 0; i < la - 1; ++i)
				tail[i] = t[perm[ka + i]];
			Vec term = l.eval_prefix(inner, tail);
			if (term.is_zero())
				continue;
			term *= Rat(koszul_sign(perm, degs));
			acc += term;
		}
		out.set_entry(t, std::move(acc));
	}
	return out;
}

FormalSum insert(const FormalSum& k, const FormalSum& l) {
	if (k.space() != l.space())
		throw std::invalid_argument("insert: space mismatch");
	FormalSum out(k.space(), k.degree() + l.degree());
	for (auto& [ka, kf] : k.components())
		for (auto& [la, lf] : l.components())
			out.add_component(insert(kf, lf));
	return out;
}

ScalarForm insert_scalar(const SymForm& k, const ScalarForm& l) {
	if (l.arity() == 0)
		return ScalarForm(l.space(), 0);
	if (k.arity() == 0) {
		ScalarForm out(l.space(), l.arity() - 1);
		Vec x = k.entry({});
		std::set<std::vector<Label>> cands;
		for (auto& [w, lv] : l.entries())
			for (size_t q = 0; q < w.size(); ++q) {
				if (q > 0 && w[q] == w[q - 1])
					continue;
				if (x.coeff(w[q]) == 0)
					continue;
				std::vector<Label> t;
				for (size_t p = 0; p < w.size(); ++p)
					if (p != q)
						t.push_back(w[p]);
				cands.insert(std::move(t));
			}
		for (const auto& t : cands)
			out.set_entry(t, l.eval_prefix(x, t));
		return out;
	}
	const int ka = k.arity(), la = l.arity();
	ScalarForm out(l.space(), ka + la - 1);
	auto shuffles = unshuffles(ka, la - 1);
	std::set<std::vector<Label>> cands;
	for (auto& [u, v] : k.entries())
		for (auto& [w, lv] : l.entries())
			for (size_t q = 0; q < w.size(); ++q) {
				if (v.coeff(w[q]) == 0)
					continue;
				std::vector<Label> t = u;
				for (size_t p = 0; p < w.size(); ++p)
					if (p != q)
						t.push_back(w[p]);
				auto c = canonicalize(std::move(t));
				if (!c.zero)
					cands.insert(std::move(c.tuple));
			}
	for (const auto& t : cands) {
		std::vector<int> degs(t.size());
		for (size_t i = 0; i < t.size(); ++i)
			degs[i] = t[i].degree;
		Rat acc(0);
		std::vector<Label> head(ka), tail(la - 1);
		for (const auto& perm : shuffles) {
			for (int i = 0; i < ka; ++i)
				head[i] = t[perm[i]];
			Vec inner = k.eval_labels(head);
			if (inner.is_zero())
				continue;
			for (int i = 0; i < la - 1; ++i)
				tail[i] = t[perm[ka + i]];
			acc += Rat(koszul_sign(perm, degs)) * l.eval_prefix(inner, tail);
		}
		out.set_entry(t, acc);
	}
	return out;
}

ScalarForm insert_scalar(const FormalSum& k, const ScalarForm& l) {
	// derivation checks only ever feed single-arity sums here
	if (k.components().size() > 1)
		throw std::invalid_argument("insert_scalar: multi-arity formal sums unsupported");
	if (k.components().empty())
		return ScalarForm(l.space(), std::max(l.arity() - 1, 0));
	return insert_scalar(k.components().begin()->second, l);
}

FormalSum rn_bracket(const FormalSum& k, const FormalSum& l) {
	FormalSum out = insert(k, l);
	FormalSum lk = insert(l, k);
	if ((k.degree() & 1) && (l.degree() & 1))
		out += lk;
	else
		out -= lk;
	return out;
}

FormalSum rn_bracket(const SymForm& k, const SymForm& l) {
	return rn_bracket(FormalSum::from(k), FormalSum::from(l));
}

Vec derived_bracket_eval(const SymForm& k, const std::vector<Vec>& args) {
	FormalSum cur = FormalSum::from(k);
	if (cur.is_zero())
		return Vec();
	for (const auto& x : args) {
		FormalSum xf = FormalSum::from(SymForm::constant(k.space(), x));
		cur = rn_bracket(xf, cur);
	}
	const SymForm* c = cur.component(0);
	return c ? c->entry({}) : Vec();
}

SkewForm::SkewForm(GradedSpace space, int arity, int degree)
    : space_(std::move(space)), arity_(arity), degree_(degree) {}

namespace {

// chi(sigma)-canonicalization: Koszul sign times permutation parity; a
// repeated even-degree label kills the tuple.
struct SkewCanonicalized {
	bool zero = false;
	int sign = 1;
	std::vector<Label> tuple;
};

SkewCanonicalized skew_canonicalize(std::vector<Label> t) {
	SkewCanonicalized r;
	for (size_t i = 1; i < t.size(); ++i)
		for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
			// chi picks up the Koszul factor times the transposition parity
			r.sign *= ((t[j].degree & 1) && (t[j - 1].degree & 1)) ? 1 : -1;
			std::swap(t[j - 1], t[j]);
		}
	for (size_t i = 1; i < t.size(); ++i)
		if (t[i] == t[i - 1] && !(t[i].degree & 1)) {
			r.zero = true;
			return r;
		}
	r.tuple = std::move(t);
	return r;
}

bool is_skew_canonical(const std::vector<Label>& t) {
	for (size_t i = 1; i < t.size(); ++i) {
		if (t[i] < t[i - 1])
			return false;
		if (t[i] == t[i - 1] && !(t[i].degree & 1))
			return false;
	}
	return true;
}

}  // namespace

void SkewForm::set_entry(const std::vector<Label>& tuple, Vec value) {
	if (int(tuple.size()) != arity_)
		throw std::invalid_argument("skew entry arity mismatch");
	if (!is_skew_canonical(tuple))
		throw std::invalid_argument("skew entry tuple not canonical");
	if (value.is_zero()) {
		entries_.erase(tuple);
		return;
	}
	if (!value.is_homogeneous(tuple_degree(tuple) + degree_))
		throw std::invalid_argument("skew entry value degree mismatch");
	entries_[tuple] = std::move(value);
}

Vec SkewForm::eval_labels(const std::vector<Label>& tuple) const {
	if (int(tuple.size()) != arity_)
		throw std::invalid_argument("skew eval arity mismatch");
	auto c = skew_canonicalize(tuple);
	if (c.zero)
		return Vec();
	auto it = entries_.find(c.tuple);
	if (it == entries_.end())
		return Vec();
	Vec v = it->second;
	if (c.sign < 0)
		v *= Rat(-1);
	return v;
}

bool SkewForm::operator==(const SkewForm& o) const {
	return space_ == o.space_ && arity_ == o.arity_ && degree_ == o.degree_ &&
	       entries_ == o.entries_;
}

namespace {

Vec shift_vec(const Vec& v, int p) {
	Vec out;
	for (auto& [l, c] : v.coeffs())
		out.add(c, shift(l, p));
	return out;
}

int decalage_sign(const std::vector<Label>& e_tuple) {
	// (-1)^{(n-1)|X_1| + (n-2)|X_2| + ... + |X_{n-1}|}, degrees taken in E
	int n = int(e_tuple.size());
	long exp = 0;
	for (int i = 0; i + 1 < n; ++i)
		exp += long(n - 1 - i) * e_tuple[i].degree;
	return (exp % 2 == 0) ? 1 : -1;
}

}  // namespace

SymForm decalage(const SkewForm& skew) {
	GradedSpace shifted = shift(skew.space(), 1);
	SymForm out(shifted, skew.arity(), skew.degree() + skew.arity() - 1);
	for (auto& [t, v] : skew.entries()) {
		std::vector<Label> st(t.size());
		for (size_t i = 0; i < t.size(); ++i)
			st[i] = shift(t[i], 1);
		Vec sv = shift_vec(v, 1);
		if (decalage_sign(t) < 0)
			sv *= Rat(-1);
		out.set_entry(st, std::move(sv));
	}
	return out;
}

SkewForm decalage_inverse(const SymForm& sym) {
	GradedSpace unshifted = shift(sym.space(), -1);
	SkewForm out(unshifted, sym.arity(), sym.degree() - sym.arity() + 1);
	for (auto& [t, v] : sym.entries()) {
		std::vector<Label> et(t.size());
		for (size_t i = 0; i < t.size(); ++i)
			et[i] = shift(t[i], -1);
		Vec ev = shift_vec(v, -1);
		if (decalage_sign(et) < 0)
			ev *= Rat(-1);
		out.set_entry(et, std::move(ev));
	}
	return out;
}

SkewJacobiReport skew_jacobi(const std::map<int, SkewForm>& components, int max_n) {
	SkewJacobiReport report;
	if (components.empty())
		return report;
	const GradedSpace& space = components.begin()->second.space();
	auto comp = [&](int i) -> const SkewForm* {
		auto it = components.find(i);
		return it == components.end() ? nullptr : &it->second;
	};
	auto eval_prefix = [](const SkewForm& f, const Vec& first, const std::vector<Label>& rest) {
		Vec out;
		std::vector<Label> t(rest.size() + 1);
		std::copy(rest.begin(), rest.end(), t.begin() + 1);
		for (auto& [l, c] : first.coeffs()) {
			t[0] = l;
			Vec v = f.eval_labels(t);
			v *= c;
			out += v;
		}
		return out;
	};
	for (int n = 1; n <= max_n; ++n) {
		std::vector<std::vector<Label>> tuples;
		enumerate_tuples(space, n, 0, nullptr, tuples);
		for (const auto& t : tuples) {
			std::vector<int> degs(t.size());
			for (size_t i = 0; i < t.size(); ++i)
				degs[i] = t[i].degree;
			Vec total;
			for (int i = 1; i <= n; ++i) {
				int j = n + 1 - i;
				const SkewForm* li = comp(i);
				const SkewForm* lj = comp(j);
				if (!li || !lj)
					continue;
				int outer = ((i * (j - 1)) % 2) ? -1 : 1;
				std::vector<Label> head(i), tail(n - i);
				for (const auto& perm : unshuffles(i, n - i)) {
					for (int p = 0; p < i; ++p)
						head[p] = t[perm[p]];
					Vec inner = li->eval_labels(head);
					if (inner.is_zero())
						continue;
					for (int p = 0; p < n - i; ++p)
						tail[p] = t[perm[i + p]];
					// chi(sigma) = koszul * parity of the unshuffle
					int chi = koszul_sign(perm, degs);
					int inversions = 0;
					for (size_t a = 0; a < perm.size(); ++a)
						for (size_t b = a + 1; b < perm.size(); ++b)
							if (perm[a] > perm[b])
								++inversions;
					if (inversions & 1)
						chi = -chi;
					Vec term = eval_prefix(*lj, inner, tail);
					term *= Rat(outer * chi);
					total += term;
				}
			}
			if (!total.is_zero()) {
				report.pass = false;
				report.witness = t;
				report.value = std::move(total);
				return report;
			}
		}
	}
	return report;
}

Vec ProductTable::multiply(const Vec& a, const Vec& b) const {
	Vec out;
	for (auto& [la, ca] : a.coeffs())
		for (auto& [lb, cb] : b.coeffs()) {
			Vec m = mul(la, lb);
			m *= ca * cb;
			out += m;
		}
	return out;
}

MultiDerivationReport is_multiderivation(const SymForm& d, const ProductTable& product) {
	const GradedSpace& space = d.space();
	auto labels = space.basis();
	const int s = product.degree_shift;
	// the product must be graded commutative and associative (shifted degrees)
	for (const auto& a : labels)
		for (const auto& b : labels) {
			Vec ab = product.mul(a, b);
			Vec ba = product.mul(b, a);
			int sign = (((a.degree + s) & 1) && ((b.degree + s) & 1)) ? -1 : 1;
			ba *= Rat(sign);
			if (!(ab == ba))
				throw std::invalid_argument("product not graded commutative");
			if (!ab.is_homogeneous(a.degree + b.degree + s))
				throw std::invalid_argument("product degree shift violated");
		}
	for (const auto& a : labels)
		for (const auto& b : labels)
			for (const auto& c : labels) {
				Vec lhs = product.multiply(product.mul(a, b), Vec::unit(c));
				Vec rhs = product.multiply(Vec::unit(a), product.mul(b, c));
				if (!(lhs == rhs))
					throw std::invalid_argument("product not associative");
			}

	MultiDerivationReport report;
	if (d.arity() == 0)
		return report;
	auto tuples = canonical_tuples(space, d.arity() - 1);
	for (const auto& t : tuples) {
		std::vector<Vec> args(t.size() + 1);
		for (size_t i = 0; i < t.size(); ++i)
			args[i] = Vec::unit(t[i]);
		for (const auto& y : labels)
			for (const auto& z : labels) {
				args.back() = product.mul(y, z);
				Vec lhs = d.eval(args);
				std::vector<Label> ty = t, tz = t;
				ty.push_back(y);
				tz.push_back(z);
				Vec rhs = product.multiply(d.eval_labels(ty), Vec::unit(z));
				Vec second = product.multiply(d.eval_labels(tz), Vec::unit(y));
				int sign = (((y.degree + s) & 1) && ((z.degree + s) & 1)) ? -1 : 1;
				second *= Rat(sign);
				rhs += second;
				if (!(lhs == rhs)) {
					report.pass = false;
					report.witness_tuple = t;
					report.witness_y = y;
					report.witness_z = z;
					report.lhs = lhs;
					report.rhs = rhs;
					return report;
				}
			}
	}
	return report;
}

}  // namespace lila
