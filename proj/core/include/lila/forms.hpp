#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lila/graded.hpp"

namespace lila {

// Raised when an exact result would carry a nonzero component beyond a
// caller-imposed arity cap. Refusal, never silent truncation.
class window_error : public std::runtime_error {
public:
	window_error(int required, const std::string& what)
	    : std::runtime_error(what), required_arity(required) {}
	int required_arity;
};

// Sign picked up when reordering homogeneous tensor factors:
// X_{perm[0]} (x) ... (x) X_{perm[n-1]} = sign * X_0 (x) ... (x) X_{n-1}.
// `degrees[i]` is the degree of X_i. Bubble count, O(n^2).
int koszul_sign(std::vector<int> perm, const std::vector<int>& degrees);

// All (i,j)-unshuffles of {0..i+j-1}: permutations increasing on the first i
// and on the last j slots, each returned in one-line form p where slot r
// receives original position p[r].
std::vector<std::vector<int>> unshuffles(int i, int j);

// Weakly increasing tuple of basis labels; a label of odd degree may appear
// at most once (its graded square is zero over Q).
struct Canonicalized {
	bool zero = false;  // repeated odd-degree label
	int sign = 1;
	std::vector<Label> tuple;
};
Canonicalized canonicalize(std::vector<Label> t);

bool is_canonical(const std::vector<Label>& t);
int tuple_degree(const std::vector<Label>& t);
std::string tuple_str(const std::vector<Label>& t);

// Canonical tuples of the given arity, in lexicographic (canonical) order.
// `keep` filters tuples (e.g. by total degree) before they are emitted.
std::vector<std::vector<Label>> canonical_tuples(
    const GradedSpace& space, int arity,
    const std::function<bool(const std::vector<Label>&)>& keep = nullptr);

// Graded symmetric vector valued k-form, stored on canonical basis tuples.
// Every entry is homogeneous of degree (tuple degree) + (map degree).
class SymForm {
public:
	SymForm() = default;
	SymForm(GradedSpace space, int arity, int degree);

	// Arity-0 form = homogeneous element of the space; its map degree is the
	// element degree.
	static SymForm constant(const GradedSpace& space, const Vec& value);
	static SymForm identity_map(const GradedSpace& space);

	const GradedSpace& space() const { return space_; }
	int arity() const { return arity_; }
	int degree() const { return degree_; }
	const std::map<std::vector<Label>, Vec>& entries() const { return entries_; }

	void set_entry(const std::vector<Label>& tuple, Vec value);
	void add_entry(const std::vector<Label>& tuple, const Vec& value);
	Vec entry(const std::vector<Label>& canonical_tuple) const;

	// Evaluation on basis labels in any order (Koszul-reordered), and the
	// full multilinear extension.
	Vec eval_labels(const std::vector<Label>& tuple) const;
	Vec eval(const std::vector<Vec>& args) const;
	// Multilinear with a vector in the first slot and labels after it.
	Vec eval_prefix(const Vec& first, std::span<const Label> rest) const;

	bool is_zero() const { return entries_.empty(); }

	SymForm& operator+=(const SymForm& o);
	SymForm& operator-=(const SymForm& o);
	SymForm& operator*=(const Rat& s);
	friend SymForm operator+(SymForm a, const SymForm& b) { return a += b; }
	friend SymForm operator-(SymForm a, const SymForm& b) { return a -= b; }
	friend SymForm operator*(const Rat& s, SymForm f) { return f *= s; }
	bool operator==(const SymForm& o) const;

private:
	GradedSpace space_;
	int arity_ = 0;
	int degree_ = 0;
	std::map<std::vector<Label>, Vec> entries_;
};

// Scalar-valued symmetric form on S(E): entries on canonical tuples, values
// in Q. Needed to realize insertion operators as derivations of S(E*).
class ScalarForm {
public:
	ScalarForm() = default;
	ScalarForm(GradedSpace space, int arity) : space_(std::move(space)), arity_(arity) {}

	const GradedSpace& space() const { return space_; }
	int arity() const { return arity_; }
	const std::map<std::vector<Label>, Rat>& entries() const { return entries_; }

	void set_entry(const std::vector<Label>& tuple, const Rat& value);
	void add_entry(const std::vector<Label>& tuple, const Rat& value);
	Rat eval_labels(const std::vector<Label>& tuple) const;
	Rat eval_prefix(const Vec& first, std::span<const Label> rest) const;

	bool is_zero() const { return entries_.empty(); }
	ScalarForm& operator+=(const ScalarForm& o);
	ScalarForm& operator-=(const ScalarForm& o);
	ScalarForm& operator*=(const Rat& s);
	friend ScalarForm operator-(ScalarForm a, const ScalarForm& b) { return a -= b; }
	bool operator==(const ScalarForm& o) const;

private:
	GradedSpace space_;
	int arity_ = 0;
	std::map<std::vector<Label>, Rat> entries_;
};

// Largest arity a nonzero form of the given map degree can have on this
// space, or nullopt when no degree bound exists and callers must cap.
std::optional<int> arity_window(const GradedSpace& space, int map_degree);

// Arity-indexed finite family of symmetric forms sharing one map degree.
// `cap`, when set, is both an assertion (components beyond it are zero) and
// a limit: storing a nonzero component beyond it raises window_error.
class FormalSum {
public:
	FormalSum() = default;
	FormalSum(GradedSpace space, int degree, std::optional<int> cap = std::nullopt);
	static FormalSum from(const SymForm& f, std::optional<int> cap = std::nullopt);

	const GradedSpace& space() const { return space_; }
	int degree() const { return degree_; }
	std::optional<int> cap() const { return cap_; }
	const std::map<int, SymForm>& components() const { return comps_; }
	const SymForm* component(int arity) const;
	int max_arity() const { return comps_.empty() ? -1 : comps_.rbegin()->first; }

	void add_component(const SymForm& f);
	FormalSum with_cap(std::optional<int> cap) const;

	bool is_zero() const { return comps_.empty(); }
	FormalSum& operator+=(const FormalSum& o);
	FormalSum& operator-=(const FormalSum& o);
	FormalSum& operator*=(const Rat& s);
	friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
	friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
	friend FormalSum operator*(const Rat& s, FormalSum f) { return f *= s; }
	bool operator==(const FormalSum& o) const;

private:
	GradedSpace space_;
	int degree_ = 0;
	std::optional<int> cap_;
	std::map<int, SymForm> comps_;
};

// Insertion of K into L, one slot at a time over (k, l-1)-unshuffles.
// Inserting anything into an arity-0 form gives 0; inserting an arity-0 form
// X into L gives L(X, ...).
SymForm insert(const SymForm& k, const SymForm& l);
FormalSum insert(const FormalSum& k, const FormalSum& l);
ScalarForm insert_scalar(const SymForm& k, const ScalarForm& l);
ScalarForm insert_scalar(const FormalSum& k, const ScalarForm& l);

// [K,L] = i_K L - (-1)^{K° L°} i_L K.
FormalSum rn_bracket(const FormalSum& k, const FormalSum& l);
FormalSum rn_bracket(const SymForm& k, const SymForm& l);

// K(X_1,...,X_k) recovered as [X_k,...,[X_2,[X_1,K]]...]; independent oracle
// for SymForm::eval. Arguments must be homogeneous.
Vec derived_bracket_eval(const SymForm& k, const std::vector<Vec>& args);

// Graded antisymmetric form; values on weakly increasing tuples where an
// even-degree label appears at most once. Reordering twists by
// chi(sigma) = koszul(sigma) * sign(sigma).
class SkewForm {
public:
	SkewForm() = default;
	SkewForm(GradedSpace space, int arity, int degree);

	const GradedSpace& space() const { return space_; }
	int arity() const { return arity_; }
	int degree() const { return degree_; }
	const std::map<std::vector<Label>, Vec>& entries() const { return entries_; }

	void set_entry(const std::vector<Label>& tuple, Vec value);
	Vec eval_labels(const std::vector<Label>& tuple) const;
	bool is_zero() const { return entries_.empty(); }
	bool operator==(const SkewForm& o) const;

private:
	GradedSpace space_;
	int arity_ = 0;
	int degree_ = 0;
	std::map<std::vector<Label>, Vec> entries_;
};

// Skew n-form of degree d on E  <->  symmetric n-form of degree d+n-1 on
// E[1], twisting entries by (-1)^{(n-1)|X_1|+(n-2)|X_2|+...+|X_{n-1}|} with
// E-degrees. Round trip is the identity.
SymForm decalage(const SkewForm& skew);
SkewForm decalage_inverse(const SymForm& sym);

// The generalized Jacobi identity in the skew convention, checked directly
// on basis tuples: sum over i+j=n+1 of (-1)^{i(j-1)} chi(sigma)-weighted
// compositions. Components indexed by arity.
struct SkewJacobiReport {
	bool pass = true;
	std::vector<Label> witness;
	Vec value;
};
SkewJacobiReport skew_jacobi(const std::map<int, SkewForm>& components, int max_n);

// Product table for a graded commutative associative product on the space.
struct ProductTable {
	GradedSpace space;
	// degree shift of the product: |x . y| = |x| + |y| + shift
	int degree_shift = 0;
	std::function<Vec(const Label&, const Label&)> mul;

	Vec multiply(const Vec& a, const Vec& b) const;
};

struct MultiDerivationReport {
	bool pass = true;
	std::vector<Label> witness_tuple;
	Label witness_y, witness_z;
	Vec lhs, rhs;
};

// Graded Leibniz rule of D in its last slot against the product, checked on
// all basis tuples. Throws if the product fails commutativity/associativity.
MultiDerivationReport is_multiderivation(const SymForm& d, const ProductTable& product);

}  // namespace lila
