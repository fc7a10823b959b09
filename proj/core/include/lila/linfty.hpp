#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lila/forms.hpp"
#include "lila/lie_algebra.hpp"

namespace lila {

// Formal sum with every component of map degree +1; l_0, when present, is a
// homogeneous element of degree 1 (the curvature).
struct LInftyCandidate {
	FormalSum mu;
	bool curved = false;
};

LInftyCandidate make_candidate(FormalSum mu, bool curved = false);

struct CheckReport {
	bool pass = true;
	std::vector<Label> witness;  // first failing canonical tuple
	Vec value;                   // its nonzero value
	std::string detail;
};

// [mu,mu] = 0, componentwise on canonical tuples.
CheckReport check_linfty(const LInftyCandidate& c);
// Independent route: the generalized Jacobi identity expanded term by term.
CheckReport check_linfty_direct(const LInftyCandidate& c);
// Curved variant: l_1(l_0) = 0 plus the Jacobi identity with the l_0 slot.
CheckReport check_curved(const LInftyCandidate& c);
CheckReport check_curved_direct(const LInftyCandidate& c);
// Dispatches on the curved flag / presence of an arity-0 component.
CheckReport check_structure(const LInftyCandidate& c);

bool is_poisson_element(const Vec& pi, const LInftyCandidate& c);
bool is_maurer_cartan(const Vec& e, const LInftyCandidate& c);

// d of eta against the binary bracket data of l2, on a space concentrated in
// degrees {-2,-1}: eta has arity k and map degree k-2; the result has arity
// k+1. Alternating sum of chi-actions and bracket contractions.
SymForm ce_differential(const SymForm& eta, const SymForm& l2);

// Zero RN bracket; then every a*mu1 + b*mu2 is again a structure.
bool compatible(const LInftyCandidate& a, const LInftyCandidate& b);

// (partial, chi, bracket, omega) presentation of a candidate on E_-2 + E_-1.
struct Lie2Quadruple {
	int dim2 = 0;  // dim E_-2
	int dim1 = 0;  // dim E_-1
	QMat partial{0, 0};        // E_-2 -> E_-1, column j = partial(f_j)
	std::vector<QMat> chi;     // chi[x]: E_-2 -> E_-2
	// bracket[x][y] = coordinates of [X_x, X_y]_2, antisymmetric
	std::vector<std::vector<std::vector<Rat>>> bracket;
	// omega on strictly increasing triples of E_-1 indices, values in E_-2
	std::map<std::array<int, 3>, std::vector<Rat>> omega;

	Lie2Quadruple(int d2, int d1);
	GradedSpace space() const;
	void set_bracket(int x, int y, const std::vector<Rat>& v);
	void set_omega(int x, int y, int z, const std::vector<Rat>& v);
	std::vector<Rat> omega_eval(int x, int y, int z) const;
};

struct QuadrupleReport {
	std::array<bool, 5> axiom{true, true, true, true, true};
	std::array<std::string, 5> witness;
	bool all() const { return axiom[0] && axiom[1] && axiom[2] && axiom[3] && axiom[4]; }
};

LInftyCandidate from_lie2_quadruple(const Lie2Quadruple& q);
QuadrupleReport quadruple_axioms(const Lie2Quadruple& q);
// Presentation of a candidate living on a {-2,-1} space.
Lie2Quadruple quadruple_of(const FormalSum& mu);

struct CrossedModuleLieAlg {
	LieAlgebraData g;          // degree -2 side
	LieAlgebraData h;          // degree -1 side
	QMat partial{0, 0};        // g -> h
	std::vector<QMat> chi;     // chi[h-basis index]: g -> g
};

struct CrossedModuleReport {
	bool ok = true;
	std::string failed_axiom;  // empty when ok
	std::string witness;
};

CrossedModuleReport check_crossed_module(const CrossedModuleLieAlg& cm);
// Throws std::invalid_argument carrying the witness when the axioms fail.
LInftyCandidate from_crossed_module(const CrossedModuleLieAlg& cm);

// Cohomology of l_1 with chosen representatives and exact projection.
struct Cohomology {
	GradedSpace h_space;
	std::vector<Vec> reps;        // indexed by h_space basis order
	std::vector<Vec> boundaries;  // basis of Im(l_1)
	// coordinates of a Ker(l_1) element on the representatives
	Vec project(const Vec& v) const;
};
Cohomology cohomology(const FormalSum& mu);

// l_1 N + N l_1 = lambda l_1 for some scalar lambda.
std::optional<Rat> quasi_chain_factor(const SymForm& l1, const SymForm& n);

// For quasi chain maps N_1, K_1 (the unary parts of a Nijenhuis form and its
// square): the induced endomorphisms on H(l_1) and the induced binary
// bracket satisfy the deformation identity there as well.
CheckReport cohomology_nijenhuis_check(const LInftyCandidate& c, const FormalSum& n,
                                       const FormalSum& k);

}  // namespace lila
