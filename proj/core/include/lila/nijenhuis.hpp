#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lila/linfty.hpp"

namespace lila {

// S(X) = -|X| X; universal deformation form with square itself.
SymForm euler_map(const GradedSpace& space);

// mu deformed `times` times: [N, [N, ... [N, mu]]].
FormalSum deform(const FormalSum& mu, const FormalSum& n, int times);

struct WeakNijenhuisReport {
	bool weak = false;            // [mu,[N,[N,mu]]] = 0
	bool deformed_passes = false; // the deformed sum is a (curved) structure
	CheckReport deformed_report;
	// the two routes must agree whenever mu itself is a structure
	bool routes_agree() const { return weak == deformed_passes; }
};
WeakNijenhuisReport is_weak_nijenhuis(const FormalSum& n, const LInftyCandidate& mu);

struct NijenhuisReport {
	bool square_identity = false;  // [N,[N,mu]] = [K,mu]
	bool commutes = false;         // [N,K] = 0
	std::string detail;
	bool is_nijenhuis() const { return square_identity && commutes; }
	bool coboundary_only() const { return square_identity && !commutes; }
};
NijenhuisReport is_nijenhuis(const FormalSum& n, const LInftyCandidate& mu, const FormalSum& k);

// Searches the affine family a*N + b*S + c*Id for a square of N. The two
// defining conditions are linear in the square, so this is one exact solve
// plus a verification.
std::optional<FormalSum> find_affine_square(const FormalSum& n, const LInftyCandidate& mu);

struct Hierarchy {
	std::vector<FormalSum> levels;  // mu_0 = mu, mu_{k+1} = [N, mu_k]
	bool all_structures = true;     // every level passes its structure check
	bool all_nijenhuis = true;      // N stays Nijenhuis with the same square
	bool all_compatible = true;     // levels commute pairwise
	bool square_advances_two = true;  // [K, mu_k] = mu_{k+2}
	bool square_weak = true;          // [mu_k, [K,[K,mu_k]]] = 0
	std::string detail;
	bool all_pass() const {
		return all_structures && all_nijenhuis && all_compatible && square_advances_two &&
		       square_weak;
	}
};
Hierarchy hierarchy(const LInftyCandidate& mu, const FormalSum& n, const FormalSum& k, int depth);

struct CompatibleNijenhuisReport {
	bool deform_anticommutes = false;  // [N1,[N2,mu]] + [N2,[N1,mu]] = 0
	bool square_anticommutes = false;  // [N1,K2] + [N2,K1] = 0
	bool rn_commute = false;           // [N1,N2] = 0
	bool combination_ok = true;        // sampled a1 N1 + a2 N2 has square a1^2 K1 + a2^2 K2
	// the two anticommutation requirements; these are what make linear
	// combinations work
	bool compatible() const { return deform_anticommutes && square_anticommutes; }
};
CompatibleNijenhuisReport compatible_nijenhuis(const FormalSum& n1, const FormalSum& k1,
                                               const FormalSum& n2, const FormalSum& k2,
                                               const LInftyCandidate& mu,
                                               const std::vector<std::pair<Rat, Rat>>& samples);

struct LieNTailReport {
	NijenhuisReport nijenhuis;
	bool proof_identities = true;  // the vanishing statements behind the construction
	std::string detail;
};
// Tail family on a Lie n-algebra: arities must satisfy
// ceil((n+3)/2) <= k_1 <= ... <= k_l <= n+1; throws when they do not.
LieNTailReport lie_n_tail(const LInftyCandidate& mu, const std::vector<SymForm>& forms);

// Cyclic obstruction for S + alpha on a Lie 2-algebra:
// alpha(l_1 alpha(X,Y), Z) + c.p. = 0 on E_-1.
bool alpha_condition(const LInftyCandidate& mu, const SymForm& alpha);

// (partial, [.,.] + partial alpha, chi - alpha(partial ., .), omega + d alpha)
Lie2Quadruple deformed_quadruple(const Lie2Quadruple& q, const SymForm& alpha);

struct ChiZeroSplit {
	SymForm alpha;
	// string summand: kernel of partial in degree -2, a complement of the
	// image in degree -1; trivial summand: the complementary pieces
	std::vector<Vec> string_m2, string_m1, trivial_m2, trivial_m1;
	FormalSum deformed;
	bool verified = false;  // sub-closure, vanishing cross terms, direct sum
	std::string detail;
};
// Requires chi = 0 (l_2 vanishing on E_-2 x E_-1); throws otherwise.
ChiZeroSplit split_chi_zero(const LInftyCandidate& mu);

}  // namespace lila
