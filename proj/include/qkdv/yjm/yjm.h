#pragma once

#include <vector>

#include "qkdv/hamiltonians/record.h"

namespace qkdv {

// Element of the group algebra of S_k; coefficients indexed by the
// lexicographic rank of the permutation (one-line notation, 0-based).
struct GroupElement {
  int k = 0;
  std::vector<Integer> coeffs;
};

std::size_t group_order(int k);
// One-line notation of the permutation with the given rank.
std::vector<int> permutation(int k, std::size_t rank);
Partition cycle_type(const std::vector<int>& perm);

GroupElement group_identity(int k);
// J_i = (1,i) + ... + (i-1,i) (1-based), J_1 = 0.
GroupElement yjm_element(int k, int i);
GroupElement class_sum(const Partition& mu);
// (a b)(x) = a(b(x)).
GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement operator+(const GroupElement& a, const GroupElement& b);

// Central element written on the class sums C_mu, canonical order.
struct ClassAlgebraElement {
  int k = 0;
  std::vector<Rat> coeffs;
};

// Throws VerificationError if g is not constant on conjugacy classes.
ClassAlgebraElement to_class_algebra(const GroupElement& g);

// J_1^m + ... + J_k^m by explicit multiplication, with J_i^0 = identity
// (also for J_1 = 0), so m = 0 gives k times the identity. k <= 6.
ClassAlgebraElement yjm_powersum_brute(int k, int m);

// Matrix of multiplication by `e` on the class sums (column = source class).
ExactMatrix class_multiplication(const ClassAlgebraElement& e);
// The same operator on the character basis chi_lambda, which the Frobenius
// map sends to s_lambda(q/sqrt(hbar)); hence also its Schur-basis matrix.
ExactMatrix on_character_basis(const ExactMatrix& on_classes, int k);

// Image under the Frobenius map, sigma -> q_mu / (hbar^{l/2} k!), of the
// class-algebra element, on the normalized monomials T_mu.
std::vector<Rat> frobenius_image(const ClassAlgebraElement& e);

// sum over boxes of content^m, content = column - row, 0^0 = 1. Computed over
// the cells and through Frobenius coordinates with Faulhaber polynomials;
// throws VerificationError if they differ.
Rat yjm_eigen(const Partition& lambda, int m);

enum class PropA1Route { brute, eigen };

struct PropA1Report {
  int k = 0;
  int z_order = 0;  // checked through z^z_order
  PropA1Route route = PropA1Route::eigen;
  std::size_t defect_entries = 0;  // nonzero (coefficient, entry) pairs
  int first_defect_order = -1;
  bool zero() const { return defect_entries == 0; }
};

// Both sides on the Schur basis of weight k, with U0 = sqrt(hbar) V0 and V0
// symbolic. The brute route needs k <= 6.
PropA1Report verify_propA1(HamiltonianStore& store, int k, int z_order, PropA1Route route);

// e^{z(a+1/2)} - e^{-z(b+1/2)} = 2 sinh(z/2) ((e^{az}-1)/(1-e^{-z}) + (e^{-bz}-1)/(1-e^z) + 1)
// through z^order.
bool sinh_identity_holds(int a, int b, int order);

}  // namespace qkdv
