#pragma once

// Independent reference implementations used to cross-check the algebraic
// kernels: explicit gamma matrices, Wick pairing enumeration and Monte Carlo
// sphere averages.

#include <cstdint>
#include <random>
#include <vector>

#include "spectral_torsion/clifford.hpp"
#include "spectral_torsion/matrix.hpp"
#include "spectral_torsion/symcalc.hpp"

namespace storsion::oracle {

/// Euclidean gamma matrices of size 2^{n/2} built from tensor products of
/// Pauli matrices (n even): gamma^{2k} = s3^{(x)k} (x) s1 (x) 1, gamma^{2k+1} = s3^{(x)k} (x) s2 (x) 1.
std::vector<ComplexMatrix> pauliGammaMatrices(int n);

/// Product gamma^{i_1} ... gamma^{i_k} times the word's scalar.
ComplexMatrix wordMatrix(const GammaWord& word, const std::vector<ComplexMatrix>& gammas);

/// Image of a multivector: each blade maps to its ordered gamma product.
ComplexMatrix multivectorMatrix(const Multivector& m, const std::vector<ComplexMatrix>& gammas);

/// Random word of length 0..maxLength over n generators with a small Gaussian-rational scalar.
GammaWord randomWord(int n, int maxLength, std::mt19937_64& rng);

/// Gaussian moment E[x^alpha] / E[|x|^{|alpha|}] by explicit enumeration of
/// all perfect pairings of the index multiset.
Rational pairingSphereMoment(const MultiIndex& alpha, int n);

/// Monte Carlo averages of xi^alpha over uniform points of S^{n-1}, one value
/// per requested monomial, all from the same sample.
std::vector<double> monteCarloSphereMoments(const std::vector<MultiIndex>& monomials, int n, int points,
                                            std::uint64_t seed);

}  // namespace storsion::oracle
