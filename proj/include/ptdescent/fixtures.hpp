#pragma once

// The three counterexamples, reduced mod n. Every constructor throws
// std::invalid_argument when n < 2.

#include <string>
#include <vector>

#include "ptdescent/actions.hpp"
#include "ptdescent/descent.hpp"

namespace ptdescent {

/// C3, C2 ↪ S3 with ρ(r)(x,y,z) = (y,z,x) on (Z/n)^3 and C2 acting trivially.
struct S3Fixture {
  std::size_t modulus;
  AlgebraRef s3, c3, c2, acted;
  CospanRef cospan;
  ActionDatum rho;
  ActionDatum trivial;
};

S3Fixture fixture_s3(std::size_t n);

/// φ(g_1 ... g_k)(v) computed letter by letter from the right, reading `r`
/// through ρ and `s` through the trivial action: the value any extension
/// would be forced to take.
struct WordValue {
  std::string word;  // e.g. "sr2"
  Element vector;    // input
  Element value;
  std::string label;
};

WordValue forced_value(const S3Fixture& fx, const std::string& word, Element vector);

/// The two evaluations of the same element: φ(sr²)(1,0,0) and φ(rs)(1,0,0).
/// Also reports whether sr² = rs holds in S3.
struct S3Contradiction {
  WordValue via_sr2;
  WordValue via_rs;
  bool same_element;
};

S3Contradiction s3_contradiction(const S3Fixture& fx);

/// Lower-triangular 2×2 matrices over Z/n acting on themselves by
/// multiplication on both sides, and Z/n acting by k·(x,0;y,z) = (kx,0;0,kz).
struct RingFixture {
  std::size_t modulus;
  AlgebraRef ring;      // R_n, (x,0;y,z) at index x·n² + y·n + z
  AlgebraRef integers;  // Z/n
  ActionDatum conjugation;
  ActionDatum scalar;
  std::vector<Identity> identities;
};

RingFixture fixture_ring(std::size_t n);

/// (x,0;y,z) as an element of R_n.
Element matrix_element(const RingFixture& fx, Element x, Element y, Element z);

/// Identities involving only the group parts: b·(c·x) = c·(b·x) and the
/// additivity of each dot.
std::vector<Identity> group_part_identities();

/// A_n = span{x,y,z} over Z/n with x·y = y·x = z, acting on Z/n by ξ (the z
/// coefficient times n) and trivially by τ, with the cospan ⟨x⟩, ⟨y⟩ ↪ A_n.
struct NonassocFixture {
  std::size_t modulus;
  AlgebraRef algebra;  // ax+by+cz at index c + n·b + n²·a
  AlgebraRef acted;    // Z/n under the non-associative ring laws
  CospanRef cospan;
  ActionDatum xi;
  ActionDatum tau;
};

NonassocFixture fixture_nonassoc(std::size_t n);

/// ax+by+cz as an element of A_n.
Element span_element(const NonassocFixture& fx, Element a, Element b, Element c);

}  // namespace ptdescent
