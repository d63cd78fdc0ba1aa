#pragma once

// Small groups and rings used by fixtures, corpora and tests.

#include <functional>
#include <string>
#include <vector>

#include "ptdescent/algebra.hpp"

namespace ptdescent {

/// A group in the group signature from a multiplication on 0..n-1 with
/// identity 0. Inverses are read off the table.
AlgebraRef make_group(std::string name, std::size_t n,
                      const std::function<Element(Element, Element)>& mul,
                      std::vector<std::string> labels = {});

/// Z/n; with a generator name the labels are 1, g, g2, ... instead of 0..n-1.
AlgebraRef cyclic_group(std::size_t n, const std::string& generator = {});
AlgebraRef product_group(const AlgebraRef& left, const AlgebraRef& right);
/// r^i s^j at index i + n·j, labels 1, r, r2, ..., s, rs, r2s, ...
AlgebraRef dihedral_group(std::size_t n, std::string name = {});
AlgebraRef quaternion_group();
AlgebraRef alternating_group_4();
/// ⟨a, x | a^6, x^2 = a^3, x a x^-1 = a^-1⟩
AlgebraRef dicyclic_group_12();

/// One representative of every isomorphism class of groups of order ≤ 12
/// (24 groups), by increasing order.
std::vector<AlgebraRef> groups_up_to_12();

/// (Z/n)^k in the group signature, (v_1, ..., v_k) at index Σ v_i n^(k-i).
AlgebraRef elementary_power(std::size_t n, std::size_t k);

/// Z/n with its multiplication, under `signature` (one operation).
AlgebraRef integers_mod(std::size_t n, const Signature& signature);

/// Every subalgebra, as sorted element lists, ordered by (size, elements).
std::vector<std::vector<Element>> subalgebras(const FiniteAlgebra& alg);

/// Subalgebras that are normal and ideals for every operation.
std::vector<std::vector<Element>> normal_subalgebras(const FiniteAlgebra& alg);

}  // namespace ptdescent
