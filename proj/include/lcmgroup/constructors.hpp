#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

FiniteGroup cyclic(std::size_t n, const Limits& limits = Limits::current());
/// Dihedral group of order m (m even, m >= 2); D10 has order 10.
FiniteGroup dihedral_of_order(std::size_t m, const Limits& limits = Limits::current());
FiniteGroup quaternion8();
/// 1 <= k <= 8; orders above the size cap throw CapacityError.
FiniteGroup symmetric(std::size_t k, const Limits& limits = Limits::current());
FiniteGroup alternating(std::size_t k, const Limits& limits = Limits::current());
/// GL(2,4) acting on the 15 nonzero vectors of GF(4)^2.
FiniteGroup gl2_gf4();
/// C_p wr C_p on p^2 points.
FiniteGroup wreath_cyclic(std::size_t p, const Limits& limits = Limits::current());
/// (D8 x C4) / <(r^2, t^2)>, the order-16 Pauli group.
FiniteGroup central_product_d8_c4();

/// Element (a, b) has id a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = Limits::current());

/// A homomorphism H -> Aut(N), stored as the automorphism (a permutation of
/// N's element ids) attached to every element of H. N acts on the right:
/// images[h1*h2] applies images[h1] first.
struct ActionTable {
  std::vector<Permutation> images;       // indexed by H element id
  std::vector<std::size_t> generator_images;  // pool index per generator of H
  bool is_trivial() const;
};

/// Automorphisms of A x B that preserve both factors, in A-major order; identity first.
std::vector<Permutation> componentwise_automorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                                     const Limits& limits = Limits::current());

/// All homomorphisms H -> Aut(N); index 0 is the trivial action, the rest
/// ordered lexicographically by generator images.
std::vector<ActionTable> enumerate_actions(const FiniteGroup& n, const FiniteGroup& h,
                                           const Limits& limits = Limits::current());
/// Same, restricted to a pool of automorphisms that is closed under composition
/// and starts with the identity.
std::vector<ActionTable> enumerate_actions(const FiniteGroup& n, const FiniteGroup& h,
                                           const std::vector<Permutation>& pool,
                                           const Limits& limits = Limits::current());

/// Element h*n has id h*|N| + n, so ids 0..|N|-1 form the normal copy of N.
/// Throws ArgumentError when the action is not a homomorphism into Aut(N).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const ActionTable& action,
                               const Limits& limits = Limits::current());

struct Quotient {
  FiniteGroup group;
  std::vector<ElementId> projection;       // element of G -> coset id
  std::vector<ElementId> representatives;  // coset id -> smallest element of the coset
};

/// G/N over cosets; the coset of e is id 0. Throws ArgumentError naming a
/// violating conjugation when N is not normal.
Quotient quotient(const FiniteGroup& g, const ElementSet& n, const Limits& limits = Limits::current());

}  // namespace lcmgroup
