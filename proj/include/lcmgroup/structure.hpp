#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

struct ConjugacyPartition {
  std::vector<std::uint32_t> class_of;       // class index per element
  std::vector<ElementId> representatives;    // smallest id in each class
  std::vector<std::size_t> sizes;
  std::size_t count() const noexcept { return sizes.size(); }  // h(G)
};

ConjugacyPartition conjugacy_partition(const FiniteGroup& g);

ElementSet centralizer(const FiniteGroup& g, ElementId x);
/// N_G(<x>)
ElementSet normalizer_of_cyclic(const FiniteGroup& g, ElementId x);
/// N_G(H); throws ArgumentError if h is not a subgroup.
ElementSet normalizer(const FiniteGroup& g, const ElementSet& h);
ElementSet center(const FiniteGroup& g);

/// Irredundant generating sequence, chosen greedily by descending element order then id.
std::vector<ElementId> generating_sequence(const FiniteGroup& g);

/// One Sylow p-subgroup, grown inside successive normalizers. {e} when p does not divide |G|.
ElementSet sylow(const FiniteGroup& g, std::uint64_t p);
/// Largest normal p-subgroup: intersection of the conjugates of a Sylow p-subgroup.
ElementSet p_core(const FiniteGroup& g, std::uint64_t p);
/// Product of the p-cores over the primes dividing |G|.
ElementSet fitting(const FiniteGroup& g);

/// gamma_1 = H, gamma_{i+1} = <[gamma_i, H]>, until it stabilizes. Starts with H.
std::vector<ElementSet> lower_central_series(const FiniteGroup& g, const ElementSet& h);
bool is_nilpotent(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g, const ElementSet& h);
/// Class of a nilpotent subgroup (0 for trivial); nullopt when not nilpotent.
std::optional<int> nilpotency_class(const FiniteGroup& g);
std::optional<int> nilpotency_class(const FiniteGroup& g, const ElementSet& h);
/// Nilpotency via "every Sylow subgroup is normal"; used to cross-check the series route.
bool is_nilpotent_by_sylows(const FiniteGroup& g);

std::vector<ElementSet> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// True when |G| is a power of p (the trivial group counts for every p).
bool is_p_group(const FiniteGroup& g, std::uint64_t p);

/// {x : x^(p^i) = e}; throws ArgumentError unless g is a p-group.
ElementSet omega_level_set(const FiniteGroup& g, std::uint64_t p, unsigned i);
ElementSet omega_subgroup(const FiniteGroup& g, std::uint64_t p, unsigned i);
ElementSet mho_subgroup(const FiniteGroup& g, std::uint64_t p, unsigned i);

/// Lexicographically first (x, y) with o(xy) > max(o(x), o(y)).
std::optional<std::pair<ElementId, ElementId>> cp2_witness(const FiniteGroup& g);
bool is_cp2(const FiniteGroup& g);

/// The structural CP2 criterion: p-groups whose level sets are closed, or
/// Frobenius groups of order p^a q^b (p < q) with kernel of order p^a and
/// cyclic complement.
bool cp2_by_theorem_d(const FiniteGroup& g);

struct SubgroupRecord {
  ElementSet elements;
  bool is_normal = false;
  bool is_nilpotent = false;
  std::optional<int> nilpotency_class;
  bool is_maximal = false;
};

/// Full subgroup lattice by cyclic extension; ordered by size then ids.
/// Throws CapacityError above limits.lattice_cap.
std::vector<SubgroupRecord> subgroups(const FiniteGroup& g, const Limits& limits = Limits::current());
std::vector<SubgroupRecord> maximal_subgroups(const FiniteGroup& g, const Limits& limits = Limits::current());
bool is_minimal_non_nilpotent(const FiniteGroup& g, const Limits& limits = Limits::current());
/// Same predicate without the lattice: minimal non-nilpotent groups are
/// 2-generated, so G fails iff some proper <x, y> is non-nilpotent.
bool is_minimal_non_nilpotent_by_pairs(const FiniteGroup& g);

/// Every normal subgroup, as joins of normal closures of elements; sorted
/// by size, then ids. No cap: the count is small at desk scale.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g);

/// Enumerates homomorphisms src -> dst by backtracking on images of
/// generating_sequence(src). Visits maps (indexed by src id) in lexicographic
/// order of generator images; the visitor returns false to stop early.
void for_each_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, bool bijective,
                           const std::function<bool(const std::vector<ElementId>&)>& visit);

/// All automorphisms as permutations of element ids; identity first, the
/// rest in lexicographic order of generator images.
/// Throws CapacityError when |G| > cap or the count exceeds max_count.
std::vector<Permutation> automorphisms(const FiniteGroup& g, std::size_t cap,
                                       std::size_t max_count = 200000);
std::vector<Permutation> automorphisms(const FiniteGroup& g);

bool is_hall(const FiniteGroup& g, const ElementSet& h);
/// Sum of element orders.
std::uint64_t psi(const FiniteGroup& g);

}  // namespace lcmgroup
