#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lcmgroup/group.hpp"

namespace lcmgroup {

/// Why x is excluded: o(x^n z) does not divide lcm(o(x^n), o(z)).
struct LcmWitness {
  std::uint32_t n = 0;
  ElementId z = 0;
};

struct LcmMembershipResult {
  ElementSet members;
  std::map<ElementId, LcmWitness> witnesses;  // one per excluded element of H
};

/// LCM(H, R): the x in H with o(x^n z) | lcm(o(x^n), o(z)) for every z in R
/// and every n in 1..o(x). Witnesses record the first failing (n, z).
LcmMembershipResult lcm_set(const FiniteGroup& g, const ElementSet& h, const ElementSet& r);
/// LCM(G, G)
LcmMembershipResult lcm_set(const FiniteGroup& g);

/// Re-checks a witness from scratch.
bool witness_holds(const FiniteGroup& g, ElementId x, const LcmWitness& w);

/// <LCM(G)>
ElementSet lc(const FiniteGroup& g);

/// H_p = {x : gcd(o(x), p) = 1}, R_p = the rest. p need not be prime.
std::pair<ElementSet, ElementSet> partition_hp_rp(const FiniteGroup& g, std::uint64_t p);

struct LcmGroupVerdict {
  bool by_definition = false;   // LCM(G) = G
  bool by_structure = false;    // nilpotent and every Sylow subgroup in CP2
  bool agree() const noexcept { return by_definition == by_structure; }
};
LcmGroupVerdict is_lcm_group(const FiniteGroup& g);

struct LcmSeriesStep {
  ElementSet term;                 // LC_i as a subset of G
  std::size_t quotient_order = 0;  // |G / LC_{i-1}|
  bool lcm_is_subgroup = false;    // LCM(G/LC_{i-1}) is already a subgroup
  bool factor_nilpotent = false;   // LC_i / LC_{i-1} nilpotent
};

struct LcmSeriesResult {
  enum class Verdict { Reached, Stalled };
  std::vector<LcmSeriesStep> steps;
  Verdict verdict = Verdict::Stalled;
  /// Number of steps to reach G (class k); meaningful when Reached.
  std::size_t length() const noexcept { return steps.size(); }
  bool reached() const noexcept { return verdict == Verdict::Reached; }
  /// Reached with every factor nilpotent.
  bool nilpotent_series() const;
};

LcmSeriesResult lcm_series(const FiniteGroup& g);

struct DeltaResult {
  bool applicable = false;    // series reached G
  bool first_step = false;    // LCM(G) is a subgroup
  bool later_steps = false;   // every quotient step from the second on
  /// Every step, including the first.
  bool holds() const noexcept { return applicable && first_step && later_steps; }
};
DeltaResult delta_condition(const FiniteGroup& g);
DeltaResult delta_condition(const LcmSeriesResult& series);

struct BijectionResult {
  /// f with o(x) | o(f(x)), indexed by ids of G, when a perfect matching exists.
  std::optional<std::vector<ElementId>> bijection;
  /// Otherwise a subset S of G whose admissible images number fewer than |S|.
  std::vector<ElementId> hall_violator;
  std::size_t admissible_images = 0;
};
/// Throws ArgumentError when the orders differ.
BijectionResult divisibility_bijection(const FiniteGroup& g, const FiniteGroup& h);

/// Direct product of one Sylow subgroup per prime, ascending.
FiniteGroup sylow_product(const FiniteGroup& g, const Limits& limits = Limits::current());

struct SylowProductReport {
  std::uint64_t psi_g = 0;
  std::uint64_t psi_h = 0;
  bool hypothesis = false;       // series reached G and delta holds from the second step on
  bool spec_delta = false;       // delta including the first step
  bool bijection_found = false;
  bool inequality_holds = false;
  bool ok() const noexcept { return !hypothesis || (bijection_found && inequality_holds); }
};
SylowProductReport check_sylow_product_psi(const FiniteGroup& g, const Limits& limits = Limits::current());

struct CommutatorBoundReport {
  bool hypothesis_met = false;  // every commutator lies in LCM(G)
  bool holds = true;
  std::optional<std::pair<ElementId, ElementId>> witness;  // failing (u, v), or the commutator pair breaking the hypothesis
};
/// o(uv) | lcm(o(u), o(v)) * o([u, v]) when every commutator lies in LCM(G).
CommutatorBoundReport commutator_order_bound_check(const FiniteGroup& g);

struct InvarianceReport {
  bool conjugation_stable = true;
  bool inverse_closed = true;
  bool product_rule = true;  // x, y in LCM(G), o(xy) = lcm(o(x), o(y)) => xy in LCM(G)
  std::vector<ElementId> witness;
  bool ok() const noexcept { return conjugation_stable && inverse_closed && product_rule; }
};
InvarianceReport invariance_checks(const FiniteGroup& g);

}  // namespace lcmgroup
