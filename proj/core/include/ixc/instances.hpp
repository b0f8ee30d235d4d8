#pragma once

#include <array>
#include <vector>

#include "ixc/gf.hpp"
#include "ixc/problem.hpp"

namespace ixc::instances {

/// Two messages, each demanded by a receiver that lacks the other.
/// One mutual conflict, no alignment edges.
Problem pair_conflict();

/// Three messages, each demanded with empty side information: pairwise
/// conflicts and a triangle in the alignment graph.
Problem triangle();

/// Successive-triangle configuration on core messages 1..6: three interfering
/// triples {1,2,3},{2,4,5},{3,5,6} realized by dummy demanders 7,8,9, plus the
/// six pair interferences at messages 6, 4 and 1. Every message is demanded.
Problem stic();

/// Square-pyramid configuration on core messages 1..5: interfering triples
/// {1,2,3},{1,3,4},{3,4,5},{2,3,5} via dummies 6..9, pair interferences
/// {1,2}@5 and {4,5}@2, and the 1-3 conflict. Every message is demanded.
Problem spic();

/// Two overlapping successive-triangle configurations on core 1..9
/// ({1,2,3,4,5,6} and the image 1->7,2->4,3->2,4->8,5->5,6->9), realized with
/// dummies 10..15. Rate-1/3 infeasible.
Problem double_stic();

/// Five square-pyramid configurations on core 1..15 chained so that every
/// consecutive intersection is strictly rate-1 infeasible; dummies 16..33.
Problem spic_chain();

/// Seven triangles on core 1..12 forming six extended type-2 sets whose
/// intersection graph has edges 1-2,1-3,1-4,1-5,2-3,2-5,3-5 plus an isolated
/// set; already maximal, all construction conditions hold.
Problem xtype2_grid();

/// Gadget factory: one dummy demander per triangle pins the triple as an
/// interfering set; every pair inside a triangle gets a conflict via a
/// single-interferer receiver; sinks cover the remaining messages. The result
/// is its own maximal contraction and its type-2 sets are unions of the given
/// triangles.
Problem from_triangles(int n_core, const std::vector<std::array<Msg, 3>>& triangles);

/// Twelve small problems (n <= 8) whose type-2 sets exercise both sides of
/// the restricted-internal-conflict criterion.
std::vector<Problem> type2_suite();

/// Fixtures satisfying the construction conditions (a)-(c), including the
/// six-set intersection-graph arrangement of xtype2_grid.
std::vector<Problem> construction_suite();

/// Random instance with 2..5 messages, every message demanded, receivers with
/// Bernoulli(1/2) side information.
Problem random_problem(Rng& rng);

/// Chain of 2..4 strictly-rate-1/2 gadgets (triangles, double triangles,
/// occasionally a square pyramid) glued along conflicting pairs so the
/// union-stitch rule applies end to end. With inject_internal_conflict, one
/// extra receiver puts a conflicting pair inside a restricted alignment set,
/// making the whole problem rate-1/3 infeasible.
Problem random_gadget_chain(Rng& rng, bool inject_internal_conflict);

}  // namespace ixc::instances
