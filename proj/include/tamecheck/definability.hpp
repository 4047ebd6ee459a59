#pragma once

#include <span>
#include <string>

namespace tamecheck {

// Finite join-semilattice of ambient structures.
//
//            NotDefinable            (absorbing)
//                 |
//                Top
//               /   \
//          RAnExp    PfaffianClosure
//          /    \       |
//        RAn    RExp    |
//          \     |     /
//           SemiAlgebraic
//
// PfaffianClosure is incomparable to the RAn/RExp/RAnExp chain; their join
// is the distinguished Top.
enum class DefinabilityClass {
  SemiAlgebraic,
  RAn,
  RExp,
  RAnExp,
  PfaffianClosure,
  Top,
  NotDefinable,
};

bool class_leq(DefinabilityClass a, DefinabilityClass b);
DefinabilityClass join(DefinabilityClass a, DefinabilityClass b);
DefinabilityClass join_classes(std::span<const DefinabilityClass> classes);

std::string class_name(DefinabilityClass c);
DefinabilityClass class_from_name(const std::string& name);

}  // namespace tamecheck
