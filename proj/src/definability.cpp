#include "tamecheck/definability.hpp"

#include "tamecheck/errors.hpp"

namespace tamecheck {

namespace {
// Rank within the total chains; lattice structure handled in class_leq.
using DC = DefinabilityClass;
}  // namespace

bool class_leq(DC a, DC b) {
  if (a == b) return true;
  if (b == DC::NotDefinable) return true;
  if (a == DC::NotDefinable) return false;
  if (b == DC::Top) return true;
  if (a == DC::Top) return false;
  if (a == DC::SemiAlgebraic) return true;
  if (b == DC::SemiAlgebraic) return false;
  // Remaining: RAn, RExp, RAnExp, PfaffianClosure.
  if (a == DC::PfaffianClosure || b == DC::PfaffianClosure) return false;
  return b == DC::RAnExp;  // RAn <= RAnExp, RExp <= RAnExp
}

DC join(DC a, DC b) {
  if (class_leq(a, b)) return b;
  if (class_leq(b, a)) return a;
  // Incomparable pairs: {RAn, RExp} -> RAnExp; anything involving
  // PfaffianClosure above SemiAlgebraic -> Top.
  if (a == DC::PfaffianClosure || b == DC::PfaffianClosure) return DC::Top;
  return DC::RAnExp;
}

DC join_classes(std::span<const DC> classes) {
  if (classes.empty()) throw Error("join_classes: empty class list");
  DC acc = classes.front();
  for (DC c : classes.subspan(1)) acc = join(acc, c);
  return acc;
}

std::string class_name(DC c) {
  switch (c) {
    case DC::SemiAlgebraic: return "semi_algebraic";
    case DC::RAn: return "R_an";
    case DC::RExp: return "R_exp";
    case DC::RAnExp: return "R_an_exp";
    case DC::PfaffianClosure: return "pfaffian_closure";
    case DC::Top: return "top";
    case DC::NotDefinable: return "not_definable";
  }
  throw Error("class_name: bad enum");
}

DC class_from_name(const std::string& name) {
  if (name == "semi_algebraic") return DC::SemiAlgebraic;
  if (name == "R_an") return DC::RAn;
  if (name == "R_exp") return DC::RExp;
  if (name == "R_an_exp") return DC::RAnExp;
  if (name == "pfaffian_closure") return DC::PfaffianClosure;
  if (name == "top") return DC::Top;
  if (name == "not_definable") return DC::NotDefinable;
  throw Error("unknown definability class: " + name);
}

}  // namespace tamecheck
