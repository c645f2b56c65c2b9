#pragma once

#include <cstdint>

#include "motivic/report.hpp"

namespace motivic {

struct PowerAxiomOptions {
    int samples = 50;
    int order = 8;
    std::uint64_t seed = 20240601;
};

/// Randomized check of the power-structure axioms for f^a = Exp(a Log f):
///   f^0 = 1, f^1 = f, f^{a+b} = f^a f^b, f^{ab} = (f^a)^b, (fg)^a = f^a g^a,
///   (1+t)^a = 1 + a t + O(t^2), f(t^n)^a = f^a(t^n) for n in {2, 3}, and
///   continuity (the k-jet of f^a only depends on the k-jet of f);
/// plus Exp(Log g) = g, Log(Exp f) = f, Exp(f + g) = Exp(f) Exp(g),
/// Exp(f(t^n)) = Exp(f)(t^n) and agreement of the Adams and product
/// evaluations of Exp. Each sample draws fresh f, g, a, b from the seed.
IdentityReport verify_power_axioms(const PowerAxiomOptions& options = {});

} // namespace motivic
