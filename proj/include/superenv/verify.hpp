#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superenv/pbw.hpp"
#include "superenv/report.hpp"

namespace superenv {

/// Randomized engine laws over `g`: normal-form idempotence, associativity,
/// the superderivation law for ad, sigma as an automorphism, t as an
/// involution, and render/parse round-trips. Deterministic for a fixed seed.
std::vector<IdentityCheck> engine_property_checks(const AlgebraPtr& g, std::uint64_t seed = 20240601);

/// Anticenter of gl(1,1) inside F_d against the span of
/// x*omega - (omega + tau(omega))*u*v over monomials omega.
IdentityCheck anticenter_formula_equivalence(const AlgebraPtr& gl11, unsigned d);

/// Full identity suite. `key` is the algebra read as gl(1,1) with basis
/// x, y, u, v; the remaining checks use builtin algebras. `degree` selects
/// the truncation of the basis-report section.
std::vector<IdentityCheck> run_identity_suite(const AlgebraPtr& key, unsigned degree);

/// `[PASS] name` / `[FAIL] name: detail` lines followed by a summary line.
std::string format_report(const std::vector<IdentityCheck>& checks);

} // namespace superenv
