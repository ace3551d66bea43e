// Randomized property harness: every identity the invariant is supposed to
// satisfy (Markov moves, Gassner relations, the unreduced row identity,
// Jiang-style local relations, the axis route, bar symmetry) packaged as a
// named, seedable check with a structured report.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cpf/braid.hpp"
#include "cpf/potential.hpp"

namespace cpf::verify {

struct CheckFailure {
    std::uint64_t seed = 0;  // per-trial seed; replaying it reproduces the failure
    std::string input;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    int trials = 0;
    std::vector<CheckFailure> failures;
    bool passed() const { return failures.empty(); }
};

struct CheckConfig {
    int trials = 0;  // 0 selects the per-check default
    int max_strands = 6;
    int max_len = 12;
    int max_colors = 4;
    std::uint64_t seed = 0x5eed0001u;
};

/// Replaceable potential computation, used to run the Markov suite against
/// deliberately broken variants in mutation tests. Empty means the standard
/// potential_function.
using PotentialFn = std::function<Potential(const ColoredBraid&)>;

/// Conjugation (word rotation) and stabilization instances; demands exact
/// equality of Potential values.
CheckReport check_markov(const CheckConfig& cfg, const PotentialFn& f = {});
/// Braid relations, far commutation, inverse cancellation and the
/// anti-representation product rule for Gassner matrices.
CheckReport check_braid_relations(const CheckConfig& cfg);
/// Row identity defining the unreduced extension, the connecting-row
/// equation del * B = del, and the shape of the last column.
CheckReport check_lemma_rows(const CheckConfig& cfg);
/// Local relations R1-R4 at braid level.
CheckReport check_jiang(const CheckConfig& cfg);
/// Direct route vs axis route, plus the linking-number product law at t = 1.
CheckReport check_routes(const CheckConfig& cfg);
/// Bar involution sends the value to (-1)^{#components} times itself.
CheckReport check_symmetry(const CheckConfig& cfg);

std::vector<std::string> check_names();
CheckReport run_check(const std::string& name, const CheckConfig& cfg);
std::vector<CheckReport> run_all(const CheckConfig& cfg);

/// Random (c,c)-braid: uniform letters, colors relabeled to be surjective,
/// then the minimal color-sorting suffix so top matches bottom.
ColoredBraid random_closed_braid(std::mt19937_64& rng, int max_strands, int max_len,
                                 int max_colors);
/// Random braid without the closing suffix (top may differ from bottom).
ColoredBraid random_open_braid(std::mt19937_64& rng, int max_strands, int max_len,
                               int max_colors);

}  // namespace cpf::verify
