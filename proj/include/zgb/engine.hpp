#pragma once

#include <vector>

#include "zgb/reduce.hpp"

namespace zgb {

struct StdConfig {
    Strategy strategy = Strategy::ALL;
    bool tail_reduce_output = false;
    bool interreduce_output = true;
    long iteration_cap = 100000;       // Mora step cap per reduction
    long pair_cap = 10000000;          // selected-pair cap per run
    bool gcd_augment = true;           // debug: disable Mora gcd-augmentation
    bool enable_pair_criteria = false; // reserved extension point
    std::optional<Deadline> deadline;
};

struct StdStats {
    unsigned long pairs_created = 0;
    unsigned long pairs_selected = 0;
    unsigned long zero_reductions = 0;
    long max_coeff_bits = 0;
    double wall_ms = 0;
    size_t basis_size = 0;
};

// Buchberger loop over s-/gcd-/extended pairs; returns a strong standard
// basis of <generators> w.r.t. the context ordering. Ring ZZ or ZZ/n.
std::vector<Poly> std_basis(const std::vector<Poly>& generators,
                            const StdConfig& config = {});

std::vector<Poly> std_basis_with_stats(const std::vector<Poly>& generators,
                                       const StdConfig& config,
                                       StdStats& stats);

}  // namespace zgb
