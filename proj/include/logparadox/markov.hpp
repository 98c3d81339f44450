#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "logparadox/core_stats.hpp"
#include "logparadox/mann_whitney.hpp"
#include "logparadox/paradox.hpp"

namespace logparadox {

/// k-mer aggregation model: structure sizes (proteins per structure), the
/// per-cell structure counts they were built from, and the sampling
/// distribution over structures. The transition matrix is descriptive only;
/// sampling draws from structure_frequencies.
struct MarkovKmerModel {
    std::vector<double> states;
    std::vector<std::uint64_t> counts;
    std::vector<double> structure_frequencies; // counts / total structures
    std::vector<std::vector<double>> transition;

    [[nodiscard]] std::uint64_t total_structures() const noexcept;
    [[nodiscard]] double total_proteins() const noexcept;
    /// counts / total proteins; these rows do not sum to 1.
    [[nodiscard]] std::vector<double> per_protein_frequencies() const;
};

/// Throws AllZeroCounts, or InvalidParams on size mismatch / non-positive states.
[[nodiscard]] MarkovKmerModel markov_model(const std::vector<std::uint64_t>& counts,
                                           const std::vector<double>& states);

/// Attaches a square, row-stochastic transition matrix (rows sum to 1 within 1e-12).
void set_transition(MarkovKmerModel& model, std::vector<std::vector<double>> transition);

/// Throws InvalidParams unless both models hold the same number of proteins.
void require_protein_matched(const MarkovKmerModel& a, const MarkovKmerModel& b);

struct CellSample {
    std::vector<std::uint64_t> structure_counts; // per state
    std::vector<double> volumes;                 // per state, k^3

    [[nodiscard]] std::vector<double> structure_volumes() const;
    [[nodiscard]] double arith_mean_volume() const;
    [[nodiscard]] double geom_mean_volume() const;
};

/// Cell i draws from substream i of `seed`.
[[nodiscard]] std::vector<CellSample> sample_cells(const MarkovKmerModel& model, std::size_t n_cells,
                                                   std::size_t structures_per_cell, std::uint64_t seed);

struct KmerReport {
    std::vector<double> arith_a; // per-cell arithmetic mean volume, line A
    std::vector<double> geom_a;
    std::vector<double> arith_b;
    std::vector<double> geom_b;
    /// Verdict on the pooled structure volumes of each line: the arithmetic
    /// side equals the mean of per-cell arithmetic means, the geometric side
    /// the geometric mean of per-cell geometric means.
    ParadoxVerdict verdict;
    MwuResult mwu_arith;
    MwuResult mwu_geom;
};

/// Both lines sample with `seed`, so cell i of A and cell i of B share a
/// substream; identical models therefore produce identical cells.
[[nodiscard]] KmerReport kmer_experiment(const MarkovKmerModel& model_a, const MarkovKmerModel& model_b,
                                         std::size_t n_cells, std::size_t structures_per_cell,
                                         std::uint64_t seed);

} // namespace logparadox
