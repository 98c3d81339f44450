#include "logparadox/markov.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "logparadox/random.hpp"

namespace logparadox {

namespace {

constexpr double kRowSumTolerance = 1.0e-12;

std::vector<double> pooled_volumes(const std::vector<CellSample>& cells) {
    std::vector<double> out;
    for (const auto& c : cells) {
        const auto v = c.structure_volumes();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

} // namespace

std::uint64_t MarkovKmerModel::total_structures() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

double MarkovKmerModel::total_proteins() const noexcept {
    double total = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) total += static_cast<double>(counts[s]) * states[s];
    return total;
}

std::vector<double> MarkovKmerModel::per_protein_frequencies() const {
    const double proteins = total_proteins();
    std::vector<double> out;
    out.reserve(counts.size());
    for (auto c : counts) out.push_back(static_cast<double>(c) / proteins);
    return out;
}

MarkovKmerModel markov_model(const std::vector<std::uint64_t>& counts, const std::vector<double>& states) {
    if (counts.empty() || counts.size() != states.size()) {
        throw Error(ErrorCode::InvalidParams, "counts and states must be non-empty and of equal length");
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (!(states[s] > 0.0) || !std::isfinite(states[s])) {
            throw Error(ErrorCode::InvalidParams, "state sizes must be finite and > 0", s, states[s]);
        }
    }
    MarkovKmerModel m;
    m.states = states;
    m.counts = counts;
    const std::uint64_t total = m.total_structures();
    if (total == 0) {
        throw Error(ErrorCode::AllZeroCounts, "at least one structure count must be positive");
    }
    for (auto c : counts) {
        m.structure_frequencies.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    return m;
}

void set_transition(MarkovKmerModel& model, std::vector<std::vector<double>> transition) {
    const std::size_t k = model.states.size();
    if (transition.size() != k) {
        throw Error(ErrorCode::InvalidParams, "transition matrix must be square over the model states");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (transition[i].size() != k) {
            throw Error(ErrorCode::InvalidParams, "transition matrix must be square over the model states", i);
        }
        double sum = 0.0;
        for (double p : transition[i]) {
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw Error(ErrorCode::InvalidParams, "transition probabilities must be in [0, 1]", i, p);
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw Error(ErrorCode::InvalidParams,
                        "transition row " + std::to_string(i) + " does not sum to 1", i, sum);
        }
    }
    model.transition = std::move(transition);
}

void require_protein_matched(const MarkovKmerModel& a, const MarkovKmerModel& b) {
    if (a.total_proteins() != b.total_proteins()) {
        throw Error(ErrorCode::InvalidParams,
                    "models are not protein-matched (" + std::to_string(a.total_proteins()) + " vs " +
                        std::to_string(b.total_proteins()) + ")");
    }
}

std::vector<double> CellSample::structure_volumes() const {
    std::vector<double> out;
    for (std::size_t s = 0; s < volumes.size(); ++s) out.insert(out.end(), structure_counts[s], volumes[s]);
    return out;
}

double CellSample::arith_mean_volume() const { return arith_mean(structure_volumes()); }

double CellSample::geom_mean_volume() const { return geom_mean(structure_volumes()); }

std::vector<CellSample> sample_cells(const MarkovKmerModel& model, std::size_t n_cells,
                                     std::size_t structures_per_cell, std::uint64_t seed) {
    if (n_cells == 0 || structures_per_cell == 0) {
        throw Error(ErrorCode::InvalidParams, "need at least one cell and one structure per cell");
    }
    std::vector<double> volumes;
    volumes.reserve(model.states.size());
    for (double k : model.states) volumes.push_back(k * k * k);

    const RandomStream master(seed);
    std::vector<CellSample> cells;
    cells.reserve(n_cells);
    for (std::size_t c = 0; c < n_cells; ++c) {
        RandomStream rng = master.substream(c);
        std::discrete_distribution<std::size_t> pick(model.structure_frequencies.begin(),
                                                     model.structure_frequencies.end());
        CellSample cell;
        cell.structure_counts.assign(model.states.size(), 0);
        cell.volumes = volumes;
        for (std::size_t i = 0; i < structures_per_cell; ++i) ++cell.structure_counts[pick(rng)];
        cells.push_back(std::move(cell));
    }
    return cells;
}

KmerReport kmer_experiment(const MarkovKmerModel& model_a, const MarkovKmerModel& model_b,
                           std::size_t n_cells, std::size_t structures_per_cell, std::uint64_t seed) {
    // Common random numbers: cell i of both lines draws from the same substream.
    const auto cells_a = sample_cells(model_a, n_cells, structures_per_cell, seed);
    const auto cells_b = sample_cells(model_b, n_cells, structures_per_cell, seed);

    KmerReport r;
    for (const auto& c : cells_a) {
        r.arith_a.push_back(c.arith_mean_volume());
        r.geom_a.push_back(c.geom_mean_volume());
    }
    for (const auto& c : cells_b) {
        r.arith_b.push_back(c.arith_mean_volume());
        r.geom_b.push_back(c.geom_mean_volume());
    }
    r.verdict = paradox_verdict(SampleVector::validate(pooled_volumes(cells_a)),
                                SampleVector::validate(pooled_volumes(cells_b)));
    r.mwu_arith = mwu_test(r.arith_a, r.arith_b);
    r.mwu_geom = mwu_test(r.geom_a, r.geom_b);
    return r;
}

} // namespace logparadox
