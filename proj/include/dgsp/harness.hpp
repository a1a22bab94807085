#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dgsp/densela.hpp"
#include "dgsp/digraph.hpp"
#include "dgsp/nonnormality.hpp"

namespace dgsp::harness {

enum class GraphKind { Cycle, Perturbed, File };

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

struct ExperimentConfig {
    /// Unset: both the cycle and the perturbed family.
    std::optional<GraphKind> graph;
    std::size_t n = 20;
    double p = 0.2;
    double weight = 0.8;
    std::optional<std::uint64_t> seed;
    std::size_t k = 5;
    std::vector<double> noise_levels{0.0, 0.01, 0.05, 0.1, 0.2, 0.5};
    std::size_t trials = 100;
    /// Unset: 2K.
    std::optional<std::size_t> sample_set_size;
    /// Relative noise level for `sample`.
    double sample_noise = 0.1;
    std::filesystem::path edges;
    std::filesystem::path output_dir = ".";
    bool balance = false;
    double eig_tol = 1e-9;
    unsigned threads = 1;

    la::EigOptions eig_options() const { return {balance, eig_tol, false}; }
    std::size_t samples() const { return sample_set_size.value_or(2 * k); }
};

struct LabeledGraph {
    std::string label;
    Digraph graph;
};

/// Graphs selected by the config, in output order.
std::vector<LabeledGraph> build_graphs(const ExperimentConfig& cfg);

/// Scale s with E||s g|| = 1 for g a unit complex Gaussian vector of length n.
double unit_expected_norm_scale(std::size_t n);

/// Runs body(i) for i in [0, count) on `threads` workers. Results must be written
/// to per-index slots; completion order never affects the output.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

struct SpectrumRow {
    std::string graph;
    std::size_t k;
    double re_lambda;
    double im_lambda;
};

struct DenoiseRow {
    std::string graph;
    double level;
    std::size_t trial;
    double rel_error;
    double kappa_v;
};

struct SampleRow {
    std::string graph;
    std::size_t trial;
    std::size_t m;
    double gamma;
    double vnorm;
    double eta_norm;
    double rel_error;
    double bound;
    bool skipped;
};

std::vector<MetricsReport> run_table1(const ExperimentConfig& cfg);
std::vector<SpectrumRow> run_spectra(const ExperimentConfig& cfg);
std::vector<DenoiseRow> run_denoise(const ExperimentConfig& cfg);
std::vector<SampleRow> run_sample(const ExperimentConfig& cfg);

void write_metrics_csv(std::ostream& out, const std::vector<MetricsReport>& rows);
void write_spectra_csv(std::ostream& out, const std::vector<SpectrumRow>& rows);
void write_denoise_csv(std::ostream& out, const std::vector<DenoiseRow>& rows);
void write_sample_csv(std::ostream& out, const std::vector<SampleRow>& rows);

// Each command runs the experiment and writes <output_dir>/<name>.csv,
// returning the written path.
std::filesystem::path cmd_table1(const ExperimentConfig& cfg);
std::filesystem::path cmd_spectra(const ExperimentConfig& cfg);
std::filesystem::path cmd_denoise(const ExperimentConfig& cfg);
std::filesystem::path cmd_sample(const ExperimentConfig& cfg);

}  // namespace dgsp::harness
