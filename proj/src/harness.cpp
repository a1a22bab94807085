#include "dgsp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include "dgsp/bgft.hpp"
#include "dgsp/errors.hpp"
#include "dgsp/format.hpp"
#include "dgsp/prng.hpp"
#include "dgsp/sampling.hpp"

namespace dgsp::harness {

namespace {

constexpr int kMaxPlanAttempts = 100;
// noiseless floor for the per-trial bound check (matches the exact-recovery tolerance)
constexpr double kRecoveryFloor = 1e-8;

std::uint64_t require_seed(const ExperimentConfig& cfg, const char* why) {
    if (!cfg.seed) throw InvalidArgumentError(std::string("--seed is required for ") + why);
    return *cfg.seed;
}

void require_band(const ExperimentConfig& cfg) {
    if (cfg.k == 0) throw InvalidArgumentError("--k must be positive");
}

/// Unit-norm in-band signal x = V_Omega c / ||V_Omega c|| with c unit complex Gaussian.
CVector draw_band_signal(Prng& rng, const CMatrix& basis) {
    const CVector c = rng.complex_gaussian_vector(basis.cols());
    CVector x = basis * c;
    const double norm = vector_norm(x);
    for (auto& v : x) v /= norm;
    return x;
}

CMatrix band_basis(const Spectrum& s, const std::vector<std::size_t>& band) {
    CMatrix basis(s.size(), band.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < band.size(); ++j) basis(i, j) = s.vectors()(i, band[j]);
    return basis;
}

double distance(const CVector& a, const CVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

std::filesystem::path open_output(const ExperimentConfig& cfg, const std::string& name, std::ofstream& out) {
    std::filesystem::create_directories(cfg.output_dir);
    const auto path = cfg.output_dir / name;
    out.open(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    return path;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "cycle") return GraphKind::Cycle;
    if (name == "perturbed") return GraphKind::Perturbed;
    if (name == "file") return GraphKind::File;
    throw InvalidArgumentError("unknown graph kind '" + name + "' (expected cycle, perturbed or file)");
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Cycle: return "cycle";
        case GraphKind::Perturbed: return "perturbed";
        case GraphKind::File: return "file";
    }
    return "unknown";
}

std::vector<LabeledGraph> build_graphs(const ExperimentConfig& cfg) {
    auto make = [&](GraphKind kind) -> LabeledGraph {
        switch (kind) {
            case GraphKind::Cycle: return {"cycle", directed_cycle(cfg.n)};
            case GraphKind::Perturbed:
                return {"perturbed", perturbed_cycle(cfg.n, cfg.p, cfg.weight, require_seed(cfg, "perturbed graphs"))};
            case GraphKind::File:
                if (cfg.edges.empty()) throw InvalidArgumentError("--edges is required for --graph file");
                return {"file", read_edge_list(cfg.edges)};
        }
        throw InvalidArgumentError("unknown graph kind");
    };
    if (cfg.graph) return {make(*cfg.graph)};
    std::vector<LabeledGraph> graphs;
    graphs.push_back(make(GraphKind::Cycle));
    graphs.push_back(make(GraphKind::Perturbed));
    return graphs;
}

double unit_expected_norm_scale(std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::exp(std::lgamma(nd) - std::lgamma(nd + 0.5));
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<MetricsReport> run_table1(const ExperimentConfig& cfg) {
    std::vector<MetricsReport> rows;
    for (const auto& g : build_graphs(cfg)) rows.push_back(report(g.graph, g.label, cfg.eig_options()));
    return rows;
}

std::vector<SpectrumRow> run_spectra(const ExperimentConfig& cfg) {
    std::vector<SpectrumRow> rows;
    for (const auto& g : build_graphs(cfg)) {
        const auto es = la::eig(laplacian(g.graph).matrix(), cfg.eig_options());
        for (std::size_t k = 0; k < es.size(); ++k)
            rows.push_back({g.label, k, es.values[k].real(), es.values[k].imag()});
    }
    return rows;
}

std::vector<DenoiseRow> run_denoise(const ExperimentConfig& cfg) {
    const std::uint64_t seed = require_seed(cfg, "denoise");
    require_band(cfg);
    const auto graphs = build_graphs(cfg);
    const std::size_t levels = cfg.noise_levels.size();
    for (double level : cfg.noise_levels)
        if (!(level >= 0.0) || !std::isfinite(level)) throw InvalidArgumentError("noise levels must be non-negative");

    std::vector<DenoiseRow> rows(graphs.size() * levels * cfg.trials);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const auto& g = graphs[gi];
        const Spectrum s(laplacian(g.graph), cfg.eig_options());
        const auto band = lowest_band(s, cfg.k);
        const CVector lowpass = band_indicator(s.size(), band);
        const CMatrix basis = band_basis(s, band);
        const double noise_scale = unit_expected_norm_scale(s.size());

        parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
            Prng rng = Prng::substream(seed, t);
            const CVector x = draw_band_signal(rng, basis);
            const CVector direction = rng.complex_gaussian_vector(s.size());
            for (std::size_t li = 0; li < levels; ++li) {
                const double level = cfg.noise_levels[li];
                CVector noisy = x;
                for (std::size_t i = 0; i < noisy.size(); ++i) noisy[i] += level * noise_scale * direction[i];
                const Signal filtered = apply_filter(s, lowpass, Signal::vertex(std::move(noisy)));
                rows[(gi * levels + li) * cfg.trials + t] = {
                    g.label, level, t, distance(filtered.values, x) / vector_norm(x), s.kappa()};
            }
        });
    }
    return rows;
}

std::vector<SampleRow> run_sample(const ExperimentConfig& cfg) {
    const std::uint64_t seed = require_seed(cfg, "sample");
    require_band(cfg);
    if (!(cfg.sample_noise >= 0.0) || !std::isfinite(cfg.sample_noise))
        throw InvalidArgumentError("--noise must be non-negative");
    const auto graphs = build_graphs(cfg);
    const std::size_t m = cfg.samples();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<SampleRow> rows(graphs.size() * cfg.trials);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const auto& g = graphs[gi];
        const Spectrum s(laplacian(g.graph), cfg.eig_options());
        const std::size_t n = s.size();
        if (m > n) throw InvalidArgumentError("--samples exceeds the number of vertices");
        const auto band = lowest_band(s, cfg.k);
        const CMatrix basis = band_basis(s, band);
        const double noise_scale = unit_expected_norm_scale(m);

        parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
            Prng rng = Prng::substream(seed, t);
            const CVector x = draw_band_signal(rng, basis);

            std::optional<SamplingPlan> plan;
            for (int attempt = 0; attempt < kMaxPlanAttempts; ++attempt) {
                std::vector<std::size_t> vertices(n);
                for (std::size_t i = 0; i < n; ++i) vertices[i] = i;
                for (std::size_t i = 0; i < m; ++i) std::swap(vertices[i], vertices[i + rng.below(n - i)]);
                vertices.resize(m);
                std::sort(vertices.begin(), vertices.end());
                plan.emplace(s, band, std::move(vertices));
                if (plan->full_rank()) break;
            }
            SampleRow& row = rows[gi * cfg.trials + t];
            if (!plan->full_rank()) {
                row = {g.label, t, m, plan->gamma(), plan->basis_norm(), nan, nan, nan, true};
                return;
            }

            CVector y = plan->take_samples(x);
            const CVector direction = rng.complex_gaussian_vector(m);
            CVector eta(m);
            for (std::size_t i = 0; i < m; ++i) eta[i] = cfg.sample_noise * noise_scale * direction[i];
            for (std::size_t i = 0; i < m; ++i) y[i] += eta[i];
            const double eta_norm = vector_norm(eta);
            const RecoveryResult r = recover(*plan, y, eta_norm);
            const double err = distance(r.x_hat, x);
            if (err > r.bound_noise + kRecoveryFloor)
                throw ConsistencyError("noise-sensitivity bound violated on " + g.label + " trial " +
                                       std::to_string(t));
            row = {g.label, t, m, plan->gamma(), plan->basis_norm(), eta_norm, err / vector_norm(x), r.bound_noise, false};
        });
    }
    return rows;
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsReport>& rows) {
    out << "graph,kappa_v,henrici,alpha,delta\n";
    for (const auto& r : rows)
        out << r.graph_label << ',' << format_double(r.kappa) << ',' << format_double(r.henrici) << ','
            << format_double(r.alpha) << ',' << format_double(r.delta) << '\n';
}

void write_spectra_csv(std::ostream& out, const std::vector<SpectrumRow>& rows) {
    out << "graph,k,re_lambda,im_lambda\n";
    for (const auto& r : rows)
        out << r.graph << ',' << r.k << ',' << format_double(r.re_lambda) << ',' << format_double(r.im_lambda) << '\n';
}

void write_denoise_csv(std::ostream& out, const std::vector<DenoiseRow>& rows) {
    out << "graph,level,trial,rel_error,kappa_v\n";
    for (const auto& r : rows)
        out << r.graph << ',' << format_double(r.level) << ',' << r.trial << ',' << format_double(r.rel_error) << ','
            << format_double(r.kappa_v) << '\n';
}

void write_sample_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
    out << "graph,trial,m,gamma,vnorm,eta_norm,rel_error,bound,skipped\n";
    for (const auto& r : rows)
        out << r.graph << ',' << r.trial << ',' << r.m << ',' << format_double(r.gamma) << ','
            << format_double(r.vnorm) << ',' << format_double(r.eta_norm) << ',' << format_double(r.rel_error) << ','
            << format_double(r.bound) << ',' << (r.skipped ? 1 : 0) << '\n';
}

std::filesystem::path cmd_table1(const ExperimentConfig& cfg) {
    const auto rows = run_table1(cfg);
    std::ofstream out;
    const auto path = open_output(cfg, "metrics.csv", out);
    write_metrics_csv(out, rows);
    finish(out, path);
    return path;
}

std::filesystem::path cmd_spectra(const ExperimentConfig& cfg) {
    const auto rows = run_spectra(cfg);
    std::ofstream out;
    const auto path = open_output(cfg, "spectra.csv", out);
    write_spectra_csv(out, rows);
    finish(out, path);
    return path;
}

std::filesystem::path cmd_denoise(const ExperimentConfig& cfg) {
    const auto rows = run_denoise(cfg);
    std::ofstream out;
    const auto path = open_output(cfg, "denoise.csv", out);
    write_denoise_csv(out, rows);
    finish(out, path);
    return path;
}

std::filesystem::path cmd_sample(const ExperimentConfig& cfg) {
    const auto rows = run_sample(cfg);
    std::ofstream out;
    const auto path = open_output(cfg, "sample.csv", out);
    write_sample_csv(out, rows);
    finish(out, path);
    return path;
}

}  // namespace dgsp::harness
