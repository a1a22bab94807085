#include "dgsp/digraph.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "dgsp/errors.hpp"
#include "dgsp/format.hpp"
#include "dgsp/prng.hpp"

namespace dgsp {

Digraph::Digraph(std::size_t n) : adjacency_(n, n, 0.0) {}

Digraph::Digraph(RMatrix adjacency) : adjacency_(std::move(adjacency)) {
    if (!adjacency_.square()) throw DimensionError("adjacency matrix must be square");
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            const double w = adjacency_(i, j);
            if (!std::isfinite(w) || w < 0.0)
                throw InvalidWeightError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") must be finite and non-negative");
        }
        if (adjacency_(i, i) != 0.0) throw SelfLoopError("adjacency diagonal must be zero at vertex " + std::to_string(i));
    }
}

RVector Digraph::out_degrees() const {
    RVector d(size(), 0.0);
    for (std::size_t i = 0; i < size(); ++i)
        for (double w : adjacency_.row(i)) d[i] += w;
    return d;
}

std::size_t Digraph::edge_count() const {
    std::size_t count = 0;
    for (double w : adjacency_.data())
        if (w != 0.0) ++count;
    return count;
}

Laplacian::Laplacian(const Digraph& g) : matrix_(g.size(), g.size()) {
    const auto& a = g.adjacency();
    const RVector degree = g.out_degrees();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) matrix_(i, j) = -a(i, j);
        matrix_(i, i) = degree[i];
    }
}

double Laplacian::max_row_sum() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        double s = 0.0;
        for (double v : matrix_.row(i)) s += v;
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

Laplacian laplacian(const Digraph& g) { return Laplacian(g); }

Digraph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
    RMatrix a(n, n, 0.0);
    for (const auto& e : edges) {
        if (e.src >= n || e.dst >= n)
            throw IndexOutOfRangeError("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                                       ") out of range for n=" + std::to_string(n));
        if (e.src == e.dst) throw SelfLoopError("self-loop at vertex " + std::to_string(e.src));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw InvalidWeightError("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                                     ") has non-positive weight");
        if (a(e.src, e.dst) != 0.0)
            throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
        a(e.src, e.dst) = e.weight;
    }
    return Digraph(std::move(a));
}

Digraph directed_cycle(std::size_t n) {
    if (n < 2) throw InvalidArgumentError("directed_cycle requires n >= 2");
    RMatrix a(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a(i, (i + 1) % n) = 1.0;
    return Digraph(std::move(a));
}

Digraph perturbed_cycle(std::size_t n, double p, double w, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError("perturbation probability must lie in [0, 1]");
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidArgumentError("perturbation weight must be positive");
    Digraph cycle = directed_cycle(n);
    RMatrix a = cycle.adjacency();
    Prng rng(seed);
    // candidates are visited in row-major order; one uniform draw per candidate
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || j == (i + 1) % n) continue;
            if (rng.uniform() < p) a(i, j) = w;
        }
    }
    return Digraph(std::move(a));
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t end = line.find(' ', start);
        const std::size_t stop = end == std::string_view::npos ? line.size() : end;
        tokens.push_back(line.substr(start, stop - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
    T value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(token) + "'");
    return value;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty() || view.front() == '#') continue;
        const auto tokens = split_spaces(view);
        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n")
                throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>' header");
            n = parse_number<std::size_t>(tokens[1], line_no);
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'src dst weight'");
        edges.push_back({parse_number<std::size_t>(tokens[0], line_no), parse_number<std::size_t>(tokens[1], line_no),
                         parse_number<double>(tokens[2], line_no)});
    }
    if (!n) throw ParseError("missing 'n <count>' header");
    return from_edge_list(*n, edges);
}

Digraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Digraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list '" + path.string() + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    out << "n " << g.size() << '\n';
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.weight(i, j) != 0.0) out << i << ' ' << j << ' ' << format_double(g.weight(i, j)) << '\n';
}

}  // namespace dgsp
