/*
 * leading_eigenvector.cpp
 *
 * Newman's spectral method. For a group g the generalised modularity
 * matrix is
 *   B(g)_ij = A_ij - k_i k_j / 2m - delta_ij * sum_{l in g} (A_il - k_i k_l / 2m)
 * and the group is split by the signs of its leading eigenvector, as long as
 * the leading eigenvalue and the resulting modularity gain are positive.
 */

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Dense>

#include "castnet/community.hpp"
#include "castnet/errors.hpp"

namespace castnet {

namespace {

class GroupMatrix {
public:
    GroupMatrix(const MultiGraph& g, const std::vector<Vertex>& members)
        : g_(g), members_(members), local_(g.order(), npos), two_m_(2.0 * double(g.edge_total())) {
        const std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i) local_[members[i]] = i;
        k_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            k_[i] = double(g.degree(members[i]));
            group_k_ += k_[i];
        }
        diag_.resize(n);
        shift_ = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double inside = 0.0;
            for (const auto& [u, w] : g.neighbors(members[i])) {
                if (local_[u] != npos) inside += double(w);
            }
            diag_[i] = inside - k_[i] * group_k_ / two_m_;
            // Gershgorin bound on the spectral radius of this row.
            shift_ = std::max(shift_, inside + k_[i] * group_k_ / two_m_ + std::abs(diag_[i]));
        }
    }

    std::size_t size() const { return members_.size(); }
    double shift() const { return shift_; }

    void multiply(const std::vector<double>& x, std::vector<double>& y) const {
        double kx = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) kx += k_[i] * x[i];
        for (std::size_t i = 0; i < x.size(); ++i) {
            double ax = 0.0;
            for (const auto& [u, w] : g_.neighbors(members_[i])) {
                if (const auto j = local_[u]; j != npos) ax += double(w) * x[j];
            }
            y[i] = ax - k_[i] * kx / two_m_ - diag_[i] * x[i];
        }
    }

private:
    static constexpr std::size_t npos = std::size_t(-1);
    const MultiGraph& g_;
    const std::vector<Vertex>& members_;
    std::vector<std::size_t> local_;
    std::vector<double> k_;
    std::vector<double> diag_;
    double two_m_;
    double group_k_ = 0.0;
    double shift_ = 0.0;
};

void normalize(std::vector<double>& x) {
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& v : x) v /= norm;
    }
}

// Exact eigen-decomposition of the dense group matrix. Its top eigenvector
// seeds the power iteration and its smallest eigenvalue sets the shift:
// with a heavy core (large |lambda_min|) and a small spectral gap, plain
// power iteration from a random start needs far more than the iteration
// cap.
struct Spectrum {
    double lambda_min = 0.0;
    std::vector<double> top;
};

Spectrum dense_spectrum(const GroupMatrix& b) {
    const auto n = static_cast<Eigen::Index>(b.size());
    Eigen::MatrixXd dense(n, n);
    std::vector<double> e(b.size(), 0.0), col(b.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        e[j] = 1.0;
        b.multiply(e, col);
        e[j] = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) dense(i, j) = col[i];
    }
    // Symmetrise away rounding in the k_i k_j / 2m terms.
    dense = 0.5 * (dense + dense.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success) throw ConvergenceError("leading eigenvector: eigensolver failed");
    Spectrum s;
    s.lambda_min = solver.eigenvalues()(0);
    const auto v = solver.eigenvectors().col(n - 1);
    s.top.assign(v.data(), v.data() + n);
    return s;
}

// Leading eigenpair of B by power iteration on B + shift * I, started from
// the dense solver's estimate and stopped once successive iterates agree.
std::pair<double, std::vector<double>> leading_pair(const GroupMatrix& b, const LeadingEigenvectorOptions& options) {
    const std::size_t n = b.size();
    Spectrum spectrum = dense_spectrum(b);
    std::vector<double> x = std::move(spectrum.top), y(n);
    // Fix the sign so the largest entry is positive.
    const auto big = std::max_element(x.begin(), x.end(), [](double p, double q) { return std::abs(p) < std::abs(q); });
    if (*big < 0.0) {
        for (double& v : x) v = -v;
    }
    normalize(x);
    const double shift = std::max(0.0, -spectrum.lambda_min) + 1e-6 * std::max(1.0, b.shift());
    bool converged = false;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        b.multiply(x, y);
        for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
        normalize(y);
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(y[i] - x[i]));
        x.swap(y);
        if (change < options.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ConvergenceError("leading eigenvector did not converge in " + std::to_string(options.max_iterations) +
                               " iterations");
    }
    b.multiply(x, y);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += x[i] * y[i];
    return {lambda, std::move(x)};
}

} // namespace

Partition leading_eigenvector(const MultiGraph& g, const LeadingEigenvectorOptions& options) {
    if (g.edge_total() == 0) throw DataError("leading_eigenvector: graph has no edges");
    const double four_m = 4.0 * double(g.edge_total());
    std::vector<std::size_t> label(g.order(), 0);
    std::size_t next_label = 1;
    std::deque<std::vector<Vertex>> pending;
    {
        std::vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
        pending.push_back(std::move(all));
    }
    while (!pending.empty()) {
        std::vector<Vertex> group = std::move(pending.front());
        pending.pop_front();
        if (group.size() < 2) continue;
        const GroupMatrix b(g, group);
        auto [lambda, x] = leading_pair(b, options);
        const double eps = 1e-9 * std::max(1.0, b.shift());
        if (lambda <= eps) continue;

        std::vector<double> s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] >= 0.0 ? 1.0 : -1.0;
        std::vector<double> bs(x.size());
        b.multiply(s, bs);
        double gain = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) gain += s[i] * bs[i];
        gain /= four_m;
        if (gain <= 1e-12) continue;

        std::vector<Vertex> plus, minus;
        for (std::size_t i = 0; i < group.size(); ++i) (s[i] > 0 ? plus : minus).push_back(group[i]);
        if (plus.empty() || minus.empty()) continue;
        for (Vertex v : minus) label[v] = next_label;
        ++next_label;
        pending.push_back(std::move(plus));
        pending.push_back(std::move(minus));
    }
    return Partition(label);
}

} // namespace castnet
