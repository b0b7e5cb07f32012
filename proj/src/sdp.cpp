#include "warmcut/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "warmcut/seeds.hpp"

namespace warmcut {

namespace {

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    const std::vector<double> flat = laplacian(g);
    const int n = g.n();
    return Eigen::Map<
        const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        flat.data(), n, n);
}

bool is_positive_definite(const Eigen::MatrixXd& m) {
    return Eigen::LLT<Eigen::MatrixXd>(m).info() == Eigen::Success;
}

}  // namespace

SdpState solve_sdp(const Graph& g, double tol, int max_iter) {
    if (tol <= 0.0) throw std::invalid_argument("solve_sdp: tol must be positive.");
    if (max_iter < 1) throw std::invalid_argument("solve_sdp: max_iter must be at least 1.");

    const int n = g.n();
    const Eigen::MatrixXd L = laplacian_matrix(g);
    const Eigen::VectorXd a = Eigen::VectorXd::Constant(n, 0.25);

    SdpState st;
    st.Y = Eigen::MatrixXd::Zero(n, n);
    st.Y.diagonal() = a;
    st.b = 4.4 * (L.cwiseAbs() * a);
    st.Z = Eigen::MatrixXd(st.b.asDiagonal()) - L;

    const auto refresh = [&] {
        st.objective = L.cwiseProduct(st.Y).sum();
        st.gap = std::abs(a.dot(st.b) - st.objective) / (1.0 + std::abs(st.objective));
        st.mu = st.Y.cwiseProduct(st.Z).sum() / (2.0 * n);
    };
    refresh();

    if (g.m() == 0) {
        // Edgeless instances make the relaxation trivial and the dual slack singular.
        st.gap = 0.0;
        st.converged = true;
        return st;
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        if (st.gap <= tol) {
            st.converged = true;
            return st;
        }

        Eigen::LLT<Eigen::MatrixXd> zllt(st.Z);
        if (zllt.info() != Eigen::Success)
            throw SdpBreakdown("solve_sdp: dual slack lost positive definiteness.", st);
        Eigen::MatrixXd zinv = zllt.solve(Eigen::MatrixXd::Identity(n, n));
        zinv = (0.5 * (zinv + zinv.transpose())).eval();

        // The Newton system matrix is a Hadamard product of two positive-definite
        // matrices, hence positive definite by the Schur product theorem.
        Eigen::MatrixXd system = zinv.cwiseProduct(st.Y);
        system = (0.5 * (system + system.transpose())).eval();
        Eigen::LLT<Eigen::MatrixXd> sysllt(system);
        if (sysllt.info() != Eigen::Success)
            throw SdpBreakdown("solve_sdp: step system is not positive definite.", st);
        const Eigen::VectorXd db = sysllt.solve(st.mu * zinv.diagonal() - a);

        const Eigen::MatrixXd dz = Eigen::MatrixXd(db.asDiagonal());
        const Eigen::MatrixXd dy_raw = st.mu * zinv - st.Y - zinv * dz * st.Y;
        const Eigen::MatrixXd dy = 0.5 * (dy_raw + dy_raw.transpose());

        double t = 0.98;
        bool accepted = false;
        for (int back = 0; back < 80; ++back) {
            if (is_positive_definite(st.Y + t * dy) && is_positive_definite(st.Z + t * dz)) {
                accepted = true;
                break;
            }
            t *= 0.8;
        }
        if (!accepted)
            throw SdpBreakdown("solve_sdp: no positive-definite step length found.", st);

        st.Y += t * dy;
        st.b += t * db;
        st.Z = Eigen::MatrixXd(st.b.asDiagonal()) - L;
        st.iterations = iter + 1;
        refresh();
    }

    st.converged = st.gap <= tol;
    return st;
}

GramVectors gram_vectors(const Eigen::MatrixXd& Y) {
    if (Y.rows() == 0 || Y.rows() != Y.cols())
        throw std::invalid_argument("gram_vectors: Y must be square and non-empty.");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(4.0 * Y);
    if (eig.info() != Eigen::Success)
        throw NumericalError("gram_vectors: eigendecomposition failed.");

    Eigen::VectorXd lam = eig.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam[i] < 1e-10) lam[i] = 0.0;

    Eigen::MatrixXd vecs = eig.eigenvectors() * lam.cwiseSqrt().asDiagonal();
    for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
        const double norm = vecs.row(r).norm();
        if (norm < 1e-6)
            throw NumericalError("gram_vectors: row norm collapsed; diagonal far from 1/4.");
        vecs.row(r) /= norm;
    }
    return GramVectors{std::move(vecs)};
}

Assignment random_projection(const GramVectors& v, std::uint64_t seed) {
    const Eigen::Index n = v.vectors.rows();
    if (n == 0) throw std::invalid_argument("random_projection: empty vector set.");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd r(v.vectors.cols());
    for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = normal(rng);

    Assignment bits(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) bits[j] = v.vectors.row(j).dot(r) >= 0.0 ? 0 : 1;
    return bits;
}

GwResult gw_solve(const Graph& g, int projections, std::uint64_t seed) {
    if (projections < 1) throw std::invalid_argument("gw_solve: need at least one projection.");

    const SdpState sdp = solve_sdp(g);
    const GramVectors gv = gram_vectors(sdp.Y);

    GwResult out;
    out.sdp_objective = sdp.objective;
    out.cut = -1;
    for (int p = 0; p < projections; ++p) {
        Assignment bits = random_projection(gv, split_seed(seed, stream::gw_projection, p));
        const int c = cut_value(g, bits);
        if (c > out.cut) {
            out.cut = c;
            out.best = std::move(bits);
        }
    }
    return out;
}

int projections_to_match(const Graph& g, int target, int cap, std::uint64_t seed) {
    if (cap < 1) throw std::invalid_argument("projections_to_match: cap must be at least 1.");

    const SdpState sdp = solve_sdp(g);
    const GramVectors gv = gram_vectors(sdp.Y);
    int best = -1;
    for (int p = 0; p < cap; ++p) {
        best = std::max(best,
                        cut_value(g, random_projection(gv, split_seed(seed, stream::gw_projection,
                                                                      static_cast<std::uint64_t>(p)))));
        if (best >= target) return p + 1;
    }
    return cap;
}

}  // namespace warmcut
