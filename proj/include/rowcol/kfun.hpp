#ifndef ROWCOL_KFUN_HPP
#define ROWCOL_KFUN_HPP

#include <cstdint>
#include <vector>

#include "rowcol/complex_matrix.hpp"
#include "rowcol/lorentz.hpp"
#include "rowcol/seqnorms.hpp"

namespace rowcol {

/// Pair of projections given by orthonormal column frames; rank 0 is an
/// empty frame.
struct ProjectionPair {
    ComplexMatrix p_frame;
    ComplexMatrix q_frame;
    std::size_t rank_p() const { return p_frame.cols(); }
    std::size_t rank_q() const { return q_frame.cols(); }
};

/// Families searched for the projection functionals. Coordinate subsets are
/// exhaustive per basis (the standard basis plus the two Gram eigenbases);
/// the manifold search runs an alternating spectral ascent over frames for
/// every rank pair.
struct SearchStrategy {
    bool coordinate_subsets = true;
    bool gram_eigenbases = true;
    bool manifold = true;
    int restarts = 3;
    int iterations = 40;
    std::size_t subset_limit = 12;
    std::uint64_t seed = 0;

    /// subsets of the standard basis only - the shared exhaustive family
    static SearchStrategy exhaustive_standard() {
        SearchStrategy s;
        s.gram_eigenbases = false;
        s.manifold = false;
        return s;
    }
};

struct ProjectionValue {
    double value = 0.0;
    ProjectionPair pair;
};

/// Best found value of (sum_n ||P a_n Q||_2^2)^{1/2} / max(rP^{1/2}, rQ^{1/2}/t)
/// over the searched pairs; always a true lower bound on the projection
/// functional and hence on K_t for the row/column pair.
ProjectionValue kt_projection_lower(const MatrixSeq& a, double t, const SearchStrategy& s);

/// Same search restricted to nested pairs: P <= Q for t > 1, Q <= P for
/// t < 1, P = Q at t = 1.
ProjectionValue kt_projection_nested(const MatrixSeq& a, double t, const SearchStrategy& s);

/// Exponent bundle for the generalized functionals.
struct ThetaQ {
    double theta = 0.5;
    double q = kInf;
    double p0 = kInf; // in (2, inf]
    double p1 = kInf;

    double alpha0() const { return 0.5 - (p0 == kInf ? 0.0 : 1.0 / p0); }
    double alpha1() const { return 0.5 - (p1 == kInf ? 0.0 : 1.0 / p1); }
    /// r = p1' / theta
    double r() const { return Exponents::conjugate(p1) / theta; }
    /// s = p0 (1 - theta + theta p0)^{-1}
    double s() const { return p0 == kInf ? 1.0 / theta : p0 / (1.0 - theta + theta * p0); }
    double s_conj() const { return Exponents::conjugate(s()); }
};

/// Denominator max(rP^{alpha0}, rQ^{alpha1}/t) instead of the square roots.
ProjectionValue kt_generalized_lower(const MatrixSeq& a, double t, const ThetaQ& e,
                                     const SearchStrategy& s);

/// Best found sum_n tr(P a_n Q a_n*) / (rP^{1-theta} rQ^{theta}).
double weak_type_norm(const MatrixSeq& a, double theta, const SearchStrategy& s);

/// Best found sum_n tr(P a_n Q a_n*) / (rQ^{1/r} rP^{1/s'}).
double weak_type_generalized(const MatrixSeq& a, const ThetaQ& e, const SearchStrategy& s);

enum class KtPair { RC, A0A1 };

struct KtUpperResult {
    double value = 0.0; // cost of the best found split: a true upper bound on K_t
    double lower = 0.0; // dual-certificate lower bound on K_t (0 when unavailable)
    MatrixSeq a0, a1;
    double gap = 0.0;
    int iterations = 0;
    bool budget_exhausted = false;
};

/// Convex split minimization of ||a0||_0 + t ||a1||_1 for the requested pair.
KtUpperResult kt_upper(const MatrixSeq& a, double t, KtPair pair, int budget = 1200,
                       std::uint64_t seed = 0);

/// Log-spaced samples of a K-functional bracket, with caps K_t <= norm0_upper
/// and K_t <= t * norm1_upper used for quadrature tails.
struct KCurve {
    struct Sample {
        double t;
        double lower;
        double upper;
    };
    std::vector<Sample> samples;
    double norm0_upper = 0.0;
    double norm1_upper = 0.0;
};

std::vector<double> log_grid(double lo, double hi, int points);

KCurve kt_curve(const MatrixSeq& x, KtPair pair, const std::vector<double>& tgrid,
                int budget_per_t = 800, std::uint64_t seed = 0,
                const SearchStrategy* lower_search = nullptr);

struct ThetaQBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Bracket of ( int (t^{-theta} K_t)^q dt/t )^{1/q} from the curve envelopes
/// plus analytic tail bounds; throws InsufficientGrid when the tails exceed
/// 10% of the main term.
ThetaQBracket theta_q_norm(const KCurve& curve, const ThetaQ& e);

enum class ClassicalPair { L1_Linf, L2_Linf };

/// Exact closed forms: int_0^t f*(s) ds and (int_0^{t^2} f*(s)^2 ds)^{1/2}.
double classical_kt(const StepFunction& f, double t, ClassicalPair pair);

} // namespace rowcol

#endif
