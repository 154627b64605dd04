#pragma once

// Core value types shared by all modules: the three-qubit pure state,
// small density matrices, single-qubit operators, and the error taxonomy.
//
// Basis convention (fixed project-wide): amplitude index b = 4*q1 + 2*q2 + q3
// for the basis ket |q1 q2 q3>, qubit 1 is the leftmost bit.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace triq {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors. Each carries a category that the CLI maps to an exit code:
// input errors -> 2, numeric failures -> 3, empty results -> 4.
// ---------------------------------------------------------------------------

enum class ErrorCategory { Input, Numeric, Empty };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}
    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

#define TRIQ_DEFINE_ERROR(Name, Cat)                                  \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg)                         \
            : Error(ErrorCategory::Cat, std::string(#Name ": ") + msg) {} \
    }

TRIQ_DEFINE_ERROR(AllZeroError, Input);
TRIQ_DEFINE_ERROR(BadQubitSetError, Input);
TRIQ_DEFINE_ERROR(BadPairError, Input);
TRIQ_DEFINE_ERROR(BadParamError, Input);
TRIQ_DEFINE_ERROR(UnknownPresetError, Input);
TRIQ_DEFINE_ERROR(ParseError, Input);
TRIQ_DEFINE_ERROR(SingularOpError, Numeric);
TRIQ_DEFINE_ERROR(BoundaryParamsError, Input);
TRIQ_DEFINE_ERROR(DegenerateStateError, Numeric);
TRIQ_DEFINE_ERROR(OutOfIntervalError, Input);
TRIQ_DEFINE_ERROR(NegativeRadicandError, Numeric);
TRIQ_DEFINE_ERROR(EmptyIntervalError, Empty);
TRIQ_DEFINE_ERROR(OutOfBoundError, Input);
TRIQ_DEFINE_ERROR(NegativeDiscriminantError, Numeric);
TRIQ_DEFINE_ERROR(NumericError, Numeric);

#undef TRIQ_DEFINE_ERROR

// ---------------------------------------------------------------------------
// PureState3
// ---------------------------------------------------------------------------

struct PureState3 {
    std::array<cplx, 8> amp{};
    // Norm of the raw amplitudes before the last normalization (1.0 when the
    // state was constructed exactly).
    double prenorm = 1.0;
    // False only for apply_local_ops(..., renormalize=false) results.
    bool normalized = true;

    double norm2() const {
        double s = 0.0;
        for (const auto& a : amp) s += std::norm(a);
        return s;
    }
};

// ---------------------------------------------------------------------------
// DensityMatrix: 2x2 or 4x4 reduced state.
// ---------------------------------------------------------------------------

struct DensityMatrix {
    int dim = 2;
    Eigen::MatrixXcd m;

    // Hermiticity / unit-trace / positivity checks used by tests and the CLI.
    // Trace and positivity are meaningful for normalized parent states only.
    double hermiticity_defect() const {
        return (m - m.adjoint()).cwiseAbs().maxCoeff();
    }
    double trace_defect() const { return std::abs(m.trace().real() - 1.0); }
    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            0.5 * (m + m.adjoint()));
        return es.eigenvalues().minCoeff();
    }
};

// ---------------------------------------------------------------------------
// LocalOp: a 2x2 operator acting on one qubit.
// ---------------------------------------------------------------------------

enum class OpKind { Unitary, Sl2, General };

struct LocalOp {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    OpKind kind = OpKind::General;

    static LocalOp unitary(const Eigen::Matrix2cd& u, double tol = 1e-12) {
        double defect =
            (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        if (defect > tol)
            throw BadParamError("LocalOp::unitary: M^dag M != 1 (defect " +
                                std::to_string(defect) + ")");
        return LocalOp{u, OpKind::Unitary};
    }

    static LocalOp sl2(const Eigen::Matrix2cd& g, double tol = 1e-12) {
        if (std::abs(g.determinant() - cplx(1.0, 0.0)) > tol)
            throw BadParamError("LocalOp::sl2: det M != 1");
        return LocalOp{g, OpKind::Sl2};
    }

    static LocalOp general(const Eigen::Matrix2cd& g) {
        return LocalOp{g, OpKind::General};
    }

    static LocalOp identity() { return LocalOp{}; }
};

}  // namespace triq
