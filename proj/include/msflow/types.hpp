#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msflow {

using Index = std::int64_t;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad sizes, non-divisible grids, malformed "a+b" specs, ...
struct ConfigError : Error {
    using Error::Error;
};

struct SolverError : Error {
    SolverError(const std::string& msg, double residual)
        : Error(msg), achieved_residual(residual) {}
    double achieved_residual = 0.0;
};

/// Right-hand side incompatible with a pure-Neumann operator.
struct CompatibilityError : Error {
    CompatibilityError(const std::string& msg, double d) : Error(msg), defect(d) {}
    double defect = 0.0;
};

/// A flux balance that should hold by construction does not.
struct ConservationError : Error {
    ConservationError(const std::string& msg, double d) : Error(msg), defect(d) {}
    double defect = 0.0;
};

struct CflError : Error {
    CflError(const std::string& msg, double admissible)
        : Error(msg), admissible_dt(admissible) {}
    double admissible_dt = 0.0;
};

/// FNV-1a over raw bytes; used for provenance headers of emitted tables.
inline std::uint64_t fnv1a(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace msflow
