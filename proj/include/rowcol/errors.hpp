#ifndef ROWCOL_ERRORS_HPP
#define ROWCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rowcol {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct NotPsd : Error {
    explicit NotPsd(const std::string& what) : Error(what) {}
};

struct DivergentNorm : Error {
    explicit DivergentNorm(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct SingularMultiplier : Error {
    explicit SingularMultiplier(const std::string& what) : Error(what) {}
};

struct TooManyTerms : Error {
    explicit TooManyTerms(const std::string& what) : Error(what) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& what) : Error(what) {}
};

struct InsufficientGrid : Error {
    explicit InsufficientGrid(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace rowcol

#endif
