#pragma once

#include <stdexcept>
#include <string>

namespace veesys {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct SingularMatrixError : Error {
	explicit SingularMatrixError(const std::string &msg = "matrix is singular")
	    : Error(msg)
	{}
};

struct ZeroDirectionError : Error {
	explicit ZeroDirectionError(const std::string &msg = "covector direction is zero")
	    : Error(msg)
	{}
};

struct ZeroWeightError : Error {
	explicit ZeroWeightError(const std::string &msg = "covector weight is zero")
	    : Error(msg)
	{}
};

struct DimensionMismatchError : Error {
	explicit DimensionMismatchError(const std::string &msg = "dimension mismatch")
	    : Error(msg)
	{}
};

struct EmptyConfigurationError : Error {
	explicit EmptyConfigurationError(const std::string &msg = "all covectors cancelled")
	    : Error(msg)
	{}
};

struct DegenerateFormError : Error {
	explicit DegenerateFormError(const std::string &msg = "canonical form is degenerate")
	    : Error(msg)
	{}
};

struct OnHyperplaneError : Error {
	explicit OnHyperplaneError(const std::string &msg = "point lies on a covector hyperplane")
	    : Error(msg)
	{}
};

struct IsotropicSubsystemError : Error {
	explicit IsotropicSubsystemError(const std::string &msg = "subsystem is isotropic")
	    : Error(msg)
	{}
};

struct DegenerateRestrictionError : Error {
	explicit DegenerateRestrictionError(
	    const std::string &msg = "canonical form restricted to the kernel subspace is degenerate")
	    : Error(msg)
	{}
};

struct ParameterDomainError : Error {
	explicit ParameterDomainError(const std::string &msg = "family parameter out of domain")
	    : Error(msg)
	{}
};

struct UnknownTypeError : Error {
	explicit UnknownTypeError(const std::string &msg = "unknown type") : Error(msg) {}
};

struct SubsystemNotFoundError : Error {
	explicit SubsystemNotFoundError(const std::string &msg = "no subsystem of requested type")
	    : Error(msg)
	{}
};

struct ParseError : Error {
	explicit ParseError(const std::string &msg) : Error(msg) {}
};

} // namespace veesys
