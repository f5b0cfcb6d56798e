#ifndef SPECHT_ERROR_HPP
#define SPECHT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace specht {

/// Base class of everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (partition / composition grammar).
class parse_error : public error {
public:
    using error::error;
};

/// Structurally invalid value (e.g. a sequence that is not a partition).
class validity_error : public error {
public:
    using error::error;
};

/// Argument outside the mathematical domain of an operation (r < 0, p not 0 or prime, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A theorem-shaped operation was called outside its hypotheses.
class precondition_error : public error {
public:
    using error::error;
};

/// The rank-3 character recursion hit a restricted weight outside its base table.
class unsupported_base_case : public error {
public:
    using error::error;
};

} // namespace specht

#endif // SPECHT_ERROR_HPP
