/**
 * @file errors.hpp
 * @brief Exception taxonomy for the qnichols library.
 *
 * Four failure classes are distinguished so that callers (and the CLI) can map
 * them to distinct outcomes:
 *  - InputError:       malformed or out-of-contract user input (bad files, bad
 *                      indices, arguments violating documented preconditions).
 *  - BoundError:       a configured degree bound would be exceeded.  Results
 *                      are never silently truncated; the caller must raise the
 *                      bound explicitly.
 *  - CapError:         a configured dimension/orbit cap was exceeded while
 *                      closing an orbit; partial results may accompany it.
 *  - ConsistencyError: two independent computations of the same object
 *                      disagreed.  This always indicates an internal defect
 *                      (or a deliberately corrupted self-test) and is fatal.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qnichols {

/// Base class of all qnichols exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user input or argument outside a documented precondition.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A configured degree bound would be exceeded (never silently truncated).
class BoundError : public Error {
public:
    explicit BoundError(const std::string& msg) : Error(msg) {}
};

/// A configured orbit/dimension cap was exceeded during an iterative closure.
class CapError : public Error {
public:
    explicit CapError(const std::string& msg) : Error(msg) {}
};

/// Two independent computations disagreed; fatal internal inconsistency.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

} // namespace qnichols
