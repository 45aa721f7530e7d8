#pragma once

#include <stdexcept>
#include <string>

namespace gkp {

/// Base class for all arithmetic / domain failures raised by this library.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an operation's arguments was violated.
class DomainError : public MathError {
public:
    explicit DomainError(const std::string& what) : MathError(what) {}
};

/// A hypergeometric term hit a vanishing lower Pochhammer factor that is not
/// covered by an earlier (or simultaneous) vanishing upper factor.
class SingularTermError : public MathError {
public:
    explicit SingularTermError(const std::string& what) : MathError(what) {}
};

/// The requested formula or transformation does not apply to these
/// parameters; the message names the failing condition and, where one
/// exists, the fallback (usually: generate from the recurrence).
class NotApplicableError : public MathError {
public:
    explicit NotApplicableError(const std::string& what) : MathError(what) {}
};

/// An internal consistency check failed.  This always indicates a bug in a
/// builder, never bad user input, and is surfaced loudly on purpose.
class InternalCheckError : public MathError {
public:
    explicit InternalCheckError(const std::string& what) : MathError(what) {}
};

} // namespace gkp
