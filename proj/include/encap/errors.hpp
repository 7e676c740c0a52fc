#pragma once

#include <stdexcept>
#include <string>

namespace encap {

/// Malformed input: bad parameters, zero normals, unparsable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. a point inside a body
/// where a complement point was required).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured budget (hyperplane count, dimension) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked invariant failed; always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace encap
