#pragma once

#include <stdexcept>
#include <string>

namespace plancol {

// Bad caller input: malformed files, unsatisfiable generator specs, ids that
// are not in the graph. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold (e.g. a short cycle exists
// where none is allowed). Also exit code 2: the caller fed us the wrong graph.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Something the underlying theory guarantees failed to hold at runtime.
// This is never the caller's fault; it means a bug or a genuine counterexample
// and is worth a loud crash. Exit code 3 in the CLI.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

// Output failed verification (improper coloring, palette overflow, ...).
// Exit code 1 in the CLI.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalCheckError(what);
}
}  // namespace detail

}  // namespace plancol
