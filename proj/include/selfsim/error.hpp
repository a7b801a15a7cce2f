// selfsim - computations with self-similar and automatic groups
//
// Exception types shared by every module. Each error carries a stable,
// machine-readable kind so that callers (notably the CLI) can report it
// without parsing the message.

#ifndef SELFSIM_ERROR_HPP_
#define SELFSIM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfsim {

  enum class ErrorKind {
    invalid_machine,
    invalid_acceptor,
    parse_error,
    unknown_symbol,
    unknown_letter,
    unknown_label,
    alphabet_mismatch,
    not_invertible,
    not_reversible,
    not_bireversible,
    not_a_group,
    even_determinant,
    resource_cap,
    not_invariant,
    disconnected_graph,
    oracle_failure,
    malformed_structure,
    unknown_builtin,
    invalid_argument
  };

  inline std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::invalid_machine: return "invalid_machine";
      case ErrorKind::invalid_acceptor: return "invalid_acceptor";
      case ErrorKind::parse_error: return "parse_error";
      case ErrorKind::unknown_symbol: return "unknown_symbol";
      case ErrorKind::unknown_letter: return "unknown_letter";
      case ErrorKind::unknown_label: return "unknown_label";
      case ErrorKind::alphabet_mismatch: return "alphabet_mismatch";
      case ErrorKind::not_invertible: return "not_invertible";
      case ErrorKind::not_reversible: return "not_reversible";
      case ErrorKind::not_bireversible: return "not_bireversible";
      case ErrorKind::not_a_group: return "not_a_group";
      case ErrorKind::even_determinant: return "even_determinant";
      case ErrorKind::resource_cap: return "resource_cap";
      case ErrorKind::not_invariant: return "not_invariant";
      case ErrorKind::disconnected_graph: return "disconnected_graph";
      case ErrorKind::oracle_failure: return "oracle_failure";
      case ErrorKind::malformed_structure: return "malformed_structure";
      case ErrorKind::unknown_builtin: return "unknown_builtin";
      case ErrorKind::invalid_argument: return "invalid_argument";
    }
    return "unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Raised when a search or construction exceeds a caller-supplied bound.
  class ResourceError : public Error {
   public:
    ResourceError(std::string const& what, std::size_t cap)
        : Error(ErrorKind::resource_cap, what), _cap(cap) {}

    [[nodiscard]] std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  [[noreturn]] inline void raise(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace selfsim

#endif  // SELFSIM_ERROR_HPP_
