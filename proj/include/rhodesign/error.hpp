#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhodesign {

enum class errc {
  invalid_parameter,
  not_bipartite,
  incomplete_labeling,
  precondition_violation,
  unsupported_parameters,
  search_too_large,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::not_bipartite: return "not-bipartite";
    case errc::incomplete_labeling: return "incomplete-labeling";
    case errc::precondition_violation: return "precondition-violation";
    case errc::unsupported_parameters: return "unsupported-parameters";
    case errc::search_too_large: return "search-too-large";
  }
  return "unknown";
}

/// Every recoverable failure in the library. Verification predicates never
/// throw on semantic failure; they return a report instead.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  errc code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool condition, errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace rhodesign
