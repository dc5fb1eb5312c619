#ifndef COBORD_ERROR_HPP
#define COBORD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cobord {

enum class errc {
  domain_mismatch,   // mixed Z/Q coefficient domains
  variable_mismatch, // incompatible variable universes
  composition,       // substituted series has a constant term
  structural,        // implicit solve not uniquely solvable
  out_of_range,      // index/degree outside the configured bound
  invalid_fgl,       // formal group law axiom violated
  unsupported,       // configuration outside the implemented model
  parse,             // malformed input
  internal           // broken invariant (a bug, not a user error)
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace cobord

#endif
