#pragma once

#include <stdexcept>
#include <string>

namespace wsk {

// Error classes map 1:1 onto CLI exit codes.
enum class errc {
    parse = 2,      // grammar / arity / syntax
    precision = 3,  // precision exhausted or a divisor indistinguishable from zero
    domain = 4,     // precondition violated (not regular, not in domain, ...)
    unknown = 5,    // search bound reached without a verdict
};

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace wsk
