#pragma once

#include <stdexcept>
#include <string>

namespace ecdsim {

enum class Errc {
  invalid_argument,  // bad parameter or malformed model input
  parse,             // unreadable scenario/trace syntax
  io,                // file system failure
  state              // simulation reached an inconsistent state
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse: return "parse";
    case Errc::io: return "io";
    case Errc::state: return "state";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ecdsim
