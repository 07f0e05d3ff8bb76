#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planekit {

// Domain failure with a stable machine-readable code ("SingularMatrix",
// "NotAnAutomorphism", ...). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& what) {
    throw Error(std::move(code), what);
}

inline void require(bool ok, const char* code, const std::string& what) {
    if (!ok) raise(code, what);
}

// Internal invariant breakage; not a user input problem.
[[noreturn]] inline void internal_error(const std::string& what) {
    raise("InternalAssertion", what);
}

// Text input rejection. offset is the byte offset of the first offending byte.
// The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace planekit
