#pragma once
#include <stdexcept>
#include <string>

namespace dualrep {

/* All library failures carry a stable code string (e.g. "CyclicQuiver",
 * "NotPerfect") so callers can map them to exit codes without parsing text. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("ParseError", "line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace dualrep
