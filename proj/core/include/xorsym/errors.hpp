#pragma once

#include <stdexcept>
#include <string>

namespace xorsym {

// Rejected input text. line is 1-based; 0 means no useful position.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what_arg)
      : std::runtime_error(line != 0 ? "line " + std::to_string(line) + ": " + what_arg
                                     : what_arg),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A configured size budget (table arity, oracle cap, node count) would be exceeded.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace xorsym
