#ifndef GSPIN_ERROR_HPP
#define GSPIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gspin {

// A structured verification failure: which operation, where it stopped, and why.
class VerificationError : public std::runtime_error {
public:
  VerificationError(std::string operation, std::string where, const std::string& what)
    : std::runtime_error(operation + " [" + where + "]: " + what),
      operation_(std::move(operation)), where_(std::move(where)) { }

  const std::string& operation() const { return operation_; }
  const std::string& where() const { return where_; }

private:
  std::string operation_;
  std::string where_;
};

}  // namespace gspin

#endif
