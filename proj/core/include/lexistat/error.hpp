#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lexistat {

/// Runtime error with a short machine-readable code ("ragged-row",
/// "no-shared-meanings", ...). The CLI turns these into
/// "error:<code>: <message>" diagnostics and exit status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace lexistat
