#pragma once

#include <stdexcept>
#include <string>

namespace tanz2 {

enum class Errc {
  PoleAt,
  AsymptoticValueExcluded,
  BranchUnavailable,
  PoleOnCycle,
  EmptyWord,
  BadKappa,
  LeftSymbolDomain,
  InadmissibleWord,
  SeedUndetermined,
  IoFailure,
  BadParameter,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

  Errc code() const { return code_; }
  // stage or step the error refers to, -1 if none
  int index() const { return index_; }

 private:
  Errc code_;
  int index_;
};

// configuration problems as opposed to numeric failures
inline bool is_config_error(Errc c) {
  return c == Errc::BadKappa || c == Errc::BadParameter || c == Errc::BadArgument || c == Errc::IoFailure;
}

}  // namespace tanz2
