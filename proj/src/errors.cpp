#include "lpgame/errors.hpp"

#include <sstream>

namespace lpgame {

void check_failed(const char* expr, const char* file, int line) {
  std::ostringstream msg;
  msg << "internal check failed: " << expr << " at " << file << ":" << line;
  throw std::logic_error(msg.str());
}

}  // namespace lpgame
