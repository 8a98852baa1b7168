#include "pcmconley/version.hpp"

namespace pcmconley {

const char* version() { return "0.1.0"; }

}  // namespace pcmconley
