#pragma once

namespace pcmconley {

const char* version();

}  // namespace pcmconley
