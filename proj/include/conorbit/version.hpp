#ifndef CONORBIT_VERSION_HPP
#define CONORBIT_VERSION_HPP

namespace conorbit {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
