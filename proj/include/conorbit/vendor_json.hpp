#ifndef CONORBIT_VENDOR_JSON_HPP
#define CONORBIT_VENDOR_JSON_HPP

// single include point for the vendored nlohmann/json header
#include "json.hpp"

#endif
