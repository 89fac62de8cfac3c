#ifndef COLLAPSAR_VERSION_HPP
#define COLLAPSAR_VERSION_HPP

namespace collapsar {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
