#ifndef GBFORGE_VERSION_HPP
#define GBFORGE_VERSION_HPP

namespace gbforge {

inline constexpr const char* kToolName = "gbforge";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace gbforge

#endif
