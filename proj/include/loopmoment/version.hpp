#pragma once

namespace loopmoment {

inline constexpr const char* kVersion = "0.1.0";

// Every serialized report carries this tag: the invariant inner product is
// scaled so that long roots have squared length 2.
inline constexpr const char* kNormalizationTag = "long_root_sq_2";

}  // namespace loopmoment
