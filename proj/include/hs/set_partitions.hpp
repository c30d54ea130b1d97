#pragma once

#include <functional>
#include <vector>

namespace hs {

/// Calls f once for every set partition of {0, ..., n-1}. Blocks are listed
/// in order of their smallest element and each block is increasing.
void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f);

}  // namespace hs
