// Copyright 2026 The spegame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPE_INTERNAL_H_
#define SPE_INTERNAL_H_

#include <vector>

#include "spe/game_tree.h"

namespace spe::internal {

// Advances the choices at `nodes` as a mixed-radix counter, last node
// fastest. Returns false after wrapping back to all zeros.
inline bool AdvanceOdometer(const GameTree& tree, const std::vector<NodeIndex>& nodes,
                            JointStrategy& s) {
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const int next = s.Choice(*it) + 1;
    if (next < static_cast<int>(tree.Children(*it).size())) {
      s.SetChoice(*it, next);
      return true;
    }
    s.SetChoice(*it, 0);
  }
  return false;
}

}  // namespace spe::internal

#endif  // SPE_INTERNAL_H_
