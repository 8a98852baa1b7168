#pragma once

#include "pcmconley/pcmap.hpp"

namespace pcmconley::examples {

// Seven-branch self-map of [-1, 2] with jumps at -1/3, 0, 1/3, 2/3, 1, 4/3.
// The built-in worked example behind the `paper-example` CLI subcommand.
PCMap worked_example();

// Two branches on [0, 1]: identity on [0, 1/2), x/2 + 1/2 on [1/2, 1].
PCMap identity_contraction();

// Two contracting branches on [0, 1] with a jump at 1/2: x/2 + 1/4 on
// [0, 1/2), x/2 + 1/2 on [1/2, 1]. f itself has no periodic orbit inside
// [1/4, 3/4]; the adjoint sending 1/2 to the left branch fixes 1/2.
PCMap split_contraction();

// x/2 on [-1, 1], a single contracting branch.
PCMap linear_attractor();

// 2x on [-1, 1], a single expanding branch (not a self-map).
PCMap linear_repeller();

}  // namespace pcmconley::examples
