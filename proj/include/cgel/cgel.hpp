#pragma once

// cgel-kit: tooling for the CGELBank .cgel treebank format — parsing,
// serialization, fused-function recovery, validation, sentence
// reconstruction and forest rendering.

#include "cgel/diagnostics.hpp"
#include "cgel/graph.hpp"
#include "cgel/inventory.hpp"
#include "cgel/parse.hpp"
#include "cgel/render.hpp"
#include "cgel/serialize.hpp"
#include "cgel/source.hpp"
#include "cgel/textops.hpp"
#include "cgel/validate.hpp"
