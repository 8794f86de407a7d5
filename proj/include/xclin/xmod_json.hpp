#pragma once

#include <string>

#include "xclin/xmod.hpp"

namespace xclin {

// Record shape:
//   {"source": {"order":o,"id":i} | {"degree":d,"generators":[cycles]},
//    "range":  ...,
//    "boundary": [cycle string per source generator],
//    "action":   [[cycle string per source generator] per range generator]}
// Boundary images are range elements; each action entry lists the images of
// the source generators under the acting automorphism of one range generator.
std::string xmod_to_json(const CrossedModule& x,
                         const Catalog& cat = Catalog::builtin());

XModPtr xmod_from_json(const std::string& text,
                       const Catalog& cat = Catalog::builtin());

}  // namespace xclin
