#include "hrpb/error.hpp"

// Intentionally empty beyond the include: the exception types are defined
// inline, this translation unit just gives the library something to own.
