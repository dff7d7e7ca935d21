#include "gsp2/records.hpp"

// header-only; this translation unit anchors the target
