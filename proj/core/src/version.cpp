#include "wedgeqed/version.hpp"

namespace wedgeqed {

const char* version() { return WEDGEQED_VERSION_STRING; }

}  // namespace wedgeqed
