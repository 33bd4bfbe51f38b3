#pragma once

namespace wedgeqed {

const char* version();

}  // namespace wedgeqed
