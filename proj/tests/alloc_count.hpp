#pragma once

#include <cstdint>

// number of global operator-new calls since program start; the counting
// replacement operators live in alloc_count.cpp and cover this binary only
std::uint64_t allocation_count();
