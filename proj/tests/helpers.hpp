#pragma once

#include "ocsp/samples.hpp"

namespace ocsp::testutil {
using namespace ocsp::samples;
}
